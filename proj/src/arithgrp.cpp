#include "charcalc/arithgrp.hpp"

#include <stdexcept>

#include "charcalc/genera.hpp"
#include "charcalc/linalg.hpp"

namespace charcalc::arithgrp {

namespace {

constexpr unsigned kOracleSizeLimit = 30;

long as_long(unsigned v) { return static_cast<long>(v); }

void check_k(const GroupSpec& spec, unsigned k) {
  if (k < 1 || k > spec.max_k())
    throw std::invalid_argument("k = " + std::to_string(k) + " out of range for " +
                                spec.to_string());
}

unsigned parse_positive(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v == 0 || v > 100000) throw std::invalid_argument("");
    return static_cast<unsigned>(v);
  } catch (...) {
    throw std::invalid_argument("GroupSpec: bad " + what + " \"" + s + "\"");
  }
}

}  // namespace

GroupSpec GroupSpec::so(unsigned p, unsigned q) {
  if (p < 1 || p > q)
    throw std::invalid_argument("GroupSpec: so requires 1 <= p <= q");
  GroupSpec s;
  s.family = GroupFamily::SO;
  s.p = p;
  s.q = q;
  return s;
}

GroupSpec GroupSpec::sp(unsigned n) {
  if (n < 1) throw std::invalid_argument("GroupSpec: sp requires n >= 1");
  GroupSpec s;
  s.family = GroupFamily::Sp;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::sl(unsigned n) {
  if (n < 1) throw std::invalid_argument("GroupSpec: sl requires n >= 1");
  GroupSpec s;
  s.family = GroupFamily::SL;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("GroupSpec: expected so:p,q | sp:n | sl:n, got \"" + text +
                                "\"");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (kind == "so") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("GroupSpec: so needs two parameters \"so:p,q\"");
    return so(parse_positive(rest.substr(0, comma), "p"),
              parse_positive(rest.substr(comma + 1), "q"));
  }
  if (kind == "sp") return sp(parse_positive(rest, "n"));
  if (kind == "sl") return sl(parse_positive(rest, "n"));
  throw std::invalid_argument("GroupSpec: unknown family \"" + kind + "\"");
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case GroupFamily::SO:
      return "so:" + std::to_string(p) + "," + std::to_string(q);
    case GroupFamily::Sp:
      return "sp:" + std::to_string(n);
    case GroupFamily::SL:
      return "sl:" + std::to_string(n);
  }
  return {};
}

unsigned GroupSpec::max_k() const {
  switch (family) {
    case GroupFamily::SO:
      return p;
    case GroupFamily::Sp:
      return n;
    case GroupFamily::SL:
      return n - 1;
  }
  return 0;
}

long unipotent_dim(const GroupSpec& spec, unsigned k) {
  check_k(spec, k);
  long kk = as_long(k);
  switch (spec.family) {
    case GroupFamily::SO:
      return kk * (as_long(spec.p) + as_long(spec.q) - 2 * kk) + kk * (kk - 1) / 2;
    case GroupFamily::Sp:
      return 2 * kk * (as_long(spec.n) - kk) + kk + kk * (kk - 1) / 2;
    case GroupFamily::SL:
      return kk * (as_long(spec.n) - kk);
  }
  return 0;
}

FrankeBound franke_bound(const GroupSpec& spec) {
  if (spec.max_k() == 0)
    throw std::domain_error("franke_bound: " + spec.to_string() +
                            " has no maximal parabolic subgroups");
  FrankeBound best;
  for (unsigned k = 1; k <= spec.max_k(); ++k) {
    long d = unipotent_dim(spec, k);
    if (best.argmin_k == 0 || d < best.bound) {
      best.bound = d;
      best.argmin_k = k;
    }
  }
  return best;
}

namespace {

/// Columns of the change of basis from the ordered parabolic basis to the
/// standard basis, together with the invariant form in the standard basis.
struct OracleSetup {
  std::size_t dim = 0;
  std::size_t block_k = 0;    // leading/trailing block size
  RationalMatrix gram{0, 0};  // form in the ordered basis (empty for SL)
  bool has_form = false;
};

OracleSetup build_setup(const GroupSpec& spec, unsigned k) {
  OracleSetup setup;
  if (spec.family == GroupFamily::SL) {
    setup.dim = spec.n;
    setup.block_k = k;
    return setup;
  }

  std::size_t n_dim = spec.family == GroupFamily::SO ? spec.p + spec.q : 2 * spec.n;
  setup.dim = n_dim;
  setup.block_k = k;
  setup.has_form = true;

  // Basis vectors as columns over the standard basis.
  std::vector<std::vector<long>> columns;
  auto unit = [&](std::size_t i) {
    std::vector<long> v(n_dim, 0);
    v[i] = 1;
    return v;
  };
  if (spec.family == GroupFamily::SO) {
    unsigned p = spec.p, q = spec.q;
    auto e = [&](unsigned i) { return unit(i - 1); };          // e_1..e_p
    auto f = [&](unsigned i) { return unit(p + i - 1); };      // f_1..f_q
    auto plus = [](std::vector<long> a, const std::vector<long>& b, long s) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
      return a;
    };
    // u_1..u_k, u_{k+1}..u_p, f_{p+1}..f_q, v_{k+1}..v_p, v_1..v_k with
    // u_i = e_i + f_i and v_i = e_i - f_i.
    for (unsigned i = 1; i <= k; ++i) columns.push_back(plus(e(i), f(i), 1));
    for (unsigned i = k + 1; i <= p; ++i) columns.push_back(plus(e(i), f(i), 1));
    for (unsigned i = p + 1; i <= q; ++i) columns.push_back(f(i));
    for (unsigned i = k + 1; i <= p; ++i) columns.push_back(plus(e(i), f(i), -1));
    for (unsigned i = 1; i <= k; ++i) columns.push_back(plus(e(i), f(i), -1));

    // B = diag(I_p, -I_q); G = C^t B C.
    setup.gram = RationalMatrix(n_dim, n_dim);
    for (std::size_t r = 0; r < n_dim; ++r)
      for (std::size_t c = 0; c < n_dim; ++c) {
        long acc = 0;
        for (std::size_t t = 0; t < n_dim; ++t) {
          long b = t < p ? 1 : -1;
          acc += columns[r][t] * b * columns[c][t];
        }
        setup.gram.at(r, c) = Rational(acc);
      }
  } else {
    unsigned n = spec.n;
    auto e = [&](unsigned i) { return unit(i - 1); };      // e_1..e_n
    auto f = [&](unsigned i) { return unit(n + i - 1); };  // f_1..f_n
    // e_1..e_k, e_{k+1}..e_n, f_{k+1}..f_n, f_1..f_k.
    for (unsigned i = 1; i <= k; ++i) columns.push_back(e(i));
    for (unsigned i = k + 1; i <= n; ++i) columns.push_back(e(i));
    for (unsigned i = k + 1; i <= n; ++i) columns.push_back(f(i));
    for (unsigned i = 1; i <= k; ++i) columns.push_back(f(i));

    // J(e_i, f_i) = 1 = -J(f_i, e_i); G = C^t J C.
    auto j_form = [&](std::size_t s, std::size_t t) -> long {
      if (t >= n && s == t - n) return 1;
      if (s >= n && t == s - n) return -1;
      return 0;
    };
    setup.gram = RationalMatrix(n_dim, n_dim);
    for (std::size_t r = 0; r < n_dim; ++r)
      for (std::size_t c = 0; c < n_dim; ++c) {
        long acc = 0;
        for (std::size_t s = 0; s < n_dim; ++s)
          for (std::size_t t = 0; t < n_dim; ++t)
            acc += columns[r][s] * j_form(s, t) * columns[c][t];
        setup.gram.at(r, c) = Rational(acc);
      }
  }
  return setup;
}

}  // namespace

long oracle_unipotent_dim(const GroupSpec& spec, unsigned k) {
  check_k(spec, k);
  OracleSetup setup = build_setup(spec, k);
  std::size_t n = setup.dim;
  if (n > kOracleSizeLimit)
    throw std::domain_error("oracle_unipotent_dim: size " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(kOracleSizeLimit));

  // Unknowns: entries of X in the strict upper blocks of the flag
  // decomposition. SO/Sp use blocks (k, n-2k, k); SL uses (k, n-k).
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::size_t bk = setup.block_k;
  auto block_of = [&](std::size_t i) -> int {
    if (spec.family == GroupFamily::SL) return i < bk ? 0 : 1;
    if (i < bk) return 0;
    if (i < n - bk) return 1;
    return 2;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (block_of(r) < block_of(c)) unknowns.emplace_back(r, c);

  if (!setup.has_form) {
    // SL: the only linear condition is trace X = 0, which vanishes on the
    // strict part, so every unknown is free.
    return static_cast<long>(unknowns.size());
  }

  // Conditions: X^t G + G X = 0, one equation per matrix entry.
  RationalMatrix system(n * n, unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [a, b] = unknowns[u];
    // X[a][b] contributes G[a][s] to equation (b, s) and G[r][a] to (r, b).
    for (std::size_t s = 0; s < n; ++s) {
      system.at(b * n + s, u) += setup.gram.at(a, s);
      system.at(s * n + b, u) += setup.gram.at(s, a);
    }
  }
  return static_cast<long>(system.nullspace_dim());
}

GradedPoly x_class(unsigned i) {
  if (i == 0) throw std::invalid_argument("x_class: i must be positive");
  RingPtr ring = Ring::make({{"p1plus", 1, Parity::even}});
  GradedPoly ph = genera::ph_component(i, i);
  std::map<std::string, GradedPoly> assignment;
  assignment.emplace("p1", GradedPoly::generator(ring, "p1plus"));
  for (unsigned j = 2; j <= i; ++j)
    assignment.emplace("p" + std::to_string(j), GradedPoly::zero(ring));
  return ph.substitute(assignment).scaled(2);
}

}  // namespace charcalc::arithgrp
