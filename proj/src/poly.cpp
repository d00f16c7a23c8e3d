#include "charcalc/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace charcalc {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (!same_ring(a, b))
    throw std::invalid_argument(std::string(op) + ": ring mismatch");
}

/// Combines two monomials. Returns the Koszul sign (+1/-1), or 0 when an odd
/// generator appears in both factors. Odd generators are ordered by
/// declaration; moving each odd generator of b past the later odd generators
/// of a contributes one sign flip per transposition.
int combine_monomials(const Ring& ring, const Monomial& a, const Monomial& b, Monomial& out) {
  std::size_t n = ring.size();
  out = Monomial(n);
  std::vector<std::size_t> odd_a;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.generator(i).parity == Parity::odd && a.exponent(i) > 0) odd_a.push_back(i);
  }
  long flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
    if (ring.generator(i).parity == Parity::odd) {
      if (ea + eb > 1) return 0;
      if (eb > 0) {
        // count odd generators of a declared after position i
        flips += std::count_if(odd_a.begin(), odd_a.end(),
                               [i](std::size_t j) { return j > i; });
      }
    }
    out.set_exponent(i, ea + eb);
  }
  return flips % 2 == 0 ? 1 : -1;
}

}  // namespace

GradedPoly GradedPoly::constant(RingPtr ring, const Rational& c) {
  GradedPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->size()), c);
  return p;
}

GradedPoly GradedPoly::generator(const RingPtr& ring, const std::string& name) {
  Monomial m(ring->size());
  m.set_exponent(ring->index_of(name), 1);
  return from_monomial(ring, m);
}

GradedPoly GradedPoly::from_monomial(const RingPtr& ring, const Monomial& m, const Rational& c) {
  if (m.size() != ring->size())
    throw std::invalid_argument("GradedPoly: monomial size mismatch");
  GradedPoly p(ring);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same_ring(ring_, o.ring_, "poly add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same_ring(ring_, o.ring_, "poly sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  require_same_ring(a.ring_, b.ring_, "poly mul");
  GradedPoly r(a.ring_);
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int sign = combine_monomials(*a.ring_, ma, mb, prod);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(prod, c);
    }
  }
  return r;
}

GradedPoly GradedPoly::mul_truncated(const GradedPoly& o, unsigned max_weight) const {
  require_same_ring(ring_, o.ring_, "poly mul");
  GradedPoly r(ring_);
  Monomial prod;
  for (const auto& [ma, ca] : terms_) {
    unsigned wa = ring_->weight_of(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (wa + ring_->weight_of(mb) > max_weight) continue;
      int sign = combine_monomials(*ring_, ma, mb, prod);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(prod, c);
    }
  }
  return r;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly r = one(ring_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::graded_component(unsigned d) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (ring_->weight_of(m) == d) r.terms_.emplace(m, c);
  return r;
}

std::optional<unsigned> GradedPoly::homogeneous_weight() const {
  std::optional<unsigned> w;
  for (const auto& [m, c] : terms_) {
    unsigned wm = ring_->weight_of(m);
    if (!w)
      w = wm;
    else if (*w != wm)
      throw std::invalid_argument("GradedPoly: not homogeneous");
  }
  return w;
}

bool GradedPoly::is_homogeneous() const {
  try {
    homogeneous_weight();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

unsigned GradedPoly::max_weight() const {
  unsigned w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, ring_->weight_of(m));
  return w;
}

GradedPoly GradedPoly::substitute(const std::map<std::string, GradedPoly>& assignment) const {
  if (assignment.empty())
    throw std::invalid_argument("substitute: empty assignment");
  const RingPtr& target = assignment.begin()->second.ring();

  // Validate: common target ring, homogeneity, and one common weight scale.
  std::optional<Rational> scale;
  for (const auto& [name, p] : assignment) {
    require_same_ring(target, p.ring(), "substitute");
    std::optional<unsigned> w;
    try {
      w = p.homogeneous_weight();
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("substitute: assignment for \"" + name +
                                  "\" is not weight-homogeneous");
    }
    if (!w) continue;  // zero matches any weight
    std::size_t gi = ring_->index_of(name);
    Rational ratio(static_cast<long>(*w), static_cast<long>(ring_->generator(gi).weight));
    if (!scale)
      scale = ratio;
    else if (*scale != ratio)
      throw std::invalid_argument("substitute: assignment for \"" + name +
                                  "\" breaks the common weight scale");
  }

  // Per-generator power cache, filled lazily.
  std::vector<std::vector<GradedPoly>> powers(ring_->size());
  auto power_of = [&](std::size_t gi, std::uint32_t e) -> const GradedPoly& {
    auto& cache = powers[gi];
    if (cache.empty()) {
      auto it = assignment.find(ring_->generator(gi).name);
      if (it == assignment.end())
        throw std::invalid_argument("substitute: generator \"" +
                                    ring_->generator(gi).name + "\" unassigned");
      cache.push_back(GradedPoly::one(target));
      cache.push_back(it->second);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  GradedPoly result(target);
  for (const auto& [m, c] : terms_) {
    GradedPoly term = GradedPoly::constant(target, c);
    for (std::size_t gi = 0; gi < ring_->size(); ++gi) {
      std::uint32_t e = m.exponent(gi);
      if (e == 0) continue;
      term = term * power_of(gi, e);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

Rational GradedPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t gi = 0; gi < ring_->size(); ++gi) {
      std::uint32_t e = m.exponent(gi);
      if (e == 0) continue;
      auto it = values.find(ring_->generator(gi).name);
      if (it == values.end())
        throw std::invalid_argument("evaluate: generator \"" +
                                    ring_->generator(gi).name + "\" unassigned");
      term *= it->second.pow(e);
    }
    total += term;
  }
  return total;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Sort by weight, then canonical monomial order.
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [this](const auto* a, const auto* b) {
    unsigned wa = ring_->weight_of(a->first), wb = ring_->weight_of(b->first);
    if (wa != wb) return wa < wb;
    return a->first < b->first;
  });

  std::string s;
  for (const auto* t : sorted) {
    const Rational& c = t->second;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = ring_->monomial_string(t->first);
    if (mono == "1")
      s += a.to_string();
    else if (a.is_one())
      s += mono;
    else
      s += a.to_string() + "*" + mono;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) {
  return os << p.to_string();
}

}  // namespace charcalc
