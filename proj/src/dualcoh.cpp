#include "charcalc/dualcoh.hpp"

#include <algorithm>
#include <stdexcept>

namespace charcalc::dualcoh {

namespace {

/// All exponent vectors of the given weight, in canonical ascending order.
std::vector<Monomial> monomials_of_weight(const Ring& ring, unsigned weight) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(ring.size(), 0);
  // Recursive descent in declaration order yields ascending lexicographic
  // exponent vectors, matching the canonical monomial order.
  auto rec = [&](auto&& self, std::size_t gi, unsigned remaining) -> void {
    if (gi + 1 == ring.size()) {
      unsigned w = ring.generator(gi).weight;
      if (remaining % w == 0) {
        exps[gi] = remaining / w;
        out.emplace_back(exps);
        exps[gi] = 0;
      }
      return;
    }
    unsigned w = ring.generator(gi).weight;
    for (std::uint32_t e = 0; e * w <= remaining; ++e) {
      exps[gi] = e;
      self(self, gi + 1, remaining - e * w);
    }
    exps[gi] = 0;
  };
  if (ring.size() == 0) {
    if (weight == 0) out.emplace_back(exps);
    return out;
  }
  rec(rec, 0, weight);
  return out;
}

/// Square-free monomials over generator indices in `positions`, optionally
/// multiplied by the fixed extra index; bitmask enumeration order.
std::vector<Monomial> squarefree_monomials(const Ring& ring,
                                           const std::vector<std::size_t>& positions,
                                           int extra_index) {
  std::vector<Monomial> out;
  std::size_t count = std::size_t(1) << positions.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Monomial m(ring.size());
    for (std::size_t b = 0; b < positions.size(); ++b)
      if (mask & (std::size_t(1) << b)) m.set_exponent(positions[b], 1);
    if (extra_index >= 0) m.set_exponent(static_cast<std::size_t>(extra_index), 1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

SparseRow SpDualRing::to_row(const WeightSlice& slice, const GradedPoly& p) const {
  SparseRow row;
  row.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(slice.monomials.begin(), slice.monomials.end(), m);
    if (it == slice.monomials.end() || *it != m)
      throw std::logic_error("SpDualRing: monomial outside the slice");
    row.emplace_back(static_cast<std::uint32_t>(it - slice.monomials.begin()), c);
  }
  return row;
}

SpDualRing sp_dual_ring(unsigned g) {
  if (g < 1 || g > 8)
    throw std::invalid_argument("sp_dual_ring: g must be between 1 and 8");

  SpDualRing r;
  r.g_ = g;
  r.ring_ = Ring::weighted_even("u", g);

  // (1 + u_1 + ... + u_g)(1 - u_1 + u_2 - ... + (-1)^g u_g) - 1, split into
  // homogeneous components.
  GradedPoly total = GradedPoly::one(r.ring_);
  GradedPoly alternating = GradedPoly::one(r.ring_);
  for (unsigned i = 1; i <= g; ++i) {
    GradedPoly ui = GradedPoly::generator(r.ring_, "u" + std::to_string(i));
    total += ui;
    alternating += (i % 2 == 1) ? -ui : ui;
  }
  GradedPoly relation = total * alternating - GradedPoly::one(r.ring_);
  for (unsigned d = 1; d <= 2 * g; ++d) {
    GradedPoly comp = relation.graded_component(d);
    if (!comp.is_zero()) r.relations_.push_back(std::move(comp));
  }

  // Slices cover the top weight and the relation weights (2g exceeds the
  // top weight only for g <= 2).
  unsigned constructed = std::max(r.top_weight(), 2 * g);
  r.slices_.resize(constructed + 1);
  for (unsigned d = 0; d <= constructed; ++d) {
    auto& slice = r.slices_[d];
    slice.monomials = monomials_of_weight(*r.ring_, d);
    for (const auto& rel : r.relations_) {
      unsigned rel_w = *rel.homogeneous_weight();
      if (rel_w > d) continue;
      for (const auto& m : monomials_of_weight(*r.ring_, d - rel_w)) {
        GradedPoly multiple = GradedPoly::from_monomial(r.ring_, m) * rel;
        slice.relations.add(r.to_row(slice, multiple));
      }
    }
    for (const auto& m : slice.monomials) {
      auto it = std::lower_bound(slice.monomials.begin(), slice.monomials.end(), m);
      std::uint32_t col = static_cast<std::uint32_t>(it - slice.monomials.begin());
      if (!slice.relations.is_pivot_column(col)) slice.basis.push_back(m);
    }
  }

  Monomial socle_monomial(r.ring_->size());
  for (std::size_t i = 0; i < r.ring_->size(); ++i) socle_monomial.set_exponent(i, 1);
  r.socle_ = r.normal_form(GradedPoly::from_monomial(r.ring_, socle_monomial));
  if (r.socle_.is_zero() || r.slices_[r.top_weight()].basis.size() != 1)
    throw std::logic_error("sp_dual_ring: top graded piece is not one-dimensional");
  return r;
}

std::size_t SpDualRing::graded_dim(unsigned d) const {
  if (d >= slices_.size()) return 0;
  return slices_[d].basis.size();
}

std::vector<std::size_t> SpDualRing::graded_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(top_weight() + 1);
  for (unsigned d = 0; d <= top_weight(); ++d) dims.push_back(slices_[d].basis.size());
  return dims;
}

std::size_t SpDualRing::total_dim() const {
  std::size_t total = 0;
  for (const auto& s : slices_) total += s.basis.size();
  return total;
}

const std::vector<Monomial>& SpDualRing::basis_monomials(unsigned d) const {
  if (d >= slices_.size())
    throw std::out_of_range("SpDualRing: weight past the constructed range");
  return slices_[d].basis;
}

GradedPoly SpDualRing::normal_form(const GradedPoly& p) const {
  if (!same_ring(p.ring(), ring_))
    throw std::invalid_argument("SpDualRing: polynomial from a different ring");
  if (p.max_weight() >= slices_.size())
    throw std::out_of_range("SpDualRing: weight past the constructed range");
  GradedPoly out(ring_);
  for (unsigned d = 0; d <= p.max_weight(); ++d) {
    GradedPoly comp = p.graded_component(d);
    if (comp.is_zero()) continue;
    const auto& slice = slices_[d];
    SparseRow reduced = slice.relations.reduce(to_row(slice, comp));
    for (const auto& [col, c] : reduced) out.add_term(slice.monomials[col], c);
  }
  return out;
}

TautBasis vdg_basis(const SpDualRing& ring) {
  std::vector<std::size_t> positions;
  for (unsigned i = 0; i + 1 < ring.g(); ++i) positions.push_back(i);

  TautBasis basis;
  basis.monomials = squarefree_monomials(*ring.ring(), positions, -1);
  basis.normal_forms.reserve(basis.monomials.size());
  for (const auto& m : basis.monomials)
    basis.normal_forms.push_back(ring.normal_form(GradedPoly::from_monomial(ring.ring(), m)));

  // Independence in the quotient, weight by weight.
  std::map<unsigned, std::vector<const GradedPoly*>> by_weight;
  for (const auto& nf : basis.normal_forms) {
    if (nf.is_zero())
      throw std::logic_error("vdg_basis: monomial reduced to zero");
    by_weight[*nf.homogeneous_weight()].push_back(&nf);
  }
  for (const auto& [d, polys] : by_weight) {
    std::vector<GradedPoly> vecs;
    vecs.reserve(polys.size());
    for (const auto* p : polys) vecs.push_back(*p);
    if (span_reduce(vecs, d).basis.size() != vecs.size())
      throw std::logic_error("vdg_basis: dependence detected in weight " + std::to_string(d));
  }
  return basis;
}

KernelBasis matsushima_kernel_sp(const SpDualRing& ring) {
  std::vector<std::size_t> positions;
  for (unsigned i = 0; i + 1 < ring.g(); ++i) positions.push_back(i);

  KernelBasis kernel;
  kernel.monomials =
      squarefree_monomials(*ring.ring(), positions, static_cast<int>(ring.g()) - 1);
  kernel.normal_forms.reserve(kernel.monomials.size());
  for (const auto& m : kernel.monomials)
    kernel.normal_forms.push_back(
        ring.normal_form(GradedPoly::from_monomial(ring.ring(), m)));
  return kernel;
}

Rational poincare_pairing(const SpDualRing& ring, const GradedPoly& a, const GradedPoly& b) {
  auto wa = a.homogeneous_weight();  // throws on inhomogeneous input
  auto wb = b.homogeneous_weight();
  if (!wa || !wb) return 0;
  if (*wa + *wb != ring.top_weight()) return 0;

  GradedPoly product_nf = ring.normal_form(a * b);
  const Monomial& top_basis = ring.basis_monomials(ring.top_weight()).front();
  Rational socle_coeff = ring.socle().coefficient(top_basis);
  return product_nf.coefficient(top_basis) / socle_coeff;
}

bool kernel_orthogonality_check(const SpDualRing& ring) {
  unsigned top = ring.top_weight();
  unsigned g = ring.g();
  KernelBasis kernel = matsushima_kernel_sp(ring);

  // Ideal (u_g), weight by weight: spans of normal forms of u_g * m.
  std::vector<std::vector<GradedPoly>> ideal_slices(top + 1);
  GradedPoly ug = GradedPoly::generator(ring.ring(), "u" + std::to_string(g));
  for (unsigned d = g; d <= top; ++d) {
    std::vector<GradedPoly> generators;
    for (const auto& m : ring.basis_monomials(d - g)) {
      GradedPoly nf = ring.normal_form(ug * GradedPoly::from_monomial(ring.ring(), m));
      if (!nf.is_zero()) generators.push_back(std::move(nf));
    }
    if (generators.empty()) continue;
    auto reduced = span_reduce(generators, d);
    ideal_slices[d] = std::move(reduced.basis);
  }
  // Multiplying quotient representatives by u_g covers the whole ideal
  // slice: any element of (u_g) in weight d is u_g * x, and replacing x by
  // its normal form changes u_g * x by something in the relation span.

  for (unsigned d = 0; d <= top; ++d) {
    // Kernel span in weight d.
    std::vector<GradedPoly> kernel_d;
    for (const auto& nf : kernel.normal_forms)
      if (!nf.is_zero() && *nf.homogeneous_weight() == d) kernel_d.push_back(nf);
    std::size_t kernel_dim = kernel_d.empty() ? 0 : span_reduce(kernel_d, d).basis.size();

    const auto& quotient_basis = ring.basis_monomials(d);
    unsigned cod = top - d;
    const auto& ideal_basis = ideal_slices[cod];

    // Orthogonal complement of the ideal in weight d.
    RationalMatrix pairing(quotient_basis.size(), std::max<std::size_t>(ideal_basis.size(), 1));
    for (std::size_t i = 0; i < quotient_basis.size(); ++i) {
      GradedPoly qi = GradedPoly::from_monomial(ring.ring(), quotient_basis[i]);
      for (std::size_t j = 0; j < ideal_basis.size(); ++j)
        pairing.at(i, j) = poincare_pairing(ring, qi, ideal_basis[j]);
    }
    std::size_t complement_dim =
        quotient_basis.size() - (ideal_basis.empty() ? 0 : pairing.rank());

    if (kernel_dim != complement_dim) return false;
    // Containment: every kernel element pairs to zero with the ideal.
    for (const auto& kv : kernel_d)
      for (const auto& iv : ideal_basis)
        if (!poincare_pairing(ring, kv, iv).is_zero()) return false;
  }
  return true;
}

std::vector<long> SLImageAlgebra::poincare_polynomial(unsigned max_degree) const {
  std::vector<long> coeffs(max_degree + 1, 0);
  coeffs[0] = 1;
  for (unsigned deg : generator_degrees) {
    // multiply by (1 + s^deg), descending to reuse the array in place
    for (unsigned d = max_degree; d >= deg; --d) coeffs[d] += coeffs[d - deg];
  }
  return coeffs;
}

bool SLImageAlgebra::nonzero_in_degree(unsigned d) const {
  auto coeffs = poincare_polynomial(d);
  return coeffs[d] != 0;
}

SLImageAlgebra sl_image(unsigned n) {
  if (n < 2) throw std::invalid_argument("sl_image: n must be at least 2");
  SLImageAlgebra algebra;
  algebra.n = n;
  unsigned bound = 0;
  if (n >= 3) bound = n % 2 == 1 ? n - 1 : n - 3;
  for (unsigned i = 3; i <= bound; i += 2) algebra.generator_degrees.push_back(2 * i - 1);
  return algebra;
}

bool sp_stable_series_check(const SpDualRing& ring, unsigned max_weight) {
  // Graded dimensions of Q[c_1, c_3, c_5, ...] with weight(c_i) = i: the
  // number of partitions into odd parts.
  std::vector<long> odd_partitions(max_weight + 1, 0);
  odd_partitions[0] = 1;
  for (unsigned part = 1; part <= max_weight; part += 2)
    for (unsigned d = part; d <= max_weight; ++d)
      odd_partitions[d] += odd_partitions[d - part];

  for (unsigned d = 0; d <= max_weight; ++d)
    if (static_cast<long>(ring.graded_dim(d)) != odd_partitions[d]) return false;
  return true;
}

}  // namespace charcalc::dualcoh
