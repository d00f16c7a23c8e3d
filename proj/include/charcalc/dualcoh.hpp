#ifndef CHARCALC_DUALCOH_HPP
#define CHARCALC_DUALCOH_HPP

#include <vector>

#include "charcalc/linalg.hpp"
#include "charcalc/poly.hpp"

namespace charcalc::dualcoh {

/// The graded ring Q[u_1..u_g] / (homogeneous components of
/// (1+u_1+...+u_g)(1-u_1+u_2-...+(-1)^g u_g) - 1), with weight(u_i) = i
/// (one weight unit = cohomological degree 2). Normal forms are computed by
/// exhaustive monomial enumeration and exact elimination against every
/// monomial multiple of the relation components, weight by weight up to the
/// top weight g(g+1)/2.
class SpDualRing {
public:
  unsigned g() const { return g_; }
  const RingPtr& ring() const { return ring_; }
  unsigned top_weight() const { return g_ * (g_ + 1) / 2; }

  const std::vector<GradedPoly>& relation_components() const { return relations_; }

  /// Dimension of the weight-d graded piece (0 past the top weight).
  std::size_t graded_dim(unsigned d) const;
  std::vector<std::size_t> graded_dims() const;  // weights 0..top
  std::size_t total_dim() const;

  /// Quotient basis monomials of weight d (the non-pivot monomials).
  const std::vector<Monomial>& basis_monomials(unsigned d) const;

  /// Reduces a polynomial to its normal form in the quotient. Defined for
  /// weights up to the top weight.
  GradedPoly normal_form(const GradedPoly& p) const;

  /// Normal form of u_1 u_2 ... u_g, the socle generator.
  const GradedPoly& socle() const { return socle_; }

  friend SpDualRing sp_dual_ring(unsigned g);

private:
  SpDualRing() = default;

  struct WeightSlice {
    std::vector<Monomial> monomials;  // canonical ascending order
    RowSpan relations;                // RREF over those columns
    std::vector<Monomial> basis;      // non-pivot monomials
  };

  SparseRow to_row(const WeightSlice& slice, const GradedPoly& p) const;

  unsigned g_ = 0;
  RingPtr ring_;
  std::vector<GradedPoly> relations_;
  std::vector<WeightSlice> slices_;  // index = weight
  GradedPoly socle_{nullptr};
};

/// Builds the ring for 1 <= g <= 8.
SpDualRing sp_dual_ring(unsigned g);

/// The 2^(g-1) square-free monomials in u_1..u_{g-1}, verified linearly
/// independent in the quotient; throws when a dependence is detected.
struct TautBasis {
  std::vector<Monomial> monomials;       // subset enumeration order
  std::vector<GradedPoly> normal_forms;  // matching normal forms
};
TautBasis vdg_basis(const SpDualRing& ring);

/// Normal forms of the 2^(g-1) square-free monomials divisible by u_g.
struct KernelBasis {
  std::vector<Monomial> monomials;
  std::vector<GradedPoly> normal_forms;
};
KernelBasis matsushima_kernel_sp(const SpDualRing& ring);

/// Coefficient of the socle class in the normal form of a*b, normalized so
/// that <u_1...u_g-complement pairs> use the normal form of u_1 u_2 ... u_g
/// as the unit; 0 whenever the weights do not sum to the top weight.
Rational poincare_pairing(const SpDualRing& ring, const GradedPoly& a, const GradedPoly& b);

/// True iff the kernel span equals the orthogonal complement of the ideal
/// (u_g) under the pairing, weight by weight.
bool kernel_orthogonality_check(const SpDualRing& ring);

/// Exterior algebra with generators in degrees {2i-1 : i odd,
/// 3 <= i <= n-1} for n odd and {2i-1 : i odd, 3 <= i <= n-3} for n even:
/// the image of the stable classes for the special linear group.
struct SLImageAlgebra {
  unsigned n = 0;
  std::vector<unsigned> generator_degrees;

  /// Coefficients of prod (1 + s^deg) up to s^max_degree.
  std::vector<long> poincare_polynomial(unsigned max_degree) const;
  bool nonzero_in_degree(unsigned d) const;
};
SLImageAlgebra sl_image(unsigned n);

/// True iff the graded dimensions agree, for weights <= max_weight, with a
/// free polynomial algebra on generators of weight 1, 3, 5, ... (equal to
/// the number of partitions of the weight into odd parts).
bool sp_stable_series_check(const SpDualRing& ring, unsigned max_weight);

}  // namespace charcalc::dualcoh

#endif
