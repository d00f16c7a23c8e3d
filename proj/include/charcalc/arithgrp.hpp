#ifndef CHARCALC_ARITHGRP_HPP
#define CHARCALC_ARITHGRP_HPP

#include <string>
#include <vector>

#include "charcalc/poly.hpp"

namespace charcalc::arithgrp {

enum class GroupFamily { SO, Sp, SL };

/// One of SO(p,q) with 1 <= p <= q, Sp(2n), SL(n). Text syntax for the CLI:
/// "so:p,q", "sp:n", "sl:n".
struct GroupSpec {
  GroupFamily family = GroupFamily::SO;
  unsigned p = 0, q = 0;  // SO only
  unsigned n = 0;         // Sp / SL

  static GroupSpec so(unsigned p, unsigned q);
  static GroupSpec sp(unsigned n);
  static GroupSpec sl(unsigned n);
  static GroupSpec parse(const std::string& text);

  std::string to_string() const;

  /// Admissible isotropic/subspace dimensions k for maximal parabolics:
  /// 1..p for SO, 1..n for Sp, 1..n-1 for SL.
  unsigned max_k() const;
};

/// Closed-form dimension of the unipotent radical of the k-th maximal
/// parabolic: k(p+q-2k) + k(k-1)/2 for SO, 2k(n-k) + k + k(k-1)/2 for Sp,
/// k(n-k) for SL. Throws when k is out of range.
long unipotent_dim(const GroupSpec& spec, unsigned k);

struct FrankeBound {
  long bound = 0;
  unsigned argmin_k = 0;  // ties broken by smallest k
};

/// min over admissible k of unipotent_dim; the injectivity range of the
/// Matsushima homomorphism for lattices in the group.
FrankeBound franke_bound(const GroupSpec& spec);

/// Independent check of unipotent_dim: dimension of the space of matrices
/// that are strictly block-upper-triangular with respect to the flag of the
/// k-th parabolic (acting trivially on each graded quotient) and satisfy the
/// linearized group condition (X^t G + G X = 0 for SO/Sp, trace zero for
/// SL), computed as an exact rational nullspace dimension. Limited to at
/// most 30 rows.
long oracle_unipotent_dim(const GroupSpec& spec, unsigned k);

/// The class x_{4i} = 2 ph_{4i} of the 3-dimensional summand of the flat
/// homology bundle: (4/(2i)!) (p1plus)^i in a one-generator ring, since a
/// rank-3 bundle has only its first Pontryagin class.
GradedPoly x_class(unsigned i);

}  // namespace charcalc::arithgrp

#endif
