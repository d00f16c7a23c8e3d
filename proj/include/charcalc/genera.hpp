#ifndef CHARCALC_GENERA_HPP
#define CHARCALC_GENERA_HPP

#include <vector>

#include "charcalc/poly.hpp"
#include "charcalc/series.hpp"

namespace charcalc::genera {

/// Characteristic power series of a genus; the variable has weight 1 (one
/// unit of Pontryagin grading, i.e. cohomological degree 4).
using GenusSeries = PowerSeries;

/// Coefficients of sqrt(z)/tanh(sqrt(z)) up to z^N, from the exponential
/// series by exact division: cosh(sqrt z) / (sinh(sqrt z)/sqrt z).
GenusSeries l_genus_series(unsigned n);

/// The multiplicative-sequence polynomials K_0..K_n attached to a power
/// series Q with Q(0) = 1. K_m lives in Q[p_1..p_n] with weight(p_i) = i and
/// is homogeneous of weight m.
class MultSeqTable {
public:
  MultSeqTable(RingPtr ring, std::vector<GradedPoly> entries)
      : ring_(std::move(ring)), entries_(std::move(entries)) {}

  const RingPtr& ring() const { return ring_; }
  unsigned max_index() const { return static_cast<unsigned>(entries_.size()) - 1; }
  const GradedPoly& entry(unsigned m) const;
  const std::vector<GradedPoly>& entries() const { return entries_; }

private:
  RingPtr ring_;
  std::vector<GradedPoly> entries_;
};

/// Expands prod_j Q(z_j) over formal roots, collects the log into power
/// sums, and rewrites through Newton's identities in the elementary
/// symmetric generators p_1..p_n.
MultSeqTable multiplicative_sequence(const GenusSeries& q, unsigned n);

/// Power-sum polynomials N_1..N_n in the ring's generators, read as the
/// elementary symmetric functions e_1, e_2, ... (e_i = 0 past the ring).
std::vector<GradedPoly> newton_power_sums(const RingPtr& ring, unsigned n);

/// p_1..p_n as polynomials in the Chern classes c_1..c_rank, extracted from
/// sum (-1)^k p_k = (sum (-1)^i c_i)(sum c_i) by graded components. The
/// returned polynomials live in Q[c_1..c_rank] with weight(c_i) = i (one
/// weight unit = cohomological degree 2).
std::vector<GradedPoly> pontryagin_from_chern(unsigned rank, unsigned n);

/// Degree-4i component of the Pontryagin character as a polynomial in
/// p_1..p_{n_classes}: (2/(2i)!) * N_i with p_j = 0 past n_classes.
GradedPoly ph_component(unsigned i, unsigned n_classes);

/// Atiyah-Singer modification: 2^-n times the n-th L-polynomial.
GradedPoly atiyah_singer_l(unsigned n);

}  // namespace charcalc::genera

#endif
