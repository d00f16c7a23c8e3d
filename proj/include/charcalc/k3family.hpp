#ifndef CHARCALC_K3FAMILY_HPP
#define CHARCALC_K3FAMILY_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "charcalc/poly.hpp"

namespace charcalc::k3 {

/// A single lambda-power term coefficient * l^power. Every kappa class of
/// the family lands in a one-dimensional graded piece, so a multi-term
/// integral is an internal error.
struct KappaResult {
  Rational coefficient;
  unsigned lambda_power = 0;

  bool is_zero() const { return coefficient.is_zero(); }
  std::string to_string(const std::string& lambda_symbol = "l") const;

  friend bool operator==(const KappaResult& a, const KappaResult& b) {
    return a.coefficient == b.coefficient &&
           (a.coefficient.is_zero() || a.lambda_power == b.lambda_power);
  }
};

/// Fiber-integration model of the universal quasi-polarized K3-type family:
/// vertical Chern generators t1 (degree 2), t2 (degree 4), the base class l
/// (degree 2), and the push-forward constants a_0..a_8 with
/// integral(t2^j) = a_{j-1} * l^(2j-2). Weights are in degree-2 units.
class FamilyModel {
public:
  /// Model with the built-in a-values (a_0 = 24, ..., see solve_a_values).
  static FamilyModel with_default_a();
  static FamilyModel with_a_values(std::vector<Rational> a);

  const std::vector<Rational>& a_values() const { return a_; }
  const RingPtr& fiber_ring() const { return fiber_ring_; }  // t1, t2, l
  const RingPtr& base_ring() const { return base_ring_; }    // l

  /// Vertical Pontryagin classes (p_1, p_2) = (t1^2 - 2 t2, t2^2) in the
  /// fiber ring, obtained from the rank-2 Chern-to-Pontryagin conversion.
  std::pair<GradedPoly, GradedPoly> vertical_pontryagin() const;

  /// Linear fiber integration: t1^i t2^j l^k -> a_{j-1} l^(i+k+2j-2) for
  /// j >= 1 and 0 for j = 0. Lowers cohomological degree by exactly 4.
  /// Throws when a required a-value is missing.
  GradedPoly fiber_integrate(const GradedPoly& p) const;

  /// Integrates c(T_v) over the fiber: substitutes the vertical Pontryagin
  /// classes into c (a polynomial in generators named p1, p2, ...; classes
  /// past p2 integrate to zero) and fiber-integrates.
  KappaResult kappa(const GradedPoly& c_of_p) const;

  /// Rows i = 1..i_max with row i = kappa(L_{i+1}).
  std::vector<KappaResult> kappa_table(unsigned i_max) const;

private:
  FamilyModel();
  RingPtr fiber_ring_;
  RingPtr base_ring_;
  std::vector<Rational> a_;
};

/// Known-good kappa values for rows i = 1..8 of the family:
/// 8 l^2, 8/3 l^4, 16/45 l^6, 8/315 l^8, 16/14175 l^10, 16/467775 l^12,
/// 32/42567525 l^14, 8/638512875 l^16.
const std::vector<KappaResult>& reference_kappa_rows();

struct SolveAResult {
  std::vector<Rational> solved;        // a_4..a_8
  std::vector<bool> integer_flags;     // per solved value
  bool all_integers = false;
  bool replay_matches = false;         // kappa_table(8) reproduces all targets
  std::vector<KappaResult> replay_rows;
};

/// Recovers a_4..a_8 from target rows. Row i is linear in a_i once
/// a_0..a_{i-1} are known, because the t2^{i+1} coefficient of
/// L_{i+1}(p_1(t), p_2(t)) is the only term touching a_i. Targets are rows
/// i = 1..8; rows 1..3 act as consistency checks (they involve only
/// a_0..a_3), rows 4..8 are solved. Throws when the unknown's coefficient
/// vanishes or a target sits in the wrong lambda power.
SolveAResult solve_a_values(const std::vector<Rational>& known_a0_to_a3,
                            const std::vector<KappaResult>& target_rows_1_to_8);

struct BottReport {
  unsigned i = 0;
  unsigned class_degree = 0;  // 4(i+1)
  unsigned bott_bound = 8;
  bool obstructs = false;     // class_degree > bott_bound
  KappaResult kappa_value;    // kappa(L_{i+1})
};

/// Degree arithmetic for the flat-bundle obstruction: a codimension-4
/// foliation kills the Pontryagin ring above degree 8, so a nonzero kappa
/// value with class_degree > 8 yields the contradiction.
BottReport bott_obstruction(const FamilyModel& family, unsigned i);

/// Flat key-value override file: lines "a0 = 24" .. "a8 = <value>", values
/// integers or fractions, '#' comments allowed. Keys must be contiguous
/// from a0.
std::vector<Rational> parse_a_values(std::istream& in);
void write_a_values(std::ostream& out, const std::vector<Rational>& a);

}  // namespace charcalc::k3

#endif
