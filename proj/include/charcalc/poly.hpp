#ifndef CHARCALC_POLY_HPP
#define CHARCALC_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charcalc/rational.hpp"
#include "charcalc/ring.hpp"

namespace charcalc {

/// Sparse polynomial over a Ring with exact rational coefficients. Zero
/// coefficients are never stored, so equality is structural. Odd generators
/// multiply with the Koszul sign for the declaration order and square to
/// zero.
class GradedPoly {
public:
  explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static GradedPoly zero(RingPtr ring) { return GradedPoly(std::move(ring)); }
  static GradedPoly constant(RingPtr ring, const Rational& c);
  static GradedPoly one(RingPtr ring) { return constant(std::move(ring), 1); }
  static GradedPoly generator(const RingPtr& ring, const std::string& name);
  static GradedPoly from_monomial(const RingPtr& ring, const Monomial& m,
                                  const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

  GradedPoly scaled(const Rational& c) const;
  GradedPoly pow(unsigned e) const;

  /// Product with every result term of weight > max_weight dropped.
  GradedPoly mul_truncated(const GradedPoly& o, unsigned max_weight) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b);
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

  /// Sum of the terms of weight exactly d.
  GradedPoly graded_component(unsigned d) const;

  /// Weight when homogeneous (nullopt for zero, which is homogeneous of
  /// every weight); throws nothing.
  std::optional<unsigned> homogeneous_weight() const;
  bool is_homogeneous() const;
  unsigned max_weight() const;  // 0 for the zero polynomial

  /// Replaces every generator by its assigned polynomial and expands. All
  /// assignments must live in one common ring, be weight-homogeneous, and
  /// scale weights by one common ratio. Generators appearing in this
  /// polynomial must all be assigned.
  GradedPoly substitute(const std::map<std::string, GradedPoly>& assignment) const;

  /// Evaluates at rational values for the generators (all generators
  /// appearing must be assigned).
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Canonical text form: terms sorted by weight then monomial order, e.g.
  /// "2*u2 - u1^2 + u2^2"; the zero polynomial prints "0".
  std::string to_string() const;

  /// Adds c to the coefficient of m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

private:
  RingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

}  // namespace charcalc

#endif
