#ifndef CHARCALC_SERIES_HPP
#define CHARCALC_SERIES_HPP

#include <vector>

#include "charcalc/rational.hpp"

namespace charcalc {

/// Truncated power series over the rationals in one variable of weight 1.
/// The truncation order is explicit and operations never read beyond it.
class PowerSeries {
public:
  explicit PowerSeries(unsigned order) : c_(order + 1) {}
  explicit PowerSeries(std::vector<Rational> coeffs);

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const Rational& coeff(unsigned k) const;
  void set_coeff(unsigned k, const Rational& v);
  const std::vector<Rational>& coefficients() const { return c_; }

  PowerSeries mul(const PowerSeries& o) const;
  /// Exact coefficient-wise division; o must have nonzero constant term.
  PowerSeries div(const PowerSeries& o) const;
  /// log of a series with constant term 1.
  PowerSeries log() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
  std::vector<Rational> c_;
};

}  // namespace charcalc

#endif
