#include "charcalc/series.hpp"

#include <stdexcept>

namespace charcalc {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: needs a constant term");
}

const Rational& PowerSeries::coeff(unsigned k) const {
  if (k >= c_.size()) throw std::out_of_range("PowerSeries: read past truncation order");
  return c_[k];
}

void PowerSeries::set_coeff(unsigned k, const Rational& v) {
  if (k >= c_.size()) throw std::out_of_range("PowerSeries: write past truncation order");
  c_[k] = v;
}

PowerSeries PowerSeries::mul(const PowerSeries& o) const {
  unsigned n = std::min(order(), o.order());
  PowerSeries r(n);
  for (unsigned k = 0; k <= n; ++k) {
    Rational s(0);
    for (unsigned j = 0; j <= k; ++j) s += c_[j] * o.c_[k - j];
    r.c_[k] = s;
  }
  return r;
}

PowerSeries PowerSeries::div(const PowerSeries& o) const {
  if (o.c_[0].is_zero())
    throw std::domain_error("PowerSeries: division by series with zero constant term");
  unsigned n = std::min(order(), o.order());
  PowerSeries q(n);
  for (unsigned k = 0; k <= n; ++k) {
    Rational s = c_[k];
    for (unsigned j = 0; j < k; ++j) s -= o.c_[k - j] * q.c_[j];
    q.c_[k] = s / o.c_[0];
  }
  return q;
}

PowerSeries PowerSeries::log() const {
  if (!c_[0].is_one())
    throw std::domain_error("PowerSeries: log needs constant term 1");
  unsigned n = order();
  PowerSeries l(n);
  // k*Q_k = sum_{j=1}^{k} j*L_j*Q_{k-j} with Q = exp(L).
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = Rational(static_cast<long>(k)) * c_[k];
    for (unsigned j = 1; j < k; ++j)
      s -= Rational(static_cast<long>(j)) * l.c_[j] * c_[k - j];
    l.c_[k] = s / Rational(static_cast<long>(k));
  }
  return l;
}

}  // namespace charcalc
