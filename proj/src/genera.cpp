#include "charcalc/genera.hpp"

#include <stdexcept>

namespace charcalc::genera {

GenusSeries l_genus_series(unsigned n) {
  // sqrt(z)/tanh(sqrt z) = cosh(sqrt z) / (sinh(sqrt z)/sqrt z), and both
  // numerator and denominator are plain series in z:
  //   cosh(sqrt z)         = sum z^k / (2k)!
  //   sinh(sqrt z)/sqrt z  = sum z^k / (2k+1)!
  PowerSeries num(n), den(n);
  for (unsigned k = 0; k <= n; ++k) {
    num.set_coeff(k, Rational(1) / Rational::factorial(2 * k));
    den.set_coeff(k, Rational(1) / Rational::factorial(2 * k + 1));
  }
  return num.div(den);
}

const GradedPoly& MultSeqTable::entry(unsigned m) const {
  if (m >= entries_.size()) throw std::out_of_range("MultSeqTable: index past table");
  return entries_[m];
}

std::vector<GradedPoly> newton_power_sums(const RingPtr& ring, unsigned n) {
  auto elem = [&](unsigned i) {
    if (i >= 1 && i <= ring->size())
      return GradedPoly::generator(ring, ring->generator(i - 1).name);
    return GradedPoly::zero(ring);
  };
  // N_k = e_1 N_{k-1} - e_2 N_{k-2} + ... + (-1)^k e_{k-1} N_1 + (-1)^{k-1} k e_k
  std::vector<GradedPoly> pows;
  pows.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    GradedPoly acc = elem(k).scaled(Rational(k % 2 == 1 ? static_cast<long>(k)
                                                        : -static_cast<long>(k)));
    for (unsigned i = 1; i < k; ++i) {
      GradedPoly term = elem(k - i) * pows[i - 1];
      if ((k - 1 + i) % 2 == 1) term = -term;
      acc += term;
    }
    pows.push_back(std::move(acc));
  }
  return pows;
}

MultSeqTable multiplicative_sequence(const GenusSeries& q, unsigned n) {
  if (!q.coeff(0).is_one())
    throw std::invalid_argument("multiplicative_sequence: series must have constant term 1");
  if (n > q.order())
    throw std::invalid_argument("multiplicative_sequence: index exceeds truncation order");

  RingPtr ring = Ring::weighted_even("p", n);
  std::vector<GradedPoly> entries;
  entries.push_back(GradedPoly::one(ring));
  if (n == 0) return MultSeqTable(ring, std::move(entries));

  // With formal roots z_1..z_m, log prod_j Q(z_j) = sum_k (log Q)_k * N_k
  // where N_k is the k-th power sum; Newton's identities turn the N_k into
  // polynomials in the elementary symmetric functions, identified with the
  // p_i. Exponentiating and truncating by weight recovers every K_m at once.
  PowerSeries logq = q.log();
  auto power_sums = newton_power_sums(ring, n);

  GradedPoly arg(ring);
  for (unsigned k = 1; k <= n; ++k) arg += power_sums[k - 1].scaled(logq.coeff(k));

  GradedPoly expansion = GradedPoly::one(ring);
  GradedPoly term = GradedPoly::one(ring);
  for (unsigned j = 1; j <= n; ++j) {
    term = term.mul_truncated(arg, n).scaled(Rational(1, static_cast<long>(j)));
    expansion += term;
  }

  for (unsigned m = 1; m <= n; ++m) entries.push_back(expansion.graded_component(m));
  return MultSeqTable(ring, std::move(entries));
}

std::vector<GradedPoly> pontryagin_from_chern(unsigned rank, unsigned n) {
  if (rank < 1 || n < 1)
    throw std::invalid_argument("pontryagin_from_chern: rank and n must be positive");
  RingPtr ring = Ring::weighted_even("c", rank);
  GradedPoly alternating = GradedPoly::one(ring);
  GradedPoly total = GradedPoly::one(ring);
  for (unsigned i = 1; i <= rank; ++i) {
    GradedPoly ci = GradedPoly::generator(ring, "c" + std::to_string(i));
    total += ci;
    alternating += (i % 2 == 1) ? -ci : ci;
  }
  GradedPoly product = alternating * total;  // = sum (-1)^k p_k, p_k in weight 2k
  std::vector<GradedPoly> result;
  result.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    GradedPoly pk = product.graded_component(2 * k);
    if (k % 2 == 1) pk = -pk;
    result.push_back(std::move(pk));
  }
  return result;
}

GradedPoly ph_component(unsigned i, unsigned n_classes) {
  if (i == 0)
    throw std::invalid_argument("ph_component: the rank term ph_0 is not provided");
  RingPtr ring = Ring::weighted_even("p", n_classes);
  auto power_sums = newton_power_sums(ring, i);
  return power_sums[i - 1].scaled(Rational(2) / Rational::factorial(2 * i));
}

GradedPoly atiyah_singer_l(unsigned n) {
  auto table = multiplicative_sequence(l_genus_series(n), n);
  return table.entry(n).scaled(Rational::pow2(-static_cast<long>(n)));
}

}  // namespace charcalc::genera
