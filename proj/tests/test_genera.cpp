#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charcalc/genera.hpp"

using namespace charcalc;
using namespace charcalc::genera;

namespace {

/// Independent oracle for the L-genus series: x/tanh(x) = sum 2^{2k} B_{2k}
/// x^{2k} / (2k)! with Bernoulli numbers from the binomial recurrence.
std::vector<Rational> bernoulli_numbers(unsigned count) {
  std::vector<Rational> b(count + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= count; ++m) {
    Rational sum(0);
    for (unsigned j = 0; j < m; ++j) sum += Rational::binomial(m + 1, j) * b[j];
    b[m] = -sum / Rational(static_cast<long>(m) + 1);
  }
  return b;
}

GradedPoly gen(const RingPtr& r, const std::string& name) {
  return GradedPoly::generator(r, name);
}

}  // namespace

TEST_CASE("l_genus_series base cases") {
  CHECK(l_genus_series(0).coefficients() == std::vector<Rational>{1});
  auto s2 = l_genus_series(2);
  CHECK(s2.coefficients() == std::vector<Rational>{1, Rational(1, 3), Rational(-1, 45)});
  CHECK(l_genus_series(3).coeff(3) == Rational(2, 945));
}

TEST_CASE("l_genus_series against the Bernoulli oracle") {
  auto b = bernoulli_numbers(18);
  auto series = l_genus_series(9);
  for (unsigned k = 0; k <= 9; ++k) {
    Rational expected = Rational::pow2(2 * k) * b[2 * k] / Rational::factorial(2 * k);
    CHECK(series.coeff(k) == expected);
  }
}

TEST_CASE("series truncation is enforced") {
  auto s = l_genus_series(2);
  CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
}

TEST_CASE("multiplicative sequence of the constant series is trivial") {
  PowerSeries q(4);
  q.set_coeff(0, 1);
  auto table = multiplicative_sequence(q, 4);
  for (unsigned m = 1; m <= 4; ++m) CHECK(table.entry(m).is_zero());
  CHECK(table.entry(0) == GradedPoly::one(table.ring()));
}

TEST_CASE("second L-polynomial") {
  auto table = multiplicative_sequence(l_genus_series(2), 2);
  auto p1 = gen(table.ring(), "p1"), p2 = gen(table.ring(), "p2");
  CHECK(table.entry(1) == p1.scaled(Rational(1, 3)));
  CHECK(table.entry(2) == (p2.scaled(7) - p1 * p1).scaled(Rational(1, 45)));
}

TEST_CASE("fourth L-polynomial restricted to p1, p2") {
  auto table = multiplicative_sequence(l_genus_series(4), 4);
  std::map<std::string, GradedPoly> kill_high{
      {"p1", gen(table.ring(), "p1")},
      {"p2", gen(table.ring(), "p2")},
      {"p3", GradedPoly::zero(table.ring())},
      {"p4", GradedPoly::zero(table.ring())}};
  auto restricted = table.entry(4).substitute(kill_high);
  auto p1 = gen(table.ring(), "p1"), p2 = gen(table.ring(), "p2");
  auto expected = (p2.pow(2).scaled(-19) + (p1.pow(2) * p2).scaled(22) + p1.pow(4).scaled(-3))
                      .scaled(Rational(1, 14175));
  CHECK(restricted == expected);
}

TEST_CASE("multiplicative sequence entries are homogeneous") {
  auto table = multiplicative_sequence(l_genus_series(9), 9);
  CHECK(table.entry(0) == GradedPoly::one(table.ring()));
  for (unsigned m = 1; m <= 9; ++m) {
    REQUIRE(!table.entry(m).is_zero());
    CHECK(*table.entry(m).homogeneous_weight() == m);
  }
  CHECK_THROWS_AS(table.entry(10), std::out_of_range);
}

TEST_CASE("multiplicative sequence input validation") {
  PowerSeries q(3);
  q.set_coeff(0, 2);
  CHECK_THROWS_AS(multiplicative_sequence(q, 2), std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_sequence(l_genus_series(2), 3), std::invalid_argument);
}

TEST_CASE("signature of complex projective spaces") {
  // The L-genus takes the value 1 on CP^{2n}, whose Pontryagin classes are
  // p_i = binom(2n+1, i); this pins every coefficient of every L_n.
  auto table = multiplicative_sequence(l_genus_series(9), 9);
  for (unsigned n = 1; n <= 9; ++n) {
    std::map<std::string, Rational> values;
    for (unsigned i = 1; i <= 9; ++i)
      values["p" + std::to_string(i)] = Rational::binomial(2 * n + 1, i);
    CHECK(table.entry(n).evaluate(values) == Rational(1));
  }
}

TEST_CASE("K3 signature sanity") {
  auto table = multiplicative_sequence(l_genus_series(1), 1);
  CHECK(table.entry(1).evaluate({{"p1", Rational(-48)}}) == Rational(-16));
}

TEST_CASE("Newton-identity oracle with explicit roots") {
  // Expand prod_j Q(z_j) in an honest root ring, take the weight-m part,
  // evaluate at random rational roots, and compare against K_m at the
  // matching elementary symmetric values.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> num(-5, 5);
  auto series = l_genus_series(5);
  auto table = multiplicative_sequence(series, 5);

  for (unsigned m = 1; m <= 5; ++m) {
    RingPtr roots = Ring::make([&] {
      std::vector<GeneratorSpec> gens;
      for (unsigned j = 1; j <= m; ++j)
        gens.push_back({"z" + std::to_string(j), 1, Parity::even});
      return gens;
    }());

    GradedPoly product = GradedPoly::one(roots);
    for (unsigned j = 1; j <= m; ++j) {
      GradedPoly zj = gen(roots, "z" + std::to_string(j));
      GradedPoly factor = GradedPoly::constant(roots, series.coeff(0));
      GradedPoly power = GradedPoly::one(roots);
      for (unsigned k = 1; k <= m; ++k) {
        power = power * zj;
        factor += power.scaled(series.coeff(k));
      }
      product = product.mul_truncated(factor, m);
    }
    GradedPoly weight_m_part = product.graded_component(m);

    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> r;
      for (unsigned j = 0; j < m; ++j) r.push_back(Rational(num(rng), 3));

      std::map<std::string, Rational> root_values;
      for (unsigned j = 1; j <= m; ++j) root_values["z" + std::to_string(j)] = r[j - 1];
      Rational direct = weight_m_part.evaluate(root_values);

      // elementary symmetric values of the roots
      std::vector<Rational> elementary(m + 1);
      elementary[0] = 1;
      for (unsigned j = 0; j < m; ++j)
        for (unsigned d = std::min<unsigned>(j + 1, m); d >= 1; --d)
          elementary[d] += elementary[d - 1] * r[j];
      std::map<std::string, Rational> p_values;
      for (unsigned i = 1; i <= 5; ++i)
        p_values["p" + std::to_string(i)] = i <= m ? elementary[i] : Rational(0);

      CHECK(table.entry(m).evaluate(p_values) == direct);
    }
  }
}

TEST_CASE("genus multiplicativity under Whitney sums") {
  // Two formal bundles with classes q_i and r_i; the total class has
  // p_i = sum_{a+b=i} q_a r_b and K_n(p) = sum_{i+j=n} K_i(q) K_j(r).
  const unsigned N = 4;
  auto table = multiplicative_sequence(l_genus_series(N), N);

  std::vector<GeneratorSpec> gens;
  for (unsigned i = 1; i <= N; ++i) gens.push_back({"q" + std::to_string(i), i, Parity::even});
  for (unsigned i = 1; i <= N; ++i) gens.push_back({"r" + std::to_string(i), i, Parity::even});
  RingPtr big = Ring::make(std::move(gens));

  auto cls = [&](const std::string& prefix, unsigned i) {
    return i == 0 ? GradedPoly::one(big) : gen(big, prefix + std::to_string(i));
  };
  std::map<std::string, GradedPoly> whitney;
  for (unsigned i = 1; i <= N; ++i) {
    GradedPoly sum(big);
    for (unsigned a = 0; a <= i; ++a) sum += cls("q", a) * cls("r", i - a);
    whitney.emplace("p" + std::to_string(i), sum);
  }
  auto rename = [&](const std::string& prefix) {
    std::map<std::string, GradedPoly> m;
    for (unsigned i = 1; i <= N; ++i)
      m.emplace("p" + std::to_string(i), cls(prefix, i));
    return m;
  };

  for (unsigned n = 1; n <= N; ++n) {
    GradedPoly lhs = table.entry(n).substitute(whitney);
    GradedPoly rhs(big);
    for (unsigned i = 0; i <= n; ++i) {
      GradedPoly ki = table.entry(i).substitute(rename("q"));
      GradedPoly kj = table.entry(n - i).substitute(rename("r"));
      rhs += ki * kj;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pontryagin_from_chern") {
  SUBCASE("rank 2") {
    auto p = pontryagin_from_chern(2, 2);
    const auto& C = p[0].ring();
    auto c1 = gen(C, "c1"), c2 = gen(C, "c2");
    CHECK(p[0] == c1 * c1 - c2.scaled(2));
    CHECK(p[1] == c2 * c2);
  }
  SUBCASE("rank 1") {
    auto p = pontryagin_from_chern(1, 1);
    auto c1 = gen(p[0].ring(), "c1");
    CHECK(p[0] == c1 * c1);
  }
  SUBCASE("vanishing Chern data") {
    auto p = pontryagin_from_chern(3, 3);
    std::map<std::string, Rational> zero{{"c1", 0}, {"c2", 0}, {"c3", 0}};
    for (const auto& pk : p) CHECK(pk.evaluate(zero) == Rational(0));
  }
  SUBCASE("classes past the rank vanish") {
    auto p = pontryagin_from_chern(2, 4);
    CHECK(p[2].is_zero());
    CHECK(p[3].is_zero());
  }
}

TEST_CASE("ph_component") {
  SUBCASE("first two components") {
    auto ph1 = ph_component(1, 1);
    CHECK(ph1 == gen(ph1.ring(), "p1"));
    auto ph2 = ph_component(2, 2);
    auto p1 = gen(ph2.ring(), "p1"), p2 = gen(ph2.ring(), "p2");
    CHECK(ph2 == (p1 * p1 - p2.scaled(2)).scaled(Rational(1, 12)));
  }
  SUBCASE("vanishes at zero") {
    CHECK(ph_component(1, 1).evaluate({{"p1", 0}}) == Rational(0));
  }
  SUBCASE("rank term rejected") {
    CHECK_THROWS_AS(ph_component(0, 1), std::invalid_argument);
  }
  SUBCASE("homogeneous of weight i") {
    for (unsigned i = 1; i <= 9; ++i) {
      auto ph = ph_component(i, i);
      REQUIRE(!ph.is_zero());
      CHECK(*ph.homogeneous_weight() == i);
    }
  }
}

TEST_CASE("atiyah_singer_l") {
  CHECK(atiyah_singer_l(0) == GradedPoly::one(atiyah_singer_l(0).ring()));
  auto l1 = atiyah_singer_l(1);
  CHECK(l1 == gen(l1.ring(), "p1").scaled(Rational(1, 6)));
  auto l2 = atiyah_singer_l(2);
  auto p1 = gen(l2.ring(), "p1"), p2 = gen(l2.ring(), "p2");
  CHECK(l2 == (p2.scaled(7) - p1 * p1).scaled(Rational(1, 180)));
}
