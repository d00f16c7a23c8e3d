#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charcalc/dualcoh.hpp"

using namespace charcalc;
using namespace charcalc::dualcoh;

namespace {

GradedPoly gen(const RingPtr& r, const std::string& name) {
  return GradedPoly::generator(r, name);
}

}  // namespace

TEST_CASE("small quotient rings") {
  SUBCASE("g = 1") {
    auto ring = sp_dual_ring(1);
    CHECK(ring.graded_dims() == std::vector<std::size_t>{1, 1});
    CHECK(ring.total_dim() == 2);
    // single relation -u1^2 from (1+u1)(1-u1) - 1
    REQUIRE(ring.relation_components().size() == 1);
    auto u1 = gen(ring.ring(), "u1");
    CHECK(ring.relation_components()[0] == -(u1 * u1));
    CHECK(ring.normal_form(u1 * u1).is_zero());
  }
  SUBCASE("g = 2") {
    auto ring = sp_dual_ring(2);
    CHECK(ring.graded_dims() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(ring.total_dim() == 4);
    auto u1 = gen(ring.ring(), "u1"), u2 = gen(ring.ring(), "u2");
    REQUIRE(ring.relation_components().size() == 2);
    CHECK(ring.relation_components()[0] == u2.scaled(2) - u1 * u1);
    CHECK(ring.relation_components()[1] == u2 * u2);
    // u1^2 = 2 u2 in the quotient
    CHECK(ring.normal_form(u1 * u1) == ring.normal_form(u2.scaled(2)));
  }
  SUBCASE("g out of range") {
    CHECK_THROWS_AS(sp_dual_ring(0), std::invalid_argument);
    CHECK_THROWS_AS(sp_dual_ring(9), std::invalid_argument);
  }
}

TEST_CASE("total dimension is 2^g") {
  for (unsigned g = 1; g <= 6; ++g) {
    auto ring = sp_dual_ring(g);
    CHECK(ring.total_dim() == (std::size_t(1) << g));
    CHECK(ring.top_weight() == g * (g + 1) / 2);
    CHECK(ring.graded_dim(ring.top_weight()) == 1);
    CHECK(ring.graded_dim(ring.top_weight() + 1) == 0);
  }
}

TEST_CASE("square-free basis") {
  SUBCASE("g = 1") {
    auto basis = vdg_basis(sp_dual_ring(1));
    REQUIRE(basis.monomials.size() == 1);
    CHECK(basis.monomials[0].is_unit());
  }
  SUBCASE("g = 2") {
    auto ring = sp_dual_ring(2);
    auto basis = vdg_basis(ring);
    REQUIRE(basis.monomials.size() == 2);
    CHECK(ring.ring()->monomial_string(basis.monomials[0]) == "1");
    CHECK(ring.ring()->monomial_string(basis.monomials[1]) == "u1");
  }
  SUBCASE("g = 4 has eight independent members") {
    auto basis = vdg_basis(sp_dual_ring(4));
    CHECK(basis.monomials.size() == 8);
  }
  SUBCASE("sizes are 2^(g-1)") {
    for (unsigned g = 1; g <= 6; ++g)
      CHECK(vdg_basis(sp_dual_ring(g)).monomials.size() == (std::size_t(1) << (g - 1)));
  }
}

TEST_CASE("kernel span") {
  SUBCASE("g = 1") {
    auto ring = sp_dual_ring(1);
    auto kernel = matsushima_kernel_sp(ring);
    REQUIRE(kernel.monomials.size() == 1);
    CHECK(ring.ring()->monomial_string(kernel.monomials[0]) == "u1");
  }
  SUBCASE("g = 2") {
    auto ring = sp_dual_ring(2);
    auto kernel = matsushima_kernel_sp(ring);
    REQUIRE(kernel.monomials.size() == 2);
    CHECK(ring.ring()->monomial_string(kernel.monomials[0]) == "u2");
    CHECK(ring.ring()->monomial_string(kernel.monomials[1]) == "u1*u2");
  }
  SUBCASE("dimension 2^(g-1)") {
    for (unsigned g = 1; g <= 6; ++g) {
      auto ring = sp_dual_ring(g);
      auto kernel = matsushima_kernel_sp(ring);
      CHECK(kernel.monomials.size() == (std::size_t(1) << (g - 1)));
      // normal forms stay independent, weight by weight
      std::map<unsigned, std::vector<GradedPoly>> by_weight;
      for (const auto& nf : kernel.normal_forms) {
        REQUIRE(!nf.is_zero());
        by_weight[*nf.homogeneous_weight()].push_back(nf);
      }
      std::size_t rank = 0;
      for (const auto& [d, vecs] : by_weight) rank += span_reduce(vecs, d).basis.size();
      CHECK(rank == kernel.monomials.size());
    }
  }
}

TEST_CASE("basis and kernel decompose the ring") {
  for (unsigned g = 1; g <= 6; ++g) {
    auto ring = sp_dual_ring(g);
    auto basis = vdg_basis(ring);
    auto kernel = matsushima_kernel_sp(ring);
    CHECK(basis.monomials.size() + kernel.monomials.size() == ring.total_dim());

    // trivial intersection: the union spans the whole ring
    std::map<unsigned, std::vector<GradedPoly>> by_weight;
    for (const auto& nf : basis.normal_forms) by_weight[*nf.homogeneous_weight()].push_back(nf);
    for (const auto& nf : kernel.normal_forms)
      by_weight[*nf.homogeneous_weight()].push_back(nf);
    std::size_t rank = 0;
    for (const auto& [d, vecs] : by_weight) rank += span_reduce(vecs, d).basis.size();
    CHECK(rank == ring.total_dim());
  }
}

TEST_CASE("poincare pairing") {
  SUBCASE("g = 1 socle coordinates") {
    auto ring = sp_dual_ring(1);
    auto one = GradedPoly::one(ring.ring());
    auto u1 = gen(ring.ring(), "u1");
    CHECK(poincare_pairing(ring, one, u1) == Rational(1));
    CHECK(poincare_pairing(ring, u1, u1) == Rational(0));  // weight 2 > top weight 1
    CHECK(poincare_pairing(ring, one, one) == Rational(0));
  }
  SUBCASE("pairing matrices are invertible for complementary weights") {
    for (unsigned g = 1; g <= 6; ++g) {
      auto ring = sp_dual_ring(g);
      unsigned top = ring.top_weight();
      for (unsigned d = 0; 2 * d <= top; ++d) {
        const auto& left = ring.basis_monomials(d);
        const auto& right = ring.basis_monomials(top - d);
        REQUIRE(left.size() == right.size());
        RationalMatrix m(left.size(), right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
          for (std::size_t j = 0; j < right.size(); ++j)
            m.at(i, j) = poincare_pairing(
                ring, GradedPoly::from_monomial(ring.ring(), left[i]),
                GradedPoly::from_monomial(ring.ring(), right[j]));
        CAPTURE(g);
        CAPTURE(d);
        CHECK(m.is_invertible());
      }
    }
  }
}

TEST_CASE("kernel equals the orthogonal complement of the last generator") {
  for (unsigned g = 1; g <= 6; ++g) {
    CAPTURE(g);
    CHECK(kernel_orthogonality_check(sp_dual_ring(g)));
  }
}

TEST_CASE("sl image generator degrees") {
  CHECK(sl_image(5).generator_degrees == std::vector<unsigned>{5});
  CHECK(sl_image(7).generator_degrees == std::vector<unsigned>{5, 9});
  CHECK(sl_image(4).generator_degrees.empty());
  CHECK(sl_image(2).generator_degrees.empty());
  CHECK(sl_image(3).generator_degrees.empty());
  CHECK(sl_image(6).generator_degrees == std::vector<unsigned>{5});
  CHECK(sl_image(8).generator_degrees == std::vector<unsigned>{5, 9});
  CHECK(sl_image(9).generator_degrees == std::vector<unsigned>{5, 9, 13});
  CHECK_THROWS_AS(sl_image(1), std::invalid_argument);

  SUBCASE("degree queries from the remark") {
    CHECK(sl_image(5).nonzero_in_degree(5));
    CHECK(!sl_image(4).nonzero_in_degree(5));
    CHECK(sl_image(7).nonzero_in_degree(9));
    CHECK(!sl_image(6).nonzero_in_degree(9));
    CHECK(sl_image(7).nonzero_in_degree(14));  // the product class
    CHECK(!sl_image(6).nonzero_in_degree(14));
    CHECK(sl_image(4).nonzero_in_degree(0));   // unit only
    CHECK(!sl_image(4).nonzero_in_degree(1));
  }
}

TEST_CASE("sl image poincare polynomial counts square-free subsets") {
  for (unsigned n = 2; n <= 9; ++n) {
    auto algebra = sl_image(n);
    auto coeffs = algebra.poincare_polynomial(30);
    // exhaustive subset-sum count
    std::vector<long> expected(31, 0);
    std::size_t subsets = std::size_t(1) << algebra.generator_degrees.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      unsigned sum = 0;
      for (std::size_t b = 0; b < algebra.generator_degrees.size(); ++b)
        if (mask & (std::size_t(1) << b)) sum += algebra.generator_degrees[b];
      if (sum <= 30) ++expected[sum];
    }
    CHECK(coeffs == expected);
  }
}

TEST_CASE("stable range of the graded dimensions") {
  auto ring3 = sp_dual_ring(3);
  CHECK(sp_stable_series_check(ring3, 2));
  CHECK(sp_stable_series_check(sp_dual_ring(1), 1));
  CHECK(!sp_stable_series_check(sp_dual_ring(2), 4));  // the quotient truncates

  SUBCASE("largest valid range is nondecreasing in g") {
    unsigned previous = 0;
    for (unsigned g = 1; g <= 6; ++g) {
      auto ring = sp_dual_ring(g);
      unsigned largest = 0;
      for (unsigned w = 0; w <= ring.top_weight() + 1; ++w) {
        if (sp_stable_series_check(ring, w))
          largest = w;
        else
          break;
      }
      CAPTURE(g);
      CHECK(largest >= previous);
      previous = largest;
    }
  }
}
