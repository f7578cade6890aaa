#include <doctest.h>

#include "cyq/kostka.hpp"

using namespace cyq;
using namespace cyq::kostka;

TEST_SUITE_BEGIN("kostka");

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(3) ==
        std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("dominance order") {
  CHECK(dominates({4}, {2, 2}));
  CHECK(dominates({2, 2}, {2, 1, 1}));
  CHECK(dominates({3, 3}, {3, 3}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK_FALSE(dominates({3, 1}, {2, 2, 1}));  // different totals
  CHECK_FALSE((dominates({3, 1, 1}, {2, 2, 2}) &&
               dominates({2, 2, 2}, {3, 1, 1})));
  // the first incomparable pair
  CHECK_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
}

TEST_CASE("n statistic") {
  CHECK(n_stat({}) == 0);
  CHECK(n_stat({5}) == 0);
  CHECK(n_stat({1, 1, 1}) == 3);
  CHECK(n_stat({4, 2, 2, 2, 1}) == 0 + 2 + 4 + 6 + 4);
}

TEST_CASE("tableau counts") {
  CHECK(ssyt_count({2, 1}, {1, 1, 1}) == 2);
  CHECK(ssyt_count({3, 1}, {2, 1, 1}) == 2);
  CHECK(ssyt_count({2, 2}, {2, 1, 1}) == 1);
  CHECK(ssyt_count({1, 1, 1}, {3}) == 0);
  CHECK(ssyt_count({3}, {1, 1, 1}) == 1);
}

TEST_CASE("charge") {
  CHECK(charge_of_word({1, 2, 3}) == 0);
  CHECK(charge_of_word({3, 2, 1}) == 3);
  CHECK(charge_of_word({2, 1, 3}) == 2);
  CHECK(charge_of_word({1, 1, 3, 2}) == 1);
  CHECK(charge_of_word({2, 1, 1, 2, 3}) == 1);
  CHECK_THROWS_AS(charge_of_word({2, 2, 1}), std::invalid_argument);
}

TEST_CASE("Kostka-Foulkes polynomials") {
  CHECK(kostka_foulkes({2, 1}, {1, 1, 1}) == IntPoly::from_coeffs({0, 1, 1}));
  CHECK(kostka_foulkes({2, 2}, {2, 1, 1}) == IntPoly::monomial(1, 1));
  CHECK(kostka_foulkes({3, 1, 1}, {2, 2, 1}) == IntPoly::monomial(1, 1));
  CHECK(kostka_foulkes({2, 2}, {1, 1, 1, 1}) ==
        IntPoly::from_coeffs({0, 0, 1, 0, 1}));
  CHECK(kostka_foulkes({3, 2}, {2, 2, 1}) == IntPoly::from_coeffs({0, 1, 1}));
  CHECK(kostka_foulkes({2, 1}, {2, 2}).is_zero());

  SUBCASE("structural identities") {
    for (int d = 1; d <= 6; ++d) {
      auto parts = partitions_of(d);
      for (const auto& lam : parts) {
        CHECK(kostka_foulkes(lam, lam) == IntPoly(1));
        for (const auto& mu : parts) {
          IntPoly k = kostka_foulkes(lam, mu);
          // support is the dominance order
          CHECK(k.is_zero() == !dominates(lam, mu));
          if (k.is_zero()) continue;
          // value at 1 counts the tableaux
          CHECK(k.eval(1) == ssyt_count(lam, mu));
          // monic of degree n(mu) - n(lam)
          CHECK(k.degree() == n_stat(mu) - n_stat(lam));
          CHECK(k.coeff(k.degree()) == 1);
          CHECK(k.all_coeffs_nonnegative());
          // single row: one tableau of maximal charge
          if (lam.size() == 1) CHECK(k == IntPoly::monomial(1, n_stat(mu)));
        }
      }
    }
  }
}

TEST_CASE("predicted local IC polynomial at n = 1") {
  // minimal orbit closure in gl_3 at the origin
  CHECK(ktilde_from_kostka({2, 1}, {1, 1, 1}) == IntPoly::from_coeffs({1, 1}));
  // regular orbit: the nilpotent cone is rationally smooth
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : partitions_of(d))
      CHECK(ktilde_from_kostka({d}, mu) == IntPoly(1));
  CHECK(ktilde_from_kostka({2, 2}, {1, 1, 1, 1}) ==
        IntPoly::from_coeffs({1, 0, 1}));
  CHECK(ktilde_from_kostka({3, 1}, {2, 2}) == IntPoly(1));
}

TEST_CASE("partition dictionary") {
  CHECK(to_partition(to_multisegment({3, 1})) == Partition{3, 1});
  CHECK(to_multisegment({3, 1}).str() == "0:3,0:1");
  CHECK(to_partition(Multisegment(1)).empty());
  CHECK_THROWS_AS(to_partition(Multisegment::parse("0:1", 2)),
                  std::invalid_argument);
}

TEST_SUITE_END();
