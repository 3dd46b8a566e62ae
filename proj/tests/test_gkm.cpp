#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "quadrics/bbcells.hpp"
#include "quadrics/gkm.hpp"

using namespace quadrics;
using testing::B;
using testing::C;
using testing::P;

namespace {

std::vector<BarredPermutation> special_points(int n) {
  std::vector<BarredPermutation> out;
  for (const auto& mu : Composition::all(n)) {
    if (mu.is_special()) out.push_back(special_element(mu));
  }
  return out;
}

std::multiset<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

// Longest element of the parabolic subgroup by exhaustive search.
Permutation longest_by_search(const RootSubset& subset) {
  const int n = subset.n();
  std::optional<Permutation> best;
  for (const auto& w : all_permutations(n)) {
    bool inside = true;
    for (int i = 1; i <= n && inside; ++i) {
      const int lo = std::min(i, w(i)), hi = std::max(i, w(i));
      for (int k = lo; k < hi; ++k) inside &= subset.contains(k);
    }
    if (inside && (!best || length(w) > length(*best))) best = w;
  }
  return *best;
}

// Multiply by generators of the subset in the given order until nothing lengthens.
Permutation longest_by_growth(const RootSubset& subset, std::vector<int> order) {
  const int n = subset.n();
  auto w = Permutation::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : order) {
      const auto next = w * Permutation::simple(a, n);
      if (length(next) > length(w)) {
        w = next;
        grew = true;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("the subset I and special points") {
  CHECK(i_of(B("1|2|3")).empty());
  CHECK(i_of(B("1|32")) == RootSubset(3, {2}));
  CHECK(i_of(B("21|43")) == RootSubset(4, {1, 3}));
  CHECK(is_special(B("21|3")));
  CHECK_FALSE(is_special(B("31|2")));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& gamma : special_points(n)) CHECK(is_special(gamma));
    for (const auto& gamma : enumerate_barred(n)) {
      for (int a : i_of(gamma).indices()) CHECK_FALSE(i_of(gamma).contains(a + 1));
    }
  }
  CHECK(special_element(C({2, 1})) == B("21|3"));
  CHECK_THROWS_AS(special_element(C({3})), InvalidArgument);
}

TEST_CASE("weights") {
  const auto a1 = Weight::simple_root(1, 3);
  const auto a2 = Weight::simple_root(2, 3);
  CHECK(a1.coeffs() == std::vector<int>{1, -1, 0});
  CHECK((a1 + a2) == Weight::root(1, 3, 3));
  CHECK((a1 + a2 + a2).simple_root_coefficients() == std::vector<int>{1, 2});
  CHECK((-a1).is_negative_root());
  CHECK_FALSE(a1.is_negative_root());
  CHECK_FALSE((a1 + a1).is_root());
  CHECK((-(a1 + a1)).to_string() == "-2e1 + 2e2");
  CHECK(Weight::zero(3).to_string() == "0");
  CHECK(a1.permuted(P("231")) == Weight::root(2, 3, 3));
  CHECK_THROWS_AS(Weight({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Weight::root(1, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(a1 + Weight::simple_root(1, 4), InvalidArgument);
  CHECK_THROWS_AS((a1 + a1).root_ends(), InvalidArgument);
}

TEST_CASE("tangent weights at special points, n = 3") {
  const auto a1 = Weight::simple_root(1, 3);
  const auto a2 = Weight::simple_root(2, 3);

  const auto t111 = tangent_weights(B("1|2|3"));
  CHECK(as_set(t111.horizontal) == as_set({-a1, -a2, -(a1 + a2)}));
  CHECK(t111.vertical.empty());
  CHECK(as_set(t111.normal) == as_set({-(a1 + a1), -(a2 + a2)}));
  CHECK(t111.dimension() == 5);

  const auto t12 = tangent_weights(B("1|32"));
  CHECK(t12.horizontal.size() == 2);
  CHECK(as_set(t12.vertical) == as_set({a2, -a2}));
  CHECK(as_set(t12.normal) == as_set({Weight({-2, 1, 1})}));
  CHECK(t12.dimension() == 5);

  const auto t21 = tangent_weights(B("21|3"));
  CHECK(as_set(t21.normal) == as_set({-(a1 + a2 + a2)}));

  CHECK_THROWS_AS(tangent_weights(B("31|2")), InvalidArgument);
}

TEST_CASE("reduction to a special point") {
  for (const auto& gamma : special_points(4)) {
    const auto r = reduce_to_special(gamma);
    CHECK(r.special == gamma);
    CHECK(r.w == Permutation::identity(4));
  }

  const auto r = reduce_to_special(B("31|2"));
  CHECK(r.special == B("21|3"));
  CHECK(std::set<int>{r.w(1), r.w(2)} == std::set<int>{1, 3});
  CHECK(weyl_act(r.w, r.special) == B("31|2"));

  for (int n = 1; n <= 5; ++n) {
    for (const auto& gamma : enumerate_barred(n)) {
      const auto red = reduce_to_special(gamma);
      CAPTURE(gamma.to_string());
      CHECK(is_special(red.special));
      CHECK(red.special.mu() == gamma.mu());
      CHECK(weyl_act(red.w, red.special) == gamma);
      // Minimal in its coset: no descent inside I.
      for (int a : i_of(gamma).indices()) CHECK(red.w(a) < red.w(a + 1));
      CHECK(translated_tangent_weights(gamma).dimension() == static_cast<std::size_t>(n * (n + 1) / 2 - 1));
    }
  }
}

TEST_CASE("weight counts and the shape of normal weights, n <= 5") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& gamma : special_points(n)) {
      CAPTURE(gamma.to_string());
      const auto subset = i_of(gamma);
      const auto t = tangent_weights(gamma);
      const auto size_i = subset.indices().size();
      CHECK(t.vertical.size() == 2 * size_i);
      CHECK(t.normal.size() == static_cast<std::size_t>(n - 1) - size_i);
      CHECK(t.dimension() == static_cast<std::size_t>(n * (n + 1) / 2 - 1));
      for (const auto& h : t.horizontal) CHECK(h.is_negative_root());

      const auto w_i = longest_parabolic_element(subset);
      CHECK(w_i == longest_by_search(subset));
      std::vector<int> order(subset.indices().begin(), subset.indices().end());
      for (int trial = 0; trial < 6; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(longest_by_growth(subset, order) == w_i);
      }

      std::vector<Weight> expected;
      for (int a = 1; a < n; ++a) {
        if (subset.contains(a)) continue;
        const auto alpha = Weight::simple_root(a, n);
        expected.push_back(-(alpha + alpha.permuted(w_i)));
      }
      CHECK(as_set(t.normal) == as_set(expected));
      for (const auto& v : t.normal) {
        for (int c : v.simple_root_coefficients()) CHECK(c <= 0);
      }
    }
  }
}

TEST_CASE("other fixed points on invariant curves") {
  const auto p2 = curve_other_fixed_points(B("21"), Weight::simple_root(1, 2));
  CHECK(p2 == std::set<BarredPermutation>{B("2|1"), B("1|2")});
  std::set<BarredPermutation> all_three(p2);
  all_three.insert(B("21"));
  const auto listed = enumerate_barred(2);
  CHECK(all_three == std::set<BarredPermutation>(listed.begin(), listed.end()));

  CHECK(curve_other_fixed_points(B("1|2|3"), -Weight::root(1, 2, 3)) == std::set<BarredPermutation>{B("2|1|3")});

  const auto normal = tangent_weights(B("21|3")).normal;
  REQUIRE(normal.size() == 1);
  CHECK(classify(B("21|3"), normal[0]) == WeightKind::normal);
  CHECK_THROWS_AS(curve_other_fixed_points(B("21|3"), normal[0]), UnsupportedOpenProblem);
  CHECK_THROWS_AS(curve_other_fixed_points(B("21|3"), Weight({1, 1, -2})), InvalidArgument);
  CHECK_FALSE(classify(B("21|3"), Weight({1, 1, -2})).has_value());
}

TEST_CASE("curve endpoints stay in the stratum or in one subdivision, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& gamma : special_points(n)) {
      const auto t = tangent_weights(gamma);
      for (const auto& h : t.horizontal) {
        for (const auto& delta : {h, -h}) {
          const auto ends = curve_other_fixed_points(gamma, delta);
          REQUIRE(ends.size() == 1);
          CHECK(ends.begin()->mu() == gamma.mu());
          CHECK(*ends.begin() != gamma);
        }
      }
      for (const auto& v : t.vertical) {
        const auto ends = curve_other_fixed_points(gamma, v);
        CHECK(ends.size() == 2);
        for (const auto& e : ends) {
          CHECK(e.mu().size() == gamma.mu().size() + 1);
          CHECK(refinement_leq(e.mu(), gamma.mu()));
        }
      }
    }
  }
}
