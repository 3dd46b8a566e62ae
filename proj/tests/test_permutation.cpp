#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "quadrics/permutation.hpp"

using namespace quadrics;
using testing::P;

TEST_CASE("length counts inversions") {
  CHECK(length(P("123")) == 0);
  CHECK(length(P("321")) == 3);
  CHECK(length(P("235614")) == 6);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::words_of(n)) CHECK(length(Permutation(w)) == oracle::inversions(w));
  }
}

TEST_CASE("length on a non-standard alphabet uses the alphabet's order") {
  const Permutation block({1, 3, 5, 8}, {8, 3, 5, 1});
  CHECK(length(block) == 5);
  CHECK(exceedance(block) == 1);
  CHECK(block(1) == 8);
  CHECK(block(8) == 1);
  CHECK(block.is_involution());
  CHECK(block.standardized() == P("4231"));
}

TEST_CASE("exceedance") {
  CHECK(exceedance(Permutation::identity(4)) == 0);
  CHECK(exceedance(P("21")) == 1);
  CHECK(exceedance(P("12543")) == 1);
}

TEST_CASE("exceedance of an involution is its number of 2-cycles") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (!w.is_involution()) continue;
      int two_cycles = 0;
      for (int x = 1; x <= n; ++x) two_cycles += w(x) > x ? 1 : 0;
      CHECK(exceedance(w) == two_cycles);
      CHECK((length(w) + exceedance(w)) % 2 == 0);
    }
  }
}

TEST_CASE("composition, inverse and constructors") {
  const auto a = P("231");
  const auto b = P("213");
  CHECK((a * b) == P("321"));  // a(b(1)) = a(2) = 3
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::simple(2, 4) == P("1324"));
  CHECK(Permutation::longest(4) == P("4321"));
  CHECK(Permutation::transposition(1, 4, 4) == P("4231"));
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::simple(3, 3), InvalidArgument);
  CHECK_THROWS_AS(SimpleReflection::checked(0, 3), InvalidArgument);
  CHECK_THROWS_AS(P("12") * P("123"), InvalidArgument);
}

TEST_CASE("to_string switches to commas for letters above 9") {
  CHECK(P("312").to_string() == "312");
  std::vector<int> w{10, 2, 3, 4, 5, 6, 7, 8, 9, 1};
  CHECK(Permutation(w).to_string() == "10,2,3,4,5,6,7,8,9,1");
}

TEST_CASE("Bruhat-Chevalley order examples") {
  CHECK(sn_bruhat_leq(P("123"), P("321")));
  CHECK_FALSE(sn_bruhat_leq(P("213"), P("132")));
  CHECK(sn_bruhat_leq(P("132"), P("312")));
  CHECK_THROWS_AS(sn_bruhat_leq(P("12"), P("123")), InvalidArgument);
}

TEST_CASE("Bruhat-Chevalley order agrees with the subword criterion") {
  for (int n = 1; n <= 4; ++n) {
    const auto words = oracle::words_of(n);
    for (const auto& u : words) {
      for (const auto& v : words) {
        CAPTURE(Permutation(u).to_string());
        CAPTURE(Permutation(v).to_string());
        CHECK(sn_bruhat_leq(Permutation(u), Permutation(v)) == oracle::subword_leq(u, v));
      }
    }
  }
}

TEST_CASE("Bruhat-Chevalley order is a partial order on S_5") {
  const auto perms = all_permutations(5);
  std::vector<std::vector<char>> leq(perms.size(), std::vector<char>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) leq[a][b] = sn_bruhat_leq(perms[a], perms[b]);
  }
  bool ok = true;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    ok = ok && leq[a][a];
    for (std::size_t b = 0; b < perms.size(); ++b) {
      if (a != b && leq[a][b] && leq[b][a]) ok = false;
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < perms.size(); ++c) {
        if (leq[b][c] && !leq[a][c]) ok = false;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation::identity(3)) == std::vector<ReducedWord>{ReducedWord{}});
  const std::vector<ReducedWord> w0{{SimpleReflection{1}, SimpleReflection{2}, SimpleReflection{1}},
                                    {SimpleReflection{2}, SimpleReflection{1}, SimpleReflection{2}}};
  CHECK(reduced_words(P("321")) == w0);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : oracle::words_of(n)) {
      std::set<std::vector<int>> got;
      for (const auto& word : reduced_words(Permutation(w))) {
        std::vector<int> letters;
        for (auto s : word) letters.push_back(s.index);
        got.insert(letters);
        CHECK(static_cast<int>(word.size()) == oracle::inversions(w));
        CHECK(product(word, n) == Permutation(w));
      }
      CHECK(got == oracle::reduced_words(w));
      const auto canonical = reduced_word(Permutation(w));
      CHECK(product(canonical, n) == Permutation(w));
      CHECK(static_cast<int>(canonical.size()) == length(Permutation(w)));
    }
  }
}

TEST_CASE("longest parabolic element") {
  CHECK(longest_parabolic_element(RootSubset(3, {})) == Permutation::identity(3));
  CHECK(longest_parabolic_element(RootSubset(3, {2})) == P("132"));
  CHECK(longest_parabolic_element(RootSubset(4, {1, 3})) == P("2143"));
  CHECK(longest_parabolic_element(RootSubset(4, {1, 2, 3})) == P("4321"));

  for (int n = 1; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::set<int> idx;
      for (int i = 1; i < n; ++i) {
        if (mask & (1u << (i - 1))) idx.insert(i);
      }
      const RootSubset I(n, idx);
      const auto w = longest_parabolic_element(I);
      // Positive roots of W_I: pairs (a, b) joined by a run of I.
      int positive_roots = 0;
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          bool joined = true;
          for (int k = a; k < b; ++k) joined = joined && I.contains(k);
          positive_roots += joined ? 1 : 0;
        }
      }
      CHECK(w.is_involution());
      CHECK(length(w) == positive_roots);
    }
  }
}

TEST_CASE("root subsets") {
  const RootSubset I(5, {1, 2, 4});
  CHECK(I.has_consecutive());
  CHECK(I.complement() == RootSubset(5, {3}));
  CHECK(RootSubset(5, {1}).is_subset_of(I));
  CHECK_FALSE(RootSubset(5, {3}).is_subset_of(I));
  CHECK_FALSE(RootSubset(5, {1, 3}).has_consecutive());
  CHECK_THROWS_AS(RootSubset(3, {3}), InvalidArgument);
}

TEST_CASE("all_permutations is lexicographic and complete") {
  const auto perms = all_permutations(4);
  CHECK(perms.size() == 24);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  CHECK(perms.front() == Permutation::identity(4));
  CHECK(perms.back() == Permutation::longest(4));
}
