#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "oracles.hpp"
#include "quadrics/rs_monoid.hpp"

using namespace quadrics;
using testing::C;
using testing::D;
using testing::P;

namespace {

const SimpleReflection s1{1}, s2{2};

}  // namespace

TEST_CASE("simple generators act as expected") {
  CHECK(act_simple(s1, D("21")) == D("12"));
  CHECK(act_simple(s2, D("3|2|1")) == D("2|3|1"));
  CHECK(act_simple(s1, D("1|2")) == D("1|2"));
  CHECK(act_simple(s1, D("2|1")) == D("1|2"));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const auto top = MuInvolution::max(mu);
      for (int i = 1; i < n; ++i) CHECK(act_simple(SimpleReflection{i}, top) == top);
    }
  }
  CHECK_THROWS_AS(act_simple(SimpleReflection{3}, D("21|3")), InvalidArgument);
}

TEST_CASE("acting by a permutation") {
  const auto pi = D("26|8351|7|94");
  CHECK(act_word(Permutation::identity(9), pi) == pi);
  CHECK(act_word(P("231"), D("3|2|1")) == D("1|3|2"));
  CHECK_THROWS_AS(act_word(P("21"), D("3|2|1")), InvalidArgument);
}

TEST_CASE("star action") {
  CHECK(star_act(s2, D("2|3|1")) == D("3|2|1"));
  CHECK(star_act(s1, D("12")) == D("21"));
  for (int n = 2; n <= 4; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const auto bottom = MuInvolution::min(mu);
      for (int i = 1; i < n; ++i) CHECK(star_act(SimpleReflection{i}, bottom) == bottom);
    }
  }
  CHECK(star_exact(P("231"), D("1|3|2")) == D("3|2|1"));
  CHECK_FALSE(star_exact(P("21"), D("21")).has_value());
}

TEST_CASE("star preimages are exactly the moved elements mapping to rho") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const auto elements = enumerate_mu_involutions(mu);
      for (int i = 1; i < n; ++i) {
        const SimpleReflection s{i};
        for (const auto& rho : elements) {
          std::vector<MuInvolution> expected;
          for (const auto& pi : elements) {
            if (pi != rho && act_simple(s, pi) == rho) expected.push_back(pi);
          }
          CHECK(star_preimages(s, rho) == expected);
        }
      }
    }
  }
}

TEST_CASE("monoid relations hold on every mu-involution up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_degenerate(n)) {
      for (int i = 1; i < n; ++i) {
        const SimpleReflection s{i};
        const auto once = act_simple(s, pi);
        CHECK(act_simple(s, once) == once);
        if (i + 1 < n) {
          const SimpleReflection t{i + 1};
          CHECK(act_simple(s, act_simple(t, act_simple(s, pi))) == act_simple(t, act_simple(s, act_simple(t, pi))));
        }
        for (int j = i + 2; j < n; ++j) {
          const SimpleReflection t{j};
          CHECK(act_simple(s, act_simple(t, pi)) == act_simple(t, act_simple(s, pi)));
        }
      }
    }
  }
}

TEST_CASE("the action of w does not depend on the reduced word") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& pi : enumerate_degenerate(n)) {
      for (const auto& w : perms) {
        const auto expected = act_word(w, pi);
        for (const auto& word : reduced_words(w)) CHECK(act_letters(word, pi) == expected);
      }
    }
  }
}

TEST_CASE("cancellativity: s is injective away from its fixed points") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const auto elements = enumerate_mu_involutions(mu);
      for (int i = 1; i < n; ++i) {
        std::map<MuInvolution, MuInvolution> preimage;
        for (const auto& pi : elements) {
          const auto image = act_simple(SimpleReflection{i}, pi);
          if (image == pi) continue;
          CHECK(mu_length(image) == mu_length(pi) - 1);
          const auto [it, fresh] = preimage.emplace(image, pi);
          CHECK(fresh);
        }
      }
      CHECK_NOTHROW(WeakOrderPoset{mu});
    }
  }
}

TEST_CASE("weak order shapes") {
  const WeakOrderPoset chain(C({2}));
  REQUIRE(chain.size() == 2);
  REQUIRE(chain.covers().size() == 1);
  CHECK(chain.element(chain.covers()[0].lower) == D("21"));
  CHECK(chain.element(chain.covers()[0].upper) == D("12"));
  CHECK(chain.covers()[0].label == s1);

  const WeakOrderPoset two(C({1, 1}));
  REQUIRE(two.covers().size() == 1);
  CHECK(two.element(two.covers()[0].lower) == D("2|1"));
  CHECK(two.element(two.covers()[0].upper) == D("1|2"));

  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const WeakOrderPoset weak(mu);
      const auto poset = weak.poset();
      CHECK(poset.matrix().is_partial_order());
      CHECK(poset.minimal() == std::vector<std::size_t>{weak.min_index()});
      CHECK(poset.maximal() == std::vector<std::size_t>{weak.max_index()});
      CHECK(weak.element(weak.min_index()) == MuInvolution::min(mu));
      for (const auto& c : weak.covers()) {
        CHECK(act_simple(c.label, weak.element(c.lower)) == weak.element(c.upper));
        CHECK(weak.mu_length(c.lower) == weak.mu_length(c.upper) + 1);
      }
      for (std::size_t a = 0; a < weak.size(); ++a) {
        for (std::size_t b = 0; b < weak.size(); ++b) {
          CHECK(poset.matrix().test(a, b) == oracle::weak_leq(weak.element(a), weak.element(b)));
        }
      }
    }
  }
}

TEST_CASE("W-set examples") {
  CHECK(rev_wset(D("21|3")) == WSet{P("312")});
  CHECK(rev_wset(D("31|2")) == WSet{P("213")});
  CHECK(rev_wset(D("23|1")) == WSet{P("132")});
  CHECK(wset_to_max(D("21|3")) == WSet{P("213")});
  for (const auto& mu : Composition::all(4)) {
    CHECK(wset_to_max(MuInvolution::max(mu)) == WSet{Permutation::identity(4)});
  }
  CHECK_THROWS_AS(wset(D("21|3"), D("2|1|3")), InvalidArgument);
}

TEST_CASE("W-sets agree with exhaustive search and with the weak order, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : Composition::all(n)) {
      const WeakOrderPoset weak(mu);
      const auto poset = weak.poset();
      const auto rev = rev_wsets(weak);
      const auto up = wsets_to_max(weak);
      for (std::size_t target = 0; target < weak.size(); ++target) {
        WSetTable table(weak, target);
        for (std::size_t source = 0; source < weak.size(); ++source) {
          const auto& pi = weak.element(source);
          const auto& rho = weak.element(target);
          const auto& got = table.from(source);
          CHECK(got == oracle::wset(pi, rho));
          CHECK(got.empty() != poset.matrix().test(source, target));
          for (const auto& w : got) {
            CHECK(length(w) == mu_length(pi) - mu_length(rho));
            CHECK(act_word(w, pi) == rho);
          }
        }
        CHECK(rev[target] == oracle::wset(weak.element(weak.min_index()), weak.element(target)));
        CHECK(up[target] == oracle::wset(weak.element(target), weak.element(weak.max_index())));
      }
    }
  }
}

TEST_CASE("concurrent W-set lookups agree with a serial fill") {
  const WeakOrderPoset weak(C({2, 2}));
  WSetTable shared(weak, weak.max_index());
  std::vector<WSet> serial;
  {
    WSetTable fresh(weak, weak.max_index());
    for (std::size_t k = 0; k < weak.size(); ++k) serial.push_back(fresh.from(k));
  }
  std::vector<std::vector<WSet>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t k = weak.size(); k-- > 0;) results[t].push_back(shared.from((k + t) % weak.size()));
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    for (std::size_t j = 0; j < weak.size(); ++j) {
      const std::size_t k = (weak.size() - 1 - j + t) % weak.size();
      CHECK(results[t][j] == serial[k]);
    }
  }
}
