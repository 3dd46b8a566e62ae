#include "quadrics/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quadrics/bbcells.hpp"
#include "quadrics/bruhat.hpp"
#include "quadrics/degenerate.hpp"
#include "quadrics/gkm.hpp"
#include "quadrics/notation.hpp"
#include "quadrics/permutation.hpp"
#include "quadrics/rs_monoid.hpp"

namespace quadrics {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(std::string name, int n, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), n, passed, std::move(detail)});
  }

 private:
  VerifyReport& report_;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

template <class Range>
std::string list_of(const Range& range) {
  std::vector<std::string> items;
  for (const auto& x : range) items.push_back(x.to_string());
  return "{" + join(items) + "}";
}

std::string levels_string(const std::vector<int>& levels) {
  std::vector<std::string> items;
  for (int v : levels) items.push_back(std::to_string(v));
  return "(" + join(items) + ")";
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// ------------------------------------------------------------------ counts

void suite_counts(Recorder& rec, int max_n) {
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    const auto count = count_barred(n);
    const auto listed = enumerate_barred(n).size();
    const bool agree = count.recurrence == count.closed_form && count.recurrence == listed;
    rec.check("barred count: recurrence, closed form and enumeration agree", n, agree,
              "recurrence=" + count.recurrence.str() + " closed=" + count.closed_form.str() +
                  " enumerated=" + std::to_string(listed));
  }
  const std::map<int, int> pinned{{2, 3}, {3, 12}, {4, 66}};
  for (auto [n, expected] : pinned) {
    if (n > max_n) continue;
    const auto got = count_barred(n).closed_form;
    rec.check("barred count b_" + std::to_string(n) + " = " + std::to_string(expected), n, got == expected,
              "got " + got.str());
  }

  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    bool even = true, exc_is_twocycles = true;
    for (const auto& w : all_permutations(n)) {
      if (!w.is_involution()) continue;
      int two_cycles = 0;
      for (int x = 1; x <= n; ++x) two_cycles += w(x) > x ? 1 : 0;
      even = even && (length(w) + exceedance(w)) % 2 == 0;
      exc_is_twocycles = exc_is_twocycles && exceedance(w) == two_cycles;
    }
    rec.check("involutions: length + exceedance is even", n, even);
    rec.check("involutions: exceedance counts 2-cycles", n, exc_is_twocycles);

    std::size_t total = 0;
    bool coset_sizes = true;
    std::string bad;
    for (const auto& mu : Composition::all(n)) {
      if (!mu.is_special()) continue;
      const auto size = enumerate_barred_mu(mu).size();
      total += size;
      const long long expected = factorial(n) >> mu.count_parts_equal(2);
      if (static_cast<long long>(size) != expected) {
        coset_sizes = false;
        bad = mu.to_string();
      }
    }
    rec.check("|B_mu| = n!/2^(parts equal to 2)", n, coset_sizes, bad.empty() ? "" : "fails at " + bad);
    rec.check("sum of |B_mu| over special mu = b_n", n, count_barred(n).closed_form == total,
              "sum=" + std::to_string(total));
  }

  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    bool ok = true;
    std::string bad;
    for (const auto& pi : enumerate_degenerate(n)) {
      if (from_quadric(quadric_of(pi)) != pi || parse_degenerate_involution(render(pi)) != pi) {
        ok = false;
        bad = pi.to_string();
        break;
      }
    }
    rec.check("quadric and text round trips", n, ok, bad);
  }

  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    const auto perms = all_permutations(n);
    bool lengths = true, partial = true;
    for (const auto& w : perms) {
      for (const auto& word : reduced_words(w)) {
        lengths = lengths && static_cast<int>(word.size()) == length(w) && product(word, n) == w;
      }
    }
    for (const auto& u : perms) {
      partial = partial && sn_bruhat_leq(u, u);
      for (const auto& v : perms) {
        if (u != v && sn_bruhat_leq(u, v) && sn_bruhat_leq(v, u)) partial = false;
        if (!sn_bruhat_leq(u, v)) continue;
        for (const auto& x : perms) {
          if (sn_bruhat_leq(v, x) && !sn_bruhat_leq(u, x)) partial = false;
        }
      }
    }
    rec.check("reduced words have length l(w) and multiply back to w", n, lengths);
    rec.check("Bruhat-Chevalley order on S_n is a partial order", n, partial);

    bool parabolic = true;
    for (const auto& mu : Composition::all(n)) {
      const auto I = subset_of(mu);
      const auto wI = longest_parabolic_element(I);
      int positive_roots = 0;
      for (int part : mu.parts()) positive_roots += part * (part - 1) / 2;
      parabolic = parabolic && wI.is_involution() && length(wI) == positive_roots;
    }
    rec.check("longest parabolic element is an involution of the expected length", n, parabolic);
  }
}

// -------------------------------------------------------------------- weak

void suite_weak(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    bool idempotent = true, braid = true, commute = true, injective = true, extremes = true;
    bool cancellative = true;
    for (const auto& mu : Composition::all(n)) {
      std::optional<WeakOrderPoset> weak;
      try {
        weak.emplace(mu);
      } catch (const InvalidArgument&) {
        cancellative = false;
        continue;
      }
      for (const auto& pi : weak->elements()) {
        for (int i = 1; i < n; ++i) {
          const SimpleReflection s{i};
          const auto once = act_simple(s, pi);
          idempotent = idempotent && act_simple(s, once) == once;
          if (i + 1 < n) {
            const SimpleReflection t{i + 1};
            braid = braid && act_simple(s, act_simple(t, act_simple(s, pi))) ==
                                 act_simple(t, act_simple(s, act_simple(t, pi)));
          }
          for (int j = i + 2; j < n; ++j) {
            const SimpleReflection t{j};
            commute = commute && act_simple(s, act_simple(t, pi)) == act_simple(t, act_simple(s, pi));
          }
        }
      }
      for (int i = 1; i < n; ++i) {
        std::set<MuInvolution> images;
        std::size_t moved = 0;
        for (const auto& pi : weak->elements()) {
          const auto image = act_simple(SimpleReflection{i}, pi);
          if (image == pi) continue;
          ++moved;
          images.insert(image);
        }
        injective = injective && images.size() == moved;
      }
      const auto poset = weak->poset();
      extremes = extremes && poset.minimal() == std::vector<std::size_t>{weak->min_index()} &&
                 poset.maximal() == std::vector<std::size_t>{weak->max_index()};
    }
    rec.check("weak order builds (cancellativity)", n, cancellative);
    rec.check("s.(s.pi) = s.pi", n, idempotent);
    rec.check("braid relations act identically", n, braid);
    rec.check("distant generators commute", n, commute);
    rec.check("pi -> s.pi injective off its fixed points", n, injective);
    rec.check("weak order has the expected unique min and max", n, extremes);
  }

  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    bool independent = true;
    std::string bad;
    for (const auto& mu : Composition::all(n)) {
      for (const auto& pi : enumerate_mu_involutions(mu)) {
        for (const auto& w : all_permutations(n)) {
          const auto expected = act_word(w, pi);
          for (const auto& word : reduced_words(w)) {
            if (act_letters(word, pi) != expected) {
              independent = false;
              bad = w.to_string() + " on " + pi.to_string();
            }
          }
        }
      }
    }
    rec.check("action of w independent of the reduced word", n, independent, bad);
  }
}

// ------------------------------------------------------------------- wsets

void suite_wsets(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    bool exact = true, criterion = true, reverse = true;
    std::string bad;
    const auto perms = all_permutations(n);
    for (const auto& mu : Composition::all(n)) {
      const WeakOrderPoset weak(mu);
      const auto poset = weak.poset();
      const std::size_t size = weak.size();
      // image[w][k] = index of w . element(k)
      std::vector<std::vector<std::size_t>> image(perms.size(), std::vector<std::size_t>(size));
      for (std::size_t w = 0; w < perms.size(); ++w) {
        for (std::size_t k = 0; k < size; ++k) image[w][k] = weak.index_of(act_word(perms[w], weak.element(k)));
      }
      const auto rev = rev_wsets(weak);
      for (std::size_t target = 0; target < size; ++target) {
        WSetTable table(weak, target);
        for (std::size_t source = 0; source < size; ++source) {
          const int gap = weak.mu_length(source) - weak.mu_length(target);
          WSet brute;
          for (std::size_t w = 0; w < perms.size(); ++w) {
            if (length(perms[w]) == gap && image[w][source] == target) brute.insert(perms[w]);
          }
          const auto& computed = table.from(source);
          if (computed != brute) {
            exact = false;
            bad = weak.element(source).to_string() + " -> " + weak.element(target).to_string();
          }
          if (computed.empty() == poset.matrix().test(source, target)) criterion = false;
        }
        if (rev[target] != table.from(weak.min_index())) reverse = false;
      }
    }
    rec.check("W-sets equal the brute-force length-exact solutions", n, exact, bad);
    rec.check("W(pi, rho) nonempty iff pi <= rho in the weak order", n, criterion);
    rec.check("upward W^-1 table agrees with W(min, pi)", n, reverse);
  }
}

// ------------------------------------------------------------------ bruhat

void suite_bruhat(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    bool ranks = true;
    std::string bad;
    for (const auto& mu : Composition::all(n)) {
      const auto poset = bruhat_poset(mu);
      const int top = mu_length(MuInvolution::min(mu));
      for (std::size_t k = 0; k < poset.size(); ++k) {
        if (poset.ranks()[k] != top - mu_length(poset.element(k))) {
          ranks = false;
          bad = poset.element(k).to_string();
        }
      }
    }
    rec.check("fixed-mu rank equals L_mu(min) - L_mu", n, ranks, bad);
  }

  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const OrbitAtlas atlas(n);
    const auto full = full_poset(atlas);
    rec.check("full poset is a partial order", n, full.matrix().is_partial_order());
    bool restriction = true;
    std::string bad;
    for (const auto& mu : atlas.compositions()) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < full.size(); ++k) {
        if (full.element(k).mu() == mu) keep.push_back(k);
      }
      if (!full.restrict_to(keep).same_order_as(bruhat_poset(mu))) {
        restriction = false;
        bad = mu.to_string();
      }
    }
    rec.check("full poset restricted to mu equals the fixed-mu order", n, restriction, bad);
    if (n == 3) {
      rec.check("n=3: 22 orbits with levels (1,4,6,6,4,1), graded", n,
                full.size() == 22 && full.level_sizes() == std::vector<int>{1, 4, 6, 6, 4, 1} &&
                    full.graded().graded,
                std::to_string(full.size()) + " orbits, levels " + levels_string(full.level_sizes()));
    }
    if (n == 4) {
      const Composition mu({3, 1});
      const auto geometric = bruhat_poset(mu);
      const auto induced = induced_order(mu);
      rec.check("(3,1): 16 elements, graded, levels (1,3,4,4,3,1)", n,
                geometric.size() == 16 && is_graded(geometric).graded &&
                    geometric.level_sizes() == std::vector<int>{1, 3, 4, 4, 3, 1},
                "levels " + levels_string(geometric.level_sizes()));
      const auto lo = induced.at(parse_degenerate_involution("321|4"));
      const auto hi = induced.at(parse_degenerate_involution("432|1"));
      const auto [shortest, longest] = interval_chain_lengths(induced.matrix(), lo, hi);
      rec.check("(3,1): induced S_4 order not graded on [321|4]..[432|1]", n,
                !is_graded(induced).graded && shortest != longest,
                "chains of length " + std::to_string(shortest) + " and " + std::to_string(longest));
    }
  }
}

// ----------------------------------------------------------------- reverse

void suite_reverse(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    std::vector<std::string> bad;
    for (const auto& mu : Composition::all(n)) {
      if (!reverse_bruhat_poset(mu).same_order_as(bruhat_poset(mu).opposite())) bad.push_back(mu.to_string());
    }
    rec.check("reverse order equals the opposite Bruhat order", n, bad.empty(),
              bad.empty() ? "" : "differs for " + join(bad));
  }
}

// ------------------------------------------------------------------ covers

void suite_covers(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const OrbitAtlas atlas(n);
    const auto full = full_poset(atlas);
    std::vector<std::string> within, across;
    for (std::size_t k = 0; k < full.size(); ++k) {
      const auto& pi = full.element(k);
      std::set<MuInvolution> expected;
      for (std::size_t lo : full.lower_covers(k)) expected.insert(full.element(lo));
      const auto got = covers_by_theorem(pi, atlas);
      if (got == expected) continue;
      std::set<MuInvolution> missing, extra;
      std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                          std::inserter(missing, missing.end()));
      std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                          std::inserter(extra, extra.end()));
      for (const auto& r : missing) {
        (r.mu() == pi.mu() ? within : across).push_back(pi.to_string() + " misses " + r.to_string());
      }
      for (const auto& r : extra) {
        (r.mu() == pi.mu() ? within : across).push_back(pi.to_string() + " wrongly covers " + r.to_string());
      }
    }
    rec.check("theorem covers equal poset covers within one composition", n, within.empty(), join(within));
    rec.check("theorem covers equal poset covers across compositions", n, across.empty(), join(across));

    bool factorization = true;
    std::vector<std::string> bad;
    std::size_t pairs = 0;
    for (const auto& mu : atlas.compositions()) {
      const auto poset = bruhat_poset(mu);
      for (std::size_t a = 0; a < poset.size(); ++a) {
        for (std::size_t b = 0; b < poset.size(); ++b) {
          if (poset.ranks()[b] != poset.ranks()[a] + 1) continue;
          ++pairs;
          const bool cover = poset.matrix().test(a, b);
          if (cor_w1_verify(poset.element(a), poset.element(b)).holds != cover) {
            factorization = false;
            bad.push_back(poset.element(a).to_string() + " / " + poset.element(b).to_string());
          }
        }
      }
    }
    rec.check("w1 s w2 factorization exists exactly for covers at rank gap 1", n, factorization,
              std::to_string(pairs) + " pairs" + (bad.empty() ? "" : "; mismatches: " + join(bad)));
  }
}

// ------------------------------------------------------------------- cells

void suite_cells(Recorder& rec, int max_n) {
  {
    const auto gamma = tau(parse_degenerate_involution("(68)|(25)(4)(9)|(13)(7)"));
    rec.check("tau((68)|(25)(4)(9)|(13)(7)) = [86|4|52|9|31|7]", 9,
              gamma.to_string() == "[86|4|52|9|31|7]", gamma.to_string());
  }
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const auto a = default_admissible(n);
    bool flow = true, inverse = true;
    std::string bad;
    for (const auto& pi : enumerate_degenerate(n)) {
      if (tau(pi) != flow_oracle(pi, a)) {
        flow = false;
        bad = pi.to_string();
      }
    }
    for (const auto& gamma : enumerate_barred(n)) inverse = inverse && tau(sigma(gamma)) == gamma;
    rec.check("tau agrees with the weight flow for the default admissible sequence", n, flow, bad);
    rec.check("tau(sigma(gamma)) = gamma", n, inverse);
  }
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    const auto records = cells(n);
    bool dense = true, dims = true;
    std::size_t members = 0;
    for (const auto& cell : records) {
      members += cell.members.size();
      const int best = orbit_dimension(cell.dense);
      int at_best = 0;
      for (const auto& m : cell.members) {
        const int d = orbit_dimension(m);
        if (d > best) dense = false;
        if (d == best) ++at_best;
      }
      dense = dense && at_best == 1 && cell.dense == sigma(cell.fixed_point);
      dims = dims && cell_dimension(cell.fixed_point) == orbit_dimension(sigma(cell.fixed_point)) &&
             cell.dimension == cell_dimension(cell.fixed_point);
    }
    rec.check("sigma(gamma) is the unique largest orbit of its cell", n, dense);
    rec.check("cell dimension equals the dimension of the dense orbit", n, dims);
    rec.check("cells partition the degenerate involutions", n, members == enumerate_degenerate(n).size(),
              std::to_string(members) + " members");

    bool action = true, transitive = true;
    const auto perms = all_permutations(n);
    for (const auto& mu : Composition::all(n)) {
      if (!mu.is_special()) continue;
      const auto base = special_element(mu);
      std::set<BarredPermutation> orbit;
      for (const auto& u : perms) orbit.insert(weyl_act(u, base));
      const auto listed = enumerate_barred_mu(mu);
      transitive = transitive && orbit == std::set<BarredPermutation>(listed.begin(), listed.end());
      for (const auto& gamma : listed) {
        action = action && weyl_act(Permutation::identity(n), gamma) == gamma;
        for (int i = 1; i < n && action; ++i) {
          const auto s = Permutation::simple(i, n);
          for (const auto& v : perms) {
            if (weyl_act(s * v, gamma) != weyl_act(s, weyl_act(v, gamma))) {
              action = false;
              break;
            }
          }
        }
      }
    }
    rec.check("Weyl group action is an action", n, action);
    rec.check("Weyl group acts transitively on B_mu", n, transitive);
    if (n == 3) {
      rec.check("cell_dimension([1|2|3]) = 5", n, cell_dimension(parse_barred("1|2|3")) == 5);
    }
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const auto full = full_poset(n);
    const auto bb = bb_order(full);
    rec.check("BB order is a partial order", n, bb.matrix().is_partial_order());
    if (n == 3) {
      bool ranks = true;
      for (std::size_t k = 0; k < bb.size(); ++k) ranks = ranks && bb.ranks()[k] == cell_dimension(bb.element(k));
      rec.check("n=3 BB order: 12 nodes, 17 covers, rank = cell dimension", n,
                bb.size() == 12 && bb.covers().size() == 17 && ranks,
                std::to_string(bb.size()) + " nodes, " + std::to_string(bb.covers().size()) + " covers");
      const auto witnesses = stratification_witnesses(full);
      bool found = false;
      for (const auto& w : witnesses) {
        if (w.closure_cell.to_string() == "[1|3|2]" && w.met_cell.to_string() == "[3|1|2]") {
          found = w.intersection == std::vector<MuInvolution>{parse_degenerate_involution("3|1|2")} &&
                  w.missing == std::vector<MuInvolution>{parse_degenerate_involution("3|12")};
        }
      }
      rec.check("n=3 non-stratification witness ([1|3|2], [3|1|2])", n, found,
                std::to_string(witnesses.size()) + " witnesses");
    }
  }
}

// --------------------------------------------------------------------- gkm

void suite_gkm(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    bool counts = true, normal_form = true, generator_order = true;
    std::string bad;
    for (const auto& gamma : enumerate_barred(n)) {
      if (!is_special(gamma)) continue;
      const auto data = tangent_weights(gamma);
      const auto I = i_of(gamma);
      const int expected = n * (n + 1) / 2 - 1;
      if (static_cast<int>(data.dimension()) != expected ||
          data.vertical.size() != 2 * I.size() ||
          static_cast<int>(data.normal.size()) != n - 1 - static_cast<int>(I.size())) {
        counts = false;
        bad = gamma.to_string();
      }
      const auto wI = longest_parabolic_element(I);
      std::set<Weight> expected_normal;
      for (int i = 1; i < n; ++i) {
        if (I.contains(i)) continue;
        const auto alpha = Weight::simple_root(i, n);
        expected_normal.insert(-(alpha + alpha.permuted(wI)));
      }
      for (const auto& w : data.normal) {
        for (int c : w.simple_root_coefficients()) normal_form = normal_form && c <= 0;
      }
      normal_form = normal_form && std::set<Weight>(data.normal.begin(), data.normal.end()) == expected_normal;

      // Grow w_I by generators taken in descending order instead.
      auto grown = Permutation::identity(n);
      for (bool extended = true; extended;) {
        extended = false;
        for (int i = n - 1; i >= 1; --i) {
          if (!I.contains(i)) continue;
          const auto next = grown * Permutation::simple(i, n);
          if (length(next) > length(grown)) {
            grown = next;
            extended = true;
          }
        }
      }
      generator_order = generator_order && grown == wI;
    }
    rec.check("weight count |Phi_h| + 2|I| + |Delta - I| = n(n+1)/2 - 1", n, counts, bad);
    rec.check("normal weights are -(alpha + w_I alpha) with nonpositive coefficients", n, normal_form);
    rec.check("w_I does not depend on the generator order", n, generator_order);
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    bool horizontal = true, vertical = true;
    std::string bad;
    for (const auto& gamma : enumerate_barred(n)) {
      if (!is_special(gamma)) continue;
      const auto data = tangent_weights(gamma);
      for (const auto& delta : data.horizontal) {
        for (const auto& other : curve_other_fixed_points(gamma, delta)) {
          if (other.mu() != gamma.mu()) {
            horizontal = false;
            bad = gamma.to_string() + " along " + delta.to_string();
          }
        }
      }
      for (const auto& delta : data.vertical) {
        for (const auto& other : curve_other_fixed_points(gamma, delta)) {
          const bool refined = other.mu().size() == gamma.mu().size() + 1 &&
                               refinement_leq(other.mu(), gamma.mu());
          if (!refined) {
            vertical = false;
            bad = gamma.to_string() + " along " + delta.to_string();
          }
        }
      }
    }
    rec.check("horizontal curves stay in the same stratum", n, horizontal, bad);
    rec.check("vertical curves end in a one-step subdivision", n, vertical, bad);
  }
  if (max_n >= 2) {
    const auto gamma = parse_barred("21");
    std::set<BarredPermutation> points{gamma};
    for (const auto& delta : tangent_weights(gamma).vertical) {
      const auto others = curve_other_fixed_points(gamma, delta);
      points.insert(others.begin(), others.end());
    }
    const std::set<BarredPermutation> expected{gamma, parse_barred("2|1"), parse_barred("1|2")};
    rec.check("n=2 vertical curves reach {[21], [2|1], [1|2]}", 2, points == expected, list_of(points));
  }
}

// -------------------------------------------------------------- conjecture

void suite_conjecture(Recorder& rec, int max_n) {
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const auto full = full_poset(n);
    const auto report = bcell_conjecture_check(full);
    std::string detail = std::to_string(report.poset.size()) + " dense orbits";
    if (report.witness) {
      detail += "; ungraded interval " + report.witness->first.to_string() + ".." + report.witness->second.to_string();
    }
    rec.check("dense orbits of cells: graded with max and min", n, report.passes(), detail);
    std::vector<std::string> bad;
    for (const auto& mu : Composition::all(n)) {
      const auto restricted = bcell_conjecture_check(full, mu);
      if (!restricted.passes()) bad.push_back(mu.to_string());
    }
    rec.check("per-composition restriction: graded with max and min", n, bad.empty(),
              bad.empty() ? "" : "fails for " + join(bad));
  }
}

const std::map<std::string, std::function<void(Recorder&, int)>>& suites() {
  static const std::map<std::string, std::function<void(Recorder&, int)>> table{
      {"counts", suite_counts}, {"weak", suite_weak},     {"wsets", suite_wsets},
      {"bruhat", suite_bruhat}, {"reverse", suite_reverse}, {"covers", suite_covers},
      {"cells", suite_cells},   {"gkm", suite_gkm},       {"conjecture", suite_conjecture},
  };
  return table;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_n"] = max_n;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["n"] = c.n;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    j["checks"].push_back(std::move(entry));
  }
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "weak",  "wsets", "bruhat",     "reverse",
                                              "covers", "cells", "gkm",   "conjecture", "all"};
  return names;
}

VerifyReport run_suite(const std::string& suite, int max_n) {
  if (max_n < 0) throw InvalidArgument("--max-n must be nonnegative");
  VerifyReport report{suite, max_n, {}};
  Recorder rec(report);
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") suites().at(name)(rec, max_n);
    }
    return report;
  }
  auto it = suites().find(suite);
  if (it == suites().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  it->second(rec, max_n);
  return report;
}

}  // namespace quadrics
