#pragma once

// Slow, direct reference implementations used to cross-check the library.
// None of them share code paths with the functions under test beyond the
// basic value types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quadrics/degenerate.hpp"
#include "quadrics/permutation.hpp"
#include "quadrics/rs_monoid.hpp"

namespace oracle {

using quadrics::Composition;
using quadrics::MuInvolution;
using quadrics::Permutation;

inline std::vector<std::vector<int>> words_of(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j] ? 1 : 0;
  }
  return count;
}

// Right multiplication by s_i swaps positions i and i+1 of the one-line word.
inline std::vector<int> times_simple(std::vector<int> w, int i) {
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

inline std::vector<int> product_of(const std::vector<int>& letters, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i : letters) w = times_simple(w, i);
  return w;
}

/// Every word in the generators of length inversions(w) whose product is w.
inline std::set<std::vector<int>> reduced_words(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  const int len = inversions(w);
  std::set<std::vector<int>> out;
  std::vector<int> letters(static_cast<std::size_t>(len), 1);
  if (len == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  if (n < 2) return out;
  while (true) {
    if (product_of(letters, n) == w) out.insert(letters);
    std::size_t k = 0;
    while (k < letters.size() && letters[k] == n - 1) letters[k++] = 1;
    if (k == letters.size()) break;
    ++letters[k];
  }
  return out;
}

/// u <= v iff a reduced word of u sits inside one fixed reduced word of v.
inline bool subword_leq(const std::vector<int>& u, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  const auto words = reduced_words(v);
  const auto& word = *words.begin();
  const int target = inversions(u);
  const std::size_t len = word.size();
  for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
    if (__builtin_popcountl(mask) != target) continue;
    std::vector<int> sub;
    for (std::size_t k = 0; k < len; ++k) {
      if (mask & (1ul << k)) sub.push_back(word[k]);
    }
    if (product_of(sub, n) == u) return true;
  }
  return false;
}

inline bool is_involution_word(const std::vector<int>& letters_in_order, const std::vector<int>& images) {
  std::map<int, int> f;
  for (std::size_t k = 0; k < letters_in_order.size(); ++k) f[letters_in_order[k]] = images[k];
  for (auto [x, y] : f) {
    if (!f.count(y) || f[y] != x) return false;
  }
  return true;
}

/// All mu-involutions by filtering S_n: each block, read against its sorted
/// alphabet, must be an involution.
inline std::vector<std::vector<int>> mu_involution_words(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<std::vector<int>> out;
  for (const auto& w : words_of(n)) {
    bool ok = true;
    std::size_t pos = 0;
    for (int p : parts) {
      std::vector<int> block(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + p);
      std::vector<int> alphabet = block;
      std::sort(alphabet.begin(), alphabet.end());
      ok = ok && is_involution_word(alphabet, block);
      pos += static_cast<std::size_t>(p);
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline std::vector<std::vector<int>> compositions_of(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first) {
    for (auto rest : compositions_of(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

inline std::size_t degenerate_count(int n) {
  std::size_t total = 0;
  for (const auto& parts : compositions_of(n)) total += mu_involution_words(parts).size();
  return total;
}

/// Barred permutations: all parts at most 2 and every 2-block descending.
inline std::size_t barred_count(int n) {
  std::size_t total = 0;
  for (const auto& parts : compositions_of(n)) {
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p > 2; })) continue;
    for (const auto& w : words_of(n)) {
      bool ok = true;
      std::size_t pos = 0;
      for (int p : parts) {
        if (p == 2) ok = ok && w[pos] > w[pos + 1];
        pos += static_cast<std::size_t>(p);
      }
      total += ok ? 1 : 0;
    }
  }
  return total;
}

/// W(pi, rho) by trying every permutation of the right length.
inline std::set<Permutation> wset(const MuInvolution& pi, const MuInvolution& rho) {
  const int gap = quadrics::mu_length(pi) - quadrics::mu_length(rho);
  std::set<Permutation> out;
  if (gap < 0) return out;
  for (const auto& w : words_of(pi.n())) {
    if (inversions(w) != gap) continue;
    const Permutation perm(w);
    if (quadrics::act_word(perm, pi) == rho) out.insert(perm);
  }
  return out;
}

/// Reachability under the monoid action (the weak order), by search.
inline bool weak_leq(const MuInvolution& lower, const MuInvolution& upper) {
  std::set<MuInvolution> seen{lower};
  std::vector<MuInvolution> stack{lower};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur == upper) return true;
    for (int i = 1; i < cur.n(); ++i) {
      auto next = quadrics::act_simple(quadrics::SimpleReflection{i}, cur);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

using Relation = std::set<std::pair<MuInvolution, MuInvolution>>;

inline void close_transitively(Relation& rel) {
  bool changed = true;
  while (changed) {
    std::map<MuInvolution, std::set<MuInvolution>> above;
    for (const auto& [a, b] : rel) above[a].insert(b);
    Relation add;
    for (const auto& [a, b] : rel) {
      for (const auto& c : above[b]) {
        if (!rel.count({a, c})) add.insert({a, c});
      }
    }
    changed = !add.empty();
    rel.insert(add.begin(), add.end());
  }
}

/// Fixed-mu closure order as a set of pairs (x <= y): from the diagonal,
/// whenever x <= y and r = s.y differs from y, add x <= r and s.x <= r.
inline Relation bruhat_pairs(const Composition& mu) {
  const auto elements = quadrics::enumerate_mu_involutions(mu);
  Relation rel;
  for (const auto& e : elements) rel.insert({e, e});
  bool changed = true;
  while (changed) {
    const auto before = rel.size();
    Relation add;
    for (const auto& [x, y] : rel) {
      for (int i = 1; i < mu.n(); ++i) {
        const quadrics::SimpleReflection s{i};
        const auto r = quadrics::act_simple(s, y);
        if (r == y) continue;
        add.insert({x, r});
        add.insert({quadrics::act_simple(s, x), r});
      }
    }
    rel.insert(add.begin(), add.end());
    close_transitively(rel);
    changed = rel.size() != before;
  }
  return rel;
}

/// Hasse diagram of a relation given as pairs, by definition.
inline Relation covers_of(const Relation& rel) {
  std::set<MuInvolution> elements;
  for (const auto& [a, b] : rel) {
    elements.insert(a);
    elements.insert(b);
  }
  Relation out;
  for (const auto& [a, b] : rel) {
    if (a == b) continue;
    bool direct = true;
    for (const auto& c : elements) {
      if (c != a && c != b && rel.count({a, c}) && rel.count({c, b})) {
        direct = false;
        break;
      }
    }
    if (direct) out.insert({a, b});
  }
  return out;
}

}  // namespace oracle
