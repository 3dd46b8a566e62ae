#include "quadrics/poset.hpp"

#include <bit>
#include <limits>
#include <numeric>

namespace quadrics {

OrderMatrix::OrderMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

bool OrderMatrix::merge_row(std::size_t dst, std::size_t src) {
  return merge_row_from(dst, *this, src);
}

bool OrderMatrix::merge_row_from(std::size_t dst, const OrderMatrix& other, std::size_t src) {
  bool changed = false;
  std::uint64_t* d = &bits_[dst * words_];
  const std::uint64_t* s = &other.bits_[src * words_];
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t merged = d[w] | s[w];
    changed |= merged != d[w];
    d[w] = merged;
  }
  return changed;
}

std::size_t OrderMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
  return c;
}

std::vector<std::size_t> OrderMatrix::row(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[i * words_ + w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

void OrderMatrix::make_reflexive() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i);
}

void OrderMatrix::close_transitively() {
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != k && test(i, k)) merge_row(i, k);
    }
  }
}

OrderMatrix OrderMatrix::transposed() const {
  OrderMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : row(i)) t.set(j, i);
  }
  return t;
}

bool OrderMatrix::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!test(i, i)) return false;
  }
  return true;
}

bool OrderMatrix::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : row(i)) {
      if (j != i && test(j, i)) return false;
    }
  }
  return true;
}

bool OrderMatrix::is_transitive() const {
  OrderMatrix closed = *this;
  closed.close_transitively();
  return closed == *this;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const OrderMatrix& leq) {
  const std::size_t n = leq.size();
  // Strict up-sets; j covers i when j is in up(i) but in no up(k), k in up(i).
  OrderMatrix strict_up(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : leq.row(i)) {
      if (j != i) strict_up.set(i, j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t words = strict_up.words();
  std::vector<std::uint64_t> beyond(words);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(beyond.begin(), beyond.end(), 0);
    const auto above = strict_up.row(i);
    for (std::size_t k : above) {
      const std::uint64_t* r = strict_up.row_data(k);
      for (std::size_t w = 0; w < words; ++w) beyond[w] |= r[w];
    }
    for (std::size_t j : above) {
      if (!((beyond[j / 64] >> (j % 64)) & 1u)) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> chain_ranks(const OrderMatrix& leq) {
  const std::size_t n = leq.size();
  // Elements sorted by down-set size form a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const OrderMatrix down = leq.transposed();
  std::vector<std::size_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = down.row_count(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<int> rank(n, 0);
  for (std::size_t i : order) {
    for (std::size_t k : down.row(i)) {
      if (k != i) rank[i] = std::max(rank[i], rank[k] + 1);
    }
  }
  return rank;
}

std::pair<int, int> interval_chain_lengths(const OrderMatrix& leq, std::size_t bottom,
                                           std::size_t top) {
  if (!leq.test(bottom, top)) throw InvalidArgument("not an interval: bottom is not below top");
  const std::size_t n = leq.size();
  const auto covers = cover_pairs(leq);
  const auto rank = chain_ranks(leq);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [lo, hi] : covers) {
    if (leq.test(bottom, lo) && leq.test(hi, top)) up[lo].push_back(hi);
  }
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> shortest(n, kUnset), longest(n, -1);
  shortest[bottom] = 0;
  longest[bottom] = 0;
  for (std::size_t v : order) {
    if (longest[v] < 0) continue;
    for (std::size_t w : up[v]) {
      shortest[w] = std::min(shortest[w], shortest[v] + 1);
      longest[w] = std::max(longest[w], longest[v] + 1);
    }
  }
  return {shortest[top], longest[top]};
}

GradedReport check_graded(const OrderMatrix& leq) {
  const std::size_t n = leq.size();
  const auto covers = cover_pairs(leq);
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [lo, hi] : covers) up[lo].push_back(hi);

  const auto rank = chain_ranks(leq);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  GradedReport report;
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> shortest(n), longest(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(shortest.begin(), shortest.end(), kUnset);
    std::fill(longest.begin(), longest.end(), -1);
    shortest[x] = 0;
    longest[x] = 0;
    for (std::size_t v : order) {
      if (longest[v] < 0) continue;
      for (std::size_t w : up[v]) {
        shortest[w] = std::min(shortest[w], shortest[v] + 1);
        longest[w] = std::max(longest[w], longest[v] + 1);
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (longest[y] < 0 || shortest[y] == longest[y]) continue;
      // Prefer the smallest failing interval, then the lowest indices.
      bool better = !report.witness || longest[y] < report.longest_chain ||
                    (longest[y] == report.longest_chain && shortest[y] < report.shortest_chain);
      report.graded = false;
      if (better) {
        report.witness = std::make_pair(x, y);
        report.shortest_chain = shortest[y];
        report.longest_chain = longest[y];
      }
    }
  }
  return report;
}

}  // namespace quadrics
