#pragma once

// Finite posets over dense indices, stored as bit rows.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quadrics/permutation.hpp"

namespace quadrics {

/// Square boolean matrix; bit (i, j) set means i <= j.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  explicit OrderMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  /// row(dst) |= row(src); returns true when dst changed.
  bool merge_row(std::size_t dst, std::size_t src);
  /// row(dst) |= row(src) of another matrix of the same size.
  bool merge_row_from(std::size_t dst, const OrderMatrix& other, std::size_t src);
  std::size_t row_count(std::size_t i) const;
  /// Column indices set in row i.
  std::vector<std::size_t> row(std::size_t i) const;
  std::size_t words() const { return words_; }
  const std::uint64_t* row_data(std::size_t i) const { return &bits_[i * words_]; }

  void make_reflexive();
  void close_transitively();
  OrderMatrix transposed() const;

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Outcome of an interval-wise gradedness test.
struct GradedReport {
  bool graded = true;
  /// Failing interval (bottom, top) with the shortest short chain.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  int shortest_chain = 0;
  int longest_chain = 0;
};

/// Cover pairs (lower, upper) of a partial order, sorted.
std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const OrderMatrix& leq);

/// Every interval [x, y] has all maximal chains of equal length.
GradedReport check_graded(const OrderMatrix& leq);

/// (shortest, longest) maximal-chain length of the interval [bottom, top].
std::pair<int, int> interval_chain_lengths(const OrderMatrix& leq, std::size_t bottom,
                                           std::size_t top);

/// Length of the longest chain ending at each element.
std::vector<int> chain_ranks(const OrderMatrix& leq);

/// A finite partial order on a list of distinct elements.
template <class Element>
class Poset {
 public:
  Poset() = default;

  /// `leq` must already be a partial order on positions of `elements`.
  Poset(std::vector<Element> elements, OrderMatrix leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {
    if (leq_.size() != elements_.size()) throw InvalidArgument("order size mismatch");
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (index_.size() != elements_.size()) throw InvalidArgument("duplicate poset element");
    covers_ = cover_pairs(leq_);
    ranks_ = chain_ranks(leq_);
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const OrderMatrix& matrix() const { return leq_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  /// Longest chain from a minimal element.
  const std::vector<int>& ranks() const { return ranks_; }

  std::optional<std::size_t> index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const Element& e) const {
    auto i = index_of(e);
    if (!i) throw InvalidArgument("element not in poset");
    return *i;
  }
  bool contains(const Element& e) const { return index_.count(e) != 0; }
  bool leq(const Element& a, const Element& b) const { return leq_.test(at(a), at(b)); }
  bool covered_by(const Element& a, const Element& b) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(at(a), at(b)));
  }

  /// Elements covered by e.
  std::vector<std::size_t> lower_covers(std::size_t e) const {
    std::vector<std::size_t> out;
    for (auto [lo, hi] : covers_) {
      if (hi == e) out.push_back(lo);
    }
    return out;
  }

  std::vector<std::size_t> minimal() const { return extremal(true); }
  std::vector<std::size_t> maximal() const { return extremal(false); }

  /// Number of elements at each rank.
  std::vector<int> level_sizes() const {
    std::vector<int> levels;
    for (int r : ranks_) {
      if (static_cast<std::size_t>(r) >= levels.size()) levels.resize(static_cast<std::size_t>(r) + 1, 0);
      ++levels[static_cast<std::size_t>(r)];
    }
    return levels;
  }

  GradedReport graded() const { return check_graded(leq_); }

  Poset opposite() const { return Poset(elements_, leq_.transposed()); }

  /// Induced sub-order on the given positions (kept in the given order).
  Poset restrict_to(const std::vector<std::size_t>& keep) const {
    std::vector<Element> sub;
    OrderMatrix m(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
      sub.push_back(elements_[keep[a]]);
      for (std::size_t b = 0; b < keep.size(); ++b) {
        if (leq_.test(keep[a], keep[b])) m.set(a, b);
      }
    }
    return Poset(std::move(sub), std::move(m));
  }

  /// Same elements and the same order relation, regardless of listing order.
  bool same_order_as(const Poset& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!other.contains(elements_[i])) return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t oi = other.at(elements_[i]);
      for (std::size_t j = 0; j < size(); ++j) {
        if (leq_.test(i, j) != other.leq_.test(oi, other.at(elements_[j]))) return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::size_t> extremal(bool lower) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < size() && ok; ++j) {
        if (j != i && (lower ? leq_.test(j, i) : leq_.test(i, j))) ok = false;
      }
      if (ok) out.push_back(i);
    }
    return out;
  }

  std::vector<Element> elements_;
  std::map<Element, std::size_t> index_;
  OrderMatrix leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<int> ranks_;
};

}  // namespace quadrics
