#pragma once

// Symmetric-group machinery: permutations over explicit alphabets, lengths,
// exceedance, reduced words, the Bruhat-Chevalley order and parabolic data.

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

/// Thrown when a value violates the invariants of its type.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of a finite ordered alphabet, stored in one-line notation.
///
/// `word()[k]` is the image of `alphabet()[k]`; the alphabet is kept
/// strictly increasing, so the one-line word of the block `8351` on
/// {1,3,5,8} describes the involution (1 8)(3)(5).
class Permutation {
 public:
  Permutation() = default;

  /// Permutation of the alphabet formed by the word's own letters.
  explicit Permutation(std::vector<int> word);
  Permutation(std::vector<int> alphabet, std::vector<int> word);

  static Permutation identity(int n);
  static Permutation identity_on(std::vector<int> alphabet);
  static Permutation longest(int n);
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int i, int n);
  static Permutation transposition(int a, int b, int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& alphabet() const { return alphabet_; }
  bool on_standard_alphabet() const;

  /// Image of an alphabet letter.
  int operator()(int letter) const;

  /// Same permutation written over {1..size()}.
  Permutation standardized() const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  /// Composition (a*b)(x) = a(b(x)); both operands share one alphabet.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Compact key for permutations of {1..n}, n <= 15.
  std::uint64_t code() const;

  /// Digits when every letter is a single digit, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> alphabet_;
  std::vector<int> word_;
};

/// Generator s_i of S_n (and of the Richardson-Springer monoid), 1 <= i <= n-1.
struct SimpleReflection {
  int index = 1;

  static SimpleReflection checked(int index, int n);
  Permutation as_permutation(int n) const { return Permutation::simple(index, n); }

  friend bool operator==(SimpleReflection, SimpleReflection) = default;
  friend auto operator<=>(SimpleReflection, SimpleReflection) = default;
};

using ReducedWord = std::vector<SimpleReflection>;

/// A subset of the simple roots {1..n-1} of type A_{n-1}.
class RootSubset {
 public:
  RootSubset() = default;
  RootSubset(int n, std::set<int> indices);

  int n() const { return n_; }
  const std::set<int>& indices() const& { return indices_; }
  std::set<int> indices() && { return std::move(indices_); }
  bool contains(int i) const { return indices_.count(i) != 0; }
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool has_consecutive() const;
  bool is_subset_of(const RootSubset& other) const;
  /// Delta minus this subset.
  RootSubset complement() const;

  friend bool operator==(const RootSubset&, const RootSubset&) = default;

 private:
  int n_ = 0;
  std::set<int> indices_;
};

/// Number of inversions, counted in the alphabet's order.
int length(const Permutation& w);

/// #{ k : w(a_k) > a_k } over the alphabet a.
int exceedance(const Permutation& w);

/// u <= v in the Bruhat-Chevalley order (rank-matrix criterion).
bool sn_bruhat_leq(const Permutation& u, const Permutation& v);

/// Every minimal-length factorization of w into simple reflections, sorted.
/// Words are read left to right as products: w = s_{i_1} s_{i_2} ... s_{i_k}.
std::vector<ReducedWord> reduced_words(const Permutation& w);

/// One reduced word, chosen deterministically (leftmost descents first).
ReducedWord reduced_word(const Permutation& w);

/// Product of a word of simple reflections in S_n.
Permutation product(std::span<const SimpleReflection> word, int n);

/// Longest element of the parabolic subgroup W_I.
Permutation longest_parabolic_element(const RootSubset& subset);

/// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n);

}  // namespace quadrics
