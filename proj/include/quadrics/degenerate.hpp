#pragma once

// Compositions, degenerate (mu-)involutions, barred permutations and the
// symbolic distinguished quadric attached to each Borel orbit.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "quadrics/permutation.hpp"

namespace quadrics {

/// Largest n accepted by the enumerators unless a caller raises the bound.
inline constexpr int kDefaultEnumerationBound = 9;

/// An ordered sequence of positive integers summing to n.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// Every composition of n, lexicographic on the parts.
  static std::vector<Composition> all(int n);
  /// The composition whose I-set is `subset`.
  static Composition from_subset(const RootSubset& subset);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  /// Position in the concatenated word where block j starts.
  int offset(std::size_t j) const;
  /// All parts at most 2.
  bool is_special() const;
  int count_parts_equal(int value) const;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// I(mu): {1..n-1} minus the proper partial sums of mu.
RootSubset subset_of(const Composition& mu);

/// mu precedes nu in the refinement order, i.e. I(mu) is contained in I(nu).
bool refinement_leq(const Composition& mu, const Composition& nu);

/// Raised by validation; `block()` is the 0-based offending block or -1.
class ValidationError : public InvalidArgument {
 public:
  ValidationError(const std::string& what, int block)
      : InvalidArgument(what), block_(block) {}
  int block() const { return block_; }

 private:
  int block_;
};

/// A permutation of [n] cut into consecutive blocks of sizes mu, where each
/// block is an involution of its own (sorted) alphabet.
class MuInvolution {
 public:
  MuInvolution() = default;
  /// Validating constructor; throws ValidationError.
  MuInvolution(Composition mu, std::vector<int> word);

  /// The string 1 2 ... n cut by mu (top of the weak order).
  static MuInvolution max(const Composition& mu);
  /// The string n ... 2 1 cut by mu (bottom of the weak order).
  static MuInvolution min(const Composition& mu);

  const Composition& mu() const { return mu_; }
  const std::vector<int>& word() const { return word_; }
  int n() const { return mu_.n(); }
  std::size_t block_count() const { return mu_.size(); }
  std::vector<int> block_word(std::size_t j) const;
  std::vector<int> block_alphabet(std::size_t j) const;
  /// Block j as a permutation of its sorted alphabet.
  Permutation block(std::size_t j) const;
  std::vector<Permutation> blocks() const;
  /// Index of the block containing a letter.
  std::size_t block_of(int letter) const;
  /// w(pi): each block sorted increasingly, then concatenated.
  Permutation sorted_word() const;
  Permutation as_permutation() const { return Permutation(word_); }

  /// Bracket notation such as "[26|8351|7|94]".
  std::string to_string() const;

  friend bool operator==(const MuInvolution&, const MuInvolution&) = default;
  friend auto operator<=>(const MuInvolution& a, const MuInvolution& b) {
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.mu_ <=> b.mu_;
  }

 private:
  Composition mu_;
  std::vector<int> word_;
};

MuInvolution validate_mu_involution(const std::vector<int>& word, const Composition& mu);

/// Special composition and every 2-block written as a descent "ji", j > i.
bool is_barred(const MuInvolution& pi);

/// A mu-involution known to satisfy is_barred.
class BarredPermutation {
 public:
  BarredPermutation() = default;
  explicit BarredPermutation(MuInvolution underlying);

  const MuInvolution& underlying() const { return pi_; }
  const Composition& mu() const { return pi_.mu(); }
  const std::vector<int>& word() const { return pi_.word(); }
  int n() const { return pi_.n(); }
  std::string to_string() const { return pi_.to_string(); }

  friend bool operator==(const BarredPermutation&, const BarredPermutation&) = default;
  friend auto operator<=>(const BarredPermutation&, const BarredPermutation&) = default;

 private:
  MuInvolution pi_;
};

/// Flag of cumulative block alphabets plus, per block, the cycles (a, b) with
/// a <= b; (a, a) stands for x_a^2 and (a, b) for x_a x_b.
struct DistinguishedQuadric {
  std::vector<std::vector<int>> flag;
  std::vector<std::vector<std::pair<int, int>>> block_quadrics;

  /// e.g. "x_1x_8 + x_3^2 + x_5^2" for block j.
  std::string block_string(std::size_t j) const;
  std::string flag_string() const;

  friend bool operator==(const DistinguishedQuadric&, const DistinguishedQuadric&) = default;
};

/// L(pi) = (length + exceedance) / 2 for an involution of its alphabet.
int inv_length(const Permutation& pi);

/// L_mu(pi) = length(w(pi)) + sum of L over blocks.
int mu_length(const MuInvolution& pi);

/// All mu-involutions for mu, sorted by word.
std::vector<MuInvolution> enumerate_mu_involutions(const Composition& mu,
                                                   int bound = kDefaultEnumerationBound);
/// All degenerate involutions of length n, sorted by (word, mu).
std::vector<MuInvolution> enumerate_degenerate(int n, int bound = kDefaultEnumerationBound);

std::vector<BarredPermutation> enumerate_barred(int n, int bound = kDefaultEnumerationBound);
std::vector<BarredPermutation> enumerate_barred_mu(const Composition& mu,
                                                   int bound = kDefaultEnumerationBound);

using BigInt = boost::multiprecision::cpp_int;

struct BarredCount {
  BigInt recurrence;
  BigInt closed_form;
};

/// Number of barred permutations of [n], by the two-term recurrence and by
/// the binomial closed form.
BarredCount count_barred(int n);

DistinguishedQuadric quadric_of(const MuInvolution& pi);
/// Inverse of quadric_of.
MuInvolution from_quadric(const DistinguishedQuadric& q);

}  // namespace quadrics
