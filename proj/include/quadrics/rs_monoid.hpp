#pragma once

// The Richardson-Springer monoid acting on mu-involutions, its partial
// inverse (the star action), the weak order and W-sets.

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "quadrics/degenerate.hpp"
#include "quadrics/permutation.hpp"
#include "quadrics/poset.hpp"

namespace quadrics {

/// A set of permutations of [n], all of one length.
using WSet = std::set<Permutation>;

/// s_i . pi. Within a block the involution action is used, lengths taken
/// relative to the block alphabet; across blocks i and i+1 are swapped when
/// i+1 precedes i.
MuInvolution act_simple(SimpleReflection s, const MuInvolution& pi);

/// w . pi, applying a reduced word of w from the right.
MuInvolution act_word(const Permutation& w, const MuInvolution& pi);

/// Apply a word of generators right to left (not necessarily reduced).
MuInvolution act_letters(std::span<const SimpleReflection> word, const MuInvolution& pi);

/// The unique pi != rho with s . pi = rho, or rho itself when none exists.
MuInvolution star_act(SimpleReflection s, const MuInvolution& rho);

/// All pi with s . pi = rho and pi != rho (at most one by cancellativity).
std::vector<MuInvolution> star_preimages(SimpleReflection s, const MuInvolution& rho);

/// The pi' with w . pi' = pi and L_mu(pi') = L_mu(pi) + length(w), if any.
std::optional<MuInvolution> star_exact(const Permutation& w, const MuInvolution& pi);

struct WeakCover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  SimpleReflection label;

  friend bool operator==(const WeakCover&, const WeakCover&) = default;
  friend auto operator<=>(const WeakCover&, const WeakCover&) = default;
};

/// Labeled Hasse diagram of the weak order on the mu-involutions of one mu,
/// together with the action tables used by the order builders.
class WeakOrderPoset {
 public:
  explicit WeakOrderPoset(const Composition& mu);

  const Composition& mu() const { return mu_; }
  int n() const { return mu_.n(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<MuInvolution>& elements() const { return elements_; }
  const MuInvolution& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const MuInvolution& pi) const;
  /// Index of s_i . element(k).
  std::size_t act(int i, std::size_t k) const { return action_[static_cast<std::size_t>(i - 1)][k]; }
  /// Index of s_i * element(k), or nullopt when trivial.
  std::optional<std::size_t> star(int i, std::size_t k) const;
  int mu_length(std::size_t k) const { return lengths_[k]; }
  std::size_t min_index() const { return index_of(MuInvolution::min(mu_)); }
  std::size_t max_index() const { return index_of(MuInvolution::max(mu_)); }
  const std::vector<WeakCover>& covers() const { return covers_; }
  /// Indices sorted by decreasing L_mu (bottom of the weak order first).
  const std::vector<std::size_t>& bottom_up() const { return bottom_up_; }

  /// The (unlabeled) weak order as a poset.
  Poset<MuInvolution> poset() const;

 private:
  Composition mu_;
  std::vector<MuInvolution> elements_;
  std::map<MuInvolution, std::size_t> index_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::vector<std::optional<std::size_t>>> star_;
  std::vector<int> lengths_;
  std::vector<WeakCover> covers_;
  std::vector<std::size_t> bottom_up_;
};

WeakOrderPoset weak_order(const Composition& mu);

/// W(pi, target) for every pi of one mu, by memoized dynamic programming.
/// Concurrent fills of the memo are serialized by a mutex.
class WSetTable {
 public:
  WSetTable(const WeakOrderPoset& weak, std::size_t target);

  const WSet& from(std::size_t source);
  std::size_t target() const { return target_; }

 private:
  const WeakOrderPoset& weak_;
  std::size_t target_;
  std::map<std::size_t, WSet> memo_;
  std::mutex mutex_;
};

/// W(pi, rho) = { w : w . pi = rho, length(w) = L_mu(pi) - L_mu(rho) }.
WSet wset(const MuInvolution& pi, const MuInvolution& rho);
/// W(pi) = W(pi, max).
WSet wset_to_max(const MuInvolution& pi);
/// W^{-1}(pi) = W(min, pi).
WSet rev_wset(const MuInvolution& pi);

/// W^{-1} for every element of the weak order, built upward from min.
std::vector<WSet> rev_wsets(const WeakOrderPoset& weak);
/// W(., max) for every element of the weak order.
std::vector<WSet> wsets_to_max(const WeakOrderPoset& weak);

}  // namespace quadrics
