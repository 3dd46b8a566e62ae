#pragma once

// Bruhat (orbit-closure) order on degenerate involutions: inside one
// composition via the recursive construction, across compositions via
// W-set containment, plus the reverse order, cover characterizations and the
// order induced from S_n.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "quadrics/degenerate.hpp"
#include "quadrics/poset.hpp"
#include "quadrics/rs_monoid.hpp"

namespace quadrics {

using BruhatPoset = Poset<MuInvolution>;

/// Largest n for which full_poset is built unless the caller raises it.
inline constexpr int kDefaultPosetBound = 5;

/// Everything computed once per composition.
struct MuOrbitData {
  explicit MuOrbitData(const Composition& mu);

  WeakOrderPoset weak;
  /// leq.test(i, j) iff element i <= element j in the Bruhat order.
  OrderMatrix leq;
  std::vector<WSet> to_max;
  std::vector<WSet> from_min;
};

/// Lazily filled per-composition cache for one n. Safe to share between
/// threads; entries never change once built.
class OrbitAtlas {
 public:
  explicit OrbitAtlas(int n);

  int n() const { return n_; }
  const std::vector<Composition>& compositions() const { return compositions_; }
  const MuOrbitData& data(const Composition& mu) const;

 private:
  int n_;
  std::vector<Composition> compositions_;
  mutable std::mutex mutex_;
  mutable std::map<Composition, std::unique_ptr<MuOrbitData>> cache_;
};

/// The fixed-mu Bruhat order as a least fixed point seeded by the diagonal.
OrderMatrix bruhat_matrix(const WeakOrderPoset& weak);

BruhatPoset bruhat_poset(const Composition& mu);

/// rho <= pi for rho of composition nu and pi of composition mu.
bool cross_leq(const MuInvolution& rho, const MuInvolution& pi);
bool cross_leq(const MuInvolution& rho, const MuInvolution& pi, const OrbitAtlas& atlas);

/// All degenerate involutions of length n under the closure order.
BruhatPoset full_poset(int n, int bound = kDefaultPosetBound);
BruhatPoset full_poset(const OrbitAtlas& atlas, int bound = kDefaultPosetBound);

/// The elements covered by pi, read off from the two cover conditions
/// (refinement covers with W-set containment; star/dot translation inside mu).
std::set<MuInvolution> covers_by_theorem(const MuInvolution& pi);
std::set<MuInvolution> covers_by_theorem(const MuInvolution& pi, const OrbitAtlas& atlas);

/// Downward recursive order: opposite weak covers closed under simultaneous
/// star preimages, then transitively.
BruhatPoset reverse_bruhat_poset(const Composition& mu);

/// The Bruhat-Chevalley order of S_n restricted to the words of mu-involutions.
BruhatPoset induced_order(const Composition& mu);

struct CorW1Factor {
  Permutation w1;
  SimpleReflection s;
  Permutation w2;
  /// The reflection w1 s w1^{-1}.
  Permutation reflection;
};

struct CorW1Entry {
  Permutation varpi;
  std::optional<CorW1Factor> factor;
};

struct CorW1Result {
  /// Some element of W^{-1}(lower) factors as required.
  bool holds = false;
  /// Every element of W^{-1}(lower) factors as required.
  bool holds_for_every = false;
  std::vector<CorW1Entry> entries;
};

/// Look for varpi = w1 w2 in W^{-1}(lower), lengths adding, and a simple s
/// with w1 s w2 in W^{-1}(upper).
CorW1Result cor_w1_verify(const MuInvolution& lower, const MuInvolution& upper);

struct GradedCheck {
  bool graded = true;
  std::optional<std::pair<MuInvolution, MuInvolution>> witness;
};

GradedCheck is_graded(const BruhatPoset& poset);

}  // namespace quadrics
