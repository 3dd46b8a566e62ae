#include "quadrics/bruhat.hpp"

#include <algorithm>

namespace quadrics {

namespace {

bool includes(const WSet& big, const WSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool strictly_refines(const Composition& nu, const Composition& mu) {
  return nu != mu && refinement_leq(nu, mu);
}

}  // namespace

MuOrbitData::MuOrbitData(const Composition& mu)
    : weak(mu), leq(bruhat_matrix(weak)), to_max(wsets_to_max(weak)), from_min(rev_wsets(weak)) {}

OrbitAtlas::OrbitAtlas(int n) : n_(n), compositions_(Composition::all(n)) {}

const MuOrbitData& OrbitAtlas::data(const Composition& mu) const {
  if (mu.n() != n_) throw InvalidArgument("composition " + mu.to_string() + " is not of n=" + std::to_string(n_));
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(mu);
  if (it == cache_.end()) it = cache_.emplace(mu, std::make_unique<MuOrbitData>(mu)).first;
  return *it->second;
}

OrderMatrix bruhat_matrix(const WeakOrderPoset& weak) {
  const std::size_t size = weak.size();
  const int n = weak.n();
  // down.test(r, p) records p <= r.
  OrderMatrix down(size);
  down.make_reflexive();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t star : weak.bottom_up()) {
      for (int i = 1; i < n; ++i) {
        const std::size_t r = weak.act(i, star);
        if (r == star) continue;
        // pi* <= rho* gives pi* <= s.rho* and s.pi* <= s.rho*.
        changed |= down.merge_row(r, star);
        for (std::size_t p : down.row(star)) {
          const std::size_t sp = weak.act(i, p);
          if (!down.test(r, sp)) {
            down.set(r, sp);
            changed = true;
          }
        }
      }
    }
    OrderMatrix before = down;
    down.close_transitively();
    changed |= !(before == down);
  }
  OrderMatrix leq = down.transposed();
  if (!leq.is_antisymmetric()) {
    throw InvalidArgument("Bruhat construction for " + weak.mu().to_string() + " is not antisymmetric");
  }
  return leq;
}

BruhatPoset bruhat_poset(const Composition& mu) {
  MuOrbitData data(mu);
  return BruhatPoset(data.weak.elements(), data.leq);
}

bool cross_leq(const MuInvolution& rho, const MuInvolution& pi, const OrbitAtlas& atlas) {
  const auto& nu = rho.mu();
  const auto& mu = pi.mu();
  if (nu.n() != mu.n()) throw InvalidArgument("cross_leq across different n");
  if (nu == mu) {
    const auto& d = atlas.data(mu);
    return d.leq.test(d.weak.index_of(rho), d.weak.index_of(pi));
  }
  if (!strictly_refines(nu, mu)) return false;
  const auto& dm = atlas.data(mu);
  const auto& dn = atlas.data(nu);
  const WSet& upper = dm.to_max[dm.weak.index_of(pi)];
  const std::size_t r = dn.weak.index_of(rho);
  for (std::size_t g = 0; g < dn.weak.size(); ++g) {
    if (dn.leq.test(r, g) && includes(upper, dn.to_max[g])) return true;
  }
  return false;
}

bool cross_leq(const MuInvolution& rho, const MuInvolution& pi) {
  OrbitAtlas atlas(pi.n());
  return cross_leq(rho, pi, atlas);
}

BruhatPoset full_poset(const OrbitAtlas& atlas, int bound) {
  const int n = atlas.n();
  if (n > bound) {
    throw InvalidArgument("full poset for n=" + std::to_string(n) + " exceeds the bound " +
                          std::to_string(bound));
  }
  auto elements = enumerate_degenerate(n);
  std::map<MuInvolution, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);

  std::map<Composition, std::vector<std::size_t>> global;
  for (const auto& mu : atlas.compositions()) {
    const auto& d = atlas.data(mu);
    auto& g = global[mu];
    for (const auto& e : d.weak.elements()) g.push_back(index.at(e));
  }

  OrderMatrix leq(elements.size());
  for (const auto& mu : atlas.compositions()) {
    const auto& d = atlas.data(mu);
    const auto& g = global[mu];
    for (std::size_t a = 0; a < d.weak.size(); ++a) {
      for (std::size_t b : d.leq.row(a)) leq.set(g[a], g[b]);
    }
  }
  for (const auto& mu : atlas.compositions()) {
    for (const auto& nu : atlas.compositions()) {
      if (!strictly_refines(nu, mu)) continue;
      const auto& dm = atlas.data(mu);
      const auto& dn = atlas.data(nu);
      const auto& gm = global[mu];
      const auto& gn = global[nu];
      const OrderMatrix down_nu = dn.leq.transposed();
      for (std::size_t p = 0; p < dm.weak.size(); ++p) {
        for (std::size_t gam = 0; gam < dn.weak.size(); ++gam) {
          if (!includes(dm.to_max[p], dn.to_max[gam])) continue;
          for (std::size_t r : down_nu.row(gam)) leq.set(gn[r], gm[p]);
        }
      }
    }
  }
  leq.make_reflexive();
  leq.close_transitively();
  if (!leq.is_antisymmetric()) {
    throw InvalidArgument("closure order for n=" + std::to_string(n) + " is not antisymmetric");
  }
  return BruhatPoset(std::move(elements), std::move(leq));
}

BruhatPoset full_poset(int n, int bound) {
  if (n > bound) {
    throw InvalidArgument("full poset for n=" + std::to_string(n) + " exceeds the bound " +
                          std::to_string(bound));
  }
  OrbitAtlas atlas(n);
  return full_poset(atlas, bound);
}

std::set<MuInvolution> covers_by_theorem(const MuInvolution& pi, const OrbitAtlas& atlas) {
  std::set<MuInvolution> out;
  const int n = pi.n();
  const auto& mu = pi.mu();
  const auto& d = atlas.data(mu);
  const auto& weak = d.weak;
  const std::size_t p = weak.index_of(pi);

  // Refinement covers: nu has exactly one root fewer and W(gamma) sits in W(pi).
  const auto i_mu = subset_of(mu);
  for (const auto& nu : atlas.compositions()) {
    const auto i_nu = subset_of(nu);
    if (!i_nu.is_subset_of(i_mu) || i_nu.size() + 1 != i_mu.size()) continue;
    const auto& dn = atlas.data(nu);
    for (std::size_t g = 0; g < dn.weak.size(); ++g) {
      if (includes(d.to_max[p], dn.to_max[g])) out.insert(dn.weak.element(g));
    }
  }

  // Same composition: translate pi down by a length-exact star, take a
  // star preimage, and translate back up by the dot action.
  for (const auto& varpi : all_permutations(n)) {
    const auto word = reduced_word(varpi);
    const int lw = static_cast<int>(word.size());
    std::optional<std::size_t> top = p;
    for (auto s : word) {
      top = weak.star(s.index, *top);
      if (!top) break;
    }
    if (!top) continue;
    if (weak.mu_length(*top) - weak.mu_length(p) != lw) continue;
    for (int i = 1; i < n; ++i) {
      auto below = weak.star(i, *top);
      if (!below) continue;
      // (c): s W^{-1}(below) meets W^{-1}(top).
      const auto s = Permutation::simple(i, n);
      bool meets = false;
      for (const auto& w : d.from_min[*below]) {
        if (d.from_min[*top].count(s * w)) {
          meets = true;
          break;
        }
      }
      if (!meets) continue;
      std::size_t r = *below;
      for (auto it = word.rbegin(); it != word.rend(); ++it) r = weak.act(it->index, r);
      if (weak.mu_length(*below) - weak.mu_length(r) == lw) out.insert(weak.element(r));
    }
  }
  return out;
}

std::set<MuInvolution> covers_by_theorem(const MuInvolution& pi) {
  OrbitAtlas atlas(pi.n());
  return covers_by_theorem(pi, atlas);
}

BruhatPoset reverse_bruhat_poset(const Composition& mu) {
  const WeakOrderPoset weak(mu);
  const std::size_t size = weak.size();
  const int n = weak.n();
  // rel.test(a, b): a sits below b in the closure order, so b <=_r a.
  OrderMatrix rel(size);
  for (const auto& c : weak.covers()) rel.set(c.lower, c.upper);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b : rel.row(a)) {
        for (int i = 1; i < n; ++i) {
          auto pa = weak.star(i, a);
          auto pb = weak.star(i, b);
          if (pa && pb && !rel.test(*pa, *pb)) {
            rel.set(*pa, *pb);
            changed = true;
          }
        }
      }
    }
  }
  rel.make_reflexive();
  rel.close_transitively();
  return BruhatPoset(weak.elements(), rel.transposed());
}

BruhatPoset induced_order(const Composition& mu) {
  auto elements = enumerate_mu_involutions(mu);
  std::vector<Permutation> words;
  for (const auto& e : elements) words.push_back(e.as_permutation());
  OrderMatrix leq(elements.size());
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (sn_bruhat_leq(words[a], words[b])) leq.set(a, b);
    }
  }
  return BruhatPoset(std::move(elements), std::move(leq));
}

CorW1Result cor_w1_verify(const MuInvolution& lower, const MuInvolution& upper) {
  if (lower.mu() != upper.mu()) throw InvalidArgument("cor_w1_verify needs one composition");
  const int n = lower.n();
  const WeakOrderPoset weak(lower.mu());
  const auto from_min = rev_wsets(weak);
  const WSet& source = from_min[weak.index_of(lower)];
  const WSet& target = from_min[weak.index_of(upper)];
  const auto group = all_permutations(n);

  CorW1Result result;
  result.holds_for_every = !source.empty();
  for (const auto& varpi : source) {
    CorW1Entry entry{varpi, std::nullopt};
    const int lv = length(varpi);
    for (const auto& w1 : group) {
      const auto w2 = w1.inverse() * varpi;
      if (length(w1) + length(w2) != lv) continue;
      for (int i = 1; i < n && !entry.factor; ++i) {
        const auto s = Permutation::simple(i, n);
        if (target.count(w1 * s * w2)) {
          entry.factor = CorW1Factor{w1, SimpleReflection{i}, w2, w1 * s * w1.inverse()};
        }
      }
      if (entry.factor) break;
    }
    result.holds |= entry.factor.has_value();
    result.holds_for_every &= entry.factor.has_value();
    result.entries.push_back(std::move(entry));
  }
  return result;
}

GradedCheck is_graded(const BruhatPoset& poset) {
  const auto report = poset.graded();
  GradedCheck out;
  out.graded = report.graded;
  if (report.witness) {
    out.witness = std::make_pair(poset.element(report.witness->first), poset.element(report.witness->second));
  }
  return out;
}

}  // namespace quadrics
