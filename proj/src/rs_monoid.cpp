#include "quadrics/rs_monoid.hpp"

#include <algorithm>

namespace quadrics {

namespace {

// Involution action of the block generator swapping positions k, k+1 of the
// sorted alphabet, on a standardized involution p.
std::vector<int> act_on_involution(int k, const std::vector<int>& p) {
  const std::size_t m = p.size();
  auto s = [k](int x) { return x == k ? k + 1 : (x == k + 1 ? k : x); };
  auto len = [](const std::vector<int>& w) { return length(Permutation(w)); };
  // (s p s)(x) = s(p(s(x)))
  std::vector<int> sps(m), sp(m);
  for (std::size_t x = 1; x <= m; ++x) {
    sps[x - 1] = s(p[static_cast<std::size_t>(s(static_cast<int>(x))) - 1]);
    sp[x - 1] = s(p[x - 1]);
  }
  const int lp = len(p);
  if (len(sps) == lp - 2) return sps;
  if (sps == p && len(sp) == lp - 1) return sp;
  return p;
}

std::vector<int> positions_in_block(const std::vector<int>& block, const std::vector<int>& alpha) {
  std::vector<int> std_word(block.size());
  for (std::size_t k = 0; k < block.size(); ++k) {
    std_word[k] = static_cast<int>(std::lower_bound(alpha.begin(), alpha.end(), block[k]) - alpha.begin()) + 1;
  }
  return std_word;
}

void check_generator(SimpleReflection s, int n) { (void)SimpleReflection::checked(s.index, n); }

}  // namespace

MuInvolution act_simple(SimpleReflection s, const MuInvolution& pi) {
  check_generator(s, pi.n());
  const int i = s.index;
  const auto& word = pi.word();
  const auto pos_i = static_cast<std::size_t>(std::find(word.begin(), word.end(), i) - word.begin());
  const auto pos_j = static_cast<std::size_t>(std::find(word.begin(), word.end(), i + 1) - word.begin());
  const std::size_t bi = pi.block_of(i);
  const std::size_t bj = pi.block_of(i + 1);
  std::vector<int> out = word;
  if (bi == bj) {
    const auto alpha = pi.block_alphabet(bi);
    const auto block = pi.block_word(bi);
    const int k = static_cast<int>(std::lower_bound(alpha.begin(), alpha.end(), i) - alpha.begin()) + 1;
    const auto q = act_on_involution(k, positions_in_block(block, alpha));
    const auto off = static_cast<std::size_t>(pi.mu().offset(bi));
    for (std::size_t t = 0; t < q.size(); ++t) out[off + t] = alpha[static_cast<std::size_t>(q[t] - 1)];
  } else if (pos_j < pos_i) {
    std::swap(out[pos_i], out[pos_j]);
  }
  return MuInvolution(pi.mu(), std::move(out));
}

MuInvolution act_letters(std::span<const SimpleReflection> word, const MuInvolution& pi) {
  MuInvolution cur = pi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_simple(*it, cur);
  return cur;
}

MuInvolution act_word(const Permutation& w, const MuInvolution& pi) {
  if (w.size() != pi.n()) throw InvalidArgument("act_word: size mismatch");
  const auto word = reduced_word(w);
  return act_letters(word, pi);
}

std::vector<MuInvolution> star_preimages(SimpleReflection s, const MuInvolution& rho) {
  check_generator(s, rho.n());
  const int i = s.index;
  std::vector<std::vector<int>> candidates;
  const auto& word = rho.word();
  const std::size_t bi = rho.block_of(i);
  if (bi == rho.block_of(i + 1)) {
    // Candidates s rho s and s rho inside the block.
    const auto alpha = rho.block_alphabet(bi);
    const auto block = rho.block_word(bi);
    const int k = static_cast<int>(std::lower_bound(alpha.begin(), alpha.end(), i) - alpha.begin()) + 1;
    const auto p = positions_in_block(block, alpha);
    auto sw = [k](int x) { return x == k ? k + 1 : (x == k + 1 ? k : x); };
    std::vector<int> sps(p.size()), sp(p.size());
    for (std::size_t x = 1; x <= p.size(); ++x) {
      sps[x - 1] = sw(p[static_cast<std::size_t>(sw(static_cast<int>(x))) - 1]);
      sp[x - 1] = sw(p[x - 1]);
    }
    const auto off = static_cast<std::size_t>(rho.mu().offset(bi));
    for (const auto& q : {sps, sp}) {
      auto cand = word;
      for (std::size_t t = 0; t < q.size(); ++t) cand[off + t] = alpha[static_cast<std::size_t>(q[t] - 1)];
      candidates.push_back(std::move(cand));
    }
  } else {
    auto cand = word;
    auto a = std::find(cand.begin(), cand.end(), i);
    auto b = std::find(cand.begin(), cand.end(), i + 1);
    std::iter_swap(a, b);
    candidates.push_back(std::move(cand));
  }
  std::vector<MuInvolution> out;
  for (auto& c : candidates) {
    if (c == word) continue;
    MuInvolution pi;
    try {
      pi = MuInvolution(rho.mu(), c);
    } catch (const ValidationError&) {
      continue;
    }
    if (act_simple(s, pi) == rho &&
        std::find(out.begin(), out.end(), pi) == out.end()) {
      out.push_back(std::move(pi));
    }
  }
  return out;
}

MuInvolution star_act(SimpleReflection s, const MuInvolution& rho) {
  auto pre = star_preimages(s, rho);
  if (pre.empty()) return rho;
  if (pre.size() > 1) {
    throw InvalidArgument("star action is not single valued at " + rho.to_string());
  }
  return pre.front();
}

std::optional<MuInvolution> star_exact(const Permutation& w, const MuInvolution& pi) {
  MuInvolution cur = pi;
  for (auto s : reduced_word(w)) {
    auto pre = star_preimages(s, cur);
    if (pre.empty()) return std::nullopt;
    cur = pre.front();
  }
  return cur;
}

// ------------------------------------------------------------- weak order

WeakOrderPoset::WeakOrderPoset(const Composition& mu) : mu_(mu) {
  elements_ = enumerate_mu_involutions(mu);
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
  const int n = mu.n();
  lengths_.resize(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) lengths_[k] = quadrics::mu_length(elements_[k]);
  action_.assign(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<std::size_t>(elements_.size()));
  star_.assign(action_.size(), std::vector<std::optional<std::size_t>>(elements_.size()));
  for (int i = 1; i < n; ++i) {
    auto& row = action_[static_cast<std::size_t>(i - 1)];
    auto& srow = star_[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const std::size_t t = index_.at(act_simple(SimpleReflection{i}, elements_[k]));
      row[k] = t;
      if (t != k) {
        if (srow[t] && *srow[t] != k) {
          throw InvalidArgument("generator s_" + std::to_string(i) + " is not cancellative on " +
                                mu.to_string());
        }
        srow[t] = k;
        covers_.push_back(WeakCover{k, t, SimpleReflection{i}});
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
  bottom_up_.resize(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) bottom_up_[k] = k;
  std::stable_sort(bottom_up_.begin(), bottom_up_.end(),
                   [&](std::size_t a, std::size_t b) { return lengths_[a] > lengths_[b]; });
}

std::size_t WeakOrderPoset::index_of(const MuInvolution& pi) const {
  auto it = index_.find(pi);
  if (it == index_.end()) throw InvalidArgument(pi.to_string() + " is not an element of this order");
  return it->second;
}

std::optional<std::size_t> WeakOrderPoset::star(int i, std::size_t k) const {
  return star_[static_cast<std::size_t>(i - 1)][k];
}

Poset<MuInvolution> WeakOrderPoset::poset() const {
  OrderMatrix m(size());
  for (const auto& c : covers_) m.set(c.lower, c.upper);
  m.make_reflexive();
  m.close_transitively();
  return Poset<MuInvolution>(elements_, std::move(m));
}

WeakOrderPoset weak_order(const Composition& mu) { return WeakOrderPoset(mu); }

// ------------------------------------------------------------------ W-sets

WSetTable::WSetTable(const WeakOrderPoset& weak, std::size_t target) : weak_(weak), target_(target) {}

const WSet& WSetTable::from(std::size_t source) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(source);
    if (it != memo_.end()) return it->second;
  }
  const int n = weak_.n();
  WSet result;
  if (source == target_) {
    result.insert(Permutation::identity(n));
  } else {
    for (int i = 1; i < n; ++i) {
      const std::size_t next = weak_.act(i, source);
      if (next == source) continue;
      const auto s = Permutation::simple(i, n);
      for (const auto& w : from(next)) {
        auto ws = w * s;
        if (length(ws) == length(w) + 1) result.insert(std::move(ws));
      }
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(source, std::move(result)).first->second;
}

namespace {

void require_same_mu(const MuInvolution& a, const MuInvolution& b) {
  if (a.mu() != b.mu()) {
    throw InvalidArgument("W-set of " + a.to_string() + " and " + b.to_string() +
                          ": compositions differ");
  }
}

}  // namespace

WSet wset(const MuInvolution& pi, const MuInvolution& rho) {
  require_same_mu(pi, rho);
  const WeakOrderPoset weak(pi.mu());
  WSetTable table(weak, weak.index_of(rho));
  return table.from(weak.index_of(pi));
}

WSet wset_to_max(const MuInvolution& pi) { return wset(pi, MuInvolution::max(pi.mu())); }

WSet rev_wset(const MuInvolution& pi) { return wset(MuInvolution::min(pi.mu()), pi); }

std::vector<WSet> rev_wsets(const WeakOrderPoset& weak) {
  const int n = weak.n();
  std::vector<WSet> out(weak.size());
  out[weak.min_index()].insert(Permutation::identity(n));
  // Every generator step lowers L_mu by one, so decreasing L_mu is a
  // topological order for the left-multiplication recursion.
  for (std::size_t k : weak.bottom_up()) {
    for (int i = 1; i < n; ++i) {
      const std::size_t t = weak.act(i, k);
      if (t == k) continue;
      const auto s = Permutation::simple(i, n);
      for (const auto& w : out[k]) {
        auto sw = s * w;
        if (length(sw) == length(w) + 1) out[t].insert(std::move(sw));
      }
    }
  }
  return out;
}

std::vector<WSet> wsets_to_max(const WeakOrderPoset& weak) {
  WSetTable table(weak, weak.max_index());
  std::vector<WSet> out(weak.size());
  for (std::size_t k = 0; k < weak.size(); ++k) out[k] = table.from(k);
  return out;
}

}  // namespace quadrics
