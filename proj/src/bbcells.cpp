#include "quadrics/bbcells.hpp"

#include <algorithm>
#include <map>

namespace quadrics {

namespace {

// Cycles of one block as (small, large) pairs; fixed points are (c, c).
std::vector<std::pair<int, int>> block_cycles(const MuInvolution& pi, std::size_t j) {
  const auto perm = pi.block(j);
  std::vector<std::pair<int, int>> out;
  for (int a : perm.alphabet()) {
    const int b = perm(a);
    if (a <= b) out.emplace_back(a, b);
  }
  return out;
}

BarredPermutation assemble(const std::vector<std::pair<int, int>>& cycles) {
  std::vector<int> parts, word;
  for (auto [a, b] : cycles) {
    if (a == b) {
      parts.push_back(1);
      word.push_back(a);
    } else {
      parts.push_back(2);
      word.push_back(std::max(a, b));
      word.push_back(std::min(a, b));
    }
  }
  return BarredPermutation(MuInvolution(Composition(std::move(parts)), std::move(word)));
}

int triangular(int m) { return m * (m + 1) / 2; }

}  // namespace

// ------------------------------------------------------ admissible weights

AdmissibleSequence::AdmissibleSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (!is_admissible(values_)) throw InvalidArgument("sequence is not admissible");
}

AdmissibleSequence default_admissible(int n) {
  if (n < 1 || n > 60) throw InvalidArgument("default_admissible needs 1 <= n <= 60");
  std::vector<std::int64_t> a;
  const std::int64_t top = std::int64_t{1} << n;
  for (int i = 0; i < n; ++i) a.push_back(n + (std::int64_t{1} << i) - top);
  return AdmissibleSequence(std::move(a));
}

bool is_admissible(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i] >= a[i + 1]) return false;
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t k = 0; k < l; ++k) {
          if (a[i] + a[j] >= a[k] + a[l]) return false;
        }
        // (d) with l in the role of the largest index.
        if (2 * a[i] >= a[j] + a[l]) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------ tau / sigma

BarredPermutation tau(const MuInvolution& pi) {
  std::vector<std::pair<int, int>> all;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    auto cyc = block_cycles(pi, j);
    std::sort(cyc.begin(), cyc.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    all.insert(all.end(), cyc.begin(), cyc.end());
  }
  return assemble(all);
}

BarredPermutation flow_oracle(const MuInvolution& pi, const AdmissibleSequence& a) {
  if (static_cast<int>(a.size()) != pi.n()) throw InvalidArgument("weight sequence has the wrong length");
  std::vector<std::pair<int, int>> all;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    std::vector<std::pair<std::int64_t, std::pair<int, int>>> keyed;
    for (auto c : block_cycles(pi, j)) keyed.emplace_back(a[c.first] + a[c.second], c);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 0; k + 1 < keyed.size(); ++k) {
      if (keyed[k].first == keyed[k + 1].first) {
        throw FlowTie("tied cycle weights in block " + std::to_string(j + 1) + " of " + pi.to_string());
      }
    }
    for (const auto& kc : keyed) all.push_back(kc.second);
  }
  return assemble(all);
}

std::vector<int> d_sequence(const BarredPermutation& gamma) {
  std::vector<int> d;
  const auto& pi = gamma.underlying();
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    auto b = pi.block_word(j);
    d.push_back(*std::max_element(b.begin(), b.end()));
  }
  return d;
}

std::vector<int> ascents(const BarredPermutation& gamma) {
  const auto d = d_sequence(gamma);
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    if (d[j] < d[j + 1]) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

std::vector<int> descents(const BarredPermutation& gamma) {
  const auto d = d_sequence(gamma);
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    if (d[j] > d[j + 1]) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

MuInvolution sigma(const BarredPermutation& gamma) {
  const auto& pi = gamma.underlying();
  const auto d = d_sequence(gamma);
  std::vector<int> parts, word;
  std::map<int, int> group;  // letter -> image inside the current merged block
  auto flush = [&] {
    parts.push_back(static_cast<int>(group.size()));
    for (auto [x, y] : group) word.push_back(y);
    group.clear();
  };
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    if (j > 0 && d[j - 1] > d[j]) flush();
    auto b = pi.block_word(j);
    if (b.size() == 1) {
      group[b[0]] = b[0];
    } else {
      group[b[0]] = b[1];
      group[b[1]] = b[0];
    }
  }
  if (!group.empty()) flush();
  return MuInvolution(Composition(std::move(parts)), std::move(word));
}

BarredPermutation weyl_act(const Permutation& w, const BarredPermutation& gamma) {
  if (w.size() != gamma.n()) throw InvalidArgument("weyl_act: size mismatch");
  const auto& mu = gamma.mu();
  auto word = gamma.word();
  for (int& x : word) x = w(x);
  std::size_t pos = 0;
  for (int part : mu.parts()) {
    if (part == 2 && word[pos] < word[pos + 1]) std::swap(word[pos], word[pos + 1]);
    pos += static_cast<std::size_t>(part);
  }
  return BarredPermutation(MuInvolution(mu, std::move(word)));
}

BarredPermutation subdivide(int j, int i, const BarredPermutation& gamma) {
  if (!(i < j)) throw InvalidArgument("subdivide needs i < j");
  const auto& pi = gamma.underlying();
  std::vector<int> parts;
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    auto w = pi.block_word(b);
    if (w.size() == 2 && w[0] == j && w[1] == i) {
      parts.push_back(1);
      parts.push_back(1);
    } else {
      parts.push_back(static_cast<int>(w.size()));
    }
  }
  return BarredPermutation(MuInvolution(Composition(std::move(parts)), gamma.word()));
}

int cell_dimension(const BarredPermutation& gamma) {
  const int n = gamma.n();
  const int inv = gamma.mu().count_parts_equal(2);
  const int asc = static_cast<int>(ascents(gamma).size());
  return n * (n - 1) / 2 - length(Permutation(gamma.word())) + inv + asc;
}

int orbit_dimension(const MuInvolution& pi) {
  const int n = pi.n();
  int flag_part = n * (n - 1) / 2;
  int fiber_part = 0;
  for (int m : pi.mu().parts()) {
    flag_part -= m * (m - 1) / 2;
    fiber_part += triangular(m) - 1;
  }
  return flag_part + fiber_part - mu_length(pi);
}

// ------------------------------------------------------------------ cells

std::vector<CellRecord> cells(int n) {
  std::map<BarredPermutation, std::vector<MuInvolution>> groups;
  for (auto& pi : enumerate_degenerate(n)) groups[tau(pi)].push_back(std::move(pi));
  std::vector<CellRecord> out;
  for (auto& [gamma, members] : groups) {
    CellRecord rec{gamma, std::move(members), sigma(gamma), 0};
    rec.dimension = orbit_dimension(rec.dense);
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct CellIndex {
  std::vector<BarredPermutation> keys;
  std::vector<std::vector<std::size_t>> members;  // positions in the full poset
  std::vector<std::vector<bool>> closure;         // orbits below some member
};

CellIndex index_cells(const BruhatPoset& full) {
  std::map<BarredPermutation, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < full.size(); ++k) groups[tau(full.element(k))].push_back(k);
  CellIndex idx;
  const OrderMatrix down = full.matrix().transposed();
  for (auto& [gamma, mem] : groups) {
    std::vector<bool> clos(full.size(), false);
    for (std::size_t m : mem) {
      for (std::size_t r : down.row(m)) clos[r] = true;
    }
    idx.keys.push_back(gamma);
    idx.members.push_back(mem);
    idx.closure.push_back(std::move(clos));
  }
  return idx;
}

}  // namespace

Poset<BarredPermutation> bb_order(const BruhatPoset& full) {
  const auto idx = index_cells(full);
  const std::size_t k = idx.keys.size();
  OrderMatrix leq(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const bool below = std::all_of(idx.members[a].begin(), idx.members[a].end(),
                                     [&](std::size_t r) { return idx.closure[b][r]; });
      if (below) leq.set(a, b);
    }
  }
  if (!leq.is_partial_order()) throw InvalidArgument("cell order is not a partial order");
  return Poset<BarredPermutation>(idx.keys, std::move(leq));
}

Poset<BarredPermutation> bb_order(int n) { return bb_order(full_poset(n)); }

std::vector<StratificationWitness> stratification_witnesses(const BruhatPoset& full) {
  const auto idx = index_cells(full);
  std::vector<StratificationWitness> out;
  for (std::size_t a = 0; a < idx.keys.size(); ++a) {
    for (std::size_t b = 0; b < idx.keys.size(); ++b) {
      if (a == b) continue;
      StratificationWitness w{idx.keys[a], idx.keys[b], {}, {}};
      for (std::size_t m : idx.members[b]) {
        (idx.closure[a][m] ? w.intersection : w.missing).push_back(full.element(m));
      }
      if (!w.intersection.empty() && !w.missing.empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

std::optional<StratificationWitness> stratification_witness(int n) {
  auto all = stratification_witnesses(full_poset(n));
  if (all.empty()) return std::nullopt;
  return all.front();
}

ConjectureReport bcell_conjecture_check(const BruhatPoset& full, std::optional<Composition> mu) {
  ConjectureReport report;
  report.n = full.size() ? full.element(0).n() : 0;
  report.mu = mu;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < full.size(); ++k) {
    const auto& pi = full.element(k);
    if (mu && pi.mu() != *mu) continue;
    if (sigma(tau(pi)) == pi) keep.push_back(k);
  }
  report.poset = full.restrict_to(keep);
  const auto g = is_graded(report.poset);
  report.graded = g.graded;
  report.witness = g.witness;
  report.has_max = report.poset.maximal().size() == 1;
  report.has_min = report.poset.minimal().size() == 1;
  return report;
}

ConjectureReport bcell_conjecture_check(int n, std::optional<Composition> mu) {
  return bcell_conjecture_check(full_poset(n), std::move(mu));
}

}  // namespace quadrics
