#include "quadrics/gkm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "quadrics/bbcells.hpp"

namespace quadrics {

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::accumulate(coeffs_.begin(), coeffs_.end(), 0) != 0) {
    throw InvalidArgument("weight coordinates must sum to zero");
  }
}

Weight Weight::zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Weight Weight::root(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw InvalidArgument("bad root indices");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  c[static_cast<std::size_t>(j - 1)] = -1;
  return Weight(std::move(c));
}

Weight Weight::simple_root(int i, int n) { return root(i, i + 1, n); }

std::vector<int> Weight::simple_root_coefficients() const {
  std::vector<int> out;
  int run = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    run += coeffs_[k];
    out.push_back(run);
  }
  return out;
}

bool Weight::is_root() const {
  int plus = 0, minus = 0;
  for (int c : coeffs_) {
    if (c == 1) {
      ++plus;
    } else if (c == -1) {
      ++minus;
    } else if (c != 0) {
      return false;
    }
  }
  return plus == 1 && minus == 1;
}

std::pair<int, int> Weight::root_ends() const {
  if (!is_root()) throw InvalidArgument(to_string() + " is not a root");
  int i = 0, j = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 1) i = static_cast<int>(k) + 1;
    if (coeffs_[k] == -1) j = static_cast<int>(k) + 1;
  }
  return {i, j};
}

bool Weight::is_negative_root() const {
  if (!is_root()) return false;
  auto [i, j] = root_ends();
  return i > j;
}

Weight Weight::permuted(const Permutation& w) const {
  if (w.size() != n()) throw InvalidArgument("permutation and weight differ in size");
  std::vector<int> c(coeffs_.size(), 0);
  for (int i = 1; i <= n(); ++i) c[static_cast<std::size_t>(w(i) - 1)] = coeffs_[static_cast<std::size_t>(i - 1)];
  return Weight(std::move(c));
}

Weight Weight::operator-() const {
  auto c = coeffs_;
  for (int& x : c) x = -x;
  return Weight(std::move(c));
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.n() != b.n()) throw InvalidArgument("weights of different rank");
  auto c = a.coeffs_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs_[k];
  return Weight(std::move(c));
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

std::string Weight::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const int c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    if (std::abs(c) != 1) os << std::abs(c);
    os << "e" << k + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

RootSubset i_of(const BarredPermutation& gamma) { return subset_of(gamma.mu()); }

bool is_special(const BarredPermutation& gamma) {
  const auto& pi = gamma.underlying();
  int next = 1;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    for (int x : pi.block_alphabet(j)) {
      if (x != next++) return false;
    }
  }
  return true;
}

BarredPermutation special_element(const Composition& mu) {
  if (!mu.is_special()) throw InvalidArgument(mu.to_string() + " is not special");
  std::vector<int> word;
  int next = 1;
  for (int part : mu.parts()) {
    if (part == 2) {
      word.push_back(next + 1);
      word.push_back(next);
    } else {
      word.push_back(next);
    }
    next += part;
  }
  return BarredPermutation(MuInvolution(mu, std::move(word)));
}

TangentData tangent_weights(const BarredPermutation& gamma) {
  if (!is_special(gamma)) {
    throw InvalidArgument(gamma.to_string() + " is not special; translate it with reduce_to_special");
  }
  const int n = gamma.n();
  const auto subset = i_of(gamma);
  const auto w_i = longest_parabolic_element(subset);
  TangentData t;
  // Roots e_j - e_i (i < j) leaving the Levi factor, i.e. crossing a bar.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool same_block = true;
      for (int k = i; k < j; ++k) same_block &= subset.contains(k);
      if (!same_block) t.horizontal.push_back(Weight::root(j, i, n));
    }
  }
  for (int a : subset.indices()) {
    t.vertical.push_back(-Weight::simple_root(a, n));
    t.vertical.push_back(Weight::simple_root(a, n));
  }
  const auto outside = subset.complement();
  for (int a : outside.indices()) {
    const auto alpha = Weight::simple_root(a, n);
    t.normal.push_back(-(alpha + alpha.permuted(w_i)));
  }
  return t;
}

SpecialReduction reduce_to_special(const BarredPermutation& gamma) {
  const auto& pi = gamma.underlying();
  std::vector<int> w;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    auto alpha = pi.block_alphabet(j);
    w.insert(w.end(), alpha.begin(), alpha.end());
  }
  SpecialReduction r{special_element(gamma.mu()), Permutation(std::move(w))};
  return r;
}

TangentData translated_tangent_weights(const BarredPermutation& gamma) {
  const auto red = reduce_to_special(gamma);
  auto t = tangent_weights(red.special);
  for (auto* part : {&t.horizontal, &t.vertical, &t.normal}) {
    for (auto& wt : *part) wt = wt.permuted(red.w);
  }
  return t;
}

std::optional<WeightKind> classify(const BarredPermutation& gamma, const Weight& delta) {
  const auto t = tangent_weights(gamma);
  auto has = [](const std::vector<Weight>& v, const Weight& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  if (has(t.horizontal, delta) || has(t.horizontal, -delta)) return WeightKind::horizontal;
  if (has(t.vertical, delta)) return WeightKind::vertical;
  if (has(t.normal, delta)) return WeightKind::normal;
  return std::nullopt;
}

std::set<BarredPermutation> curve_other_fixed_points(const BarredPermutation& gamma, const Weight& delta) {
  const int n = gamma.n();
  const auto kind = classify(gamma, delta);
  if (!kind) {
    throw InvalidArgument(delta.to_string() + " is not a tangent weight at " + gamma.to_string());
  }
  switch (*kind) {
    case WeightKind::horizontal: {
      auto [i, j] = delta.root_ends();
      return {weyl_act(Permutation::transposition(i, j, n), gamma)};
    }
    case WeightKind::vertical: {
      auto [i, j] = delta.root_ends();
      const int lo = std::min(i, j);
      const auto split = subdivide(lo + 1, lo, gamma);
      return {split, weyl_act(Permutation::simple(lo, n), split)};
    }
    case WeightKind::normal:
      break;
  }
  throw UnsupportedOpenProblem("unsupported open problem: no description of the other fixed point along the normal weight " +
                               delta.to_string());
}

}  // namespace quadrics
