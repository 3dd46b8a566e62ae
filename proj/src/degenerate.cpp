#include "quadrics/degenerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quadrics {

namespace {

void check_bound(int n, int bound) {
  if (n > bound) {
    throw InvalidArgument("n=" + std::to_string(n) + " exceeds the enumeration bound " +
                          std::to_string(bound));
  }
}

std::string join_letters(const std::vector<int>& letters, bool digits) {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (!digits && k > 0) os << ',';
    os << letters[k];
  }
  return os.str();
}

// Involutions of {1..m} as one-line words.
std::vector<std::vector<int>> standard_involutions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int first_free) -> void {
    while (first_free <= m && w[static_cast<std::size_t>(first_free - 1)] != 0) ++first_free;
    if (first_free > m) {
      out.push_back(w);
      return;
    }
    auto a = static_cast<std::size_t>(first_free - 1);
    w[a] = first_free;
    self(self, first_free + 1);
    for (int b = first_free + 1; b <= m; ++b) {
      auto bb = static_cast<std::size_t>(b - 1);
      if (w[bb] != 0) continue;
      w[a] = b;
      w[bb] = first_free;
      self(self, first_free + 1);
      w[bb] = 0;
    }
    w[a] = 0;
  };
  rec(rec, 1);
  return out;
}

void enumerate_into(const Composition& mu, std::vector<MuInvolution>& out) {
  const int n = mu.n();
  std::vector<std::vector<std::vector<int>>> invs(static_cast<std::size_t>(n) + 1);
  for (int part : mu.parts()) {
    if (invs[static_cast<std::size_t>(part)].empty()) {
      invs[static_cast<std::size_t>(part)] = standard_involutions(part);
    }
  }
  std::vector<int> word;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  auto place_block = [&](auto&& self, std::size_t j) -> void {
    if (j == mu.size()) {
      out.emplace_back(mu, word);
      return;
    }
    const int m = mu[j];
    std::vector<int> free;
    for (int x = 1; x <= n; ++x) {
      if (!used[static_cast<std::size_t>(x)]) free.push_back(x);
    }
    // Choose the block alphabet as an m-subset of the free letters.
    std::vector<bool> pick(free.size(), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
      std::vector<int> alpha;
      for (std::size_t k = 0; k < free.size(); ++k) {
        if (pick[k]) alpha.push_back(free[k]);
      }
      for (int x : alpha) used[static_cast<std::size_t>(x)] = true;
      for (const auto& inv : invs[static_cast<std::size_t>(m)]) {
        for (int k = 0; k < m; ++k) {
          word.push_back(alpha[static_cast<std::size_t>(inv[static_cast<std::size_t>(k)] - 1)]);
        }
        self(self, j + 1);
        word.resize(word.size() - static_cast<std::size_t>(m));
      }
      for (int x : alpha) used[static_cast<std::size_t>(x)] = false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  place_block(place_block, 0);
}

}  // namespace

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Composition> Composition::all(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) return {Composition(std::vector<int>{})};
  // Bit k of mask set means a cut after position k+1.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1u << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition Composition::from_subset(const RootSubset& subset) {
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < subset.n(); ++i) {
    if (subset.contains(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

int Composition::offset(std::size_t j) const {
  return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(j), 0);
}

bool Composition::is_special() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 2; });
}

int Composition::count_parts_equal(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j > 0) os << ',';
    os << parts_[j];
  }
  os << ')';
  return os.str();
}

RootSubset subset_of(const Composition& mu) {
  std::set<int> idx;
  for (int i = 1; i < mu.n(); ++i) idx.insert(i);
  int sum = 0;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
    sum += mu[j];
    idx.erase(sum);
  }
  return RootSubset(mu.n(), std::move(idx));
}

bool refinement_leq(const Composition& mu, const Composition& nu) {
  if (mu.n() != nu.n()) {
    throw InvalidArgument("refinement comparison of compositions of different n");
  }
  return subset_of(mu).is_subset_of(subset_of(nu));
}

// --------------------------------------------------------------- MuInvolution

MuInvolution::MuInvolution(Composition mu, std::vector<int> word)
    : mu_(std::move(mu)), word_(std::move(word)) {
  const int n = mu_.n();
  if (static_cast<int>(word_.size()) != n) {
    throw ValidationError("word has " + std::to_string(word_.size()) +
                              " letters but the composition sums to " + std::to_string(n),
                          -1);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw ValidationError("word is not a permutation of 1.." + std::to_string(n), -1);
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t j = 0; j < mu_.size(); ++j) {
    if (!block(j).is_involution()) {
      throw ValidationError("block " + std::to_string(j + 1) + " (" +
                                join_letters(block_word(j), n <= 9) +
                                ") is not an involution of its alphabet",
                            static_cast<int>(j));
    }
  }
}

MuInvolution MuInvolution::max(const Composition& mu) {
  std::vector<int> w(static_cast<std::size_t>(mu.n()));
  std::iota(w.begin(), w.end(), 1);
  return MuInvolution(mu, std::move(w));
}

MuInvolution MuInvolution::min(const Composition& mu) {
  std::vector<int> w(static_cast<std::size_t>(mu.n()));
  std::iota(w.rbegin(), w.rend(), 1);
  return MuInvolution(mu, std::move(w));
}

std::vector<int> MuInvolution::block_word(std::size_t j) const {
  auto start = word_.begin() + mu_.offset(j);
  return std::vector<int>(start, start + mu_[j]);
}

std::vector<int> MuInvolution::block_alphabet(std::size_t j) const {
  auto a = block_word(j);
  std::sort(a.begin(), a.end());
  return a;
}

Permutation MuInvolution::block(std::size_t j) const {
  return Permutation(block_alphabet(j), block_word(j));
}

std::vector<Permutation> MuInvolution::blocks() const {
  std::vector<Permutation> out;
  for (std::size_t j = 0; j < mu_.size(); ++j) out.push_back(block(j));
  return out;
}

std::size_t MuInvolution::block_of(int letter) const {
  auto it = std::find(word_.begin(), word_.end(), letter);
  if (it == word_.end()) throw InvalidArgument("letter not present");
  int pos = static_cast<int>(it - word_.begin());
  std::size_t j = 0;
  while (pos >= mu_[j]) {
    pos -= mu_[j];
    ++j;
  }
  return j;
}

Permutation MuInvolution::sorted_word() const {
  std::vector<int> w;
  for (std::size_t j = 0; j < mu_.size(); ++j) {
    auto a = block_alphabet(j);
    w.insert(w.end(), a.begin(), a.end());
  }
  return Permutation(std::move(w));
}

std::string MuInvolution::to_string() const {
  const bool digits = n() <= 9;
  std::string s = "[";
  for (std::size_t j = 0; j < mu_.size(); ++j) {
    if (j > 0) s += '|';
    s += join_letters(block_word(j), digits);
  }
  return s + "]";
}

MuInvolution validate_mu_involution(const std::vector<int>& word, const Composition& mu) {
  return MuInvolution(mu, word);
}

bool is_barred(const MuInvolution& pi) {
  if (!pi.mu().is_special()) return false;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    auto b = pi.block_word(j);
    if (b.size() == 2 && b[0] < b[1]) return false;
  }
  return true;
}

BarredPermutation::BarredPermutation(MuInvolution underlying) : pi_(std::move(underlying)) {
  if (!is_barred(pi_)) {
    throw InvalidArgument(pi_.to_string() + " is not a barred permutation");
  }
}

// --------------------------------------------------------------- quadrics

std::string DistinguishedQuadric::block_string(std::size_t j) const {
  std::ostringstream os;
  bool first = true;
  for (auto [a, b] : block_quadrics[j]) {
    if (!first) os << " + ";
    first = false;
    if (a == b) {
      os << "x_" << a << "^2";
    } else {
      os << "x_" << a << "x_" << b;
    }
  }
  return os.str();
}

std::string DistinguishedQuadric::flag_string() const {
  std::ostringstream os;
  os << "0";
  for (const auto& v : flag) {
    os << " < V_{";
    bool wide = !v.empty() && v.back() > 9;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (wide && k > 0) os << ',';
      os << v[k];
    }
    os << "}";
  }
  return os.str();
}

int inv_length(const Permutation& pi) {
  if (!pi.is_involution()) throw InvalidArgument("inv_length needs an involution");
  return (length(pi) + exceedance(pi)) / 2;
}

int mu_length(const MuInvolution& pi) {
  int total = length(pi.sorted_word());
  for (std::size_t j = 0; j < pi.block_count(); ++j) total += inv_length(pi.block(j));
  return total;
}

std::vector<MuInvolution> enumerate_mu_involutions(const Composition& mu, int bound) {
  check_bound(mu.n(), bound);
  std::vector<MuInvolution> out;
  enumerate_into(mu, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MuInvolution> enumerate_degenerate(int n, int bound) {
  check_bound(n, bound);
  std::vector<MuInvolution> out;
  for (const auto& mu : Composition::all(n)) enumerate_into(mu, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BarredPermutation> enumerate_barred_mu(const Composition& mu, int bound) {
  if (!mu.is_special()) {
    throw InvalidArgument("composition " + mu.to_string() + " is not special");
  }
  std::vector<BarredPermutation> out;
  for (auto& pi : enumerate_mu_involutions(mu, bound)) {
    if (is_barred(pi)) out.emplace_back(std::move(pi));
  }
  return out;
}

std::vector<BarredPermutation> enumerate_barred(int n, int bound) {
  check_bound(n, bound);
  std::vector<BarredPermutation> out;
  for (const auto& mu : Composition::all(n)) {
    if (!mu.is_special()) continue;
    auto part = enumerate_barred_mu(mu, bound);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BarredCount count_barred(int n) {
  if (n < 0) throw InvalidArgument("count_barred needs n >= 0");
  BarredCount c;
  // b_{m+1} = C(m+1, 2) b_{m-1} + (m+1) b_m
  BigInt prev = 1, cur = 1;
  for (int m = 1; m < n; ++m) {
    BigInt next = BigInt(m + 1) * m / 2 * prev + BigInt(m + 1) * cur;
    prev = cur;
    cur = next;
  }
  c.recurrence = cur;

  // b_n = n!/2^n * sum_i C(n+1, 2i+1) 3^i, evaluated exactly.
  BigInt sum = 0, binom = 1, pow3 = 1;  // binom = C(n+1, k)
  for (int k = 0; k <= n + 1; ++k) {
    if (k % 2 == 1) {
      sum += binom * pow3;
      pow3 *= 3;
    }
    binom = binom * (n + 1 - k) / (k + 1);
  }
  BigInt fact = 1;
  for (int m = 2; m <= n; ++m) fact *= m;
  c.closed_form = fact * sum / (BigInt(1) << n);
  return c;
}

DistinguishedQuadric quadric_of(const MuInvolution& pi) {
  DistinguishedQuadric q;
  std::vector<int> acc;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    auto perm = pi.block(j);
    const auto& alpha = perm.alphabet();
    acc.insert(acc.end(), alpha.begin(), alpha.end());
    std::sort(acc.begin(), acc.end());
    q.flag.push_back(acc);
    std::vector<std::pair<int, int>> cycles;
    for (int a : alpha) {
      int b = perm(a);
      if (a <= b) cycles.emplace_back(a, b);
    }
    q.block_quadrics.push_back(std::move(cycles));
  }
  return q;
}

MuInvolution from_quadric(const DistinguishedQuadric& q) {
  if (q.flag.size() != q.block_quadrics.size()) {
    throw InvalidArgument("flag and block quadrics differ in length");
  }
  std::vector<int> parts;
  std::vector<int> word;
  std::vector<int> prev;
  for (std::size_t j = 0; j < q.flag.size(); ++j) {
    std::vector<int> alpha;
    std::set_difference(q.flag[j].begin(), q.flag[j].end(), prev.begin(), prev.end(),
                        std::back_inserter(alpha));
    if (alpha.size() + prev.size() != q.flag[j].size() || alpha.empty()) {
      throw InvalidArgument("flag is not strictly increasing");
    }
    std::vector<int> image(alpha.size(), 0);
    auto pos = [&](int x) {
      auto it = std::lower_bound(alpha.begin(), alpha.end(), x);
      if (it == alpha.end() || *it != x) throw InvalidArgument("cycle letter outside its block");
      return static_cast<std::size_t>(it - alpha.begin());
    };
    for (auto [a, b] : q.block_quadrics[j]) {
      if (image[pos(a)] != 0 || image[pos(b)] != 0) throw InvalidArgument("cycles overlap");
      image[pos(a)] = b;
      image[pos(b)] = a;
    }
    if (std::find(image.begin(), image.end(), 0) != image.end()) {
      throw InvalidArgument("cycles do not cover the block");
    }
    parts.push_back(static_cast<int>(alpha.size()));
    word.insert(word.end(), image.begin(), image.end());
    prev = q.flag[j];
  }
  return MuInvolution(Composition(std::move(parts)), std::move(word));
}

}  // namespace quadrics
