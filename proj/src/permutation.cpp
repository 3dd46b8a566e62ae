#include "quadrics/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quadrics {

namespace {

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::size_t position_of(const std::vector<int>& alphabet, int letter) {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
  if (it == alphabet.end() || *it != letter) {
    throw InvalidArgument("letter " + std::to_string(letter) + " is not in the alphabet");
  }
  return static_cast<std::size_t>(it - alphabet.begin());
}

void collect_reduced_words(const Permutation& w, ReducedWord& suffix,
                           std::vector<ReducedWord>& out) {
  const auto& word = w.word();
  bool any = false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) {
      // w = (w s_{i+1}) s_{i+1} with the shorter prefix.
      any = true;
      auto shorter = word;
      std::swap(shorter[i], shorter[i + 1]);
      suffix.push_back(SimpleReflection{static_cast<int>(i) + 1});
      collect_reduced_words(Permutation(w.alphabet(), std::move(shorter)), suffix, out);
      suffix.pop_back();
    }
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  alphabet_ = word_;
  std::sort(alphabet_.begin(), alphabet_.end());
  if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
    throw InvalidArgument("repeated letter in permutation word");
  }
}

Permutation::Permutation(std::vector<int> alphabet, std::vector<int> word)
    : alphabet_(std::move(alphabet)), word_(std::move(word)) {
  if (alphabet_.size() != word_.size()) {
    throw InvalidArgument("alphabet and word differ in size");
  }
  if (std::adjacent_find(alphabet_.begin(), alphabet_.end(),
                         [](int a, int b) { return a >= b; }) != alphabet_.end()) {
    throw InvalidArgument("alphabet must be strictly increasing");
  }
  auto sorted = word_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != alphabet_) {
    throw InvalidArgument("word is not a bijection of its alphabet");
  }
}

Permutation Permutation::identity(int n) {
  auto a = iota_vector(n);
  return Permutation(a, a);
}

Permutation Permutation::identity_on(std::vector<int> alphabet) {
  auto w = alphabet;
  return Permutation(std::move(alphabet), std::move(w));
}

Permutation Permutation::longest(int n) {
  auto a = iota_vector(n);
  auto w = a;
  std::reverse(w.begin(), w.end());
  return Permutation(std::move(a), std::move(w));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) {
    throw InvalidArgument("simple reflection s_" + std::to_string(i) +
                          " out of range for n=" + std::to_string(n));
  }
  return transposition(i, i + 1, n);
}

Permutation Permutation::transposition(int a, int b, int n) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw InvalidArgument("bad transposition");
  }
  auto alpha = iota_vector(n);
  auto w = alpha;
  std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(alpha), std::move(w));
}

bool Permutation::on_standard_alphabet() const {
  for (std::size_t k = 0; k < alphabet_.size(); ++k) {
    if (alphabet_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

int Permutation::operator()(int letter) const {
  return word_[position_of(alphabet_, letter)];
}

Permutation Permutation::standardized() const {
  std::vector<int> w(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k) {
    w[k] = static_cast<int>(position_of(alphabet_, word_[k])) + 1;
  }
  return Permutation(iota_vector(size()), std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (std::size_t k = 0; k < word_.size(); ++k) {
    w[position_of(alphabet_, word_[k])] = alphabet_[k];
  }
  return Permutation(alphabet_, std::move(w));
}

bool Permutation::is_identity() const { return word_ == alphabet_; }

bool Permutation::is_involution() const {
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if ((*this)(word_[k]) != alphabet_[k]) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.alphabet_ != b.alphabet_) {
    throw InvalidArgument("composition of permutations on different alphabets");
  }
  std::vector<int> w(b.word_.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = a(b.word_[k]);
  return Permutation(a.alphabet_, std::move(w));
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int x : word_) c = (c << 4) | static_cast<std::uint64_t>(x);
  return c;
}

std::string Permutation::to_string() const {
  bool digits = std::all_of(word_.begin(), word_.end(), [](int x) { return x >= 0 && x <= 9; });
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (!digits && k > 0) os << ',';
    os << word_[k];
  }
  return os.str();
}

SimpleReflection SimpleReflection::checked(int index, int n) {
  if (index < 1 || index >= n) {
    throw InvalidArgument("simple reflection index " + std::to_string(index) +
                          " out of range 1.." + std::to_string(n - 1));
  }
  return SimpleReflection{index};
}

RootSubset::RootSubset(int n, std::set<int> indices) : n_(n), indices_(std::move(indices)) {
  for (int i : indices_) {
    if (i < 1 || i >= n_) {
      throw InvalidArgument("root index " + std::to_string(i) + " not in 1.." +
                            std::to_string(n_ - 1));
    }
  }
}

bool RootSubset::has_consecutive() const {
  for (int i : indices_) {
    if (contains(i + 1)) return true;
  }
  return false;
}

bool RootSubset::is_subset_of(const RootSubset& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

RootSubset RootSubset::complement() const {
  std::set<int> rest;
  for (int i = 1; i < n_; ++i) {
    if (!contains(i)) rest.insert(i);
  }
  return RootSubset(n_, std::move(rest));
}

int length(const Permutation& w) {
  const auto& x = w.word();
  int inv = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] > x[j]) ++inv;
    }
  }
  return inv;
}

int exceedance(const Permutation& w) {
  int exc = 0;
  for (std::size_t k = 0; k < w.word().size(); ++k) {
    if (w.word()[k] > w.alphabet()[k]) ++exc;
  }
  return exc;
}

bool sn_bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.alphabet() != v.alphabet()) {
    throw InvalidArgument("Bruhat comparison across different alphabets");
  }
  // u <= v iff for all i, q: #{k <= i : u_k >= q} <= #{k <= i : v_k >= q},
  // computed on standardized words.
  const auto su = u.standardized().word();
  const auto sv = v.standardized().word();
  const int n = static_cast<int>(su.size());
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> cv(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 0; i < n; ++i) {
    for (int q = 1; q <= su[static_cast<std::size_t>(i)]; ++q) ++cu[static_cast<std::size_t>(q)];
    for (int q = 1; q <= sv[static_cast<std::size_t>(i)]; ++q) ++cv[static_cast<std::size_t>(q)];
    for (int q = 1; q <= n; ++q) {
      if (cu[static_cast<std::size_t>(q)] > cv[static_cast<std::size_t>(q)]) return false;
    }
  }
  return true;
}

std::vector<ReducedWord> reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_reduced_words(w.standardized(), suffix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReducedWord reduced_word(const Permutation& w) {
  // Peel the leftmost right descent until nothing is left; the letters come
  // off the right end of the word.
  ReducedWord word;
  auto x = w.standardized().word();
  while (true) {
    std::size_t i = 0;
    while (i + 1 < x.size() && x[i] < x[i + 1]) ++i;
    if (i + 1 >= x.size()) break;
    std::swap(x[i], x[i + 1]);
    word.push_back(SimpleReflection{static_cast<int>(i) + 1});
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation product(std::span<const SimpleReflection> word, int n) {
  auto w = Permutation::identity(n);
  for (auto s : word) w = w * s.as_permutation(n);
  return w;
}

Permutation longest_parabolic_element(const RootSubset& subset) {
  const int n = subset.n();
  auto w = iota_vector(n);
  int i = 1;
  while (i < n) {
    if (!subset.contains(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (subset.contains(j)) ++j;
    // The run s_i..s_{j-1} generates the symmetric group on positions i..j.
    std::reverse(w.begin() + (i - 1), w.begin() + j);
    i = j;
  }
  return Permutation(iota_vector(n), std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto w = iota_vector(n);
  const auto alpha = w;
  do {
    out.emplace_back(alpha, w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace quadrics
