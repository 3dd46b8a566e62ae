#pragma once

// Torus weights on the tangent spaces at torus-fixed points.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quadrics/degenerate.hpp"

namespace quadrics {

/// Integer vector in the e_i basis with zero coordinate sum.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs);

  static Weight zero(int n);
  /// e_i - e_j.
  static Weight root(int i, int j, int n);
  /// alpha_i = e_i - e_{i+1}.
  static Weight simple_root(int i, int n);

  int n() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<int>& coeffs() const { return coeffs_; }
  /// Coefficients on alpha_1..alpha_{n-1}.
  std::vector<int> simple_root_coefficients() const;
  /// e_i - e_j for some i != j.
  bool is_root() const;
  /// Negative of a positive root e_i - e_j, i < j, i.e. a root e_j - e_i.
  bool is_negative_root() const;
  /// (i, j) with this = e_i - e_j; requires is_root().
  std::pair<int, int> root_ends() const;

  /// Action of S_n: e_i -> e_{w(i)}.
  Weight permuted(const Permutation& w) const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coeffs_;
};

struct TangentData {
  std::vector<Weight> horizontal;
  std::vector<Weight> vertical;
  std::vector<Weight> normal;

  std::size_t dimension() const { return horizontal.size() + vertical.size() + normal.size(); }
};

enum class WeightKind { horizontal, vertical, normal };

/// I(mu(gamma)).
RootSubset i_of(const BarredPermutation& gamma);

/// Block alphabets are the consecutive intervals cut out by mu.
bool is_special(const BarredPermutation& gamma);

/// The special barred permutation of a special composition, e.g. [21|3].
BarredPermutation special_element(const Composition& mu);

/// Weights at a special fixed point; throws when gamma is not special.
TangentData tangent_weights(const BarredPermutation& gamma);

struct SpecialReduction {
  BarredPermutation special;
  /// Minimal coset representative with weyl_act(w, special) = gamma.
  Permutation w;
};

SpecialReduction reduce_to_special(const BarredPermutation& gamma);

/// Weights at any fixed point, translated from its special representative.
TangentData translated_tangent_weights(const BarredPermutation& gamma);

/// Which part of the tangent space at a special gamma contains delta
/// (either sign counts for horizontal weights).
std::optional<WeightKind> classify(const BarredPermutation& gamma, const Weight& delta);

/// Raised for the normal-direction endpoint question, which has no known answer.
class UnsupportedOpenProblem : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Fixed points other than gamma on the invariant curves (or fibre) along delta.
std::set<BarredPermutation> curve_other_fixed_points(const BarredPermutation& gamma,
                                                     const Weight& delta);

}  // namespace quadrics
