#pragma once

// Bialynicki-Birula cells of the complete-quadrics variety: the flow map tau
// to torus fixed points, its section sigma, the Weyl action on barred
// permutations, dimensions, the cell order and the B_Cell conjecture check.

#include <cstdint>
#include <optional>
#include <vector>

#include "quadrics/bruhat.hpp"
#include "quadrics/degenerate.hpp"
#include "quadrics/poset.hpp"

namespace quadrics {

/// Strictly increasing integer weights whose pairwise sums never tie in the
/// ways that matter for the flow (see is_admissible).
class AdmissibleSequence {
 public:
  /// Throws unless is_admissible(values).
  explicit AdmissibleSequence(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  /// a_i, 1-based.
  std::int64_t operator[](int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

 private:
  std::vector<std::int64_t> values_;
};

/// a_i = n + 2^i - 2^n for i = 0..n-1.
AdmissibleSequence default_admissible(int n);

/// Strictly increasing; a_i + a_j < a_k + a_l whenever i, j, k < l;
/// 2 a_i < a_j + a_k whenever i, j < k. Indices may repeat. The sum is not
/// required to vanish.
bool is_admissible(const std::vector<std::int64_t>& a);

/// Raised by flow_oracle when two cycle weights coincide.
class FlowTie : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Limit fixed point: each block splits into its cycles, ordered by their
/// largest letter; 2-cycles are written descending.
BarredPermutation tau(const MuInvolution& pi);

/// Same limit, ordering cycles by the weight a_i + a_j (2 a_c for a fixed
/// point) of the one-parameter subgroup given by `a`.
BarredPermutation flow_oracle(const MuInvolution& pi, const AdmissibleSequence& a);

/// Largest letter of each block.
std::vector<int> d_sequence(const BarredPermutation& gamma);
/// 1-based j with d_j < d_{j+1}.
std::vector<int> ascents(const BarredPermutation& gamma);
/// 1-based j with d_j > d_{j+1}.
std::vector<int> descents(const BarredPermutation& gamma);

/// Dense orbit of the cell: adjacent blocks merge across every ascent.
MuInvolution sigma(const BarredPermutation& gamma);

/// Relabel letters x -> w(x), keep the bar pattern, rewrite 2-blocks descending.
BarredPermutation weyl_act(const Permutation& w, const BarredPermutation& gamma);

/// Replace the block "ji" (j > i) by "j|i"; identity when absent.
BarredPermutation subdivide(int j, int i, const BarredPermutation& gamma);

int cell_dimension(const BarredPermutation& gamma);
int orbit_dimension(const MuInvolution& pi);

struct CellRecord {
  BarredPermutation fixed_point;
  std::vector<MuInvolution> members;
  MuInvolution dense;
  int dimension = 0;
};

/// One record per barred permutation of [n], in fixed-point order.
std::vector<CellRecord> cells(int n);

/// Cell order on barred permutations induced by the closure order `full`.
Poset<BarredPermutation> bb_order(const BruhatPoset& full);
Poset<BarredPermutation> bb_order(int n);

struct StratificationWitness {
  BarredPermutation closure_cell;
  BarredPermutation met_cell;
  std::vector<MuInvolution> intersection;
  std::vector<MuInvolution> missing;
};

/// Pairs (A, B) where the closure of cell A meets cell B in a nonempty
/// proper subset of B's orbits, ordered by (A, B).
std::vector<StratificationWitness> stratification_witnesses(const BruhatPoset& full);
std::optional<StratificationWitness> stratification_witness(int n);

struct ConjectureReport {
  int n = 0;
  std::optional<Composition> mu;
  /// The closure order restricted to dense orbits of cells.
  BruhatPoset poset;
  bool graded = false;
  bool has_max = false;
  bool has_min = false;
  std::optional<std::pair<MuInvolution, MuInvolution>> witness;

  bool passes() const { return graded && has_max && has_min; }
};

ConjectureReport bcell_conjecture_check(const BruhatPoset& full,
                                        std::optional<Composition> mu = std::nullopt);
ConjectureReport bcell_conjecture_check(int n, std::optional<Composition> mu = std::nullopt);

}  // namespace quadrics
