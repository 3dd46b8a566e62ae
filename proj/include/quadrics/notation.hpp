#pragma once

// Text notation for permutations, compositions and degenerate involutions.
//
//   26|8351|7|94          single-digit letters (n <= 9)
//   2,6|8,3,5,1|7|9,4     comma-separated letters (needed once n > 9)
//   [1|32]                surrounding brackets are optional
//   (68)|(25)(4)(9)       a block may be written as its cycles
//
// Whitespace is ignored everywhere.

#include <string>
#include <string_view>

#include "quadrics/degenerate.hpp"

namespace quadrics {

/// Malformed text (as opposed to a well-formed but invalid value).
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

MuInvolution parse_degenerate_involution(std::string_view text);
BarredPermutation parse_barred(std::string_view text);
/// "2,4,1,2", "(2,4,1,2)" or, when every part is a digit, "2412".
Composition parse_composition(std::string_view text);
/// "312" or "3,1,2".
Permutation parse_permutation(std::string_view text);

std::string render(const MuInvolution& pi);
std::string render(const BarredPermutation& gamma);
std::string render(const Permutation& w);

}  // namespace quadrics
