#pragma once

#include <set>
#include <string>
#include <vector>

#include "quadrics/degenerate.hpp"
#include "quadrics/notation.hpp"
#include "quadrics/permutation.hpp"

namespace testing {

inline quadrics::Permutation P(const std::string& digits) { return quadrics::parse_permutation(digits); }
inline quadrics::MuInvolution D(const std::string& text) { return quadrics::parse_degenerate_involution(text); }
inline quadrics::BarredPermutation B(const std::string& text) { return quadrics::parse_barred(text); }
inline quadrics::Composition C(std::vector<int> parts) { return quadrics::Composition(std::move(parts)); }

inline std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

template <class T>
std::set<std::string> names(const T& range) {
  std::set<std::string> out;
  for (const auto& x : range) out.insert(x.to_string());
  return out;
}

}  // namespace testing
