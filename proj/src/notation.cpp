#include "quadrics/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace quadrics {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string unbracket(std::string s, char open, char close) {
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw ParseError(std::string("unbalanced '") + open + "'");
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

int to_int(std::string_view token) {
  if (token.empty()) throw ParseError("empty letter");
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> letters(const std::string& s, bool comma_form) {
  std::vector<int> out;
  if (comma_form) {
    for (const auto& tok : split(s, ',')) out.push_back(to_int(tok));
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "'");
      }
      out.push_back(c - '0');
    }
  }
  return out;
}

// "(25)(4)(9)" -> one-line word over the sorted alphabet {2,4,5,9}.
std::vector<int> cycles_to_block(const std::string& s, bool comma_form) {
  std::map<int, int> image;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation");
    const auto end = s.find(')', pos);
    if (end == std::string::npos) throw ParseError("unterminated cycle");
    const auto cyc = letters(s.substr(pos + 1, end - pos - 1), comma_form);
    if (cyc.empty() || cyc.size() > 2) throw ParseError("cycles of an involution have one or two letters");
    for (int x : cyc) {
      if (image.count(x)) throw ParseError("letter " + std::to_string(x) + " repeated in cycles");
    }
    image[cyc.front()] = cyc.back();
    image[cyc.back()] = cyc.front();
    pos = end + 1;
  }
  std::vector<int> word;
  for (auto [x, y] : image) word.push_back(y);
  return word;
}

}  // namespace

MuInvolution parse_degenerate_involution(std::string_view text) {
  const std::string s = unbracket(strip(text), '[', ']');
  if (s.empty()) throw ParseError("empty degenerate involution");
  // Any n > 9 has the letter 10, so a '0' also signals separated letters
  // (relevant when every block is a single letter and no comma appears).
  const bool comma_form = s.find_first_of(",0") != std::string::npos;
  std::vector<int> parts, word;
  for (const auto& block : split(s, '|')) {
    if (block.empty()) throw ParseError("empty block");
    const auto w = block.front() == '(' ? cycles_to_block(block, comma_form) : letters(block, comma_form);
    parts.push_back(static_cast<int>(w.size()));
    word.insert(word.end(), w.begin(), w.end());
  }
  return MuInvolution(Composition(std::move(parts)), std::move(word));
}

BarredPermutation parse_barred(std::string_view text) {
  return BarredPermutation(parse_degenerate_involution(text));
}

Composition parse_composition(std::string_view text) {
  const std::string s = unbracket(strip(text), '(', ')');
  if (s.empty()) throw ParseError("empty composition");
  const bool comma_form = s.find(',') != std::string::npos;
  try {
    return Composition(letters(s, comma_form));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Permutation parse_permutation(std::string_view text) {
  const std::string s = unbracket(strip(text), '[', ']');
  if (s.empty()) throw ParseError("empty permutation");
  auto w = letters(s, s.find_first_of(",0") != std::string::npos);
  auto alpha = w;
  std::sort(alpha.begin(), alpha.end());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] != static_cast<int>(k) + 1) throw ParseError("not a permutation of 1..n: " + s);
  }
  return Permutation(std::move(alpha), std::move(w));
}

std::string render(const MuInvolution& pi) { return pi.to_string(); }
std::string render(const BarredPermutation& gamma) { return gamma.to_string(); }
std::string render(const Permutation& w) { return w.to_string(); }

}  // namespace quadrics
