#pragma once

// Text grammar shared by the library and the CLI:
//   one-line words   whitespace-separated decimal integers: "2 5 1 7 3 6 4"
//   cycle form       parenthesized comma-separated groups, whitespace
//                    insensitive: "(5,3,1,2)(6)(7,4)"
//   descent sets     comma-separated integers, optionally brace-wrapped:
//                    "2,8" or "{2,8}"; "{}" is the empty set
// Formatting is canonical and deterministic, and every formatted value is
// re-parseable by the matching parser.

#include <charconv>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace cycdesc {

namespace detail {

inline std::vector<int> parse_int_tokens(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text[j] == '-') ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    int value = 0;
    auto res = std::from_chars(text.data() + i, text.data() + j, value);
    if (res.ec != std::errc{} || res.ptr != text.data() + j || j == i)
      throw std::invalid_argument("expected an integer near '" +
                                  std::string(text.substr(i, 8)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

inline std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace detail

inline Permutation parse_one_line(std::string_view text) {
  return Permutation(detail::parse_int_tokens(text));
}

// Raw parenthesized groups, no validation beyond shape.
inline std::vector<std::vector<int>> parse_groups(std::string_view text) {
  const std::string s = detail::strip_whitespace(text);
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle text");
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in cycle text");
    std::vector<int> group;
    std::size_t j = i + 1;
    while (j < close) {
      std::size_t k = j;
      while (k < close && s[k] != ',') ++k;
      int value = 0;
      auto res = std::from_chars(s.data() + j, s.data() + k, value);
      if (res.ec != std::errc{} || res.ptr != s.data() + k)
        throw std::invalid_argument("bad integer inside cycle text");
      group.push_back(value);
      j = k + 1;
    }
    if (group.empty()) throw std::invalid_argument("empty group in cycle text");
    groups.push_back(std::move(group));
    i = close + 1;
  }
  if (groups.empty()) throw std::invalid_argument("no cycles in cycle text");
  return groups;
}

inline Permutation parse_cycles(std::string_view text) {
  CycleDecomposition dec;
  dec.cycles = parse_groups(text);
  return from_cycles(dec);
}

// Auto-detects cycle form (leading parenthesis) versus a one-line word.
inline Permutation parse_permutation(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') return parse_cycles(text);
    break;
  }
  return parse_one_line(text);
}

inline DescentSet parse_descent_set(std::string_view text, int n) {
  std::string s = detail::strip_whitespace(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw std::invalid_argument("unbalanced '{' in descent set");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> elems;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t k = s.find(',', i);
    if (k == std::string::npos) k = s.size();
    int value = 0;
    auto res = std::from_chars(s.data() + i, s.data() + k, value);
    if (res.ec != std::errc{} || res.ptr != s.data() + k)
      throw std::invalid_argument("bad integer in descent set");
    elems.push_back(value);
    i = k + 1;
  }
  return DescentSet(n, std::move(elems));
}

inline std::string format_one_line(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(word[i]);
  }
  return out;
}

inline std::string format_one_line(const Permutation& p) {
  return format_one_line(std::span<const int>(p.word()));
}

// One-line word with each descent position marked by a '.' separator,
// e.g. "7.6.5 10 12".
inline std::string format_one_line_dotted(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(word[i - 1] > word[i] ? '.' : ' ');
    out += std::to_string(word[i]);
  }
  return out;
}

inline std::string format_group(std::span<const int> group) {
  std::string out = "(";
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(group[i]);
  }
  out.push_back(')');
  return out;
}

inline std::string format_groups(const std::vector<std::vector<int>>& groups) {
  std::string out;
  for (const auto& g : groups) out += format_group(g);
  return out;
}

// Single parenthesized form with ';' between groups, the written shape of
// the inverse map's working state: "(11,4,9,3,5;16,10,1,7,15;...;21)".
inline std::string format_block_form(const std::vector<std::vector<int>>& blocks) {
  std::string out = "(";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out.push_back(';');
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(blocks[b][i]);
    }
  }
  out.push_back(')');
  return out;
}

inline std::string format_cycles(const Permutation& p) {
  return format_groups(canonical_cycle_form(p).cycles);
}

// Cyclic permutations display as the rotation ending with the largest
// element, matching the input convention of the forward map.
inline std::string format_cycle_rotation(const Permutation& p) {
  return format_group(cycle_ending_with(p, p.size()));
}

inline std::string format_descent_set(const DescentSet& I) {
  std::string out = "{";
  const auto& e = I.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(e[i]);
  }
  out.push_back('}');
  return out;
}

}  // namespace cycdesc
