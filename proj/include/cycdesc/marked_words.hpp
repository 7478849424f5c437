#pragma once

// Marked words and the bijections built from the main map:
//
//   * a marked word is the one-line word of an n-cycle with one entry
//     replaced by 0 (zero-marked) or by n+1 (top-marked)
//   * phi_u sends top-marked words to permutations with the same descent
//     set and the value n at the marked position
//   * phi_t0 sends zero-marked words to permutations with the same
//     descent set and the value 1 at the marked position
//   * cyclesu_map sends an n-cycle pi and a position m to a permutation
//     sigma with sigma(m) = 1 whose descents agree with pi's away from
//     positions m-1 and m
//
// Inverses retrace each construction step (inverse main map, strip the
// appended n+1, rotate, re-mark) rather than searching.

#include "switch_bijection.hpp"
#include "text_io.hpp"

namespace cycdesc {

enum class MarkKind { zero, top };

class MarkedWord {
 public:
  // Validating constructor from raw word text/tokens; infers the kind.
  static MarkedWord from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    if (n < 1) throw std::invalid_argument("marked word must have size >= 1");
    int marked_pos = 0;
    MarkKind kind = MarkKind::zero;
    for (int i = 1; i <= n; ++i) {
      if (word[i - 1] == 0 || word[i - 1] == n + 1) {
        if (marked_pos != 0) throw std::invalid_argument("more than one marked entry");
        marked_pos = i;
        kind = word[i - 1] == 0 ? MarkKind::zero : MarkKind::top;
      }
    }
    if (marked_pos == 0) throw std::invalid_argument("no entry equals 0 or n+1");
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (i == marked_pos) continue;
      const int v = word[i - 1];
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("unmarked entries must be distinct values of 1..n");
      seen[v] = 1;
    }
    int missing = 0;
    for (int v = 1; v <= n; ++v)
      if (!seen[v]) missing = v;
    MarkedWord mw(std::move(word), marked_pos, kind, missing);
    if (!is_cyclic(mw.underlying_cycle()))
      throw std::invalid_argument("restoring the missing value does not give an n-cycle");
    return mw;
  }

  // Replace pi(pos) in the one-line word of an n-cycle.
  static MarkedWord by_marking(const Permutation& pi, int pos, MarkKind kind) {
    if (!is_cyclic(pi)) throw std::invalid_argument("marked words come from n-cycles");
    if (pos < 1 || pos > pi.size()) throw std::invalid_argument("marked position out of range");
    std::vector<int> word = pi.word();
    const int missing = word[pos - 1];
    word[pos - 1] = kind == MarkKind::zero ? 0 : pi.size() + 1;
    return MarkedWord(std::move(word), pos, kind, missing);
  }

  int n() const noexcept { return static_cast<int>(word_.size()); }
  int marked_pos() const noexcept { return marked_pos_; }
  int missing_value() const noexcept { return missing_; }
  MarkKind kind() const noexcept { return kind_; }
  const std::vector<int>& word() const noexcept { return word_; }

  Permutation underlying_cycle() const {
    std::vector<int> w = word_;
    w[marked_pos_ - 1] = missing_;
    return Permutation(std::move(w));
  }

  DescentSet descent_set() const { return cycdesc::descent_set(std::span<const int>(word_)); }

  friend bool operator==(const MarkedWord& a, const MarkedWord& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const MarkedWord& a, const MarkedWord& b) { return !(a == b); }

 private:
  MarkedWord(std::vector<int> word, int marked_pos, MarkKind kind, int missing)
      : word_(std::move(word)), marked_pos_(marked_pos), kind_(kind), missing_(missing) {}

  std::vector<int> word_;
  int marked_pos_;
  MarkKind kind_;
  int missing_;
};

inline MarkedWord parse_marked_word(std::string_view text) {
  return MarkedWord::from_word(detail::parse_int_tokens(text));
}

inline std::string format_marked_word(const MarkedWord& mw) {
  return format_one_line(std::span<const int>(mw.word()));
}

// The entrywise complement-and-reverse map; 0 and n+1 trade places, so it
// swaps the two kinds of marking.
inline MarkedWord reverse_complement(const MarkedWord& mw) {
  return MarkedWord::from_word(reverse_complement_word(std::span<const int>(mw.word())));
}

// Top-marked word -> (n+1)-cycle: restore the missing value, write the
// cycle ending at the marked position, append n+1.  A bijection onto the
// cyclic permutations of one larger size; the first n one-line entries of
// the image are exactly the marked word.
inline Permutation u_to_cycle(const MarkedWord& tau) {
  if (tau.kind() != MarkKind::top)
    throw std::invalid_argument("u_to_cycle expects a top-marked word");
  const int n = tau.n();
  std::vector<int> rot = cycle_ending_with(tau.underlying_cycle(), tau.marked_pos());
  rot.push_back(n + 1);
  CycleDecomposition dec;
  dec.cycles.push_back(std::move(rot));
  dec.n = n + 1;
  return from_cycles(dec);
}

inline MarkedWord u_from_cycle(const Permutation& pi1) {
  if (!is_cyclic(pi1) || pi1.size() < 2)
    throw std::invalid_argument("u_from_cycle expects a cyclic permutation of size >= 2");
  const int n = pi1.size() - 1;
  const int k = pi1.position_of(n + 1);  // marked position
  // dropping n+1 from the cycle splices k directly to pi1(n+1)
  std::vector<int> word(pi1.word().begin(), pi1.word().begin() + n);
  word[k - 1] = pi1(n + 1);
  return MarkedWord::by_marking(Permutation(std::move(word)), k, MarkKind::top);
}

inline Permutation phi_u(const MarkedWord& tau) { return phi(u_to_cycle(tau)); }

inline MarkedWord phi_u_inverse(const Permutation& sigma) {
  return u_from_cycle(psi(sigma));
}

// Zero-marked word -> permutation, by conjugating phi_u with the
// complement-and-reverse map on both sides.
inline Permutation phi_t0(const MarkedWord& tau) {
  if (tau.kind() != MarkKind::zero)
    throw std::invalid_argument("phi_t0 expects a zero-marked word");
  return reverse_complement(phi_u(reverse_complement(tau)));
}

inline MarkedWord phi_t0_inverse(const Permutation& sigma) {
  return reverse_complement(phi_u_inverse(reverse_complement(sigma)));
}

// n-cycle plus distinguished position m -> permutation fixing 1 at m.
inline Permutation cyclesu_map(const Permutation& pi, int m) {
  if (!is_cyclic(pi)) throw std::invalid_argument("cyclesu_map expects an n-cycle");
  if (m < 1 || m > pi.size()) throw std::invalid_argument("position m out of range");
  return phi_t0(MarkedWord::by_marking(pi, m, MarkKind::zero));
}

inline Permutation cyclesu_inverse(const Permutation& sigma, int m) {
  if (m < 1 || m > sigma.size()) throw std::invalid_argument("position m out of range");
  if (sigma(m) != 1) throw std::invalid_argument("cyclesu_inverse needs sigma(m) == 1");
  MarkedWord tau = phi_t0_inverse(sigma);
  if (tau.marked_pos() != m)
    throw std::logic_error("inverse marked position disagrees with m");
  return tau.underlying_cycle();
}

}  // namespace cycdesc
