#pragma once

// Core permutation vocabulary: one-line words over {1,...,n}, cycle
// decompositions, descent sets, and the subset <-> composition <->
// partition dictionary on {1,...,n-1}.
//
// Conventions used throughout the library:
//   * one-line words are 1-indexed; positions 0 and n+1 act as
//     out-of-bounds sentinels in the switch algorithms built on top
//   * canonical cycle form writes each cycle with its largest element
//     first and orders the cycles by increasing first element
//   * a descent of a word a_1 a_2 ... a_n is a position i <= n-1 with
//     a_i > a_{i+1}

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdesc {

class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation must have size >= 1");
    inv_.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
      const int v = word_[i - 1];
      if (v < 1 || v > n)
        throw std::invalid_argument("one-line entry " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
      if (inv_[v - 1] != 0)
        throw std::invalid_argument("one-line word repeats value " + std::to_string(v));
      inv_[v - 1] = i;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }

  // Image of i, 1-indexed.
  int operator()(int i) const {
    assert(i >= 1 && i <= size());
    return word_[i - 1];
  }

  // Position holding `value`, i.e. the inverse image.
  int position_of(int value) const {
    assert(value >= 1 && value <= size());
    return inv_[value - 1];
  }

  const std::vector<int>& word() const noexcept { return word_; }

  Permutation inverse() const { return Permutation(inv_); }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
  std::vector<int> inv_;
};

// Subset of {1,...,n-1} together with its ambient size n.
class DescentSet {
 public:
  DescentSet(int n, std::vector<int> elements)
      : n_(n), elements_(std::move(elements)) {
    if (n_ < 1) throw std::invalid_argument("descent set needs ambient size >= 1");
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const int e = elements_[k];
      if (e < 1 || e > n_ - 1)
        throw std::invalid_argument("descent position " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n_ - 1));
      if (k > 0 && elements_[k - 1] == e)
        throw std::invalid_argument("descent set repeats position " + std::to_string(e));
    }
  }

  static DescentSet empty(int n) { return DescentSet(n, {}); }

  static DescentSet from_mask(std::uint32_t mask, int n) {
    std::vector<int> elems;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) elems.push_back(i);
    if (mask >> (n - 1) != 0)
      throw std::invalid_argument("descent mask has bits beyond n-1");
    return DescentSet(n, std::move(elems));
  }

  int ambient() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty_set() const noexcept { return elements_.empty(); }

  bool contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
  }

  bool subset_of(const DescentSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

  // Intersection with {1,...,m-1}, re-homed to ambient size m.
  DescentSet restricted(int m) const {
    std::vector<int> elems;
    for (int e : elements_)
      if (e <= m - 1) elems.push_back(e);
    return DescentSet(m, std::move(elems));
  }

  DescentSet intersect(const DescentSet& other) const {
    std::vector<int> elems;
    std::set_intersection(elements_.begin(), elements_.end(),
                          other.elements_.begin(), other.elements_.end(),
                          std::back_inserter(elems));
    return DescentSet(n_, std::move(elems));
  }

  // The mirror image i |-> n - i, same ambient size.
  DescentSet reversed() const {
    std::vector<int> elems;
    for (int e : elements_) elems.push_back(n_ - e);
    return DescentSet(n_, std::move(elems));
  }

  std::uint32_t mask() const {
    if (n_ > 32) throw std::domain_error("descent mask limited to n <= 32");
    std::uint32_t m = 0;
    for (int e : elements_) m |= 1u << (e - 1);
    return m;
  }

  friend bool operator==(const DescentSet& a, const DescentSet& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }
  friend bool operator!=(const DescentSet& a, const DescentSet& b) {
    return !(a == b);
  }

 private:
  int n_;
  std::vector<int> elements_;
};

struct Composition {
  std::vector<int> parts;
  int n = 0;
};

struct Partition {
  std::vector<int> parts;  // non-increasing
  int n = 0;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n == b.n && a.parts == b.parts;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  }
};

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  int n = 0;
  bool canonical = false;  // largest-first cycles, ordered by first element
};

// Descent positions of any sequence with pairwise distinct entries.
inline DescentSet descent_set(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> elems;
  for (int i = 1; i <= n - 1; ++i)
    if (seq[i - 1] > seq[i]) elems.push_back(i);
  return DescentSet(n, std::move(elems));
}

inline DescentSet descent_set(const Permutation& p) {
  return descent_set(std::span<const int>(p.word()));
}

// Cycles discovered from the smallest unvisited element, each written
// starting at that element.
inline CycleDecomposition to_cycles(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition dec;
  dec.n = n;
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int v = start; !seen[v]; v = p(v)) {
      seen[v] = 1;
      cyc.push_back(v);
    }
    dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

// Accepts any rotation of each cycle and any cycle order; rejects
// repeated or missing values.
inline Permutation from_cycles(const CycleDecomposition& dec) {
  int n = dec.n;
  if (n == 0)
    for (const auto& c : dec.cycles) n += static_cast<int>(c.size());
  std::vector<int> word(n, 0);
  for (const auto& cyc : dec.cycles) {
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const int from = cyc[t];
      const int to = cyc[(t + 1) % cyc.size()];
      if (from < 1 || from > n)
        throw std::invalid_argument("cycle entry " + std::to_string(from) +
                                    " out of range 1.." + std::to_string(n));
      if (word[from - 1] != 0)
        throw std::invalid_argument("cycles repeat value " + std::to_string(from));
      word[from - 1] = to;
    }
  }
  for (int i = 0; i < n; ++i)
    if (word[i] == 0)
      throw std::invalid_argument("cycles miss value " + std::to_string(i + 1));
  return Permutation(std::move(word));
}

inline CycleDecomposition canonical_cycle_form(const Permutation& p) {
  CycleDecomposition dec = to_cycles(p);
  for (auto& cyc : dec.cycles) {
    auto it = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
  }
  std::sort(dec.cycles.begin(), dec.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  dec.canonical = true;
  return dec;
}

inline Partition cycle_type(const Permutation& p) {
  Partition lam;
  lam.n = p.size();
  for (const auto& cyc : to_cycles(p).cycles)
    lam.parts.push_back(static_cast<int>(cyc.size()));
  std::sort(lam.parts.begin(), lam.parts.end(), std::greater<int>());
  return lam;
}

inline bool is_cyclic(const Permutation& p) {
  // single cycle through all of {1,...,n}
  int v = 1;
  for (int steps = 1; steps < p.size(); ++steps) {
    v = p(v);
    if (v == 1) return false;
  }
  return p(v) == 1;
}

inline bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) return false;
  return true;
}

// Unique rotation of a cyclic permutation's cycle that puts `last` in the
// final position.
inline std::vector<int> cycle_ending_with(const Permutation& p, int last) {
  if (!is_cyclic(p)) throw std::invalid_argument("cycle_ending_with needs a cyclic permutation");
  if (last < 1 || last > p.size())
    throw std::invalid_argument("rotation anchor out of range");
  std::vector<int> rot;
  rot.reserve(p.size());
  for (int v = p(last); v != last; v = p(v)) rot.push_back(v);
  rot.push_back(last);
  return rot;
}

// Entrywise j |-> n+1-j composed with positional reversal.  The same
// formula also serves marked words, where it exchanges the markers 0 and
// n+1.
inline std::vector<int> reverse_complement_word(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = (n + 1) - w[n - i];
  return out;
}

inline Permutation reverse_complement(const Permutation& p) {
  return Permutation(reverse_complement_word(std::span<const int>(p.word())));
}

// I = {i_1 < ... < i_k}  |->  (i_1, i_2-i_1, ..., n-i_k)
inline Composition composition_of(const DescentSet& I) {
  Composition c;
  c.n = I.ambient();
  int prev = 0;
  for (int e : I.elements()) {
    c.parts.push_back(e - prev);
    prev = e;
  }
  c.parts.push_back(c.n - prev);
  return c;
}

// Inverse of composition_of.
inline DescentSet descent_set_of_composition(const Composition& c) {
  std::vector<int> elems;
  int acc = 0;
  for (std::size_t j = 0; j + 1 < c.parts.size(); ++j) {
    if (c.parts[j] < 1) throw std::invalid_argument("composition parts must be >= 1");
    acc += c.parts[j];
    elems.push_back(acc);
  }
  if (c.parts.empty() || c.parts.back() < 1)
    throw std::invalid_argument("composition parts must be >= 1");
  acc += c.parts.back();
  if (acc != c.n) throw std::invalid_argument("composition parts do not sum to n");
  return DescentSet(c.n, std::move(elems));
}

inline Partition associated_partition(const DescentSet& I) {
  Composition c = composition_of(I);
  Partition lam;
  lam.n = c.n;
  lam.parts = c.parts;
  std::sort(lam.parts.begin(), lam.parts.end(), std::greater<int>());
  return lam;
}

}  // namespace cycdesc
