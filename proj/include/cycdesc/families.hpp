#pragma once

// Exhaustive enumeration of the desk-scale families:
//
//   S    all permutations of {1,...,n}
//   C    cyclic permutations (single n-cycles); enumerated directly as
//        the (n-1)! rotations (t_1,...,t_{n-1},n) rather than by
//        filtering S
//   T0   n-cycle one-line words with one entry replaced by 0
//   U    n-cycle one-line words with one entry replaced by n+1
//   D    derangements (no fixed point)
//
// Ranked access (unrank by index) lets sweeps partition the enumeration
// space into independent chunks.

#include <cstdint>
#include <functional>

#include "marked_words.hpp"
#include "permutation.hpp"

namespace cycdesc {

inline std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial_u64 handles 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// rank-th permutation of {1,...,n} in lexicographic one-line order.
inline Permutation unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial_u64(i);
    const std::uint64_t d = rank / f;
    rank %= f;
    word.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(word));
}

inline std::uint64_t rank_of_permutation(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 1; i <= n; ++i) {
    const auto it = std::lower_bound(pool.begin(), pool.end(), p(i));
    rank += static_cast<std::uint64_t>(it - pool.begin()) * factorial_u64(n - i);
    pool.erase(it);
  }
  return rank;
}

// rank-th n-cycle: the cycle (t_1,...,t_{n-1},n) where (t_i) is the
// rank-th permutation of {1,...,n-1}.
inline Permutation unrank_cyclic(int n, std::uint64_t rank) {
  CycleDecomposition dec;
  dec.n = n;
  if (n == 1) {
    dec.cycles.push_back({1});
  } else {
    std::vector<int> rot = unrank_permutation(n - 1, rank).word();
    rot.push_back(n);
    dec.cycles.push_back(std::move(rot));
  }
  return from_cycles(dec);
}

enum class Family { symmetric, cyclic, zero_marked, top_marked, derangements };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::symmetric: return "S";
    case Family::cyclic: return "C";
    case Family::zero_marked: return "T0";
    case Family::top_marked: return "U";
    case Family::derangements: return "derangements";
  }
  return "?";
}

inline std::uint64_t subfactorial_u64(int n) {
  // number of derangements
  std::uint64_t prev2 = 1, prev1 = 0;  // !0, !1
  if (n == 0) return 1;
  if (n == 1) return 0;
  std::uint64_t cur = 0;
  for (int i = 2; i <= n; ++i) {
    cur = static_cast<std::uint64_t>(i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

inline std::uint64_t family_size(Family f, int n) {
  switch (f) {
    case Family::symmetric: return factorial_u64(n);
    case Family::cyclic: return factorial_u64(n - 1);
    case Family::zero_marked:
    case Family::top_marked: return factorial_u64(n);
    case Family::derangements: return subfactorial_u64(n);
  }
  return 0;
}

template <class F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

template <class F>
void for_each_cyclic(int n, F&& visit) {
  if (n == 1) {
    visit(Permutation::identity(1));
    return;
  }
  std::vector<int> rot(n - 1);
  std::iota(rot.begin(), rot.end(), 1);
  do {
    CycleDecomposition dec;
    dec.n = n;
    std::vector<int> cyc = rot;
    cyc.push_back(n);
    dec.cycles.push_back(std::move(cyc));
    visit(from_cycles(dec));
  } while (std::next_permutation(rot.begin(), rot.end()));
}

template <class F>
void for_each_derangement(int n, F&& visit) {
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_derangement(p)) visit(p);
  });
}

// Marked words, enumerated as (underlying cycle) x (marked position).
template <class F>
void for_each_marked(MarkKind kind, int n, F&& visit) {
  for_each_cyclic(n, [&](const Permutation& pi) {
    for (int pos = 1; pos <= n; ++pos) visit(MarkedWord::by_marking(pi, pos, kind));
  });
}

inline MarkedWord unrank_marked(MarkKind kind, int n, std::uint64_t rank) {
  const Permutation pi = unrank_cyclic(n, rank / n);
  const int pos = static_cast<int>(rank % n) + 1;
  return MarkedWord::by_marking(pi, pos, kind);
}

// Exact counts of descent sets across one family, keyed by mask.
struct DescentDistribution {
  int n = 0;
  Family source = Family::symmetric;
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [mask, c] : counts) t += c;
    return t;
  }

  friend bool operator==(const DescentDistribution& a, const DescentDistribution& b) {
    return a.n == b.n && a.counts == b.counts;
  }
};

inline DescentDistribution descent_distribution(Family family, int n) {
  DescentDistribution dist;
  dist.n = n;
  dist.source = family;
  auto tally_word = [&](std::span<const int> w) { ++dist.counts[descent_set(w).mask()]; };
  switch (family) {
    case Family::symmetric:
      for_each_permutation(n, [&](const Permutation& p) { tally_word(p.word()); });
      break;
    case Family::cyclic:
      for_each_cyclic(n, [&](const Permutation& p) { tally_word(p.word()); });
      break;
    case Family::derangements:
      for_each_derangement(n, [&](const Permutation& p) { tally_word(p.word()); });
      break;
    case Family::zero_marked:
      for_each_marked(MarkKind::zero, n, [&](const MarkedWord& t) { tally_word(t.word()); });
      break;
    case Family::top_marked:
      for_each_marked(MarkKind::top, n, [&](const MarkedWord& t) { tally_word(t.word()); });
      break;
  }
  return dist;
}

// All partitions of n, largest parts first, in a deterministic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition{parts, n});
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace cycdesc
