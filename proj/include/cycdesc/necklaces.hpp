#pragma once

// Necklaces (rotation classes of words over the ordered alphabet of
// positive letter indices), multisets of necklaces, a generation-based
// counter for multisets with prescribed lengths and letter content, and
// the cycle-type-preserving transfer between descent classes:
//
//   gr_transfer(pi, I, J):  for D(pi) <= I and J with the same associated
//   partition, paint the entries of pi's cycles by the value blocks of I
//   (letters reordered so block sizes match J's blocks), read the cycles
//   as necklaces, then relabel the beads 1..n in the lexicographic order
//   of the infinite periodic words read from each bead.  The result is a
//   permutation with the same cycle type and descents inside J.
//
// Everything here works with aperiodic (primitive) necklaces: a cycle of
// a permutation whose descents lie inside I can never paint to a periodic
// word (a period would force an inversion inside one increasing block),
// and with aperiodic words two beads read equal periodic sequences only
// when they sit in equal copies of one necklace.  Equal copies are
// ordered by arrival, which permutation_to_necklaces fixes to the order
// of increasing smallest cycle entry; that makes the transfer with the
// inverse letter matching an exact two-sided inverse.

#include <cstdint>
#include <map>
#include <mutex>

#include "permutation.hpp"
#include "text_io.hpp"

namespace cycdesc {

class Necklace {
 public:
  explicit Necklace(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("necklace needs at least one bead");
    for (int c : word_)
      if (c < 1) throw std::invalid_argument("letter indices are positive");
    canonicalize();
  }

  const std::vector<int>& word() const noexcept { return word_; }  // minimal rotation
  int length() const noexcept { return static_cast<int>(word_.size()); }

  bool primitive() const {
    const int len = length();
    for (int p = 1; p < len; ++p) {
      if (len % p != 0) continue;
      bool periodic = true;
      for (int t = 0; t < len && periodic; ++t)
        if (word_[t] != word_[(t + p) % len]) periodic = false;
      if (periodic) return false;
    }
    return true;
  }

  std::vector<int> evaluation(int alphabet) const {
    std::vector<int> e(alphabet, 0);
    for (int c : word_) {
      if (c > alphabet) throw std::invalid_argument("letter beyond alphabet");
      ++e[c - 1];
    }
    return e;
  }

  friend bool operator==(const Necklace& a, const Necklace& b) { return a.word_ == b.word_; }
  friend bool operator<(const Necklace& a, const Necklace& b) { return a.word_ < b.word_; }

 private:
  void canonicalize() {
    const int len = length();
    std::vector<int> best = word_;
    std::vector<int> rot = word_;
    for (int s = 1; s < len; ++s) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    word_ = std::move(best);
  }

  std::vector<int> word_;
};

inline Necklace canonical_necklace(std::vector<int> word) { return Necklace(std::move(word)); }

// Lexicographic order of the two infinite periodic sequences obtained by
// reading each necklace from the given bead.  Two periodic sequences that
// agree for len1+len2 letters agree forever.
inline int periodic_compare(const std::vector<int>& w1, int off1,
                            const std::vector<int>& w2, int off2) {
  const int l1 = static_cast<int>(w1.size());
  const int l2 = static_cast<int>(w2.size());
  for (int t = 0; t < l1 + l2; ++t) {
    const int a = w1[(off1 + t) % l1];
    const int b = w2[(off2 + t) % l2];
    if (a != b) return a < b ? -1 : +1;
  }
  return 0;
}

inline int periodic_compare(const Necklace& n1, int off1, const Necklace& n2, int off2) {
  return periodic_compare(n1.word(), off1, n2.word(), off2);
}

// One occurrence of a necklace inside a multiset.  `written` keeps the
// rotation in which the instance was supplied (for display and for the
// bead order used when building permutations); the canonical class is
// available through `necklace`.
struct NecklaceInstance {
  std::vector<int> written;
  Necklace necklace;
};

class NecklaceMultiset {
 public:
  void add(std::vector<int> written_word) {
    Necklace neck(written_word);
    instances_.push_back({std::move(written_word), std::move(neck)});
  }

  const std::vector<NecklaceInstance>& instances() const noexcept { return instances_; }
  bool empty() const noexcept { return instances_.empty(); }

  int bead_count() const {
    int total = 0;
    for (const auto& inst : instances_) total += static_cast<int>(inst.written.size());
    return total;
  }

  int max_letter() const {
    int m = 0;
    for (const auto& inst : instances_)
      for (int c : inst.written) m = std::max(m, c);
    return m;
  }

  // e[i-1] = number of beads with letter i
  std::vector<int> evaluation(int alphabet = 0) const {
    if (alphabet == 0) alphabet = max_letter();
    std::vector<int> e(alphabet, 0);
    for (const auto& inst : instances_)
      for (int c : inst.written) {
        if (c > alphabet) throw std::invalid_argument("letter beyond alphabet");
        ++e[c - 1];
      }
    return e;
  }

  Partition cycle_structure() const {
    Partition lam;
    for (const auto& inst : instances_) {
      lam.parts.push_back(static_cast<int>(inst.written.size()));
      lam.n += static_cast<int>(inst.written.size());
    }
    std::sort(lam.parts.begin(), lam.parts.end(), std::greater<int>());
    return lam;
  }

 private:
  std::vector<NecklaceInstance> instances_;
};

inline NecklaceMultiset parse_necklaces(std::string_view text) {
  NecklaceMultiset m;
  for (auto& g : parse_groups(text)) m.add(std::move(g));
  return m;
}

inline std::string format_necklaces(const NecklaceMultiset& m) {
  std::string out;
  for (const auto& inst : m.instances()) out += format_group(inst.written);
  return out;
}

// ---------------------------------------------------------------------------
// Transfer between descent classes with equal associated partitions.

struct TransferPlan {
  DescentSet from, to;
  std::vector<int> alpha;  // alpha[j-1] = target block of source block j
};

// Matches equal part sizes greedily in increasing order, which pairs the
// t-th occurrence of each size in `from` with its t-th occurrence in
// `to`.  Swapping the arguments therefore yields exactly the inverse
// index map.
inline TransferPlan make_transfer_plan(const DescentSet& I, const DescentSet& J) {
  if (I.ambient() != J.ambient())
    throw std::invalid_argument("descent sets live in different ambient sizes");
  if (!(associated_partition(I) == associated_partition(J)))
    throw std::invalid_argument("descent sets have different associated partitions");
  const std::vector<int> r = composition_of(I).parts;
  const std::vector<int> s = composition_of(J).parts;
  std::vector<int> alpha(r.size(), 0);
  std::vector<char> used(s.size(), 0);
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t m = 0; m < s.size(); ++m)
      if (!used[m] && s[m] == r[j]) {
        used[m] = 1;
        alpha[j] = static_cast<int>(m) + 1;
        break;
      }
  return TransferPlan{I, J, std::move(alpha)};
}

inline std::vector<int> inverse_index_map(const std::vector<int>& alpha) {
  std::vector<int> inv(alpha.size(), 0);
  for (std::size_t j = 0; j < alpha.size(); ++j) inv[alpha[j] - 1] = static_cast<int>(j) + 1;
  return inv;
}

// Paint each cycle of pi with the letters alpha(block of entry), one
// necklace per cycle, instances arriving by increasing smallest cycle
// entry.
inline NecklaceMultiset permutation_to_necklaces(const Permutation& pi, const DescentSet& I,
                                                 const std::vector<int>& alpha) {
  if (pi.size() != I.ambient())
    throw std::invalid_argument("permutation size and descent-set ambient differ");
  if (!descent_set(pi).subset_of(I))
    throw std::invalid_argument("permutation has a descent outside the source set");
  const Composition comp = composition_of(I);
  if (alpha.size() != comp.parts.size())
    throw std::invalid_argument("index map size does not match the composition");

  // letter of a value = alpha(index of the value's block)
  std::vector<int> letter(pi.size() + 1, 0);
  {
    int v = 1;
    for (std::size_t j = 0; j < comp.parts.size(); ++j)
      for (int t = 0; t < comp.parts[j]; ++t) letter[v++] = alpha[j];
  }

  NecklaceMultiset m;
  for (const auto& cyc : to_cycles(pi).cycles) {
    std::vector<int> word;
    word.reserve(cyc.size());
    for (int v : cyc) word.push_back(letter[v]);
    m.add(std::move(word));
  }
  for (const auto& inst : m.instances())
    if (!inst.necklace.primitive())
      throw std::logic_error("a descent-bounded permutation painted a periodic necklace");
  return m;
}

// Label all beads 1..n in the lexicographic order of their periodic
// sequences (equal copies ordered by arrival, beads inside an instance by
// written offset) and read each necklace as a cycle of the output.
inline Permutation necklaces_to_permutation(const NecklaceMultiset& m, const DescentSet& J) {
  const Composition comp = composition_of(J);
  const std::vector<int> eval = m.evaluation(static_cast<int>(comp.parts.size()));
  for (std::size_t j = 0; j < comp.parts.size(); ++j)
    if (eval[j] != comp.parts[j])
      throw std::invalid_argument("necklace evaluation does not match the target composition");
  for (const auto& inst : m.instances())
    if (!inst.necklace.primitive())
      throw std::invalid_argument("transfer needs aperiodic necklaces");

  struct Bead {
    int instance, offset;
  };
  std::vector<Bead> beads;
  for (int t = 0; t < static_cast<int>(m.instances().size()); ++t)
    for (int o = 0; o < static_cast<int>(m.instances()[t].written.size()); ++o)
      beads.push_back({t, o});

  const auto& inst = m.instances();
  std::sort(beads.begin(), beads.end(), [&](const Bead& a, const Bead& b) {
    const int c = periodic_compare(inst[a.instance].written, a.offset,
                                   inst[b.instance].written, b.offset);
    if (c != 0) return c < 0;
    if (a.instance != b.instance) return a.instance < b.instance;
    return a.offset < b.offset;
  });

  // label[instance][offset] = 1-based rank in the sorted bead order
  std::vector<std::vector<int>> label(inst.size());
  for (std::size_t t = 0; t < inst.size(); ++t) label[t].assign(inst[t].written.size(), 0);
  for (std::size_t p = 0; p < beads.size(); ++p)
    label[beads[p].instance][beads[p].offset] = static_cast<int>(p) + 1;

  std::vector<int> word(beads.size(), 0);
  for (std::size_t t = 0; t < inst.size(); ++t) {
    const int len = static_cast<int>(inst[t].written.size());
    for (int o = 0; o < len; ++o)
      word[label[t][o] - 1] = label[t][(o + 1) % len];
  }
  return Permutation(std::move(word));
}

inline Permutation gr_transfer(const Permutation& pi, const DescentSet& I, const DescentSet& J) {
  const TransferPlan plan = make_transfer_plan(I, J);
  return necklaces_to_permutation(permutation_to_necklaces(pi, I, plan.alpha), J);
}

// ---------------------------------------------------------------------------
// Counting multisets of aperiodic necklaces by exhaustive generation.
// Deliberately formula-free so it can stand against independently
// enumerated permutation counts.

namespace detail {

// Distinct aperiodic canonical necklaces of a given length over a given
// alphabet, grouped into (evaluation, class size) rows.  Cached: the
// tables are small and queried many times during sweeps.
inline const std::vector<std::pair<std::vector<int>, std::uint64_t>>& necklace_classes(
    int length, int alphabet) {
  static std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, std::uint64_t>>>
      cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(length, alphabet);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::map<std::vector<int>, std::uint64_t> classes;
  std::vector<int> word(length, 1);
  while (true) {
    Necklace neck(word);
    if (neck.word() == word && neck.primitive()) {
      std::vector<int> eval(alphabet, 0);
      for (int c : word) ++eval[c - 1];
      ++classes[eval];
    }
    int p = length - 1;
    while (p >= 0 && word[p] == alphabet) word[p--] = 1;
    if (p < 0) break;
    ++word[p];
  }
  std::vector<std::pair<std::vector<int>, std::uint64_t>> rows(classes.begin(), classes.end());
  return cache.emplace(std::move(key), std::move(rows)).first->second;
}

inline std::uint64_t multichoose(std::uint64_t types, std::uint64_t picks) {
  // C(types + picks - 1, picks), small arguments only
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t t = 0; t < picks; ++t) {
    num *= types + t;
    den *= t + 1;
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

inline bool fits(const std::vector<int>& eval, const std::vector<int>& remaining, int copies) {
  for (std::size_t i = 0; i < eval.size(); ++i)
    if (eval[i] * copies > remaining[i]) return false;
  return true;
}

// Multisets of `count` length-`length` necklaces with combined letter
// content `remaining` minus whatever later groups consume; recurses over
// the class table choosing a multiplicity per class.
inline std::uint64_t count_group(const std::vector<std::pair<std::vector<int>, std::uint64_t>>& rows,
                                 std::size_t row, int count, std::vector<int>& remaining,
                                 const std::function<std::uint64_t(std::vector<int>&)>& next_group) {
  if (count == 0) return next_group(remaining);
  if (row == rows.size()) return 0;
  std::uint64_t total = 0;
  const auto& [eval, types] = rows[row];
  for (int copies = 0; copies <= count && fits(eval, remaining, copies); ++copies) {
    if (copies > 0)
      for (std::size_t i = 0; i < eval.size(); ++i) remaining[i] -= eval[i] * copies;
    const std::uint64_t ways = multichoose(types, copies);
    if (ways > 0)
      total += ways * count_group(rows, row + 1, count - copies, remaining, next_group);
    if (copies > 0)
      for (std::size_t i = 0; i < eval.size(); ++i) remaining[i] += eval[i] * copies;
  }
  return total;
}

}  // namespace detail

// Number of multisets of aperiodic necklaces whose lengths are the parts
// of lambda and whose combined letter counts equal `evaluation`.
inline std::uint64_t count_necklace_multisets(const std::vector<int>& evaluation,
                                              const Partition& lambda) {
  int total = 0;
  for (int e : evaluation) {
    if (e < 0) throw std::invalid_argument("letter counts must be >= 0");
    total += e;
  }
  int lam_total = 0;
  for (int part : lambda.parts) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    lam_total += part;
  }
  if (total != lam_total)
    throw std::invalid_argument("evaluation total and partition total differ");
  if (lam_total == 0) return 1;

  const int alphabet = static_cast<int>(evaluation.size());
  std::map<int, int> by_length;  // length -> multiplicity
  for (int part : lambda.parts) ++by_length[part];
  std::vector<std::pair<int, int>> groups(by_length.begin(), by_length.end());

  // Fold over the length groups, threading the remaining letter budget.
  std::function<std::uint64_t(std::size_t, std::vector<int>&)> over_groups =
      [&](std::size_t g, std::vector<int>& remaining) -> std::uint64_t {
    if (g == groups.size()) {
      for (int rem : remaining)
        if (rem != 0) return 0;
      return 1;
    }
    const auto& rows = detail::necklace_classes(groups[g].first, alphabet);
    std::function<std::uint64_t(std::vector<int>&)> next =
        [&](std::vector<int>& rem) { return over_groups(g + 1, rem); };
    return detail::count_group(rows, 0, groups[g].second, remaining, next);
  };
  std::vector<int> remaining = evaluation;
  return over_groups(0, remaining);
}

}  // namespace cycdesc
