#pragma once

// The descent-preserving bijection phi between cyclic permutations of
// {1,...,n+1} and permutations of {1,...,n}, and its inverse psi.
//
// phi(pi):
//   write the cycle of pi ending with n+1, cut the prefix of length n
//   before each left-to-right maximum, and treat the pieces as the cycle
//   form of a working permutation of {1,...,n}.  Then walk the groups
//   left to right; in group i, repeatedly switch the rightmost entry z
//   with the value z+eps (eps fixed per group by the test P below),
//   cascading switches to the predecessors of the switched entries while
//   those predecessors are consecutive values.  The test licensing a
//   switch is
//       P(x,y):  pi(x) > pi(y)  and  work(x) < work(y)
//   with P false whenever x or y leaves 1..n.
//
// psi(sigma):
//   write sigma in canonical cycle form, erase the inner parentheses
//   (keeping the former boundaries as block marks), append n+1, and run
//   the mirrored procedure over blocks right to left with
//       Q(x,y):  work(x) > work(y)  and  sigma(x) < sigma(y)
//   where work is the evolving (n+1)-cycle.
//
// Every switch exchanges two values differing by exactly one.  Both maps
// optionally record a full trace (one event per switch plus state
// snapshots) for verification and CLI walkthroughs.

#include <array>
#include <cstdlib>
#include <utility>

#include "permutation.hpp"

namespace cycdesc {

enum class SwitchStep { I, II, Ip, IIp };

inline const char* step_name(SwitchStep s) {
  switch (s) {
    case SwitchStep::I: return "I";
    case SwitchStep::II: return "II";
    case SwitchStep::Ip: return "I'";
    case SwitchStep::IIp: return "II'";
  }
  return "?";
}

struct SwitchEvent {
  int iteration;    // group/block being fixed, 1-based
  SwitchStep step;
  int a, b;         // switched values, |a-b| == 1, in narration order
  int state_index;  // snapshot index holding the state after this switch
};

// Snapshot of the written form: the list of cycles (forward map) or the
// list of blocks including the trailing (n+1) block (inverse map).
struct SwitchTrace {
  bool forward = true;
  std::vector<std::vector<std::vector<int>>> states;  // states[0] = initial
  std::vector<SwitchEvent> events;
};

// ---------------------------------------------------------------------------
// Forward map state: the evolving cycle form.

class WorkingCycles {
 public:
  WorkingCycles(std::vector<std::vector<int>> groups, int n)
      : groups_(std::move(groups)), n_(n) {
    pos_group_.assign(n_ + 1, -1);
    pos_offset_.assign(n_ + 1, -1);
    succ_.assign(n_ + 1, 0);
    for (int g = 0; g < static_cast<int>(groups_.size()); ++g) {
      const auto& grp = groups_[g];
      for (int o = 0; o < static_cast<int>(grp.size()); ++o) {
        const int v = grp[o];
        if (v < 1 || v > n_ || pos_group_[v] != -1)
          throw std::invalid_argument("working cycles must partition 1..n");
        pos_group_[v] = g;
        pos_offset_[v] = o;
        succ_[v] = grp[(o + 1) % grp.size()];
      }
    }
    for (int v = 1; v <= n_; ++v)
      if (pos_group_[v] == -1)
        throw std::invalid_argument("working cycles miss value " + std::to_string(v));
  }

  int n() const noexcept { return n_; }
  int group_count() const noexcept { return static_cast<int>(groups_.size()); }
  const std::vector<std::vector<int>>& groups() const noexcept { return groups_; }

  // The working permutation as a function (successor within the cycle).
  int successor(int value) const {
    assert(value >= 1 && value <= n_);
    return succ_[value];
  }

  int group_of(int value) const { return pos_group_[value]; }
  int offset_of(int value) const { return pos_offset_[value]; }
  int entry(int group, int offset) const { return groups_[group][offset]; }
  int last_entry(int group) const { return groups_[group].back(); }

  // Exchange the positions of u and v (consecutive values) and repair the
  // position and successor tables in O(1).
  void switch_values(int u, int v) {
    assert(std::abs(u - v) == 1);
    const int gu = pos_group_[u], ou = pos_offset_[u];
    const int gv = pos_group_[v], ov = pos_offset_[v];
    groups_[gu][ou] = v;
    groups_[gv][ov] = u;
    pos_group_[u] = gv;
    pos_offset_[u] = ov;
    pos_group_[v] = gu;
    pos_offset_[v] = ou;
    refresh_succ(gu, ou);
    refresh_succ(gv, ov);
  }

  Permutation to_permutation() const {
    std::vector<int> word(n_);
    for (int v = 1; v <= n_; ++v) word[v - 1] = succ_[v];
    return Permutation(std::move(word));
  }

  std::vector<std::vector<int>> snapshot() const { return groups_; }

 private:
  void refresh_succ(int g, int o) {
    const auto& grp = groups_[g];
    const int len = static_cast<int>(grp.size());
    const int prev = (o + len - 1) % len;
    succ_[grp[prev]] = grp[o];
    succ_[grp[o]] = grp[(o + 1) % len];
  }

  std::vector<std::vector<int>> groups_;
  int n_;
  std::vector<int> pos_group_, pos_offset_, succ_;
};

// Cycle of pi written ending with n+1, cut before each left-to-right
// maximum of the prefix; n+1 itself is dropped.
inline WorkingCycles split_at_ltr_maxima(const Permutation& pi) {
  const int top = pi.size();
  if (top < 2) throw std::invalid_argument("forward map needs size >= 2");
  const std::vector<int> rot = cycle_ending_with(pi, top);  // rejects non-cyclic
  std::vector<std::vector<int>> groups;
  int best = 0;
  for (int j = 0; j + 1 < top; ++j) {
    if (rot[j] > best) {
      best = rot[j];
      groups.emplace_back();
    }
    groups.back().push_back(rot[j]);
  }
  return WorkingCycles(std::move(groups), top - 1);
}

inline bool condition_p(const Permutation& pi, const WorkingCycles& state, int x, int y) {
  const int n = state.n();
  if (x < 1 || x > n || y < 1 || y > n) return false;
  return pi(x) > pi(y) && state.successor(x) < state.successor(y);
}

namespace detail {

struct Pos {
  int group, offset;
  friend bool operator==(const Pos&, const Pos&) = default;
};

inline void record_event(SwitchTrace* tr, const WorkingCycles& st, int iter,
                         SwitchStep step, int a, int b) {
  if (!tr) return;
  tr->events.push_back({iter, step, a, b, static_cast<int>(tr->states.size())});
  tr->states.push_back(st.snapshot());
}

// Predecessor cascade after a switch at positions p1 (the group-i side)
// and p2.  Stops on the leading entry of group i or of the whole written
// form; demanding the predecessor of any other group-leading entry is an
// internal error (the switch procedure never reaches one).
inline void cascade(int i, WorkingCycles& st, Pos p1, Pos p2, SwitchTrace* tr) {
  const int gi = i - 1;
  while (true) {
    if (p1 == Pos{gi, 0} || p2 == Pos{gi, 0}) return;
    if (p1 == Pos{0, 0} || p2 == Pos{0, 0}) return;
    if (p1.offset == 0 || p2.offset == 0)
      throw std::logic_error("switch cascade reached the leading entry of a foreign group");
    const int x = st.entry(p1.group, p1.offset - 1);
    const int y = st.entry(p2.group, p2.offset - 1);
    if (std::abs(x - y) != 1) return;
    st.switch_values(x, y);
    record_event(tr, st, i, SwitchStep::II, x, y);
    p1.offset -= 1;
    p2.offset -= 1;
  }
}

}  // namespace detail

// One iteration of the forward map's main loop: fix group i (1-based).
// Groups 1..i-1 must already be fixed.
inline void fix_cycle(int i, const Permutation& pi, WorkingCycles& state,
                      SwitchTrace* trace = nullptr) {
  assert(i >= 1 && i <= state.group_count());
  int z = state.last_entry(i - 1);

  const bool up = condition_p(pi, state, z, z + 1);
  const bool down = condition_p(pi, state, z, z - 1);
  if (!up && !down) return;
  int eps;
  if (up && down)
    eps = state.successor(z + 1) > state.successor(z - 1) ? +1 : -1;
  else
    eps = up ? +1 : -1;

  while (condition_p(pi, state, z, z + eps)) {
    const int w = z + eps;
    detail::Pos p1{state.group_of(z), state.offset_of(z)};
    detail::Pos p2{state.group_of(w), state.offset_of(w)};
    state.switch_values(z, w);
    detail::record_event(trace, state, i, SwitchStep::I, z, w);
    detail::cascade(i, state, p1, p2, trace);
    z = w;  // the new rightmost entry of group i
  }
}

inline Permutation phi_with_trace(const Permutation& pi, SwitchTrace* trace) {
  WorkingCycles state = split_at_ltr_maxima(pi);
  if (trace) {
    trace->forward = true;
    trace->states.push_back(state.snapshot());
  }
  for (int i = 1; i <= state.group_count() - 1; ++i) fix_cycle(i, pi, state, trace);
  return state.to_permutation();
}

inline Permutation phi(const Permutation& pi) { return phi_with_trace(pi, nullptr); }

inline std::pair<Permutation, SwitchTrace> phi_traced(const Permutation& pi) {
  SwitchTrace trace;
  Permutation out = phi_with_trace(pi, &trace);
  return {std::move(out), std::move(trace)};
}

// ---------------------------------------------------------------------------
// Inverse map state: one flat (n+1)-cycle carrying immovable block marks.

class WorkingBlocks {
 public:
  WorkingBlocks(std::vector<int> entries, std::vector<int> block_starts)
      : entries_(std::move(entries)), block_start_(std::move(block_starts)) {
    const int len = static_cast<int>(entries_.size());
    n_ = len - 1;
    pos_.assign(len + 1, -1);
    succ_.assign(len + 1, 0);
    for (int p = 0; p < len; ++p) {
      const int v = entries_[p];
      if (v < 1 || v > len || pos_[v] != -1)
        throw std::invalid_argument("working blocks must hold 1..n+1 once each");
      pos_[v] = p;
    }
    for (int p = 0; p < len; ++p) succ_[entries_[p]] = entries_[(p + 1) % len];
    is_start_.assign(len, 0);
    for (int s : block_start_) is_start_[s] = 1;
  }

  int n() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(block_start_.size()); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  // The evolving (n+1)-cycle as a function.
  int successor(int value) const {
    assert(value >= 1 && value <= n_ + 1);
    return succ_[value];
  }

  int position_of(int value) const { return pos_[value]; }
  int entry(int p) const { return entries_[p]; }
  bool is_block_start(int p) const { return is_start_[p] != 0; }
  int block_start(int b) const { return block_start_[b]; }
  int block_last(int b) const {
    const int end = (b + 1 < block_count()) ? block_start_[b + 1]
                                            : static_cast<int>(entries_.size());
    return entries_[end - 1];
  }

  void switch_values(int u, int v) {
    assert(std::abs(u - v) == 1);
    const int pu = pos_[u], pv = pos_[v];
    entries_[pu] = v;
    entries_[pv] = u;
    pos_[u] = pv;
    pos_[v] = pu;
    refresh_succ(pu);
    refresh_succ(pv);
  }

  Permutation to_cycle_permutation() const {
    std::vector<int> word(n_ + 1);
    for (int v = 1; v <= n_ + 1; ++v) word[v - 1] = succ_[v];
    return Permutation(std::move(word));
  }

  std::vector<std::vector<int>> snapshot() const {
    std::vector<std::vector<int>> blocks;
    for (int b = 0; b < block_count(); ++b) {
      const int lo = block_start_[b];
      const int hi = (b + 1 < block_count()) ? block_start_[b + 1]
                                             : static_cast<int>(entries_.size());
      blocks.emplace_back(entries_.begin() + lo, entries_.begin() + hi);
    }
    return blocks;
  }

 private:
  void refresh_succ(int p) {
    const int len = static_cast<int>(entries_.size());
    const int prev = (p + len - 1) % len;
    succ_[entries_[prev]] = entries_[p];
    succ_[entries_[p]] = entries_[(p + 1) % len];
  }

  std::vector<int> entries_;
  std::vector<int> block_start_;
  std::vector<char> is_start_;
  int n_;
  std::vector<int> pos_, succ_;
};

// Canonical cycle form of sigma, concatenated, with n+1 appended as its
// own final block.  Block boundaries never move afterwards.
inline WorkingBlocks merge_blocks(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> entries;
  std::vector<int> starts;
  for (const auto& cyc : canonical_cycle_form(sigma).cycles) {
    starts.push_back(static_cast<int>(entries.size()));
    entries.insert(entries.end(), cyc.begin(), cyc.end());
  }
  starts.push_back(static_cast<int>(entries.size()));
  entries.push_back(n + 1);
  return WorkingBlocks(std::move(entries), std::move(starts));
}

inline bool condition_q(const Permutation& sigma, const WorkingBlocks& state, int x, int y) {
  const int n = state.n();
  if (x < 1 || x > n || y < 1 || y > n) return false;
  return state.successor(x) > state.successor(y) && sigma(x) < sigma(y);
}

namespace detail {

inline void record_event(SwitchTrace* tr, const WorkingBlocks& st, int iter,
                         SwitchStep step, int a, int b) {
  if (!tr) return;
  tr->events.push_back({iter, step, a, b, static_cast<int>(tr->states.size())});
  tr->states.push_back(st.snapshot());
}

inline void cascade_blocks(int i, WorkingBlocks& st, int p1, int p2, SwitchTrace* tr) {
  const int own_start = st.block_start(i - 1);
  while (true) {
    if (p1 == own_start || p2 == own_start) return;
    if (p1 == 0 || p2 == 0) return;
    if (st.is_block_start(p1) || st.is_block_start(p2))
      throw std::logic_error("switch cascade reached the leading entry of a foreign block");
    const int x = st.entry(p1 - 1);
    const int y = st.entry(p2 - 1);
    if (std::abs(x - y) != 1) return;
    st.switch_values(x, y);
    record_event(tr, st, i, SwitchStep::IIp, x, y);
    --p1;
    --p2;
  }
}

}  // namespace detail

// One iteration of the inverse map's loop: fix block i (1-based).  Blocks
// i+1..r-1 must already be fixed (the loop runs right to left); the final
// two blocks, the one holding the largest first element and the (n+1)
// block, are never fixed.
inline void fix_block(int i, const Permutation& sigma, WorkingBlocks& state,
                      SwitchTrace* trace = nullptr) {
  assert(i >= 1 && i <= state.block_count() - 1);
  int z = state.block_last(i - 1);

  const bool up = condition_q(sigma, state, z, z + 1);
  const bool down = condition_q(sigma, state, z, z - 1);
  if (!up && !down) return;
  int eps;
  if (up && down)
    eps = state.successor(z + 1) < state.successor(z - 1) ? +1 : -1;
  else
    eps = up ? +1 : -1;

  while (condition_q(sigma, state, z, z + eps)) {
    const int w = z + eps;
    const int p1 = state.position_of(z);
    const int p2 = state.position_of(w);
    state.switch_values(z, w);
    detail::record_event(trace, state, i, SwitchStep::Ip, z, w);
    detail::cascade_blocks(i, state, p1, p2, trace);
    z = w;
  }
}

inline Permutation psi_with_trace(const Permutation& sigma, SwitchTrace* trace) {
  WorkingBlocks state = merge_blocks(sigma);
  if (trace) {
    trace->forward = false;
    trace->states.push_back(state.snapshot());
  }
  for (int i = state.block_count() - 2; i >= 1; --i) fix_block(i, sigma, state, trace);
  return state.to_cycle_permutation();
}

inline Permutation psi(const Permutation& sigma) { return psi_with_trace(sigma, nullptr); }

inline std::pair<Permutation, SwitchTrace> psi_traced(const Permutation& sigma) {
  SwitchTrace trace;
  Permutation out = psi_with_trace(sigma, &trace);
  return {std::move(out), std::move(trace)};
}

// Line-oriented trace text, one switch per line.
inline std::string format_trace_line(const SwitchEvent& e) {
  return "iter=" + std::to_string(e.iteration) + " step=" + step_name(e.step) +
         " swap=(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

inline std::vector<std::string> format_trace_lines(const SwitchTrace& trace) {
  std::vector<std::string> lines;
  lines.reserve(trace.events.size());
  for (const auto& e : trace.events) lines.push_back(format_trace_line(e));
  return lines;
}

inline std::string format_trace_lines_joined(const SwitchTrace& trace) {
  std::string out;
  for (const auto& e : trace.events) {
    if (!out.empty()) out += "; ";
    out += format_trace_line(e);
  }
  return out;
}

}  // namespace cycdesc
