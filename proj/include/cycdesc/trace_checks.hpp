#pragma once

// Structural invariants of forward-map traces.  Each check corresponds to
// a property of the switch procedure that the correctness argument leans
// on; all of them are decidable from the recorded snapshots alone:
//
//   decreasing-values  the occupants of group i's last slot during
//                      iteration i form b, b+eps, b+2eps, ... and their
//                      images under pi strictly decrease
//   relative-order     no switch exchanges two entries of the same group;
//                      each group's entry pattern never changes, so its
//                      first entry is always its maximum
//   frozen-ahead       while fixing group i, no value >= the leader of
//                      group i+1 moves, no leader or last entry of a later
//                      group moves, and no entry whose working successor
//                      is >= that leader moves
//   frozen-behind      while fixing group i, entries sitting in groups
//                      before i never move

#include <map>
#include <string>

#include "switch_bijection.hpp"

namespace cycdesc {

namespace detail {

inline std::vector<int> group_pattern(const std::vector<int>& grp) {
  // rank vector: pattern[t] = number of entries smaller than grp[t]
  std::vector<int> pat(grp.size());
  for (std::size_t s = 0; s < grp.size(); ++s)
    for (std::size_t t = 0; t < grp.size(); ++t)
      if (grp[t] < grp[s]) ++pat[s];
  return pat;
}

struct StateIndex {
  std::vector<int> group, offset, succ;
  explicit StateIndex(const std::vector<std::vector<int>>& groups, int n)
      : group(n + 1, -1), offset(n + 1, -1), succ(n + 1, 0) {
    for (int g = 0; g < static_cast<int>(groups.size()); ++g)
      for (int o = 0; o < static_cast<int>(groups[g].size()); ++o) {
        const int v = groups[g][o];
        group[v] = g;
        offset[v] = o;
        succ[v] = groups[g][(o + 1) % groups[g].size()];
      }
  }
};

}  // namespace detail

// Returns one message per violated invariant; empty means the trace is
// consistent with all of them.
inline std::vector<std::string> check_trace_invariants(const Permutation& pi,
                                                       const SwitchTrace& trace) {
  std::vector<std::string> bad;
  auto fail = [&](int event_index, const std::string& what) {
    bad.push_back("event " + std::to_string(event_index) + ": " + what);
  };
  if (!trace.forward) {
    bad.push_back("trace does not come from the forward map");
    return bad;
  }
  if (trace.states.empty()) {
    bad.push_back("trace has no initial state");
    return bad;
  }

  const int n = pi.size() - 1;
  const auto& initial = trace.states[0];
  const int r = static_cast<int>(initial.size());
  std::vector<int> leaders(r), enders(r);
  for (int g = 0; g < r; ++g) {
    leaders[g] = initial[g].front();
    enders[g] = initial[g].back();
  }
  std::vector<std::vector<int>> initial_pattern(r);
  for (int g = 0; g < r; ++g) initial_pattern[g] = detail::group_pattern(initial[g]);

  // Per-iteration step-I chains: occupants of the group's last slot.
  std::map<int, std::vector<std::pair<int, int>>> step1;

  for (std::size_t k = 0; k < trace.events.size(); ++k) {
    const SwitchEvent& ev = trace.events[k];
    const int i = ev.iteration;
    if (ev.state_index != static_cast<int>(k) + 1) {
      fail(static_cast<int>(k), "snapshot index out of step with event order");
      continue;
    }
    if (std::abs(ev.a - ev.b) != 1)
      fail(static_cast<int>(k), "switched values do not differ by 1");
    if (i < 1 || i > r - 1) {
      fail(static_cast<int>(k), "iteration index outside 1..r-1");
      continue;
    }
    if (ev.step == SwitchStep::I) step1[i].push_back({ev.a, ev.b});

    detail::StateIndex before(trace.states[k], n);

    // relative-order, part one: never two entries of one group
    if (before.group[ev.a] == before.group[ev.b])
      fail(static_cast<int>(k), "switch inside a single group");

    // frozen-behind
    if (before.group[ev.a] < i - 1 || before.group[ev.b] < i - 1)
      fail(static_cast<int>(k), "switch moved an entry of an already fixed group");

    // frozen-ahead (leader of group i+1 exists because i <= r-1)
    const int guard = leaders[i];
    for (int v : {ev.a, ev.b}) {
      if (v >= guard)
        fail(static_cast<int>(k), "moved value " + std::to_string(v) +
                                      " >= next group leader " + std::to_string(guard));
      if (before.succ[v] >= guard)
        fail(static_cast<int>(k), "moved an entry whose successor is >= the next group leader");
      for (int g = i; g < r; ++g)
        if (v == leaders[g] || v == enders[g])
          fail(static_cast<int>(k),
               "moved a leader or last entry of a later group: " + std::to_string(v));
    }

    // relative-order, part two: patterns are invariant
    const auto& after = trace.states[k + 1];
    if (static_cast<int>(after.size()) != r) {
      fail(static_cast<int>(k), "group count changed");
      continue;
    }
    for (int g = 0; g < r; ++g) {
      if (detail::group_pattern(after[g]) != initial_pattern[g])
        fail(static_cast<int>(k), "relative order changed in group " + std::to_string(g + 1));
      if (*std::max_element(after[g].begin(), after[g].end()) != after[g].front())
        fail(static_cast<int>(k), "group " + std::to_string(g + 1) +
                                      " no longer starts with its maximum");
    }
  }

  // decreasing-values along each iteration's last-slot chain
  for (const auto& [i, chain] : step1) {
    if (chain.front().first != enders[i - 1]) {
      bad.push_back("iteration " + std::to_string(i) +
                    ": chain does not start at the group's last entry");
      continue;
    }
    const int eps = chain.front().second - chain.front().first;
    int prev = chain.front().first;
    for (std::size_t t = 0; t < chain.size(); ++t) {
      const auto [z, w] = chain[t];
      if (z != prev || w != z + eps)
        bad.push_back("iteration " + std::to_string(i) + ": chain is not an arithmetic walk");
      if (pi(z) <= pi(w))
        bad.push_back("iteration " + std::to_string(i) +
                      ": images along the chain fail to decrease");
      prev = w;
    }
  }

  return bad;
}

}  // namespace cycdesc
