#pragma once

// Exhaustive desk-scale verification suites.  Each suite checks one
// statement over a complete family at size n and reports counterexamples
// in a VerificationReport instead of asserting, so a failing property is
// data rather than a crash.
//
// The big sweeps accept a worker count: the enumeration space is ranked,
// split into contiguous chunks, processed independently, and the partial
// tallies/failure lists are merged in chunk order, so results are
// deterministic for any job count.

#include <chrono>
#include <functional>
#include <thread>

#include "counting.hpp"
#include "necklaces.hpp"
#include "reference_data.hpp"
#include "text_io.hpp"
#include "trace_checks.hpp"

namespace cycdesc {

struct VerifyOptions {
  int jobs = 1;  // 0 = hardware concurrency
};

struct VerificationFailure {
  std::string input, expected, actual;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;
  double millis = 0;

  bool passed() const { return failures.empty(); }
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "bij_roundtrip", "descents",    "table1",      "examples",
      "cor_cycles",    "cor_biju",    "cor_elishift", "cor_cyclesu",
      "thm_gr",        "prop_subsets", "lemmas_trace", "independence"};
  return names;
}

namespace detail {

struct SweepState {
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;
  std::map<std::uint32_t, std::uint64_t> counts;   // suite-specific tallies
  std::map<std::uint32_t, std::uint64_t> counts2;
  std::vector<std::uint8_t> hits;  // image marks, indexed by rank

  void fail(std::string input, std::string expected, std::string actual) {
    failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }

  void merge(SweepState&& o) {
    checked += o.checked;
    failures.insert(failures.end(), std::make_move_iterator(o.failures.begin()),
                    std::make_move_iterator(o.failures.end()));
    for (const auto& [k, v] : o.counts) counts[k] += v;
    for (const auto& [k, v] : o.counts2) counts2[k] += v;
    if (hits.size() < o.hits.size()) hits.resize(o.hits.size(), 0);
    for (std::size_t i = 0; i < o.hits.size(); ++i)
      if (o.hits[i]) hits[i] = 1;
  }

  void mark(std::uint64_t rank, std::uint64_t total) {
    if (hits.empty()) hits.assign(total, 0);
    hits[rank] = 1;
  }

  std::uint64_t hit_count() const {
    std::uint64_t c = 0;
    for (std::uint8_t h : hits) c += h;
    return c;
  }
};

template <class Body>
SweepState ranked_sweep(std::uint64_t total, int jobs, const Body& body) {
  if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const std::uint64_t min_chunk = 512;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(1, total / min_chunk)));
  if (workers <= 1) {
    SweepState state;
    for (std::uint64_t r = 0; r < total; ++r) body(r, state);
    return state;
  }
  std::vector<SweepState> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      for (std::uint64_t r = lo; r < hi; ++r) body(r, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  SweepState merged;
  for (auto& p : parts) merged.merge(std::move(p));
  return merged;
}

inline std::uint64_t count_at(const std::map<std::uint32_t, std::uint64_t>& m, std::uint32_t k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

inline void require_cap(const std::string& suite, int n, int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("suite " + suite + " supports 1 <= n <= " +
                                std::to_string(cap) + " (got " + std::to_string(n) + ")");
}

// ---- individual suites ----------------------------------------------------

inline SweepState suite_bij_roundtrip(int n, int jobs) {
  const std::uint64_t total = factorial_u64(n);
  SweepState st = ranked_sweep(total, jobs, [&](std::uint64_t rank, SweepState& s) {
    const Permutation pi = unrank_cyclic(n + 1, rank);
    const Permutation sigma = phi(pi);
    const Permutation back = psi(sigma);
    if (back != pi)
      s.fail(format_cycle_rotation(pi), format_cycle_rotation(pi),
             is_cyclic(back) ? format_cycle_rotation(back) : format_one_line(back));
    s.mark(rank_of_permutation(sigma), total);
    ++s.checked;
  });
  if (st.hit_count() != total)
    st.fail("image of the forward map", std::to_string(total) + " distinct images",
            std::to_string(st.hit_count()));
  return st;
}

inline SweepState suite_descents(int n, int jobs) {
  return ranked_sweep(factorial_u64(n), jobs, [&](std::uint64_t rank, SweepState& s) {
    const Permutation pi = unrank_cyclic(n + 1, rank);
    const Permutation sigma = phi(pi);
    const DescentSet want = descent_set(pi).restricted(n);
    const DescentSet got = descent_set(sigma);
    if (got != want)
      s.fail(format_cycle_rotation(pi), format_descent_set(want), format_descent_set(got));
    if (sigma.position_of(n) != pi.position_of(n + 1))
      s.fail(format_cycle_rotation(pi),
             "largest value at position " + std::to_string(pi.position_of(n + 1)),
             "position " + std::to_string(sigma.position_of(n)));
    ++s.checked;
  });
}

inline SweepState suite_lemmas_trace(int n, int jobs) {
  return ranked_sweep(factorial_u64(n), jobs, [&](std::uint64_t rank, SweepState& s) {
    const Permutation pi = unrank_cyclic(n + 1, rank);
    const auto [sigma, trace] = phi_traced(pi);
    (void)sigma;
    for (const std::string& v : check_trace_invariants(pi, trace))
      s.fail(format_cycle_rotation(pi), "trace invariant", v);
    ++s.checked;
  });
}

inline SweepState suite_cor_cycles(int n, int jobs) {
  SweepState st = ranked_sweep(factorial_u64(n), jobs, [&](std::uint64_t rank, SweepState& s) {
    const Permutation pi = unrank_cyclic(n + 1, rank);
    ++s.counts[descent_set(pi).restricted(n).mask()];
    ++s.checked;
  });
  const std::vector<BigInt> alpha = alpha_table(n);
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const BigInt have = count_at(st.counts, mask);
    if (have != alpha[mask])
      st.fail("I = " + format_descent_set(DescentSet::from_mask(mask, n)),
              alpha[mask].str(), have.str());
    ++st.checked;
  }
  return st;
}

inline SweepState suite_cor_biju(int n, int jobs) {
  const std::uint64_t total = factorial_u64(n);
  SweepState st = ranked_sweep(total, jobs, [&](std::uint64_t rank, SweepState& s) {
    const MarkedWord tau = unrank_marked(MarkKind::top, n, rank);
    const Permutation sigma = phi_u(tau);
    if (descent_set(sigma) != tau.descent_set())
      s.fail(format_marked_word(tau), format_descent_set(tau.descent_set()),
             format_descent_set(descent_set(sigma)));
    if (sigma(tau.marked_pos()) != n)
      s.fail(format_marked_word(tau), "value n at the marked position",
             format_one_line(sigma));
    if (phi_u_inverse(sigma) != tau)
      s.fail(format_marked_word(tau), "inverse recovers the marked word",
             format_marked_word(phi_u_inverse(sigma)));
    s.mark(rank_of_permutation(sigma), total);
    ++s.checked;
  });
  if (st.hit_count() != total)
    st.fail("image of the top-marked map", std::to_string(total) + " distinct images",
            std::to_string(st.hit_count()));
  return st;
}

inline SweepState suite_cor_elishift(int n, int jobs) {
  const std::uint64_t total = factorial_u64(n);
  SweepState st = ranked_sweep(total, jobs, [&](std::uint64_t rank, SweepState& s) {
    const MarkedWord tau = unrank_marked(MarkKind::zero, n, rank);
    const Permutation sigma = phi_t0(tau);
    if (descent_set(sigma) != tau.descent_set())
      s.fail(format_marked_word(tau), format_descent_set(tau.descent_set()),
             format_descent_set(descent_set(sigma)));
    if (sigma(tau.marked_pos()) != 1)
      s.fail(format_marked_word(tau), "value 1 at the marked position",
             format_one_line(sigma));
    if (phi_t0_inverse(sigma) != tau)
      s.fail(format_marked_word(tau), "inverse recovers the marked word",
             format_marked_word(phi_t0_inverse(sigma)));
    s.mark(rank_of_permutation(sigma), total);
    ++s.counts[tau.descent_set().mask()];
    ++s.checked;
  });
  if (st.hit_count() != total)
    st.fail("image of the zero-marked map", std::to_string(total) + " distinct images",
            std::to_string(st.hit_count()));
  const DescentDistribution sym = descent_distribution(Family::symmetric, n);
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const std::uint64_t lhs = count_at(st.counts, mask);
    const std::uint64_t rhs = count_at(sym.counts, mask);
    if (lhs != rhs)
      st.fail("distribution at I = " + format_descent_set(DescentSet::from_mask(mask, n)),
              std::to_string(rhs), std::to_string(lhs));
    ++st.checked;
  }
  return st;
}

inline SweepState suite_cor_cyclesu(int n, int /*jobs*/) {
  SweepState st;
  const std::uint64_t cyc_total = factorial_u64(n - 1);
  for (int m = 1; m <= n; ++m) {
    std::uint32_t jmask = (n >= 2) ? ((1u << (n - 1)) - 1) : 0;
    if (m - 1 >= 1) jmask &= ~(1u << (m - 2));
    if (m <= n - 1) jmask &= ~(1u << (m - 1));

    std::map<std::uint32_t, std::uint64_t> lhs, rhs;
    std::vector<std::uint8_t> seen(factorial_u64(n), 0);
    for_each_cyclic(n, [&](const Permutation& pi) {
      const Permutation sigma = cyclesu_map(pi, m);
      if (sigma(m) != 1)
        st.fail(format_one_line(pi) + " m=" + std::to_string(m), "sigma(m) == 1",
                format_one_line(sigma));
      const std::uint32_t dm = descent_set(pi).mask() & jmask;
      if ((descent_set(sigma).mask() & jmask) != dm)
        st.fail(format_one_line(pi) + " m=" + std::to_string(m),
                "matching descents away from m-1, m", format_one_line(sigma));
      if (cyclesu_inverse(sigma, m) != pi)
        st.fail(format_one_line(pi) + " m=" + std::to_string(m),
                "inverse recovers the cycle", format_one_line(cyclesu_inverse(sigma, m)));
      seen[rank_of_permutation(sigma)] = 1;
      ++lhs[dm];
      ++st.checked;
    });
    std::uint64_t distinct = 0;
    for (std::uint8_t h : seen) distinct += h;
    if (distinct != cyc_total)
      st.fail("m=" + std::to_string(m), std::to_string(cyc_total) + " distinct images",
              std::to_string(distinct));

    for_each_permutation(n, [&](const Permutation& sigma) {
      if (sigma(m) == 1) ++rhs[descent_set(sigma).mask() & jmask];
    });
    // compare over all I inside J
    std::uint32_t sub = jmask;
    while (true) {
      if (count_at(lhs, sub) != count_at(rhs, sub))
        st.fail("m=" + std::to_string(m) +
                    " I=" + format_descent_set(DescentSet::from_mask(sub, n)),
                std::to_string(count_at(rhs, sub)), std::to_string(count_at(lhs, sub)));
      ++st.checked;
      if (sub == 0) break;
      sub = (sub - 1) & jmask;
    }
  }
  return st;
}

inline SweepState suite_thm_gr(int n, int /*jobs*/) {
  SweepState st;
  const std::vector<Partition> lambdas = partitions_of(n);
  std::map<std::vector<int>, int> lambda_index;
  for (std::size_t i = 0; i < lambdas.size(); ++i) lambda_index[lambdas[i].parts] = static_cast<int>(i);

  // exact-descent-set counts per cycle type
  const std::uint32_t masks = 1u << (n - 1);
  std::vector<std::vector<std::uint64_t>> cnt(lambdas.size(),
                                              std::vector<std::uint64_t>(masks, 0));
  for_each_permutation(n, [&](const Permutation& p) {
    ++cnt[lambda_index.at(cycle_type(p).parts)][descent_set(p).mask()];
  });
  // subset-sum so cnt[l][I] counts descent sets contained in I
  for (auto& row : cnt)
    for (int b = 0; b < n - 1; ++b)
      for (std::uint32_t m = 0; m < masks; ++m)
        if (m & (1u << b)) row[m] += row[m ^ (1u << b)];

  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    for (std::uint32_t m = 0; m < masks; ++m) {
      const DescentSet I = DescentSet::from_mask(m, n);
      const std::uint64_t necklace_side =
          count_necklace_multisets(composition_of(I).parts, lambdas[l]);
      if (necklace_side != cnt[l][m]) {
        std::string lam = "(";
        for (std::size_t t = 0; t < lambdas[l].parts.size(); ++t)
          lam += (t ? "," : "") + std::to_string(lambdas[l].parts[t]);
        lam += ")";
        st.fail("lambda=" + lam + " I=" + format_descent_set(I),
                std::to_string(cnt[l][m]) + " permutations",
                std::to_string(necklace_side) + " necklace multisets");
      }
      ++st.checked;
    }
  }
  return st;
}

inline SweepState suite_prop_subsets(int n, int /*jobs*/) {
  SweepState st;
  const std::uint32_t masks = 1u << (n - 1);

  std::vector<std::vector<Permutation>> by_mask(masks);
  for_each_permutation(n, [&](const Permutation& p) {
    by_mask[descent_set(p).mask()].push_back(p);
  });

  std::map<std::vector<int>, std::vector<std::uint32_t>> classes;
  for (std::uint32_t m = 0; m < masks; ++m)
    classes[associated_partition(DescentSet::from_mask(m, n)).parts].push_back(m);

  const std::uint64_t sym_total = factorial_u64(n);
  for (const auto& [parts, members] : classes) {
    for (std::uint32_t mi : members) {
      for (std::uint32_t mj : members) {
        const DescentSet I = DescentSet::from_mask(mi, n);
        const DescentSet J = DescentSet::from_mask(mj, n);
        const std::string pair_tag =
            "I=" + format_descent_set(I) + " J=" + format_descent_set(J);
        std::vector<std::uint8_t> seen(sym_total, 0);
        std::uint64_t domain = 0, derang_src = 0, derang_img = 0;
        std::uint32_t sub = mi;
        while (true) {
          for (const Permutation& pi : by_mask[sub]) {
            const Permutation sigma = gr_transfer(pi, I, J);
            if (!(cycle_type(sigma) == cycle_type(pi)))
              st.fail(pair_tag + " pi=" + format_one_line(pi), "same cycle type",
                      format_one_line(sigma));
            if (!descent_set(sigma).subset_of(J))
              st.fail(pair_tag + " pi=" + format_one_line(pi), "descents inside J",
                      format_one_line(sigma));
            if (is_derangement(pi) != is_derangement(sigma))
              st.fail(pair_tag + " pi=" + format_one_line(pi),
                      "derangements map to derangements", format_one_line(sigma));
            if (gr_transfer(sigma, J, I) != pi)
              st.fail(pair_tag + " pi=" + format_one_line(pi), "round trip returns pi",
                      format_one_line(gr_transfer(sigma, J, I)));
            seen[rank_of_permutation(sigma)] = 1;
            derang_src += is_derangement(pi) ? 1 : 0;
            derang_img += is_derangement(sigma) ? 1 : 0;
            ++domain;
            ++st.checked;
          }
          if (sub == 0) break;
          sub = (sub - 1) & mi;
        }
        std::uint64_t distinct = 0;
        for (std::uint8_t h : seen) distinct += h;
        if (distinct != domain)
          st.fail(pair_tag, std::to_string(domain) + " distinct images",
                  std::to_string(distinct));
        std::uint64_t target = 0;
        std::uint32_t subj = mj;
        while (true) {
          target += by_mask[subj].size();
          if (subj == 0) break;
          subj = (subj - 1) & mj;
        }
        if (domain != target)
          st.fail(pair_tag, "domain and target classes of equal size",
                  std::to_string(domain) + " vs " + std::to_string(target));
        if (derang_src != derang_img)
          st.fail(pair_tag, "equal derangement counts",
                  std::to_string(derang_src) + " vs " + std::to_string(derang_img));
      }
    }
  }

  // fixed reference example at n = 12
  {
    const auto& fx = reference::transfer_fixture();
    const Permutation pi = parse_one_line(fx.pi);
    const DescentSet I = parse_descent_set(fx.from, 12);
    const DescentSet Ja = parse_descent_set(fx.to_a, 12);
    const DescentSet Jb = parse_descent_set(fx.to_b, 12);
    const NecklaceMultiset m =
        permutation_to_necklaces(pi, I, make_transfer_plan(I, Ja).alpha);
    if (format_necklaces(m) != fx.necklaces)
      st.fail("reference transfer necklaces", std::string(fx.necklaces), format_necklaces(m));
    const Permutation sa = gr_transfer(pi, I, Ja);
    if (format_one_line(sa) != fx.image_a)
      st.fail("reference transfer to {4,6}", std::string(fx.image_a), format_one_line(sa));
    const Permutation sb = gr_transfer(pi, I, Jb);
    if (format_one_line(sb) != fx.image_b)
      st.fail("reference transfer to {2,6}", std::string(fx.image_b), format_one_line(sb));
    st.checked += 3;
  }
  return st;
}

inline SweepState suite_table1(int n, int /*jobs*/) {
  if (n != 4) throw std::invalid_argument("the table1 suite is defined at n = 4");
  SweepState st;
  for (const auto& row : reference::c5_image_table()) {
    const Permutation pi = parse_cycles(row.cycle);
    if (format_one_line(pi) != row.one_line)
      st.fail(std::string(row.cycle), std::string(row.one_line), format_one_line(pi));
    const Permutation sigma = phi(pi);
    if (format_one_line(sigma) != row.image)
      st.fail(std::string(row.cycle), std::string(row.image), format_one_line(sigma));
    const std::string shared = format_descent_set(descent_set(pi).restricted(4));
    if (shared != row.descents || format_descent_set(descent_set(sigma)) != row.descents)
      st.fail(std::string(row.cycle), std::string(row.descents), shared);
    ++st.checked;
  }
  return st;
}

inline SweepState suite_examples(int /*n*/, int /*jobs*/) {
  SweepState st;
  for (const reference::Walkthrough* w : reference::walkthroughs()) {
    const std::string tag(w->input);
    const Permutation input = parse_cycles(w->input);
    auto [result, trace] = w->forward ? phi_traced(input) : psi_traced(input);
    if (w->forward) {
      if (format_groups(trace.states.front()) != w->initial_form)
        st.fail(tag, std::string(w->initial_form), format_groups(trace.states.front()));
      if (format_groups(trace.states.back()) != w->result_cycles)
        st.fail(tag, std::string(w->result_cycles), format_groups(trace.states.back()));
    } else {
      if (format_block_form(trace.states.front()) != w->initial_form)
        st.fail(tag, std::string(w->initial_form), format_block_form(trace.states.front()));
      if (format_cycle_rotation(result) != w->result_cycles)
        st.fail(tag, std::string(w->result_cycles), format_cycle_rotation(result));
    }
    if (format_one_line(result) != w->result_one_line)
      st.fail(tag, std::string(w->result_one_line), format_one_line(result));
    const int small = w->forward ? input.size() - 1 : input.size();
    const DescentSet shared = w->forward ? descent_set(result)
                                         : descent_set(result).restricted(small);
    if (format_descent_set(shared) != w->shared_descents)
      st.fail(tag, std::string(w->shared_descents), format_descent_set(shared));

    bool trace_ok = trace.events.size() == w->trace.size();
    for (std::size_t k = 0; trace_ok && k < w->trace.size(); ++k) {
      const auto& e = trace.events[k];
      const auto& f = w->trace[k];
      trace_ok = e.iteration == f.iteration && e.step == f.step && e.a == f.a && e.b == f.b;
    }
    if (!trace_ok)
      st.fail(tag, "narrated switch sequence", format_trace_lines_joined(trace));
    st.checked += 5;
  }
  return st;
}

inline SweepState suite_independence(int n, int jobs) {
  // over permutations one size up: descent data in the first n positions
  // versus being a single cycle
  SweepState st = ranked_sweep(factorial_u64(n + 1), jobs, [&](std::uint64_t rank, SweepState& s) {
    const Permutation p = unrank_permutation(n + 1, rank);
    const std::uint32_t mask = descent_set(p).restricted(n).mask();
    ++s.counts[mask];
    if (is_cyclic(p)) ++s.counts2[mask];
    ++s.checked;
  });
  const std::vector<BigInt> alpha = alpha_table(n);
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const std::uint64_t among_cyclic = count_at(st.counts2, mask);
    const std::uint64_t among_all = count_at(st.counts, mask);
    const std::string tag = "I = " + format_descent_set(DescentSet::from_mask(mask, n));
    if (BigInt(among_cyclic) != alpha[mask])
      st.fail(tag + " (cyclic)", alpha[mask].str(), std::to_string(among_cyclic));
    if (BigInt(among_all) != alpha[mask] * (n + 1))
      st.fail(tag + " (all)", BigInt(alpha[mask] * (n + 1)).str(), std::to_string(among_all));
    // exact product form of independence
    const BigInt lhs = BigInt(among_cyclic) * factorial_big(n + 1);
    const BigInt rhs = BigInt(among_all) * factorial_big(n);
    if (lhs != rhs) st.fail(tag + " (product)", rhs.str(), lhs.str());
    st.checked += 3;
  }
  return st;
}

}  // namespace detail

inline VerificationReport verify_suite(const std::string& name, int n,
                                       VerifyOptions opts = {}) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  detail::SweepState st;
  if (name == "bij_roundtrip") {
    detail::require_cap(name, n, 9);
    st = detail::suite_bij_roundtrip(n, opts.jobs);
  } else if (name == "descents") {
    detail::require_cap(name, n, 9);
    st = detail::suite_descents(n, opts.jobs);
  } else if (name == "table1") {
    st = detail::suite_table1(n, opts.jobs);
  } else if (name == "examples") {
    st = detail::suite_examples(n, opts.jobs);
  } else if (name == "cor_cycles") {
    detail::require_cap(name, n, 9);
    st = detail::suite_cor_cycles(n, opts.jobs);
  } else if (name == "cor_biju") {
    detail::require_cap(name, n, 9);
    st = detail::suite_cor_biju(n, opts.jobs);
  } else if (name == "cor_elishift") {
    detail::require_cap(name, n, 9);
    st = detail::suite_cor_elishift(n, opts.jobs);
  } else if (name == "cor_cyclesu") {
    detail::require_cap(name, n, 8);
    st = detail::suite_cor_cyclesu(n, opts.jobs);
  } else if (name == "thm_gr") {
    detail::require_cap(name, n, 8);
    st = detail::suite_thm_gr(n, opts.jobs);
  } else if (name == "prop_subsets") {
    detail::require_cap(name, n, 8);
    st = detail::suite_prop_subsets(n, opts.jobs);
  } else if (name == "lemmas_trace") {
    detail::require_cap(name, n, 9);
    st = detail::suite_lemmas_trace(n, opts.jobs);
  } else if (name == "independence") {
    detail::require_cap(name, n, 9);
    st = detail::suite_independence(n, opts.jobs);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

  VerificationReport report;
  report.suite = name;
  report.n = n;
  report.checked = st.checked;
  report.failures = std::move(st.failures);
  report.millis =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return report;
}

}  // namespace cycdesc
