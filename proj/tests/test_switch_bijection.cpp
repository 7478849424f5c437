#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cycdesc/reference_data.hpp>
#include <cycdesc/switch_bijection.hpp>
#include <cycdesc/text_io.hpp>
#include <cycdesc/trace_checks.hpp>

using namespace cycdesc;

namespace {
const char* kCycle21 = "(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)";
const char* kCycle20 = "(2,9,17,6,11,19,7,13,12,15,8,14,1,4,5,10,18,3,16,20)";
}  // namespace

TEST_CASE("splitting at left-to-right maxima") {
  const WorkingCycles a = split_at_ltr_maxima(parse_cycles(kCycle21));
  CHECK(format_groups(a.groups()) == "(11,4,10,1,7)(16,9,3,5,12)(20,2,6,14,18,8,13,19,15,17)");

  const WorkingCycles b = split_at_ltr_maxima(parse_cycles(kCycle20));
  CHECK(format_groups(b.groups()) == "(2)(9)(17,6,11)(19,7,13,12,15,8,14,1,4,5,10,18,3,16)");

  // every prefix entry of (1,2,...,n+1) is a left-to-right maximum
  const WorkingCycles c = split_at_ltr_maxima(parse_cycles("(1,2,3,4,5,6)"));
  CHECK(format_groups(c.groups()) == "(1)(2)(3)(4)(5)");

  CHECK_THROWS_AS(split_at_ltr_maxima(parse_one_line("2 1 4 3")), std::invalid_argument);
  CHECK_THROWS_AS(split_at_ltr_maxima(Permutation::identity(1)), std::invalid_argument);
}

TEST_CASE("switch test P") {
  const Permutation pi = parse_cycles(kCycle21);
  WorkingCycles state = split_at_ltr_maxima(pi);

  CHECK(condition_p(pi, state, 7, 6));
  CHECK(condition_p(pi, state, 7, 8));
  // direction with the larger working image wins: succ(6)=14 > 13=succ(8)
  CHECK(state.successor(6) == 14);
  CHECK(state.successor(8) == 13);

  CHECK_FALSE(condition_p(pi, state, 0, 1));
  CHECK_FALSE(condition_p(pi, state, 1, 21));

  fix_cycle(1, pi, state);
  CHECK(format_groups(state.groups()) ==
        "(11,4,9,3,5)(16,10,2,6,12)(20,1,7,14,18,8,13,19,15,17)");
  CHECK_FALSE(condition_p(pi, state, 5, 4));
}

TEST_CASE("fixing one group at a time") {
  const Permutation pi = parse_cycles(kCycle21);
  WorkingCycles state = split_at_ltr_maxima(pi);

  SwitchTrace trace;
  trace.states.push_back(state.snapshot());
  fix_cycle(1, pi, state, &trace);
  CHECK(state.groups()[0] == std::vector<int>{11, 4, 9, 3, 5});
  std::vector<std::string> lines = format_trace_lines(trace);
  CHECK(lines == std::vector<std::string>{
                     "iter=1 step=I swap=(7,6)", "iter=1 step=II swap=(1,2)",
                     "iter=1 step=I swap=(6,5)", "iter=1 step=II swap=(2,3)",
                     "iter=1 step=II swap=(10,9)"});

  fix_cycle(2, pi, state, &trace);
  CHECK(state.groups()[1] == std::vector<int>{16, 10, 1, 7, 15});
  CHECK(format_trace_lines(trace).size() == 10);
  CHECK_FALSE(condition_p(pi, state, 15, 16));

  // a group whose rightmost entry admits no switch stays put
  const Permutation small = parse_cycles("(1,3,4,2,5)");
  WorkingCycles s2 = split_at_ltr_maxima(small);
  SwitchTrace t2;
  t2.states.push_back(s2.snapshot());
  fix_cycle(1, small, s2, &t2);
  CHECK(t2.events.empty());
  CHECK(format_groups(s2.groups()) == "(1)(3)(4,2)");
}

TEST_CASE("forward map golden values") {
  CHECK(phi(parse_cycles("(3,1,4,2,5)")) == parse_one_line("3 4 1 2"));

  const auto [sigma, trace] = phi_traced(parse_cycles(kCycle21));
  CHECK(format_groups(trace.states.back()) ==
        "(11,4,9,3,5)(16,10,1,7,15)(20,2,6,13,18,8,12,19,14,17)");
  CHECK(format_one_line(sigma) == "7 6 5 9 11 13 15 12 3 1 4 19 18 17 16 10 20 8 14 2");
  CHECK(format_descent_set(descent_set(sigma)) == "{1,2,7,8,9,12,13,14,15,17,19}");

  const Permutation sigma20 = phi(parse_cycles(kCycle20));
  CHECK(format_groups(canonical_cycle_form(sigma20).cycles) ==
        "(1)(4)(17,6,10)(19,8,13,12,15,9,14,2,5,7,11,18,3,16)");
  CHECK(format_one_line(sigma20) == "1 5 16 4 7 10 11 13 14 17 18 15 12 2 9 19 6 3 8");

  // ascending cycle maps to the identity
  CHECK(phi(parse_cycles("(1,2,3,4,5,6,7)")) == Permutation::identity(6));
}

TEST_CASE("merging blocks") {
  const Permutation s20 = parse_cycles(reference::walkthrough_s20().input);
  CHECK(format_block_form(merge_blocks(s20).snapshot()) ==
        "(11,4,9,3,5;16,10,1,7,15;20,2,6,13,18,8,12,19,14,17;21)");

  CHECK(format_block_form(merge_blocks(Permutation::identity(3)).snapshot()) == "(1;2;3;4)");

  const Permutation s19 = parse_cycles(reference::walkthrough_s19().input);
  CHECK(format_block_form(merge_blocks(s19).snapshot()) ==
        "(1;4;17,6,10;19,8,13,12,15,9,14,2,5,7,11,18,3,16;20)");
}

TEST_CASE("switch test Q") {
  const Permutation s20 = parse_cycles(reference::walkthrough_s20().input);
  WorkingBlocks state = merge_blocks(s20);
  CHECK(condition_q(s20, state, 15, 14));
  CHECK_FALSE(condition_q(s20, state, 15, 16));
  CHECK_FALSE(condition_q(s20, state, 0, 1));

  const Permutation s19 = parse_cycles(reference::walkthrough_s19().input);
  WorkingBlocks st19 = merge_blocks(s19);
  fix_block(3, s19, st19);
  CHECK(format_block_form(st19.snapshot()) ==
        "(1;4;17,7,11;19,8,13,12,15,9,14,2,5,6,10,18,3,16;20)");
  CHECK_FALSE(condition_q(s19, st19, 11, 12));
  // both directions admissible at the next block; the smaller image wins
  CHECK(condition_q(s19, st19, 4, 3));
  CHECK(condition_q(s19, st19, 4, 5));
  CHECK(st19.successor(3) == 16);
  CHECK(st19.successor(5) == 6);
}

TEST_CASE("inverse map golden values") {
  const auto& w3 = reference::walkthrough_s20();
  const auto [pi21, trace3] = psi_traced(parse_cycles(w3.input));
  CHECK(format_cycle_rotation(pi21) == kCycle21);
  std::vector<std::string> lines = format_trace_lines(trace3);
  CHECK(lines == std::vector<std::string>{
                     "iter=2 step=I' swap=(15,14)", "iter=2 step=I' swap=(14,13)",
                     "iter=2 step=II' swap=(7,6)", "iter=2 step=II' swap=(1,2)",
                     "iter=2 step=I' swap=(13,12)", "iter=1 step=I' swap=(5,6)",
                     "iter=1 step=II' swap=(3,2)", "iter=1 step=II' swap=(9,10)",
                     "iter=1 step=I' swap=(6,7)", "iter=1 step=II' swap=(2,1)"});

  CHECK(format_cycle_rotation(psi(parse_cycles(reference::walkthrough_s19().input))) ==
        kCycle20);

  CHECK(psi(Permutation::identity(4)) == parse_cycles("(1,2,3,4,5)"));
}

TEST_CASE("round trip, descents, and trace invariants at small sizes") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 1);
    do {
      CycleDecomposition dec;
      dec.n = n + 1;
      std::vector<int> cyc = rot;
      cyc.push_back(n + 1);
      dec.cycles.push_back(std::move(cyc));
      const Permutation pi = from_cycles(dec);

      const auto [sigma, trace] = phi_traced(pi);
      CHECK(psi(sigma) == pi);
      CHECK(descent_set(sigma) == descent_set(pi).restricted(n));
      CHECK(sigma.position_of(n) == pi.position_of(n + 1));

      for (const SwitchEvent& e : trace.events) CHECK(std::abs(e.a - e.b) == 1);
      CHECK(check_trace_invariants(pi, trace).empty());

      // the inverse's switches are the forward switches undone in reverse
      const auto [back, itrace] = psi_traced(sigma);
      CHECK(back == pi);
      REQUIRE(itrace.events.size() == trace.events.size());
    } while (std::next_permutation(rot.begin(), rot.end()));
  }
}

TEST_CASE("round trip on large random cycles") {
  std::mt19937 rng(20240811);
  for (int n : {50, 333, 2000}) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> rot(n);
      std::iota(rot.begin(), rot.end(), 1);
      std::shuffle(rot.begin(), rot.end(), rng);
      rot.push_back(n + 1);
      CycleDecomposition dec;
      dec.n = n + 1;
      dec.cycles.push_back(rot);
      const Permutation pi = from_cycles(dec);

      const Permutation sigma = phi(pi);
      CHECK(descent_set(sigma) == descent_set(pi).restricted(n));
      CHECK(sigma.position_of(n) == pi.position_of(n + 1));
      CHECK(psi(sigma) == pi);
    }
  }
}

TEST_CASE("forward then inverse across all small permutations") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
      const Permutation sigma{word};
      const Permutation pi = psi(sigma);
      CHECK(is_cyclic(pi));
      CHECK(pi.size() == n + 1);
      CHECK(phi(pi) == sigma);
    } while (std::next_permutation(word.begin(), word.end()));
  }
}
