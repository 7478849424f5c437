#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <cycdesc/families.hpp>
#include <cycdesc/marked_words.hpp>
#include <cycdesc/text_io.hpp>

using namespace cycdesc;

TEST_CASE("marked word validation") {
  const MarkedWord t = parse_marked_word("4 3 1");
  CHECK(t.kind() == MarkKind::top);
  CHECK(t.marked_pos() == 1);
  CHECK(t.missing_value() == 2);
  CHECK(t.underlying_cycle() == parse_one_line("2 3 1"));

  const MarkedWord z = parse_marked_word("0 3 1");
  CHECK(z.kind() == MarkKind::zero);
  CHECK(z.missing_value() == 2);

  CHECK_THROWS_AS(parse_marked_word("1 2 3"), std::invalid_argument);   // no mark
  CHECK_THROWS_AS(parse_marked_word("0 4 1"), std::invalid_argument);   // two marks
  CHECK_THROWS_AS(parse_marked_word("0 2 1"), std::invalid_argument);   // not an n-cycle
  CHECK_THROWS_AS(parse_marked_word("5 3 1"), std::invalid_argument);   // entry out of range

  // structural law of zero-marked words: a descent right before the 0,
  // never one right after
  for (int n = 1; n <= 6; ++n)
    for_each_marked(MarkKind::zero, n, [&](const MarkedWord& tau) {
      const int i = tau.marked_pos();
      const DescentSet d = tau.descent_set();
      if (i > 1) CHECK(d.contains(i - 1));
      if (i <= n - 1) CHECK_FALSE(d.contains(i));
    });
}

TEST_CASE("reverse complement swaps the marker kinds") {
  const std::set<std::string> u3 = {"4 3 1", "2 4 1", "2 3 4", "4 1 2", "3 4 2", "3 1 4"};
  const MarkedWord rc = reverse_complement(parse_marked_word("0 3 1"));
  CHECK(rc.kind() == MarkKind::top);
  CHECK(u3.count(format_marked_word(rc)) == 1);

  for_each_marked(MarkKind::zero, 5, [&](const MarkedWord& tau) {
    CHECK(reverse_complement(reverse_complement(tau)) == tau);
    CHECK(reverse_complement(tau).kind() == MarkKind::top);
  });
}

TEST_CASE("lifting top-marked words to cyclic permutations") {
  CHECK(u_to_cycle(parse_marked_word("4 3 1")) == parse_cycles("(2,3,1,4)"));

  // ascending family: 2 3 ... n n+1 lifts to the ascending cycle
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 2);
    const MarkedWord tau = MarkedWord::from_word(word);
    std::vector<int> full(n + 1);
    std::iota(full.begin(), full.end(), 1);
    CHECK(u_to_cycle(tau) == parse_cycles(format_group(full)));
  }

  // bijection onto the cyclic permutations one size up; the first n
  // one-line entries of the lift reproduce the marked word
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    for_each_marked(MarkKind::top, n, [&](const MarkedWord& tau) {
      const Permutation lifted = u_to_cycle(tau);
      CHECK(is_cyclic(lifted));
      const std::vector<int> prefix(lifted.word().begin(), lifted.word().begin() + n);
      CHECK(prefix == tau.word());
      CHECK(u_from_cycle(lifted) == tau);
      images.insert(format_one_line(lifted));
    });
    CHECK(images.size() == factorial_u64(n));
  }
}

TEST_CASE("top-marked image laws") {
  CHECK(phi_u(parse_marked_word("4 3 1")) == parse_one_line("3 2 1"));

  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    for_each_marked(MarkKind::top, n, [&](const MarkedWord& tau) {
      const Permutation sigma = phi_u(tau);
      CHECK(descent_set(sigma) == tau.descent_set());
      CHECK(sigma(tau.marked_pos()) == n);
      CHECK(phi_u_inverse(sigma) == tau);
      images.insert(format_one_line(sigma));
    });
    CHECK(images.size() == factorial_u64(n));
  }
}

TEST_CASE("zero-marked image laws") {
  CHECK(phi_t0(parse_marked_word("0 1 2")) == Permutation::identity(3));
  CHECK(phi_t0(parse_marked_word("3 1 0")) == parse_one_line("3 2 1"));

  const std::set<std::string> t03 = {"0 3 1", "2 0 1", "2 3 0", "0 1 2", "3 0 2", "3 1 0"};
  std::set<std::string> seen, images;
  for_each_marked(MarkKind::zero, 3, [&](const MarkedWord& tau) {
    seen.insert(format_marked_word(tau));
    images.insert(format_one_line(phi_t0(tau)));
  });
  CHECK(seen == t03);
  CHECK(images.size() == 6);

  for (int n = 1; n <= 6; ++n)
    for_each_marked(MarkKind::zero, n, [&](const MarkedWord& tau) {
      const Permutation sigma = phi_t0(tau);
      CHECK(descent_set(sigma) == tau.descent_set());
      CHECK(sigma(tau.marked_pos()) == 1);
      CHECK(phi_t0_inverse(sigma) == tau);
    });
}

TEST_CASE("cycles with a distinguished position") {
  const Permutation pi = parse_one_line("2 3 4 1");
  const Permutation sigma = cyclesu_map(pi, 2);
  CHECK(sigma(2) == 1);
  CHECK(descent_set(sigma).contains(3) == descent_set(pi).contains(3));

  CHECK_THROWS_AS(cyclesu_map(parse_one_line("2 1 4 3"), 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclesu_map(pi, 5), std::invalid_argument);

  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      std::set<std::string> images;
      for_each_cyclic(n, [&](const Permutation& c) {
        const Permutation s = cyclesu_map(c, m);
        CHECK(s(m) == 1);
        for (int j = 1; j <= n - 1; ++j) {
          if (j == m - 1 || j == m) continue;
          CHECK(descent_set(s).contains(j) == descent_set(c).contains(j));
        }
        CHECK(cyclesu_inverse(s, m) == c);
        images.insert(format_one_line(s));
      });
      CHECK(images.size() == factorial_u64(n - 1));
    }
}
