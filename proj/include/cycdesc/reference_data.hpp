#pragma once

// Hand-checked reference fixtures.  Every value here was derived by
// tracing the switch procedures by hand and cross-checked against the
// library before being frozen; the golden tests and the `table1` /
// `examples` verification suites diff against these.

#include <string_view>
#include <vector>

#include "switch_bijection.hpp"

namespace cycdesc::reference {

struct ImageRow {
  std::string_view cycle;     // rotation ending with n+1
  std::string_view one_line;  // the cyclic permutation's word
  std::string_view image;     // forward-map image in S_n
  std::string_view descents;  // shared descent set
};

// All 24 images of the cyclic permutations of {1,...,5}, grouped by
// descent set ({} first, then by size and lexicographic order), rows
// inside a group ordered by the cycle rotation.
inline const std::vector<ImageRow>& c5_image_table() {
  static const std::vector<ImageRow> rows = {
      {"(1,2,3,4,5)", "2 3 4 5 1", "1 2 3 4", "{}"},
      {"(2,1,3,4,5)", "3 1 4 5 2", "2 1 3 4", "{1}"},
      {"(3,2,1,4,5)", "4 1 2 5 3", "3 1 2 4", "{1}"},
      {"(4,3,2,1,5)", "5 1 2 3 4", "4 1 2 3", "{1}"},
      {"(1,3,2,4,5)", "3 4 2 5 1", "1 3 2 4", "{2}"},
      {"(1,4,3,2,5)", "4 5 2 3 1", "1 4 2 3", "{2}"},
      {"(3,1,2,4,5)", "2 4 1 5 3", "2 3 1 4", "{2}"},
      {"(3,1,4,2,5)", "4 5 1 2 3", "3 4 1 2", "{2}"},
      {"(4,3,1,2,5)", "2 5 1 3 4", "2 4 1 3", "{2}"},
      {"(1,2,4,3,5)", "2 4 5 3 1", "1 2 4 3", "{3}"},
      {"(2,4,1,3,5)", "3 4 5 1 2", "1 3 4 2", "{3}"},
      {"(4,1,2,3,5)", "2 3 5 1 4", "2 3 4 1", "{3}"},
      {"(2,3,1,4,5)", "4 3 1 5 2", "3 2 1 4", "{1,2}"},
      {"(2,4,3,1,5)", "5 4 1 3 2", "4 2 1 3", "{1,2}"},
      {"(4,2,3,1,5)", "5 3 1 2 4", "4 3 1 2", "{1,2}"},
      {"(1,4,2,3,5)", "4 3 5 2 1", "3 2 4 1", "{1,3}"},
      {"(2,1,4,3,5)", "4 1 5 3 2", "2 1 4 3", "{1,3}"},
      {"(2,3,4,1,5)", "5 3 4 1 2", "4 2 3 1", "{1,3}"},
      {"(3,4,2,1,5)", "5 1 4 2 3", "4 1 3 2", "{1,3}"},
      {"(4,2,1,3,5)", "3 1 5 2 4", "3 1 4 2", "{1,3}"},
      {"(1,3,4,2,5)", "3 5 4 2 1", "1 4 3 2", "{2,3}"},
      {"(3,4,1,2,5)", "2 5 4 1 3", "2 4 3 1", "{2,3}"},
      {"(4,1,3,2,5)", "3 5 2 1 4", "3 4 2 1", "{2,3}"},
      {"(3,2,4,1,5)", "5 4 2 1 3", "4 3 2 1", "{1,2,3}"},
  };
  return rows;
}

struct TraceLine {
  int iteration;
  SwitchStep step;
  int a, b;
};

struct Walkthrough {
  bool forward;                    // forward map (true) or inverse (false)
  std::string_view input;          // cycle text (forward) / cycle-form text (inverse)
  std::string_view initial_form;   // groups after the split / blocks after the merge
  std::string_view result_cycles;  // image cycle form (forward) / output rotation (inverse)
  std::string_view result_one_line;
  std::string_view shared_descents;  // descent set preserved by the map
  std::vector<TraceLine> trace;
};

// Forward walkthrough on a 21-cycle.
inline const Walkthrough& walkthrough_c21() {
  static const Walkthrough w = {
      true,
      "(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)",
      "(11,4,10,1,7)(16,9,3,5,12)(20,2,6,14,18,8,13,19,15,17)",
      "(11,4,9,3,5)(16,10,1,7,15)(20,2,6,13,18,8,12,19,14,17)",
      "7 6 5 9 11 13 15 12 3 1 4 19 18 17 16 10 20 8 14 2",
      "{1,2,7,8,9,12,13,14,15,17,19}",
      {
          {1, SwitchStep::I, 7, 6},
          {1, SwitchStep::II, 1, 2},
          {1, SwitchStep::I, 6, 5},
          {1, SwitchStep::II, 2, 3},
          {1, SwitchStep::II, 10, 9},
          {2, SwitchStep::I, 12, 13},
          {2, SwitchStep::I, 13, 14},
          {2, SwitchStep::II, 6, 7},
          {2, SwitchStep::II, 2, 1},
          {2, SwitchStep::I, 14, 15},
      },
  };
  return w;
}

// Forward walkthrough on a 20-cycle.
inline const Walkthrough& walkthrough_c20() {
  static const Walkthrough w = {
      true,
      "(2,9,17,6,11,19,7,13,12,15,8,14,1,4,5,10,18,3,16,20)",
      "(2)(9)(17,6,11)(19,7,13,12,15,8,14,1,4,5,10,18,3,16)",
      "(1)(4)(17,6,10)(19,8,13,12,15,9,14,2,5,7,11,18,3,16)",
      "1 5 16 4 7 10 11 13 14 17 18 15 12 2 9 19 6 3 8",
      "{3,11,12,13,16,17}",
      {
          {1, SwitchStep::I, 2, 1},
          {2, SwitchStep::I, 9, 8},
          {2, SwitchStep::I, 8, 7},
          {2, SwitchStep::I, 7, 6},
          {2, SwitchStep::I, 6, 5},
          {2, SwitchStep::I, 5, 4},
          {3, SwitchStep::I, 11, 10},
          {3, SwitchStep::II, 7, 6},
      },
  };
  return w;
}

// Inverse walkthrough recovering the 21-cycle above.
inline const Walkthrough& walkthrough_s20() {
  static const Walkthrough w = {
      false,
      "(11,4,9,3,5)(16,10,1,7,15)(20,2,6,13,18,8,12,19,14,17)",
      "(11,4,9,3,5;16,10,1,7,15;20,2,6,13,18,8,12,19,14,17;21)",
      "(11,4,10,1,7,16,9,3,5,12,20,2,6,14,18,8,13,19,15,17,21)",
      "7 6 5 10 12 14 16 13 3 1 4 20 19 18 17 9 21 8 15 2 11",
      "{1,2,7,8,9,12,13,14,15,17,19}",
      {
          {2, SwitchStep::Ip, 15, 14},
          {2, SwitchStep::Ip, 14, 13},
          {2, SwitchStep::IIp, 7, 6},
          {2, SwitchStep::IIp, 1, 2},
          {2, SwitchStep::Ip, 13, 12},
          {1, SwitchStep::Ip, 5, 6},
          {1, SwitchStep::IIp, 3, 2},
          {1, SwitchStep::IIp, 9, 10},
          {1, SwitchStep::Ip, 6, 7},
          {1, SwitchStep::IIp, 2, 1},
      },
  };
  return w;
}

// Inverse walkthrough recovering the 20-cycle above.
inline const Walkthrough& walkthrough_s19() {
  static const Walkthrough w = {
      false,
      "(1)(4)(17,6,10)(19,8,13,12,15,9,14,2,5,7,11,18,3,16)",
      "(1;4;17,6,10;19,8,13,12,15,9,14,2,5,7,11,18,3,16;20)",
      "(2,9,17,6,11,19,7,13,12,15,8,14,1,4,5,10,18,3,16,20)",
      "4 9 16 5 10 11 13 14 17 18 19 15 12 1 8 20 6 3 7 2",
      "{3,11,12,13,16,17}",
      {
          {3, SwitchStep::Ip, 10, 11},
          {3, SwitchStep::IIp, 6, 7},
          {2, SwitchStep::Ip, 4, 5},
          {2, SwitchStep::Ip, 5, 6},
          {2, SwitchStep::Ip, 6, 7},
          {2, SwitchStep::Ip, 7, 8},
          {2, SwitchStep::Ip, 8, 9},
          {1, SwitchStep::Ip, 1, 2},
      },
  };
  return w;
}

inline std::vector<const Walkthrough*> walkthroughs() {
  return {&walkthrough_c21(), &walkthrough_c20(), &walkthrough_s20(), &walkthrough_s19()};
}

// Transfer fixture at n = 12: one source permutation, two target descent
// sets with the same associated partition as {2,8}.
struct TransferFixture {
  std::string_view pi = "3 4 1 2 5 9 11 12 6 7 8 10";
  std::string_view from = "{2,8}";
  std::string_view necklaces = "(2,3)(2,3)(3)(3,1)(3,1,3,1,1)";  // painted toward {4,6}
  std::string_view to_a = "{4,6}";
  std::string_view image_a = "3 7 8 9 10 11 1 2 4 5 6 12";
  std::string_view to_b = "{2,6}";
  std::string_view image_b = "7 8 5 9 10 11 1 2 3 4 6 12";
};

inline const TransferFixture& transfer_fixture() {
  static const TransferFixture f;
  return f;
}

}  // namespace cycdesc::reference
