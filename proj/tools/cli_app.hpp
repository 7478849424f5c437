#pragma once

// Command-line surface.  Subcommands:
//
//   map {phi|psi|u|t0|cyclesu}   apply one of the bijections
//   table --n N                  all images of the cyclic permutations of
//                                {1,...,N+1}, grouped by descent set
//   verify --suite NAME --n N    run one exhaustive verification suite
//   count --n N --subset I       descent-set counting (exact or contained)
//   transfer --perm P --from I --to J
//                                cycle-type-preserving transfer between
//                                descent classes
//
// Global flags: --format text|json, --trace, --jobs N, --allow-large.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cycdesc/cycdesc.hpp>

namespace cycdesc::cli {

using nlohmann::json;

struct GlobalFlags {
  std::string format = "text";
  bool trace = false;
  int jobs = 1;
  bool allow_large = false;
};

namespace detail {

inline json descents_json(const DescentSet& d) {
  json arr = json::array();
  for (int e : d.elements()) arr.push_back(e);
  return arr;
}

inline json trace_json(const SwitchTrace& trace) {
  json states = json::array();
  for (const auto& snap : trace.states) {
    json groups = json::array();
    for (const auto& g : snap) groups.push_back(g);
    states.push_back(json{{"groups", groups}});
  }
  json events = json::array();
  for (const auto& e : trace.events)
    events.push_back(json{{"iter", e.iteration},
                          {"step", step_name(e.step)},
                          {"swap", {e.a, e.b}},
                          {"state", e.state_index}});
  return json{{"kind", trace.forward ? "cycles" : "blocks"},
              {"states", states},
              {"events", events}};
}

inline void print_trace_text(const SwitchTrace& trace, std::ostream& out) {
  out << "trace:\n";
  for (const std::string& line : format_trace_lines(trace)) out << "  " << line << "\n";
}

inline json report_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  return json{{"suite", r.suite},
              {"n", r.n},
              {"checked", r.checked},
              {"failures", failures},
              {"millis", r.millis}};
}

struct MapInput {
  std::string cycle_text, perm_text, word_text;
  int m = 0;
};

inline Permutation read_permutation(const MapInput& in) {
  if (!in.cycle_text.empty() && !in.perm_text.empty())
    throw std::invalid_argument("give the input either as --cycle or as --perm, not both");
  if (!in.cycle_text.empty()) return parse_cycles(in.cycle_text);
  if (!in.perm_text.empty()) return parse_permutation(in.perm_text);
  throw std::invalid_argument("missing input (--cycle or --perm)");
}

// Result of one map application, already formatted both ways.
struct MapResult {
  std::string kind;
  int n = 0;  // size of the S_n side
  json input;
  Permutation image = Permutation::identity(1);
  bool image_is_cycle = false;  // psi produces a cyclic permutation
  DescentSet shared = DescentSet::empty(1);
  bool have_trace = false;
  SwitchTrace trace;
};

inline MapResult apply_map(const std::string& kind, const MapInput& in, bool want_trace) {
  MapResult r;
  r.kind = kind;
  if (kind == "phi") {
    const Permutation pi = read_permutation(in);
    auto [sigma, trace] = phi_traced(pi);
    r.n = pi.size() - 1;
    r.input = json{{"cycle", format_cycle_rotation(pi)}, {"one_line", format_one_line(pi)}};
    r.image = std::move(sigma);
    r.shared = descent_set(r.image);
    r.have_trace = want_trace;
    r.trace = std::move(trace);
  } else if (kind == "psi") {
    const Permutation sigma = read_permutation(in);
    auto [pi, trace] = psi_traced(sigma);
    r.n = sigma.size();
    r.input = json{{"one_line", format_one_line(sigma)}, {"cycles", format_cycles(sigma)}};
    r.image = std::move(pi);
    r.image_is_cycle = true;
    r.shared = descent_set(sigma);
    r.have_trace = want_trace;
    r.trace = std::move(trace);
  } else if (kind == "u" || kind == "t0") {
    if (in.word_text.empty()) throw std::invalid_argument("missing input (--word)");
    const MarkedWord tau = parse_marked_word(in.word_text);
    if (kind == "u" && tau.kind() != MarkKind::top)
      throw std::invalid_argument("map u expects a word marked with n+1");
    if (kind == "t0" && tau.kind() != MarkKind::zero)
      throw std::invalid_argument("map t0 expects a word marked with 0");
    r.n = tau.n();
    r.input = json{{"word", format_marked_word(tau)},
                   {"marked_pos", tau.marked_pos()},
                   {"missing", tau.missing_value()}};
    if (kind == "u") {
      const Permutation lifted = u_to_cycle(tau);
      auto [sigma, trace] = phi_traced(lifted);
      r.image = std::move(sigma);
      r.have_trace = want_trace;
      r.trace = std::move(trace);
    } else {
      const MarkedWord mirrored = reverse_complement(tau);
      auto [sigma, trace] = phi_traced(u_to_cycle(mirrored));
      r.image = reverse_complement(sigma);
      r.have_trace = want_trace;  // trace of the mirrored forward run
      r.trace = std::move(trace);
    }
    r.shared = descent_set(r.image);
  } else if (kind == "cyclesu") {
    const Permutation pi = read_permutation(in);
    if (in.m < 1) throw std::invalid_argument("map cyclesu needs --m");
    r.n = pi.size();
    r.input = json{{"cycle", format_cycle_rotation(pi)},
                   {"one_line", format_one_line(pi)},
                   {"m", in.m}};
    r.image = cyclesu_map(pi, in.m);
    r.shared = descent_set(r.image);
  } else {
    throw std::invalid_argument("unknown map kind '" + kind + "'");
  }
  return r;
}

inline void print_map_result(const MapResult& r, const GlobalFlags& flags, std::ostream& out) {
  if (flags.format == "json") {
    json doc{{"map", r.kind},
             {"n", r.n},
             {"input", r.input},
             {"image", json{{"one_line", format_one_line(r.image)},
                            {"cycles", r.image_is_cycle ? format_cycle_rotation(r.image)
                                                        : format_cycles(r.image)},
                            {"dotted", format_one_line_dotted(std::span<const int>(r.image.word()))},
                            {"descents", descents_json(descent_set(r.image))}}}};
    if (r.have_trace) doc["trace"] = trace_json(r.trace);
    out << doc.dump(2) << "\n";
    return;
  }
  if (r.image_is_cycle) {
    out << "cycle:    " << format_cycle_rotation(r.image) << "\n";
    out << "one-line: " << format_one_line(r.image) << "\n";
  } else {
    out << "one-line: " << format_one_line(r.image) << "\n";
    out << "cycles:   " << format_cycles(r.image) << "\n";
  }
  out << "dotted:   " << format_one_line_dotted(std::span<const int>(r.image.word())) << "\n";
  out << "descents: " << format_descent_set(r.shared) << "\n";
  if (r.have_trace) print_trace_text(r.trace, out);
}

struct TableRow {
  std::string cycle, pi_word, sigma_word;
  std::uint32_t mask;
};

inline std::vector<TableRow> build_table(int n) {
  std::vector<TableRow> rows;
  rows.reserve(factorial_u64(n));
  for_each_cyclic(n + 1, [&](const Permutation& pi) {
    const Permutation sigma = phi(pi);
    rows.push_back({format_cycle_rotation(pi), format_one_line(pi), format_one_line(sigma),
                    descent_set(sigma).mask()});
  });
  return rows;
}

// Group masks ordered by size, then numerically; rows inside a group keep
// the cycle-rotation order of the enumeration.
inline std::vector<std::uint32_t> group_order(int n) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return masks;
}

inline void print_table(int n, const GlobalFlags& flags, std::ostream& out) {
  const std::vector<TableRow> rows = build_table(n);
  const std::vector<std::uint32_t> order = group_order(n);
  if (flags.format == "json") {
    json jrows = json::array();
    for (std::uint32_t mask : order)
      for (const TableRow& r : rows)
        if (r.mask == mask)
          jrows.push_back(json{{"cycle", r.cycle},
                               {"pi", r.pi_word},
                               {"sigma", r.sigma_word},
                               {"descents", descents_json(DescentSet::from_mask(mask, n))}});
    out << json{{"n", n}, {"rows", jrows}}.dump(2) << "\n";
    return;
  }
  for (std::uint32_t mask : order) {
    bool first = true;
    for (const TableRow& r : rows) {
      if (r.mask != mask) continue;
      if (first) {
        out << "# D = " << format_descent_set(DescentSet::from_mask(mask, n)) << "\n";
        first = false;
      }
      out << r.cycle << "\t" << r.pi_word << "\t" << r.sigma_word << "\t"
          << format_descent_set(DescentSet::from_mask(mask, n)) << "\n";
    }
  }
}

inline int suite_bound(const std::string& suite, bool allow_large) {
  if (suite == "cor_cyclesu" || suite == "thm_gr" || suite == "prop_subsets")
    return allow_large ? 8 : 7;
  return allow_large ? 9 : 8;
}

}  // namespace detail

inline int run(const std::vector<std::string>& arguments, std::ostream& out,
               std::ostream& err) {
  GlobalFlags flags;
  CLI::App app{"descent-preserving bijections on cyclic permutations"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", flags.trace, "record and print the switch log");
  app.add_option("--jobs", flags.jobs, "worker threads for verification sweeps (0 = all)");
  app.add_flag("--allow-large", flags.allow_large, "raise the desk-scale size bounds by one");

  std::string map_kind;
  detail::MapInput map_input;
  CLI::App* map_cmd = app.add_subcommand("map", "apply one of the bijections");
  map_cmd->add_option("kind", map_kind, "phi | psi | u | t0 | cyclesu")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "u", "t0", "cyclesu"}));
  map_cmd->add_option("--cycle", map_input.cycle_text, "input in cycle form");
  map_cmd->add_option("--perm", map_input.perm_text, "input in one-line form");
  map_cmd->add_option("--word", map_input.word_text, "marked word (contains 0 or n+1)");
  map_cmd->add_option("--m", map_input.m, "distinguished position for cyclesu");

  int table_n = 0;
  CLI::App* table_cmd = app.add_subcommand("table", "full image table at size n");
  table_cmd->add_option("--n", table_n, "table size")->required();

  std::string verify_suite_name;
  int verify_n = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_suite_name, "suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  verify_cmd->add_option("--n", verify_n, "family size")->required();

  int count_n = 0;
  std::string count_subset, count_mode = "exact";
  CLI::App* count_cmd = app.add_subcommand("count", "descent-set counting");
  count_cmd->add_option("--n", count_n, "permutation size")->required();
  count_cmd->add_option("--subset", count_subset, "descent positions, e.g. 2,8 or {}");
  count_cmd->add_option("--mode", count_mode, "exact | contained")
      ->check(CLI::IsMember({"exact", "contained"}));

  std::string transfer_perm, transfer_from, transfer_to;
  bool show_necklaces = false;
  CLI::App* transfer_cmd =
      app.add_subcommand("transfer", "cycle-type-preserving descent-class transfer");
  transfer_cmd->add_option("--perm", transfer_perm, "source permutation")->required();
  transfer_cmd->add_option("--from", transfer_from, "source descent bound I")->required();
  transfer_cmd->add_option("--to", transfer_to, "target descent bound J")->required();
  transfer_cmd->add_flag("--show-necklaces", show_necklaces,
                         "also print the intermediate necklace multiset");

  try {
    std::vector<std::string> reversed(arguments.rbegin(), arguments.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (map_cmd->parsed()) {
      const detail::MapResult r = detail::apply_map(map_kind, map_input, flags.trace);
      detail::print_map_result(r, flags, out);
      return 0;
    }
    if (table_cmd->parsed()) {
      const int bound = flags.allow_large ? 9 : 8;
      if (table_n < 1 || table_n > bound) {
        err << "table supports 1 <= n <= " << bound
            << " (the table has n! rows; pass --allow-large for n = 9)\n";
        return 2;
      }
      detail::print_table(table_n, flags, out);
      return 0;
    }
    if (verify_cmd->parsed()) {
      const int bound = detail::suite_bound(verify_suite_name, flags.allow_large);
      const bool fixed_size =
          verify_suite_name == "table1" || verify_suite_name == "examples";
      if (!fixed_size && (verify_n < 1 || verify_n > bound)) {
        err << "suite " << verify_suite_name << " supports 1 <= n <= " << bound
            << " in this profile (pass --allow-large for one size more)\n";
        return 2;
      }
      const VerificationReport report =
          verify_suite(verify_suite_name, verify_n, VerifyOptions{flags.jobs});
      if (flags.format == "json") {
        out << detail::report_json(report).dump(2) << "\n";
      } else {
        out << "suite=" << report.suite << " n=" << report.n
            << " checked=" << report.checked << " failures=" << report.failures.size()
            << " millis=" << static_cast<long long>(report.millis) << "\n";
        for (const auto& f : report.failures)
          out << "  input=" << f.input << " expected=" << f.expected
              << " actual=" << f.actual << "\n";
      }
      return report.passed() ? 0 : 1;
    }
    if (count_cmd->parsed()) {
      const DescentSet I = parse_descent_set(count_subset, count_n);
      const BigInt value =
          count_mode == "exact" ? alpha_count(count_n, I) : beta_count(count_n, I);
      if (flags.format == "json") {
        out << json{{"n", count_n},
                    {"subset", detail::descents_json(I)},
                    {"mode", count_mode},
                    {"count", value.str()}}
                   .dump(2)
            << "\n";
      } else {
        out << value.str() << "\n";
      }
      return 0;
    }
    if (transfer_cmd->parsed()) {
      const Permutation pi = parse_permutation(transfer_perm);
      const DescentSet I = parse_descent_set(transfer_from, pi.size());
      const DescentSet J = parse_descent_set(transfer_to, pi.size());
      const TransferPlan plan = make_transfer_plan(I, J);
      const NecklaceMultiset m = permutation_to_necklaces(pi, I, plan.alpha);
      const Permutation sigma = necklaces_to_permutation(m, J);
      if (flags.format == "json") {
        json doc{{"pi", format_one_line(pi)},
                 {"from", detail::descents_json(I)},
                 {"to", detail::descents_json(J)},
                 {"sigma", format_one_line(sigma)}};
        if (show_necklaces) {
          doc["necklaces"] = format_necklaces(m);
          doc["evaluation"] = m.evaluation(static_cast<int>(plan.alpha.size()));
        }
        out << doc.dump(2) << "\n";
      } else {
        out << format_one_line(sigma) << "\n";
        if (show_necklaces) out << "necklaces: " << format_necklaces(m) << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace cycdesc::cli
