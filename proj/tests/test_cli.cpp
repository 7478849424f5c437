#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <cycdesc/reference_data.hpp>
#include "tools/cli_app.hpp"
#include "tests/support/schema_check.hpp"

using namespace cycdesc;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string schema_path(const std::string& name) {
  return std::string(CYCDESC_SOURCE_DIR) + "/schemas/" + name;
}

void check_schema(const std::string& schema, const std::string& output) {
  const auto errors = schema_check::validate_against_file(schema_path(schema),
                                                          json::parse(output));
  for (const auto& e : errors) FAIL_CHECK(e);
}

}  // namespace

TEST_CASE("map subcommand") {
  const CliRun phi_run = run_cli({"map", "phi", "--cycle", "(3,1,4,2,5)"});
  CHECK(phi_run.code == 0);
  const auto phi_lines = lines_of(phi_run.out);
  REQUIRE(phi_lines.size() >= 4);
  CHECK(phi_lines[0] == "one-line: 3 4 1 2");
  CHECK(phi_lines[1] == "cycles:   (3,1)(4,2)");
  CHECK(phi_lines[2] == "dotted:   3 4.1 2");
  CHECK(phi_lines[3] == "descents: {2}");
  // text output parses back through the CLI's own input grammar
  CHECK(parse_one_line(phi_lines[0].substr(10)) == parse_one_line("3 4 1 2"));
  CHECK(parse_cycles(phi_lines[1].substr(10)) == parse_one_line("3 4 1 2"));

  const CliRun psi_run = run_cli({"map", "psi", "--perm", "1 2 3"});
  CHECK(psi_run.code == 0);
  const auto psi_lines = lines_of(psi_run.out);
  CHECK(psi_lines[0] == "cycle:    (1,2,3,4)");
  CHECK(psi_lines[1] == "one-line: 2 3 4 1");

  const CliRun t0_run = run_cli({"map", "t0", "--word", "0 1 2"});
  CHECK(lines_of(t0_run.out)[0] == "one-line: 1 2 3");

  const CliRun u_run = run_cli({"map", "u", "--word", "4 3 1"});
  CHECK(lines_of(u_run.out)[0] == "one-line: 3 2 1");

  const CliRun cy_run = run_cli({"map", "cyclesu", "--perm", "2 3 4 1", "--m", "2"});
  CHECK(cy_run.code == 0);
  const Permutation cy_image = parse_one_line(lines_of(cy_run.out)[0].substr(10));
  CHECK(cy_image(2) == 1);
}

TEST_CASE("map with trace") {
  const auto& w = reference::walkthrough_c21();
  const CliRun run = run_cli({"map", "phi", "--cycle", std::string(w.input), "--trace"});
  CHECK(run.code == 0);
  const auto lines = lines_of(run.out);
  std::vector<std::string> trace_lines;
  bool in_trace = false;
  for (const auto& line : lines) {
    if (line == "trace:") {
      in_trace = true;
      continue;
    }
    if (in_trace) trace_lines.push_back(line.substr(2));
  }
  REQUIRE(trace_lines.size() == w.trace.size());
  for (std::size_t k = 0; k < w.trace.size(); ++k) {
    const auto& f = w.trace[k];
    CHECK(trace_lines[k] == "iter=" + std::to_string(f.iteration) + " step=" +
                                step_name(f.step) + " swap=(" + std::to_string(f.a) +
                                "," + std::to_string(f.b) + ")");
  }

  const CliRun jrun =
      run_cli({"--format", "json", "map", "phi", "--cycle", std::string(w.input), "--trace"});
  CHECK(jrun.code == 0);
  check_schema("map_result.schema.json", jrun.out);
  const json doc = json::parse(jrun.out);
  CHECK(doc["trace"]["events"].size() == w.trace.size());
  CHECK(doc["trace"]["states"].size() == w.trace.size() + 1);
  CHECK(doc["image"]["one_line"] == std::string(w.result_one_line));
}

TEST_CASE("table subcommand") {
  const CliRun run = run_cli({"table", "--n", "4"});
  CHECK(run.code == 0);
  std::vector<std::string> data_rows;
  for (const auto& line : lines_of(run.out))
    if (!line.empty() && line[0] != '#') data_rows.push_back(line);
  const auto& expect = reference::c5_image_table();
  REQUIRE(data_rows.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const std::string want = std::string(expect[i].cycle) + "\t" +
                             std::string(expect[i].one_line) + "\t" +
                             std::string(expect[i].image) + "\t" +
                             std::string(expect[i].descents);
    CHECK(data_rows[i] == want);
  }

  const CliRun tiny = run_cli({"table", "--n", "1"});
  CHECK(lines_of(tiny.out) == std::vector<std::string>{"# D = {}", "(1,2)\t2 1\t1\t{}"});

  const CliRun jrun = run_cli({"--format", "json", "table", "--n", "4"});
  check_schema("table.schema.json", jrun.out);
  CHECK(json::parse(jrun.out)["rows"].size() == 24);

  const CliRun refused = run_cli({"table", "--n", "12"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("table supports") != std::string::npos);
  CHECK(run_cli({"table", "--n", "9"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const CliRun run = run_cli({"verify", "--suite", "table1", "--n", "4"});
  CHECK(run.code == 0);
  CHECK(run.out.find("failures=0") != std::string::npos);

  const CliRun jrun =
      run_cli({"--format", "json", "--jobs", "2", "verify", "--suite", "bij_roundtrip",
               "--n", "5"});
  CHECK(jrun.code == 0);
  check_schema("verify_report.schema.json", jrun.out);
  const json doc = json::parse(jrun.out);
  CHECK(doc["checked"] == 120);
  CHECK(doc["failures"].empty());

  CHECK(run_cli({"verify", "--suite", "bogus", "--n", "4"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "bij_roundtrip", "--n", "9"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "thm_gr", "--n", "8"}).code == 2);
}

TEST_CASE("count subcommand") {
  CHECK(run_cli({"count", "--n", "4", "--subset", "2", "--mode", "exact"}).out == "5\n");
  CHECK(run_cli({"count", "--n", "4", "--subset", "2", "--mode", "contained"}).out == "6\n");
  CHECK(run_cli({"count", "--n", "4", "--subset", "{}"}).out == "1\n");
  CHECK(run_cli({"count", "--n", "30", "--subset", "15", "--mode", "contained"}).out ==
        "155117520\n");

  const CliRun jrun =
      run_cli({"--format", "json", "count", "--n", "13", "--subset", "3,5,8,12"});
  CHECK(jrun.code == 0);
  check_schema("count.schema.json", jrun.out);

  CHECK(run_cli({"count", "--n", "4", "--subset", "7"}).code == 2);
}

TEST_CASE("transfer subcommand") {
  const auto& fx = reference::transfer_fixture();
  const CliRun run = run_cli({"transfer", "--perm", std::string(fx.pi), "--from", "2,8",
                              "--to", "4,6", "--show-necklaces"});
  CHECK(run.code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == std::string(fx.image_a));
  CHECK(lines[1] == "necklaces: " + std::string(fx.necklaces));

  const CliRun second = run_cli({"transfer", "--perm", std::string(fx.pi), "--from", "2,8",
                                 "--to", "2,6"});
  CHECK(lines_of(second.out)[0] == std::string(fx.image_b));

  const CliRun jrun =
      run_cli({"--format", "json", "transfer", "--perm", std::string(fx.pi), "--from",
               "2,8", "--to", "4,6", "--show-necklaces"});
  check_schema("transfer.schema.json", jrun.out);

  CHECK(run_cli({"transfer", "--perm", std::string(fx.pi), "--from", "2,8", "--to",
                 "3,4"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"map", "nonsense", "--perm", "1"}).code == 2);
  CHECK(run_cli({"map", "phi"}).code == 2);                             // missing input
  CHECK(run_cli({"map", "phi", "--perm", "2 1 4 3"}).code == 2);        // not cyclic
  CHECK(run_cli({"map", "u", "--word", "1 2 3"}).code == 2);            // no mark
  CHECK(run_cli({"map", "cyclesu", "--perm", "2 3 1"}).code == 2);      // missing --m
  CHECK(run_cli({"--help"}).code == 0);
}
