// Drives the installed binary end to end: exit codes, output determinism,
// and the JSON surface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(GWC_TESTDATA) + "/cli_out.tmp";
  std::string cmd = std::string(GWC_BIN) + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(tmp.c_str());
  int code = -1;
  if (rc != -1) code = WEXITSTATUS(rc);
  return {code, ss.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GWC_TESTDATA) + "/" + name;
}

}  // namespace

int main() {
  auto milnor = run("milnor \"x^3 - y^2\"");
  expect(milnor.exit_code == 0, "milnor exits 0");
  expect(milnor.output.find("mu = 2") != std::string::npos, "milnor reports mu = 2");

  auto bad = run("milnor \"x^2*y\"");
  expect(bad.exit_code == 2, "non-isolated input exits 2, got " +
                                 std::to_string(bad.exit_code));
  expect(bad.output.find("NotIsolated") != std::string::npos, "error names the code");

  auto parse_err = run("milnor \"x +\"");
  expect(parse_err.exit_code == 2, "parse error exits 2");

  auto eq = run("gw equal \"2,-2\" \"1,-1\"");
  expect(eq.exit_code == 0, "equal classes exit 0");
  auto neq = run("gw equal \"1\" \"2\"");
  expect(neq.exit_code == 1, "unequal classes exit 1");

  auto curve = run("curve-check " + fixture("cusp_cubic.json"));
  expect(curve.exit_code == 0, "cusp cubic curve-check exits 0");

  auto cond = run("conductor " + fixture("a1_surface_n2.json") + " --format json");
  expect(cond.exit_code == 0, "rhs-only conductor exits 0");
  expect(cond.output.find("\"lhs\": null") != std::string::npos,
         "rhs-only report has no fabricated lhs");

  auto smooth = run("conductor " + fixture("smooth_family.json"));
  expect(smooth.exit_code == 0, "smooth family exits 0");
  expect(smooth.output.find("equal = true") != std::string::npos, "0 = 0 for smooth family");

  auto schema = run("curve-check " + fixture("bad_schema.json"));
  expect(schema.exit_code == 2, "schema violation exits 2");

  auto parity = run("curve-check " + fixture("cusp_bad_branches.json"));
  expect(parity.exit_code == 2, "parity violation exits 2");
  expect(parity.output.find("ParityViolation") != std::string::npos,
         "parity violation is surfaced");

  // byte-identical output across repeated runs
  for (const std::string& args :
       {std::string("ss-form \"x^3 - y^2\" --format json"),
        std::string("curve-check ") + fixture("node_cubic.json") + " --format json",
        std::string("gw invariants \"2,-6,10\" --format text")}) {
    auto first = run(args);
    auto second = run(args);
    expect(first.output == second.output, "deterministic output for: " + args);
    expect(first.exit_code == second.exit_code, "deterministic exit for: " + args);
  }

  // delta subcommand drives both evaluation routes
  auto delta = run("delta \"x^3 + y^3\" --degree 3 --factors \"x+1,x^2-x+1\"");
  expect(delta.exit_code == 0, "delta consistency exits 0");
  expect(delta.output.find("equal = true") != std::string::npos, "delta reports equality");

  auto lex = run("milnor \"x^3 - y^2\" --order lex");
  expect(lex.exit_code == 0, "lex order accepted");
  expect(lex.output.find("mu = 2") != std::string::npos, "mu is order independent");

  auto transfer = run("gw transfer --minpoly \"-2,0,1\" \"a\"");
  expect(transfer.exit_code == 0, "transfer of a generator entry");
  expect(transfer.output.find("⟨-2⟩ + ⟨2⟩") != std::string::npos,
         "Tr<sqrt2> is <2> + <-2>, got: " + transfer.output);

  if (failures == 0) std::cout << "cli tests passed\n";
  return failures == 0 ? 0 : 1;
}
