#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "reeslab/decision.hpp"
#include "reeslab/errors.hpp"
#include "reeslab/io.hpp"
#include "reeslab/report.hpp"

using namespace reeslab;

namespace {

struct TriangleArgs {
  std::string input;
  std::string g;
};

void add_triangle_args(CLI::App* cmd, TriangleArgs& t) {
  auto* in = cmd->add_option("--input", t.input, "triangle file (keys v1, v2, v3)");
  auto* g = cmd->add_option("--g", t.g, "member of the g-family, 2 <= g <= 3");
  in->excludes(g);
}

NormalizedTriangle load_triangle(const TriangleArgs& t) {
  if (!t.g.empty()) return g_family_triangle(parse_rat(t.g));
  if (t.input.empty()) throw ParseError("one of --input or --g is required");
  return normalize_triangle(read_triangle_file(t.input));
}

OverlapPolicy policy_from(const std::string& s) {
  if (s == "A") return OverlapPolicy::A;
  if (s == "B") return OverlapPolicy::B;
  throw ParseError("policy must be A or B");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return 1;
    case ErrorKind::Invariant: return 2;
    case ErrorKind::Budget: return 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reeslab: finite generation tests for blow-ups of toric surfaces"};
  app.require_subcommand(1);

  TriangleArgs tri_args;
  uint64_t characteristic = 0;
  int64_t rmax = 1, jmax = 0, mmax = 6, slack = 0, budget = 10000, m = 0, l = 0;
  std::string policy = "A";
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "decide finite generation or search for a witness");
  add_triangle_args(analyze, tri_args);
  analyze->add_option("--char", characteristic, "0 or a prime")->required();
  analyze->add_option("--rmax", rmax);
  analyze->add_option("--jmax", jmax, "0 selects p-1");
  analyze->add_option("--mmax", mmax);
  analyze->add_option("--slack", slack, "gap-scan slack, at least sigma");
  analyze->add_option("--policy", policy, "overlap routing, A or B");
  analyze->add_option("--budget", budget, "factorization branch budget");
  analyze->add_flag("--json", as_json);

  std::string family = "g", from = "2", to = "3", step = "1/24";
  auto* scan = app.add_subcommand("scan", "run analyze over the g-family");
  scan->add_option("--family", family);
  scan->add_option("--from", from);
  scan->add_option("--to", to);
  scan->add_option("--step", step);
  scan->add_option("--char", characteristic)->required();

  auto* cohom = app.add_subcommand("cohomology", "h0 and h1 on the window [m, l)");
  add_triangle_args(cohom, tri_args);
  cohom->add_option("--char", characteristic)->required();
  cohom->add_option("--m", m)->required();
  cohom->add_option("--l", l)->required();
  cohom->add_option("--slack", slack);
  cohom->add_option("--policy", policy);
  cohom->add_flag("--json", as_json);

  auto* factor = app.add_subcommand("factorize", "search a factorization of xi^m");
  add_triangle_args(factor, tri_args);
  factor->add_option("--char", characteristic)->required();
  factor->add_option("--m", m)->required();
  factor->add_option("--budget", budget);
  factor->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-example", "run the g=13/6 verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) {
      SearchBounds b{rmax, jmax, mmax, budget, slack, policy_from(policy)};
      Verdict v = decide(load_triangle(tri_args), Field(characteristic), b);
      std::cout << (as_json ? to_json(v) : to_text(v));
    } else if (*scan) {
      if (family != "g") throw ParseError("only the g family is available");
      Rat lo = parse_rat(from), hi = parse_rat(to), st = parse_rat(step);
      if (st <= 0) throw RangeError("step must be positive");
      std::vector<Rat> gs;
      for (Rat g = lo; g <= hi; g += st) gs.push_back(g);
      std::cout << scan_table(scan_family(gs, Field(characteristic)));
    } else if (*cohom) {
      NormalizedTriangle tri = load_triangle(tri_args);
      PeriodData pd = period_data(tri);
      CohomOptions opt{policy_from(policy), resolve_slack(pd, slack)};
      CohomReport r = cohomology_dims(ConeTables(tri), pd, m, l, Field(characteristic), opt);
      std::cout << (as_json ? to_json(r) : to_text(r));
    } else if (*factor) {
      NormalizedTriangle tri = load_triangle(tri_args);
      FactorizationOutcome f =
          factorization_search(ConeTables(tri), period_data(tri), m, Field(characteristic), budget);
      std::cout << (as_json ? to_json(f) : to_text(f));
    } else if (*verify) {
      bool all = true;
      for (const SuiteItem& it : example_rei_suite()) {
        std::cout << (it.pass ? "PASS " : "FAIL ") << "(" << it.id << ") " << it.title << ": " << it.detail << "\n";
        all &= it.pass;
      }
      std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
      return all ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
