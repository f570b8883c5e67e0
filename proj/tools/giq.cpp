// giq: command line front end for the exact GIT intersection cohomology engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "giq/errors.hpp"
#include "giq/pipeline.hpp"
#include "giq/problem.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kIntegrity = 2, kBalance = 3 };

struct Options {
  std::string file;
  std::string preset;
  std::string order;
  std::optional<int> max_degree;
  std::string format = "text";
  std::string out;
  bool strict = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw giq::InputError("cannot write '" + opt.out + "'");
  f << text;
}

int run(const Options& opt, std::optional<giq::Stage> stage) {
  if (opt.file.empty() == opt.preset.empty())
    throw giq::InputError("give exactly one of a problem file or --preset");
  giq::ProblemSpec spec = opt.preset.empty() ? giq::parse_problem_file(opt.file)
                                             : giq::problem_from_preset(opt.preset);
  giq::PipelineOptions po;
  po.stages = stage ? std::set<giq::Stage>{*stage} : spec.outputs;
  if (!opt.order.empty()) po.order = giq::parse_order_kind(opt.order);
  po.max_degree = opt.max_degree;

  giq::Report report = giq::run_pipeline(spec, po);
  emit(opt, opt.format == "json" ? giq::to_json(report) : giq::to_text(report));
  if (opt.strict && !report.balance.passed) return kBalance;
  return kOk;
}

int run_selftest(const Options& opt) {
  auto results = giq::selftest();
  std::string text;
  bool all = true;
  for (const auto& r : results) {
    text += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name + "  (" + r.detail + ")\n";
    all = all && r.passed;
  }
  emit(opt, text);
  return all ? kOk : kIntegrity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection cohomology of GIT quotients from weight data"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--order", opt.order, "Monomial order")->check(CLI::IsMember({"lex", "grlex"}));
  app.add_option("--max-degree", opt.max_degree, "Degree bound for rings and V")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--preset", opt.preset, "pn-cstar:a,b,c or p1-sl2:n instead of a file");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "Write output to PATH");
  app.add_flag("--strict", opt.strict, "Exit 3 when the balance check fails");

  struct Cmd {
    const char* name;
    const char* help;
    std::optional<giq::Stage> stage;
  };
  const Cmd cmds[] = {
      {"strata", "Index set of unstable strata", giq::Stage::strata},
      {"balance", "Weak balance verdict", giq::Stage::balance},
      {"series", "Equivariant and intersection Poincare series", giq::Stage::series},
      {"betti", "Truncated subspace V and its Betti numbers", giq::Stage::betti},
      {"pairing", "Intersection pairing matrices", giq::Stage::pairing},
      {"run", "Full pipeline with the outputs listed in the file", std::nullopt},
  };
  std::optional<giq::Stage> chosen;
  bool full = false;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", opt.file, "Problem file");
    auto stage = c.stage;
    sub->callback([&chosen, &full, stage] {
      chosen = stage;
      full = !stage;
    });
  }
  bool self = false;
  app.add_subcommand("selftest", "Golden checks on the built-in examples")->callback([&] {
    self = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (self) return run_selftest(opt);
    return run(opt, full ? std::nullopt : chosen);
  } catch (const giq::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const giq::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
}
