#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "toricmirror/cli.hpp"

using namespace toricmirror;

int main(int argc, char** argv) {
  CLI::App app{"Mirror symmetry checks for toric Fano manifolds"};
  app.require_subcommand(1);

  RunRequest req;
  std::string output;

  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", req.input, "fixture name (P2, P1xP1, P1xP2, P2xP2, BlP2) or JSON file")->required();
    sub->add_option("-o,--output", output, "write the JSON report here instead of stdout");
    if (name == "phi" || name == "check-prop21" || name == "check-thm32")
      sub->add_option("--kmax", req.kmax, "truncation order")->check(CLI::Range(0, 40));
    if (name == "critical-points" || name == "verify-iso" || name == "presentation" || name == "vertices")
      sub->add_option("--q", req.q, "Kahler parameters; one value is used for all")->delimiter(',');
    if (name == "critical-points" || name == "verify-iso") {
      sub->add_option("--seed", req.seed, "solver seed");
      sub->add_option("--starts", req.starts, "Newton starts (default 50 per expected point)");
    }
    if (name == "presentation") sub->add_option("--degree-cap", req.degree_cap, "Macaulay degree cap");
    if (name == "tropical") {
      sub->add_option("--factor", req.factor, "factor index, starting at 1")->check(CLI::PositiveNumber);
      sub->add_option("--xi", req.xi, "vertex of the curve")->delimiter(',');
      sub->add_option("--svg", req.svg_path, "write an SVG scene of the curve");
    }
    sub->callback([&req, name] { req.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  const RunResult result = run(req);
  const std::string text = dump_json(result.report);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << '\n';
      return 2;
    }
    out << text;
  }
  std::cerr << result.summary;
  return result.exit_code;
}
