#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symvar/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symvar: colored fans, divisors and polytopes of symmetric varieties"};
  std::string workspace, output = "-", command;
  std::vector<std::string> args;
  symvar::CommandOptions opts;
  app.add_option("--workspace", workspace, "workspace JSON file")->required();
  app.add_option("--output", output, "report path, - for stdout");
  app.add_option("--seed", opts.seed, "seed for randomized oracle suites");
  app.add_option("--max-rank", opts.max_rank, "refuse spaces of larger rank");
  app.add_flag("--integral", opts.integral, "classify: fail unless the divisor is Cartier");
  app.add_option("command", command, "validate | classify | eff-cone | big-cone | polytope | volume | h0 | decolorate | slice | qfactorialize | spherical-closure | oracle")
      ->required()
      ->check(CLI::IsMember(symvar::command_names()));
  app.add_option("args", args, "fan, divisor or suite names");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(workspace, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << workspace << "\n";
    return 1;
  }
  std::stringstream text;
  text << in.rdbuf();
  const auto outcome = symvar::run_command(text.str(), command, args, opts);
  if (output == "-") {
    std::cout << outcome.report;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    out << outcome.report;
  }
  return outcome.exit_code;
}
