#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "torickit/cli.hpp"

#ifndef TORICKIT_FIXTURE_DIR
#define TORICKIT_FIXTURE_DIR "fixtures"
#endif

using torickit::cli::RunConfig;

namespace {

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--in", cfg.in, "input JSON file");
  app->add_option("--fixture", cfg.fixture, "bundled fixture name, e.g. paper-P");
  app->add_option("--fixture-dir", cfg.fixture_dir, "directory holding fixtures");
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", cfg.out, "write the report here instead of stdout");
  app->add_flag("--timing", cfg.timing, "record elapsed time in the provenance block");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.fixture_dir = TORICKIT_FIXTURE_DIR;

  CLI::App app{"exact toric computations: polygons, Laurent inversion, periods"};
  app.require_subcommand(1);

  auto* polygon = app.add_subcommand("polygon", "Fano polygon report");
  add_common(polygon, cfg);

  auto* scaffold = app.add_subcommand("scaffold", "Laurent inversion from a scaffolding");
  add_common(scaffold, cfg);
  scaffold->add_flag("--check-hull", cfg.check_hull, "check that the struts span the target polygon");

  auto* periods = app.add_subcommand("periods", "classical and quantum periods");
  periods->require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> period_cmds{
      {"classical", "classical period of a Laurent polynomial"},
      {"quantum", "quantum period of the toric hypersurface"},
      {"compare", "regularized quantum period against the specialized classical period"}};
  for (const auto& [name, help] : period_cmds) {
    auto* sub = periods->add_subcommand(name, help);
    add_common(sub, cfg);
    sub->add_option("--order", cfg.order, "truncation order D")->check(CLI::NonNegativeNumber);
    sub->add_option("--set", cfg.assignments, "parameter value NAME=VALUE (repeatable)");
    if (std::string(name) == "classical") sub->add_flag("--symbolic", cfg.symbolic, "keep parameters symbolic");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : torickit::cli::kInvalidInput;
  }

  auto* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.command == "periods") cfg.subcommand = chosen->get_subcommands().front()->get_name();

  auto report = torickit::cli::run(cfg);
  std::string text = report.render(cfg.format);
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << *cfg.out << "\n";
      return torickit::cli::kInvalidInput;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (report.exit_code != 0 && report.body["result"].contains("error"))
    std::cerr << report.body["result"]["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
