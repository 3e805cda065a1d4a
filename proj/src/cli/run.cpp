#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dwell/cli.hpp"
#include "dwell/error.hpp"

namespace dwell::cli {

int run(int argc, char** argv) {
  CLI::App app{"Double square well: spectrum, tunnelling dynamics, thermal limits, density"};
  std::string command;
  app.add_option("command", command, "operation to run")
      ->required()
      ->check(CLI::IsMember({"spectrum", "table1", "dynamics", "rabi", "thermal", "gap-sweep",
                             "density", "oracle-check"}));
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file");
  bool oracle = false;
  app.add_flag("--oracle", oracle, "cross-check against the finite-difference grid");

  // Flags that map onto config keys; applied after the file so they win.
  const std::vector<std::pair<std::string, std::string>> keyed{
      {"--format", "format"},   {"--out", "out"},         {"--grid-n", "grid_n"},
      {"--b", "b"},             {"--a", "a"},             {"--k", "k"},
      {"--m", "m"},             {"--t-max", "t_max"},     {"--t-steps", "t_steps"},
      {"--delta", "delta"},     {"--drive-amp", "drive_amp"},
      {"--drive-omega", "drive_omega"}, {"--constants", "constants"},
      {"--phi", "phi"},         {"--temperature", "temperature"},
      {"--b-values", "b_values"}, {"--c-l", "c_l"},    {"--c-r", "c_r"},
  };
  std::vector<std::string> values(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    app.add_option(keyed[i].first, values[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunConfig cfg;
  cfg.command = command;
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (app.count(keyed[i].first) > 0) apply_setting(cfg, keyed[i].second, values[i], keyed[i].first);
    }
    if (oracle) cfg.oracle = true;
    (void)cfg.physical_constants();
  } catch (const Error& e) {
    std::cerr << "dwell: " << e.what() << "\n";
    return 2;
  }

  const Document doc = run_command(cfg);
  const std::string text = cfg.format == Format::json ? render_json(doc) : render_csv(doc);
  if (cfg.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "dwell: cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text;
  }
  if (doc.has_error()) {
    for (const Record& r : doc.records) {
      if (r.kind == "error") std::cerr << "dwell: " << r.subject << ": " << r.message << "\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace dwell::cli
