#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dwell/units.hpp"

namespace dwell::cli {

enum class Format { csv, json };

/// Everything a command needs. Lengths in m, energies in J, times in s,
/// temperatures in K, angular frequencies in rad/s.
struct RunConfig {
  std::string command;
  WellSpec well{1e-6, 100e-9, 2e-24, 0.0};  // m filled from the constants when unset
  bool mass_set = false;
  std::string constants_name;  // empty: DWELL_CONSTANTS or paper
  Format format = Format::csv;
  std::string out;  // empty: stdout
  bool oracle = false;
  int grid_n = 20000;
  std::optional<double> t_max;
  int t_steps = 100;
  std::optional<double> delta;
  std::optional<double> drive_amp;
  std::optional<double> drive_omega;
  double phi = 1.5707963267948966;  // prepared in psi_L
  std::optional<double> temperature;
  std::vector<double> b_values;  // gap-sweep; empty: the table list
  std::optional<double> c_l;     // density: optional extra momix row
  std::optional<double> c_r;

  PhysicalConstants physical_constants() const;
  /// The well with m defaulted from the constants.
  WellSpec resolved_well() const;
};

/// Applies one `key = value` setting. `where` names the source for messages
/// ("run.cfg:3" or "--b"). Throws ConfigError on unknown keys, bad numbers or
/// unit suffixes that do not fit the key.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value,
                   std::string_view where);

/// Parses flat `key = value` lines; '#' starts a comment.
void apply_config_text(RunConfig& cfg, std::string_view text, std::string_view source);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// "100nm", "1 um", "2e-24 J", "1.1 mK" -> SI value for the key's dimension.
double parse_quantity(std::string_view key, std::string_view text, std::string_view where);

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

/// A structured note attached to a result: discrepancy, warning, fit, error, ...
struct Record {
  std::string kind;
  std::string subject;
  std::string message;
  std::optional<double> reference;  // published value, when there is one
  std::optional<double> computed;
};

struct Document {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Record> records;

  bool has_error() const;
};

/// Nine significant digits, locale independent.
std::string format_number(double v);

std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);

Document cmd_spectrum(const RunConfig& cfg);
Document cmd_table1(const RunConfig& cfg);
Document cmd_dynamics(const RunConfig& cfg);
Document cmd_rabi(const RunConfig& cfg);
Document cmd_thermal(const RunConfig& cfg);
Document cmd_gap_sweep(const RunConfig& cfg);
Document cmd_density(const RunConfig& cfg);
Document cmd_oracle_check(const RunConfig& cfg);

/// Dispatches on cfg.command. Operation errors become `error` records.
Document run_command(const RunConfig& cfg);

/// Full command line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace dwell::cli
