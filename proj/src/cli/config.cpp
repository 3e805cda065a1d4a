#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "dwell/cli.hpp"
#include "dwell/error.hpp"

namespace dwell::cli {

namespace {

enum class Dim { length, energy, mass, time, temperature, angular, angle, plain };

struct Unit {
  std::string_view suffix;
  double scale;
};

const std::map<Dim, std::vector<Unit>>& unit_table() {
  static const std::map<Dim, std::vector<Unit>> table{
      {Dim::length, {{"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}}},
      {Dim::energy, {{"J", 1.0}}},
      {Dim::mass, {{"kg", 1.0}}},
      {Dim::time, {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}}},
      {Dim::temperature, {{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}}},
      {Dim::angular, {{"rad/s", 1.0}}},
      {Dim::angle, {{"rad", 1.0}}},
      {Dim::plain, {}},
  };
  return table;
}

const std::map<std::string_view, Dim>& quantity_keys() {
  static const std::map<std::string_view, Dim> keys{
      {"a", Dim::length},          {"b", Dim::length},        {"k", Dim::energy},
      {"m", Dim::mass},            {"t_max", Dim::time},      {"delta", Dim::energy},
      {"drive_amp", Dim::energy},  {"drive_omega", Dim::angular},
      {"temperature", Dim::temperature}, {"phi", Dim::angle}, {"c_l", Dim::plain},
      {"c_r", Dim::plain},
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view where, const std::string& what) {
  throw ConfigError(std::string(where) + ": " + what);
}

double parse_with_dim(Dim dim, std::string_view key, std::string_view text,
                      std::string_view where) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data()) {
    fail(where, "'" + std::string(text) + "' is not a number for key '" + std::string(key) + "'");
  }
  if (!std::isfinite(value)) fail(where, "non-finite value for key '" + std::string(key) + "'");
  const std::string_view suffix = trim(text.substr(ptr - text.data()));
  if (suffix.empty()) return value;
  for (const Unit& u : unit_table().at(dim)) {
    if (u.suffix == suffix) return value * u.scale;
  }
  fail(where, "unit '" + std::string(suffix) + "' does not apply to key '" + std::string(key) +
                  "'");
}

int parse_int(std::string_view key, std::string_view text, std::string_view where) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(where, "'" + std::string(text) + "' is not an integer for key '" + std::string(key) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text, std::string_view where) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  fail(where, "'" + std::string(text) + "' is not a boolean for key '" + std::string(key) + "'");
}

}  // namespace

double parse_quantity(std::string_view key, std::string_view text, std::string_view where) {
  const auto it = quantity_keys().find(key);
  if (it == quantity_keys().end()) fail(where, "unknown key '" + std::string(key) + "'");
  return parse_with_dim(it->second, key, text, where);
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value,
                   std::string_view where) {
  key = trim(key);
  value = trim(value);
  if (key == "a") {
    cfg.well.a = parse_quantity(key, value, where);
  } else if (key == "b") {
    cfg.well.b = parse_quantity(key, value, where);
  } else if (key == "k") {
    cfg.well.k = parse_quantity(key, value, where);
  } else if (key == "m") {
    cfg.well.m = parse_quantity(key, value, where);
    cfg.mass_set = true;
  } else if (key == "t_max") {
    cfg.t_max = parse_quantity(key, value, where);
  } else if (key == "delta") {
    cfg.delta = parse_quantity(key, value, where);
  } else if (key == "drive_amp") {
    cfg.drive_amp = parse_quantity(key, value, where);
  } else if (key == "drive_omega") {
    cfg.drive_omega = parse_quantity(key, value, where);
  } else if (key == "temperature") {
    cfg.temperature = parse_quantity(key, value, where);
  } else if (key == "phi") {
    cfg.phi = parse_quantity(key, value, where);
  } else if (key == "c_l") {
    cfg.c_l = parse_quantity(key, value, where);
  } else if (key == "c_r") {
    cfg.c_r = parse_quantity(key, value, where);
  } else if (key == "t_steps") {
    cfg.t_steps = parse_int(key, value, where);
    if (cfg.t_steps < 2) fail(where, "t_steps must be >= 2");
  } else if (key == "grid_n") {
    cfg.grid_n = parse_int(key, value, where);
    if (cfg.grid_n < 10) fail(where, "grid_n must be >= 10");
  } else if (key == "oracle") {
    cfg.oracle = parse_bool(key, value, where);
  } else if (key == "format") {
    if (value == "csv") cfg.format = Format::csv;
    else if (value == "json") cfg.format = Format::json;
    else fail(where, "format must be csv or json");
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "constants") {
    if (value != "paper" && value != "codata") fail(where, "constants must be paper or codata");
    cfg.constants_name = std::string(value);
  } else if (key == "b_values") {
    cfg.b_values.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      cfg.b_values.push_back(parse_with_dim(Dim::length, key, item, where));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else {
    fail(where, "unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text, std::string_view source) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(where, "expected 'key = value'");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1), where);
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

PhysicalConstants RunConfig::physical_constants() const {
  return constants_name.empty() ? constants() : PhysicalConstants::from_name(constants_name);
}

WellSpec RunConfig::resolved_well() const {
  WellSpec w = well;
  if (!mass_set) w.m = physical_constants().m_e;
  return w;
}

}  // namespace dwell::cli
