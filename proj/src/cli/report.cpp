#include <charconv>
#include <cmath>
#include <string>

#include "json.hpp"

#include "dwell/cli.hpp"

namespace dwell::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, c);
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{std::monostate{}};
}

}  // namespace

bool Document::has_error() const {
  for (const Record& r : records) {
    if (r.kind == "error") return true;
  }
  return false;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string render_csv(const Document& doc) {
  std::string out;
  if (!doc.columns.empty()) {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(doc.columns[i]);
    }
    out += '\n';
  }
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  if (!doc.records.empty()) {
    if (!out.empty()) out += '\n';
    out += "record,subject,message,reference,computed\n";
    for (const Record& r : doc.records) {
      out += csv_escape(r.kind) + ',' + csv_escape(r.subject) + ',' + csv_escape(r.message) +
             ',' + cell_text(optional_cell(r.reference)) + ',' + cell_text(optional_cell(r.computed)) +
             '\n';
    }
  }
  return out;
}

std::string render_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  j["columns"] = doc.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
      r[doc.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto records = nlohmann::ordered_json::array();
  for (const Record& r : doc.records) {
    records.push_back({{"kind", r.kind},
                       {"subject", r.subject},
                       {"message", r.message},
                       {"reference", cell_json(optional_cell(r.reference))},
                       {"computed", cell_json(optional_cell(r.computed))}});
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

}  // namespace dwell::cli
