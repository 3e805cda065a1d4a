#include "doctest.h"

#include <cmath>
#include <string>

#include "dwell/cli.hpp"
#include "dwell/error.hpp"
#include "json.hpp"

using namespace dwell;
using namespace dwell::cli;

namespace {

RunConfig base(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.constants_name = "paper";
  return cfg;
}

double cell(const Cell& c) { return std::get<double>(c); }

const Record* find(const Document& d, const std::string& subject) {
  for (const Record& r : d.records) {
    if (r.subject == subject) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("quantities carry units") {
  CHECK(parse_quantity("b", "100nm", "t") == doctest::Approx(1e-7).epsilon(1e-15));
  CHECK(parse_quantity("b", "100 nm", "t") == doctest::Approx(1e-7).epsilon(1e-15));
  CHECK(parse_quantity("a", "1um", "t") == doctest::Approx(1e-6).epsilon(1e-15));
  CHECK(parse_quantity("k", "2e-24 J", "t") == 2e-24);
  CHECK(parse_quantity("temperature", "1.1mK", "t") == doctest::Approx(1.1e-3).epsilon(1e-15));
  CHECK(parse_quantity("b", "3e-7", "t") == 3e-7);
  CHECK_THROWS_AS(parse_quantity("b", "3 J", "t"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("k", "2 nm", "t"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("b", "abc", "t"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("b", "nan", "t"), ConfigError);
}

TEST_CASE("config file") {
  RunConfig cfg = base("spectrum");
  apply_config_text(cfg, "# well\na = 2 um\n\nb = 150nm  # half width\nk=3e-24J\nt_steps = 7\n",
                    "run.cfg");
  CHECK(cfg.well.a == doctest::Approx(2e-6).epsilon(1e-15));
  CHECK(cfg.well.b == doctest::Approx(1.5e-7).epsilon(1e-15));
  CHECK(cfg.well.k == 3e-24);
  CHECK(cfg.t_steps == 7);

  try {
    apply_config_text(cfg, "a = 1um\nb = 1nm\nwidth = 3nm\n", "run.cfg");
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("run.cfg:3") != std::string::npos);
    CHECK(msg.find("width") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_config_text(cfg, "a 1um\n", "x"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(cfg, "t_steps = 1\n", "x"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(cfg, "format = xml\n", "x"), ConfigError);

  apply_setting(cfg, "b", "200nm", "--b");
  CHECK(cfg.well.b == doctest::Approx(2e-7).epsilon(1e-15));
  try {
    apply_setting(cfg, "b", "2kg", "--b");
    FAIL("bad unit accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("--b:", 0) == 0);
  }

  apply_setting(cfg, "b_values", "100nm, 200nm,3e-7", "x");
  REQUIRE(cfg.b_values.size() == 3);
  CHECK(cfg.b_values[2] == 3e-7);
}

TEST_CASE("mass follows the constants unless set") {
  RunConfig cfg = base("spectrum");
  CHECK(cfg.resolved_well().m == PhysicalConstants::paper().m_e);
  cfg.constants_name = "codata";
  CHECK(cfg.resolved_well().m == PhysicalConstants::codata().m_e);
  apply_setting(cfg, "m", "1e-30 kg", "x");
  CHECK(cfg.resolved_well().m == 1e-30);
}

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(6.02466739485471e-26) == "6.02466739e-26");
  CHECK(format_number(-35711000.4) == "-35711000.4");
}

TEST_CASE("csv layout") {
  Document d{"x", {"name", "v"}, {{std::string("a,b"), 1.5}, {std::string("q\"q"), std::monostate{}}}, {}};
  CHECK(render_csv(d) == "name,v\n\"a,b\",1.5\n\"q\"\"q\",\n");
  d.records.push_back({"warning", "s", "m", std::nullopt, 2.0});
  CHECK(render_csv(d) ==
        "name,v\n\"a,b\",1.5\n\"q\"\"q\",\n\nrecord,subject,message,reference,computed\n"
        "warning,s,m,,2\n");
  CHECK(render_csv(d).find('\r') == std::string::npos);
}

TEST_CASE("json round trip") {
  const double v = 0.1 + 0.2;
  Document d{"x", {"v", "n", "flag"}, {{v, std::int64_t{3}, true}}, {}};
  d.records.push_back({"error", "e", "boom", 1.0, std::nullopt});
  const auto j = nlohmann::json::parse(render_json(d));
  CHECK(j["rows"][0]["v"].get<double>() == v);
  CHECK(j["rows"][0]["n"].get<int>() == 3);
  CHECK(j["rows"][0]["flag"].get<bool>());
  CHECK(j["records"][0]["computed"].is_null());
  CHECK(d.has_error());
}

TEST_CASE("output is deterministic") {
  RunConfig cfg = base("gap-sweep");
  cfg.delta = 1e-29;
  const Document a = run_command(cfg);
  const Document b = run_command(cfg);
  CHECK(render_csv(a) == render_csv(b));
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("table1 agrees with gap-sweep under codata") {
  const Document t = run_command(base("table1"));
  RunConfig cfg = base("gap-sweep");
  cfg.constants_name = "codata";
  const Document g = run_command(cfg);
  REQUIRE(t.rows.size() == 7);
  REQUIRE(g.rows.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(cell(t.rows[i][1]) == cell(g.rows[i][1]));
    CHECK(cell(t.rows[i][3]) == cell(g.rows[i][3]));
    CHECK(cell(t.rows[i][4]) * 1e-6 == doctest::Approx(cell(g.rows[i][4])).epsilon(1e-15));
  }
  CHECK(!t.has_error());
  REQUIRE(find(t, "caption_k") != nullptr);
  CHECK(find(t, "caption_k")->kind == "discrepancy");
  REQUIRE(find(t, "row_2_tau") != nullptr);
  CHECK(*find(t, "row_2_tau")->computed == doctest::Approx(1.911954).epsilon(1e-6));
  REQUIRE(find(t, "r_squared") != nullptr);
  CHECK(*find(t, "r_squared")->computed > 0.999);
}

TEST_CASE("spectrum below B/4 is empty with a warning") {
  RunConfig cfg = base("spectrum");
  cfg.well.k = 1e-27;
  const Document d = run_command(cfg);
  CHECK(d.rows.empty());
  CHECK(!d.has_error());
  REQUIRE(find(d, "no_bound_levels") != nullptr);
}

TEST_CASE("operation errors become records") {
  RunConfig cfg = base("dynamics");
  cfg.well.k = 1e-30;
  const Document d = run_command(cfg);
  CHECK(d.has_error());
  CHECK(d.records.front().kind == "error");
}

TEST_CASE("dynamics rows") {
  RunConfig cfg = base("dynamics");
  cfg.t_steps = 11;
  const Document d = run_command(cfg);
  REQUIRE(d.rows.size() == 11);
  CHECK(cell(d.rows.front()[1]) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(cell(d.rows.front()[3]) - cell(d.rows.back()[3])) <=
        1e-10 * std::abs(cell(d.rows.front()[3])));
  for (const auto& r : d.rows) CHECK(cell(r[1]) + cell(r[2]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("density rows") {
  RunConfig cfg = base("density");
  cfg.c_l = std::sqrt(0.5);
  cfg.c_r = std::sqrt(0.5);
  const Document d = run_command(cfg);
  REQUIRE(d.rows.size() == 7);
  int pure = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::get<std::string>(d.rows[i][1]) == std::get<std::string>(d.rows[i][2]));
    pure += std::get<std::string>(d.rows[i][2]) == "pure";
  }
  CHECK(pure == 3);
  CHECK(!d.has_error());
}

TEST_CASE("thermal rows") {
  const Document d = run_command(base("thermal"));
  REQUIRE(d.rows.size() >= 2);
  CHECK(std::get<std::string>(d.rows[0][0]) == "T_B");
  CHECK(cell(d.rows[0][1]) == doctest::Approx(1.09970997629739e-3).epsilon(1e-12));
}
