#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockent/asymptotics.hpp"
#include "fockent/measures.hpp"
#include "fockent/parser.hpp"
#include "json.hpp"
#include "report.hpp"

namespace {

using namespace fockent;
using cli::fraction_or_decimal;
using cli::json_number;
using cli::make_report;

constexpr double match_tolerance = 1e-9;

struct CommonOptions {
  bool json = false;
  std::string output;
  std::optional<long long> seed;
};

void add_common_options(CLI::App* command, CommonOptions& options) {
  command->add_flag("--json", options.json, "Emit a JSON report");
  command->add_option("--output", options.output,
                      "Write the report to a file instead of standard output");
  command->add_option("--seed", options.seed,
                      "Seed recorded in the report for reproducibility");
}

Statistics parse_statistics(const std::string& name) {
  return name == "fermion" ? Statistics::fermion : Statistics::boson;
}

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case errc::syntax_error:
    case errc::arity_mismatch:
      return 2;
    default:
      return 3;
  }
}

int emit(const CommonOptions& options, const std::string& human,
         const nlohmann::json& report) {
  std::string text = options.json ? report.dump(2) + "\n" : human;
  if (options.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(options.output);
  if (!file) {
    std::cerr << "error: cannot write " << options.output << "\n";
    return 1;
  }
  file << text;
  return 0;
}

std::string measure_or_dash(const std::optional<double>& value) {
  return value ? fraction_or_decimal(*value) : "-";
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& expression, Statistics stats,
                const CommonOptions& options) {
  auto parsed = parse_state(expression, stats);
  auto report = full_report(parsed.state, parsed.partition);
  std::string canonical = format_state(parsed.state, parsed.partition);
  const char* s_label = stats == Statistics::boson ? "S_b" : "S_f";

  std::ostringstream human;
  human << "state: " << canonical << "\n"
        << "statistics: " << to_string(stats)
        << "   modes: " << parsed.partition.total() << " (alice "
        << parsed.partition.alice_modes << ", bob "
        << parsed.partition.bob_modes
        << ")   particles: " << parsed.state.particle_number() << "\n"
        << "E_M = " << fraction_or_decimal(report.e_m) << "\n"
        << "E_P = " << fraction_or_decimal(report.e_p) << "\n"
        << s_label << " = " << measure_or_dash(report.s_single) << "\n"
        << "QC  = " << measure_or_dash(report.qc_fermion) << "\n"
        << "variance(alice) = " << fraction_or_decimal(report.variance_alice)
        << "\n"
        << "sectors:\n";
  for (const auto& sector : report.sectors) {
    human << "  n=" << sector.alice_particles
          << "  P=" << fraction_or_decimal(sector.probability)
          << "  E_M=" << fraction_or_decimal(sector.mode_entanglement) << "\n";
  }

  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& sector : report.sectors) {
    sectors.push_back({{"n", sector.alice_particles},
                       {"p", json_number(sector.probability)},
                       {"e_m", json_number(sector.mode_entanglement)}});
  }
  nlohmann::json results = {
      {"canonical_state", canonical},
      {"mode_count", parsed.partition.total()},
      {"partition",
       {{"alice_modes", parsed.partition.alice_modes},
        {"bob_modes", parsed.partition.bob_modes}}},
      {"particles", parsed.state.particle_number()},
      {"e_m", json_number(report.e_m)},
      {"e_p", json_number(report.e_p)},
      {"s_single", json_number(report.s_single)},
      {"qc_fermion", json_number(report.qc_fermion)},
      {"variance_alice", json_number(report.variance_alice)},
      {"sectors", std::move(sectors)},
  };
  nlohmann::json input = {{"state", expression},
                          {"statistics", to_string(stats)}};
  return emit(options, human.str(),
              make_report("analyze", std::move(input), std::move(results),
                          options.seed));
}

// ---------------------------------------------------------------- table1

struct ReferenceRow {
  std::string expression;
  double e_m = 0.0;
  std::optional<double> s_b;
  std::optional<double> s_f;
  double e_p = 0.0;
};

std::vector<ReferenceRow> built_in_rows() {
  return {
      {"|0,1>+|1,0>", 1.0, std::nullopt, std::nullopt, 0.0},
      {"|1,1>", 0.0, 1.0, 1.0, 0.0},
      {"(|0,1>+|1,0>)(|0,1>+|1,0>)", 2.0, 1.0, 1.0, 0.5},
      {"|0,2>+|2,0>", 1.0, 1.0, std::nullopt, 0.0},
      {"|0,2>+sqrt(2)|1,1>+|2,0>", 1.5, 0.0, std::nullopt, 0.0},
      {"|01,10>+|10,01>", 1.0, 2.0, 2.0, 1.0},
      {"|11,00>+|00,11>", 1.0, 2.0, 2.0, 0.0},
  };
}

std::optional<double> expected_field(const nlohmann::json& row,
                                     const char* key) {
  if (!row.contains(key) || row.at(key).is_null()) return std::nullopt;
  return row.at(key).get<double>();
}

std::vector<ReferenceRow> load_expected_rows(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot read expected-value file " + path);
  }
  nlohmann::json doc = nlohmann::json::parse(file);
  std::vector<ReferenceRow> rows;
  for (const auto& entry : doc) {
    ReferenceRow row;
    row.expression = entry.at("state").get<std::string>();
    row.e_m = entry.at("e_m").get<double>();
    row.s_b = expected_field(entry, "s_b");
    row.s_f = expected_field(entry, "s_f");
    row.e_p = entry.at("e_p").get<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Evaluated {
  double e_m = 0.0;
  double e_p = 0.0;
  std::optional<double> s_single;
};

int run_table1(const CommonOptions& options, const std::string& expected_path) {
  std::vector<ReferenceRow> rows =
      expected_path.empty() ? built_in_rows() : load_expected_rows(expected_path);

  std::ostringstream human;
  nlohmann::json json_rows = nlohmann::json::array();
  int mismatches = 0;

  auto check_value = [&](double computed, double expected) {
    return std::abs(computed - expected) <= match_tolerance;
  };
  auto check_optional = [&](const std::optional<double>& computed,
                            const std::optional<double>& expected) {
    if (computed.has_value() != expected.has_value()) return false;
    return !computed || check_value(*computed, *expected);
  };

  int index = 0;
  for (const auto& row : rows) {
    ++index;
    Evaluated boson;
    {
      auto parsed = parse_state(row.expression, Statistics::boson);
      auto report = full_report(parsed.state, parsed.partition);
      boson = {report.e_m, report.e_p, report.s_single};
    }
    std::optional<Evaluated> fermion;
    try {
      auto parsed = parse_state(row.expression, Statistics::fermion);
      auto report = full_report(parsed.state, parsed.partition);
      fermion = Evaluated{report.e_m, report.e_p, report.s_single};
    } catch (const Error& error) {
      if (error.code() != errc::fermion_occupancy_violation) throw;
    }

    bool e_m_pass = check_value(boson.e_m, row.e_m);
    bool e_p_pass = check_value(boson.e_p, row.e_p);
    bool s_b_pass = check_optional(boson.s_single, row.s_b);
    std::optional<double> fermion_s =
        fermion ? fermion->s_single : std::nullopt;
    bool s_f_pass = check_optional(fermion_s, row.s_f);
    if (fermion) {
      e_m_pass = e_m_pass && check_value(fermion->e_m, row.e_m);
      e_p_pass = e_p_pass && check_value(fermion->e_p, row.e_p);
    }
    bool row_pass = e_m_pass && e_p_pass && s_b_pass && s_f_pass;
    if (!row_pass) ++mismatches;

    auto cell = [&](const char* name, std::optional<double> computed,
                    std::optional<double> expected, bool pass) {
      human << "  " << name << "  computed " << measure_or_dash(computed)
            << "  expected " << measure_or_dash(expected) << "  "
            << (pass ? "PASS" : "FAIL") << "\n";
      return nlohmann::json{{"computed", json_number(computed)},
                            {"expected", json_number(expected)},
                            {"pass", pass}};
    };

    human << "row " << index << "  " << row.expression << "\n";
    nlohmann::json json_row;
    json_row["state"] = row.expression;
    json_row["e_m"] = cell("E_M", boson.e_m, row.e_m, e_m_pass);
    json_row["s_b"] = cell("S_b", boson.s_single, row.s_b, s_b_pass);
    json_row["s_f"] = cell("S_f", fermion_s, row.s_f, s_f_pass);
    json_row["e_p"] = cell("E_P", boson.e_p, row.e_p, e_p_pass);
    json_row["fermion_applicable"] = fermion.has_value();
    json_row["pass"] = row_pass;
    json_rows.push_back(std::move(json_row));
  }

  bool all_pass = mismatches == 0;
  human << (all_pass ? "all rows PASS"
                     : std::to_string(mismatches) + " row(s) FAILED")
        << "\n";

  nlohmann::json results = {{"rows", std::move(json_rows)},
                            {"all_pass", all_pass}};
  nlohmann::json input = {
      {"expected", expected_path.empty() ? "built-in" : expected_path}};
  int emit_status = emit(options, human.str(),
                         make_report("table1", std::move(input),
                                     std::move(results), options.seed));
  if (emit_status != 0) return emit_status;
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- scan

int run_scan(int max_n, const CommonOptions& options) {
  std::ostringstream human;
  human << "    N           exact       asymptote      difference     exact/N\n";
  nlohmann::json rows = nlohmann::json::array();
  char line[160];
  for (int n = 1; n <= max_n; n *= 2) {
    double exact = ep_split_singles_exact(n);
    double asymptote = ep_split_singles_asymptote(n);
    double ratio = exact / double(n);
    std::snprintf(line, sizeof(line), "%5d  %14.6f  %14.6f  %14.6f  %10.6f\n",
                  n, exact, asymptote, exact - asymptote, ratio);
    human << line;
    rows.push_back({{"n", n},
                    {"exact", json_number(exact)},
                    {"asymptote", json_number(asymptote)},
                    {"difference", json_number(exact - asymptote)},
                    {"ratio", json_number(ratio)}});
  }
  nlohmann::json results = {{"delta", json_number(split_singles_delta())},
                            {"rows", std::move(rows)}};
  nlohmann::json input = {{"max_n", max_n}};
  return emit(options, human.str(),
              make_report("scan", std::move(input), std::move(results),
                          options.seed));
}

// ---------------------------------------------------------------- superadd

int run_superadd(const std::string& psi, const std::string& phi,
                 Statistics stats, const CommonOptions& options) {
  auto parsed_psi = parse_state(psi, stats);
  auto parsed_phi = parse_state(phi, stats);
  auto report =
      check_superadditivity(parsed_psi.state, parsed_phi.state,
                            parsed_psi.partition, parsed_phi.partition);

  std::ostringstream human;
  human << "E_P(psi x phi) = " << fraction_or_decimal(report.lhs) << "\n"
        << "E_P(psi) + E_P(phi) = " << fraction_or_decimal(report.rhs) << "\n"
        << "gap = " << fraction_or_decimal(report.gap) << "\n"
        << "V_psi = " << fraction_or_decimal(report.v_psi)
        << "   V_phi = " << fraction_or_decimal(report.v_phi) << "\n"
        << "equality_predicted: " << (report.equality_predicted ? "yes" : "no")
        << "\n";

  nlohmann::json results = {
      {"lhs", json_number(report.lhs)},
      {"rhs", json_number(report.rhs)},
      {"gap", json_number(report.gap)},
      {"v_psi", json_number(report.v_psi)},
      {"v_phi", json_number(report.v_phi)},
      {"equality_predicted", report.equality_predicted},
  };
  nlohmann::json input = {{"psi", psi},
                          {"phi", phi},
                          {"statistics", to_string(stats)}};
  int emit_status = emit(options, human.str(),
                         make_report("superadd", std::move(input),
                                     std::move(results), options.seed));
  if (emit_status != 0) return emit_status;
  return report.gap >= -1e-9 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite entanglement measures for identical particles in "
               "the mode-occupation representation"};
  app.require_subcommand(1);

  std::string analyze_expression;
  std::string analyze_stats = "boson";
  CommonOptions analyze_options;
  auto* analyze = app.add_subcommand(
      "analyze", "Compute every measure for one state expression");
  analyze->add_option("state", analyze_expression, "State expression")
      ->required();
  analyze->add_option("--stats", analyze_stats, "Particle statistics")
      ->check(CLI::IsMember({"boson", "fermion"}));
  add_common_options(analyze, analyze_options);

  CommonOptions table1_options;
  std::string expected_path;
  auto* table1 = app.add_subcommand(
      "table1", "Evaluate the bundled reference states against their "
                "expected measures");
  table1->add_option("--expected", expected_path,
                     "JSON file overriding the built-in expected values");
  add_common_options(table1, table1_options);

  int max_n = 1;
  CommonOptions scan_options;
  auto* scan = app.add_subcommand(
      "scan", "Exact vs asymptotic entanglement of N independent split "
              "singles over a doubling grid");
  scan->add_option("--max-n", max_n, "Largest particle count")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common_options(scan, scan_options);

  std::string psi_expression;
  std::string phi_expression;
  std::string superadd_stats = "boson";
  CommonOptions superadd_options;
  auto* superadd = app.add_subcommand(
      "superadd", "Check super-additivity of particle entanglement for a "
                  "pair of states");
  superadd->add_option("psi", psi_expression, "First state")->required();
  superadd->add_option("phi", phi_expression, "Second state")->required();
  superadd->add_option("--stats", superadd_stats, "Particle statistics")
      ->check(CLI::IsMember({"boson", "fermion"}));
  add_common_options(superadd, superadd_options);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(analyze_expression, parse_statistics(analyze_stats),
                         analyze_options);
    }
    if (app.got_subcommand(table1)) {
      return run_table1(table1_options, expected_path);
    }
    if (app.got_subcommand(scan)) {
      return run_scan(max_n, scan_options);
    }
    if (app.got_subcommand(superadd)) {
      return run_superadd(psi_expression, phi_expression,
                          parse_statistics(superadd_stats), superadd_options);
    }
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
