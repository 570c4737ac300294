// Command-line surface over the permsim core library. Results go to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 domain error, 2 resource
// limit.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permsim/alpha.hpp"
#include "permsim/characters.hpp"
#include "permsim/cycle_type.hpp"
#include "permsim/errors.hpp"
#include "permsim/field_matrix.hpp"
#include "permsim/permutation.hpp"
#include "permsim/recovery.hpp"
#include "permsim/uniting.hpp"
#include "permsim/verification.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permsim;

int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::string read_stream_or_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Bracket labels contain commas, so CSV quotes them.
std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

void emit(const ordered_json& j, const std::string& format, const std::string& text_form) {
  if (format == "text") {
    std::cout << text_form << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct FormatOpt {
  std::string value = "json";

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", value, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  }
};

void cmd_parse(int n, const std::string& text, const std::string& format) {
  Permutation p = parse_permutation(text, n);
  ordered_json images = ordered_json::array();
  for (int i = 1; i <= n; ++i) images.push_back(p.image(i));
  ordered_json j{{"n", n}, {"one_line", images}, {"cycles", to_cycle_string(p)}};
  std::ostringstream human;
  human << to_one_line(p) << "\n" << to_cycle_string(p);
  emit(j, format, human.str());
}

void cmd_cycle_type(int n, const std::string& text, const std::string& format) {
  CycleType ct = cycle_type(parse_permutation(text, n));
  ordered_json j{{"n", n},
                 {"type", to_bracket(ct)},
                 {"num_cycles", ct.num_cycles()},
                 {"fixed_points", ct.fixed_points()},
                 {"order", ct.order()}};
  emit(j, format, to_bracket(ct));
}

void cmd_power(const std::string& type_text, std::int64_t k, const std::string& format) {
  CycleType ct = parse_cycle_type(type_text);
  CycleType result = power_cycle_type(ct, k);
  ordered_json j{{"type", to_bracket(ct)}, {"k", k}, {"result", to_bracket(result)}};
  emit(j, format, to_bracket(result));
}

void cmd_char(int n, const std::string& rep_text, const std::string& type_text, bool table,
              const std::string& format, bool format_given) {
  if (table) {
    if (n <= 0) throw error("--table needs --n");
    RepresentationSpec spec = parse_rep_spec(rep_text, n);
    std::vector<std::array<std::string, 3>> rows;
    for (const CycleType& ct : enumerate_cycle_types(n))
      rows.push_back({to_bracket(ct), std::to_string(ct.order()), rep_char(spec, ct).str()});
    if (format_given && format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& row : rows)
        j.push_back(ordered_json{{"class", row[0]}, {"order", row[1]}, {"value", row[2]}});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "class,order,value\n";
      for (const auto& row : rows)
        std::cout << csv_quote(row[0]) << "," << row[1] << "," << row[2] << "\n";
    }
    return;
  }
  if (type_text.empty()) throw error("char needs --type or --table");
  CycleType ct = parse_cycle_type(type_text);
  if (n > 0 && n != ct.degree()) throw mismatch_error("--n disagrees with the type's degree");
  RepresentationSpec spec = parse_rep_spec(rep_text, ct.degree());
  std::cout << rep_char(spec, ct).str() << "\n";
}

void cmd_gen_fn(const std::string& type_text, const std::string& format) {
  CycleType ct = parse_cycle_type(type_text);
  SubsetGenFn f = subset_gen_fn(ct);
  ordered_json coeffs = ordered_json::array();
  std::ostringstream human;
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    coeffs.push_back(f.coefficients[i].str());
    human << (i > 0 ? " " : "") << f.coefficients[i].str();
  }
  ordered_json j{{"type", to_bracket(ct)}, {"coefficients", coeffs}};
  emit(j, format, human.str());
}

ordered_json report_to_json(const UnitingReport& report) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : report.united_pairs)
    pairs.push_back(ordered_json::array({to_bracket(a), to_bracket(b)}));
  return ordered_json{{"n", report.n},
                      {"rep", report.spec.to_string()},
                      {"united_pairs", pairs},
                      {"almost_similar_pairs_checked", report.almost_similar_pairs_checked},
                      {"unites", report.unites}};
}

void cmd_scan(int n, const std::string& rep_text, int workers, const std::string& format) {
  RepresentationSpec spec = parse_rep_spec(rep_text, n);
  UnitingReport report = find_united_pairs(spec, workers);
  std::ostringstream human;
  human << spec.to_string() << " on S_" << n << ": "
        << (report.unites ? "unites" : "does not unite");
  for (const auto& [a, b] : report.united_pairs)
    human << "\n" << to_bracket(a) << " " << to_bracket(b);
  emit(report_to_json(report), format, human.str());
}

void cmd_recover(const std::string& path, const std::string& format) {
  FieldMatrix a = parse_matrix(read_stream_or_file(path));
  CycleCountOracle oracle = oracle_from_matrix(a);
  CycleType ct = recover_cycle_type(oracle);
  ordered_json queries = ordered_json::array();
  std::ostringstream human;
  human << to_bracket(ct);
  for (const auto& [k, count] : oracle.query_log()) {
    queries.push_back(ordered_json::array({k, count}));
    human << "\n" << k << " " << count;
  }
  ordered_json j{{"type", to_bracket(ct)}, {"queries", queries}};
  emit(j, format, human.str());
}

void cmd_similar(const std::string& path_a, const std::string& path_b,
                 const std::string& format) {
  FieldMatrix a = parse_matrix(read_stream_or_file(path_a));
  FieldMatrix b = parse_matrix(read_stream_or_file(path_b));
  if (a.field().characteristic() == 0 && a.rows() > 12)
    std::cerr << "warning: invariant factors over Q grow quickly beyond n = 12; "
                 "this may be slow\n";
  bool result = similar(a, b);
  emit(ordered_json{{"similar", result}}, format, result ? "similar" : "not similar");
}

void cmd_induced(int n, const std::string& rep_text, const std::string& perm_text,
                 std::int64_t limit, const std::string& format) {
  RepresentationSpec spec = parse_rep_spec(rep_text, n);
  Permutation p = parse_permutation(perm_text, n);
  Permutation induced = induced_permutation(p, spec, limit);
  CycleType ct = cycle_type(induced);
  ordered_json j{{"n", n},
                 {"rep", spec.to_string()},
                 {"set_size", induced.degree()},
                 {"induced_type", to_bracket(ct)}};
  emit(j, format, to_bracket(ct));
}

void cmd_alpha_verify(int n, std::int64_t p, const std::string& set_name,
                      const std::string& format) {
  MatrixSetKind kind =
      set_name == "full-gl" ? MatrixSetKind::full_gl : MatrixSetKind::perm_matrices;
  InvariantMatrixSet m = InvariantMatrixSet::build(kind, n, p);
  AlphaVerifyReport report = verify_alpha_characters(m);

  ordered_json checks = ordered_json::array();
  std::ostringstream human;
  for (const AlphaPairCheck& check : report.checks) {
    checks.push_back(ordered_json{{"type1", to_bracket(check.type1)},
                                  {"type2", to_bracket(check.type2)},
                                  {"conjugate", check.conjugate},
                                  {"alpha_char", check.alpha},
                                  {"commutant_count", check.commutant},
                                  {"pass", check.pass}});
    human << (check.pass ? "pass " : "FAIL ") << to_bracket(check.type1) << " vs "
          << to_bracket(check.type2) << ": alpha=" << check.alpha
          << " commutant=" << check.commutant << "\n";
  }
  ordered_json j{{"set", set_name},        {"field", report.field.name()},
                 {"n", report.n},          {"set_size", report.set_size},
                 {"checks", checks},       {"all_pass", report.all_pass}};
  human << (report.all_pass ? "all pass" : "FAILURES present");
  emit(j, format, human.str());
}

void cmd_verify_paper(int max_n, int workers, const std::string& format) {
  BatteryReport report = run_verification_battery(max_n, workers);
  ordered_json checks = ordered_json::array();
  std::ostringstream human;
  for (const BatteryCheck& check : report.checks) {
    checks.push_back(
        ordered_json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    human << (check.pass ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
  }
  ordered_json j{{"max_n", report.max_n}, {"checks", checks}, {"all_pass", report.all_pass}};
  human << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED");
  emit(j, format, human.str());
  if (!report.all_pass) throw error("verification battery failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on permutation representations of S_n"};
  app.require_subcommand(1);

  std::function<void()> action;

  int n = 0;
  std::string perm_text, type_text, rep_text, field_text = "Q";
  std::string path_a, path_b;
  std::int64_t k = 1;
  std::int64_t limit = kDefaultActionLimit;
  int workers = default_workers();
  int max_n = 6;
  std::int64_t p = 2;
  std::string set_name = "full-gl";
  bool table = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a permutation and echo both notations");
  parse_cmd->add_option("--n", n, "Degree")->required();
  parse_cmd->add_option("perm", perm_text, "One-line or cycle notation")->required();
  FormatOpt parse_fmt;
  parse_fmt.attach(parse_cmd);
  parse_cmd->callback([&] { action = [&] { cmd_parse(n, perm_text, parse_fmt.value); }; });

  auto* ct_cmd = app.add_subcommand("cycle-type", "Cycle type of a permutation");
  ct_cmd->add_option("--n", n, "Degree")->required();
  ct_cmd->add_option("perm", perm_text, "One-line or cycle notation")->required();
  FormatOpt ct_fmt;
  ct_fmt.attach(ct_cmd);
  ct_cmd->callback([&] { action = [&] { cmd_cycle_type(n, perm_text, ct_fmt.value); }; });

  auto* power_cmd = app.add_subcommand("power", "Cycle type of the k-th power");
  power_cmd->add_option("--type", type_text, "Cycle type in bracket notation")->required();
  power_cmd->add_option("k", k, "Exponent, k >= 1")->required();
  FormatOpt power_fmt;
  power_fmt.attach(power_cmd);
  power_cmd->callback([&] { action = [&] { cmd_power(type_text, k, power_fmt.value); }; });

  auto* char_cmd = app.add_subcommand("char", "Character value of a representation at a class");
  char_cmd->add_option("--rep", rep_text, "natural|tuples:K|subsets:K|powerset|even-subsets|odd-subsets")
      ->required();
  char_cmd->add_option("--type", type_text, "Cycle type in bracket notation");
  char_cmd->add_option("--n", n, "Degree (required with --table)");
  char_cmd->add_flag("--table", table, "Full character column over all classes of S_n, as CSV");
  FormatOpt char_fmt;
  char_fmt.attach(char_cmd);
  char_cmd->callback([&, char_cmd] {
    action = [&, char_cmd] {
      cmd_char(n, rep_text, type_text, table, char_fmt.value,
               char_cmd->count("--format") > 0);
    };
  });

  auto* gen_cmd = app.add_subcommand("gen-fn", "Subset-character generating function");
  gen_cmd->add_option("--type", type_text, "Cycle type in bracket notation")->required();
  FormatOpt gen_fmt;
  gen_fmt.attach(gen_cmd);
  gen_cmd->callback([&] { action = [&] { cmd_gen_fn(type_text, gen_fmt.value); }; });

  auto* scan_cmd = app.add_subcommand("scan", "Find all class pairs a representation unites");
  scan_cmd->add_option("--n", n, "Degree")->required();
  scan_cmd->add_option("--rep", rep_text, "Representation spec")->required();
  scan_cmd->add_option("--workers", workers, "Worker threads")->capture_default_str();
  FormatOpt scan_fmt;
  scan_fmt.attach(scan_cmd);
  scan_cmd->callback([&] { action = [&] { cmd_scan(n, rep_text, workers, scan_fmt.value); }; });

  auto* recover_cmd =
      app.add_subcommand("recover", "Recover a cycle type from a matrix, with the query trace");
  recover_cmd->add_option("matrix", path_a, "Matrix file, or - for stdin")->required();
  FormatOpt recover_fmt;
  recover_fmt.attach(recover_cmd);
  recover_cmd->callback([&] { action = [&] { cmd_recover(path_a, recover_fmt.value); }; });

  auto* similar_cmd = app.add_subcommand("similar", "Decide matrix similarity exactly");
  similar_cmd->add_option("a", path_a, "First matrix file, or - for stdin")->required();
  similar_cmd->add_option("b", path_b, "Second matrix file")->required();
  FormatOpt similar_fmt;
  similar_fmt.attach(similar_cmd);
  similar_cmd->callback(
      [&] { action = [&] { cmd_similar(path_a, path_b, similar_fmt.value); }; });

  auto* induced_cmd =
      app.add_subcommand("induced", "Cycle type of the permutation induced on the action set");
  induced_cmd->add_option("--n", n, "Degree")->required();
  induced_cmd->add_option("--rep", rep_text, "Representation spec")->required();
  induced_cmd->add_option("perm", perm_text, "One-line or cycle notation")->required();
  induced_cmd->add_option("--limit", limit, "Largest action set to enumerate")
      ->capture_default_str();
  FormatOpt induced_fmt;
  induced_fmt.attach(induced_cmd);
  induced_cmd->callback(
      [&] { action = [&] { cmd_induced(n, rep_text, perm_text, limit, induced_fmt.value); }; });

  auto* alpha_cmd =
      app.add_subcommand("alpha-verify", "Check the two-sided action's character identities");
  alpha_cmd->add_option("--n", n, "Matrix dimension")->required();
  alpha_cmd->add_option("--p", p, "Field characteristic (prime)")->capture_default_str();
  alpha_cmd->add_option("--set", set_name, "Matrix set")
      ->check(CLI::IsMember({"full-gl", "perm"}))
      ->capture_default_str();
  FormatOpt alpha_fmt;
  alpha_fmt.attach(alpha_cmd);
  alpha_cmd->callback(
      [&] { action = [&] { cmd_alpha_verify(n, p, set_name, alpha_fmt.value); }; });

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification battery");
  verify_cmd->add_option("--max-n", max_n, "Largest degree to scan")->capture_default_str();
  verify_cmd->add_option("--workers", workers, "Worker threads")->capture_default_str();
  FormatOpt verify_fmt;
  verify_fmt.attach(verify_cmd);
  verify_cmd->callback(
      [&] { action = [&] { cmd_verify_paper(max_n, workers, verify_fmt.value); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
