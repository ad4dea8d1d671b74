// Command-line front end: expansions, transition matrices, matrix counts,
// Petrie coefficients and the verification suites. Every command prints one
// JSON envelope on stdout. Exit codes: 0 ok, 1 verification failure, 2 usage.

#include <chrono>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "tsf/bases.hpp"
#include "tsf/json_io.hpp"
#include "tsf/partition.hpp"
#include "tsf/petrie.hpp"
#include "tsf/verify.hpp"

namespace {

using tsf::Json;

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  Json params = Json::object();
  Json result;
  int exit_code = 0;
};

tsf::Partition parse_partition(const std::string &text, const char *what) {
  try {
    return tsf::Partition::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

tsf::Truncation parse_truncation(const std::string &text) {
  try {
    return tsf::Truncation::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--d: ") + e.what());
  }
}

tsf::BasisTag parse_classical_basis(const std::string &text, const char *what) {
  if (text == "m" || text == "e" || text == "h" || text == "p" || text == "s")
    return tsf::BasisTag::parse(text);
  throw UsageError(std::string("--") + what + " must be one of m, e, h, p, s");
}

Json count_json(const tsf::Integer &value) {
  if (value.fits_slong_p())
    return Json(value.get_si());
  return Json(value.get_str());
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Truncated homogeneous symmetric functions: expansions, transition matrices, "
               "matrix counts and verification suites"};
  app.require_subcommand(1);
  bool raw = false;
  app.add_flag("--raw", raw, "Print only the result payload instead of the full envelope");

  int n = 0;
  std::string d_text = "inf", lambda_text, basis_text = "m", target_text = "m";
  std::string row_text, col_text, mode_text = "bounded", method_text = "det", suite_text = "all";
  int max_n = 6, max_d = 3;

  auto *partitions = app.add_subcommand("partitions", "List the partitions of n in canonical order");
  partitions->add_option("--n", n, "Degree")->required();

  auto *expand = app.add_subcommand("expand", "Expand h_lambda^[d] in a classical basis");
  expand->add_option("--d", d_text, "Truncation: positive integer or 'inf'")->required();
  expand->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
  expand->add_option("--basis", basis_text, "Target basis: m, e, h, p or s");

  auto *matrix = app.add_subcommand("matrix", "Transition matrix M(h^[d], target) at degree n");
  matrix->add_option("--n", n, "Degree")->required();
  matrix->add_option("--d", d_text, "Truncation: positive integer or 'inf'")->required();
  matrix->add_option("--target", target_text, "Target basis: m, e, h, p or s");

  auto *count = app.add_subcommand("count", "Count matrices with given row and column sums");
  count->add_option("--d", d_text, "Truncation: positive integer or 'inf'")->required();
  count->add_option("--row", row_text, "Row sums (a partition)")->required();
  count->add_option("--col", col_text, "Column sums (a partition)")->required();
  count->add_option("--mode", mode_text, "bounded ([0,d] entries) or congruent (0 or 1 mod d+1)");

  auto *petrie = app.add_subcommand("petrie", "Coefficient of s_lambda in sum_n h_n^[d]");
  petrie->add_option("--d", d_text, "Truncation: positive integer")->required();
  petrie->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
  petrie->add_option("--method", method_text, "det, rule or both");

  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite_text, "Suite name or 'all'");
  verify->add_option("--max-n", max_n, "Largest degree checked");
  verify->add_option("--max-d", max_d, "Largest finite truncation checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  std::string command;
  try {
    if (*partitions) {
      command = "partitions";
      if (n < 0)
        throw UsageError("--n must be nonnegative");
      out.params = {{"n", n}};
      out.result = Json::array();
      for (const auto &lambda : tsf::enumerate_partitions(n))
        out.result.push_back(lambda.to_string());
    } else if (*expand) {
      command = "expand";
      auto d = parse_truncation(d_text);
      auto lambda = parse_partition(lambda_text, "lambda");
      auto basis = parse_classical_basis(basis_text, "basis");
      out.params = {{"d", d.to_string()}, {"lambda", lambda.to_string()}, {"basis", basis.to_string()}};
      auto f = tsf::SymFunc::basis_element(tsf::BasisTag::hd(d), lambda);
      out.result = tsf::to_json(tsf::convert(f, basis));
    } else if (*matrix) {
      command = "matrix";
      if (n < 0)
        throw UsageError("--n must be nonnegative");
      auto d = parse_truncation(d_text);
      auto target = parse_classical_basis(target_text, "target");
      out.params = {{"n", n}, {"d", d.to_string()}, {"target", target.to_string()}};
      out.result = tsf::to_json(tsf::transition_hd(n, d, target));
    } else if (*count) {
      command = "count";
      auto d = parse_truncation(d_text);
      auto row = parse_partition(row_text, "row");
      auto col = parse_partition(col_text, "col");
      tsf::CountMode mode;
      if (mode_text == "bounded")
        mode = tsf::CountMode::Bounded;
      else if (mode_text == "congruent")
        mode = tsf::CountMode::Congruent;
      else
        throw UsageError("--mode must be 'bounded' or 'congruent'");
      if (mode == tsf::CountMode::Congruent && d.is_infinite())
        throw UsageError("--mode congruent needs a finite --d");
      out.params = {{"d", d.to_string()}, {"row", row.to_string()}, {"col", col.to_string()},
                    {"mode", mode_text}};
      out.result = count_json(tsf::count_matrices(d, row, col, mode));
    } else if (*petrie) {
      command = "petrie";
      auto d = parse_truncation(d_text);
      if (d.is_infinite())
        throw UsageError("--d must be finite for Petrie coefficients");
      auto lambda = parse_partition(lambda_text, "lambda");
      out.params = {{"d", d.to_string()}, {"lambda", lambda.to_string()}, {"method", method_text}};
      if (method_text == "det") {
        out.result = tsf::petrie_coefficient_det(d.value(), lambda);
      } else if (method_text == "rule") {
        out.result = tsf::petrie_coefficient_rule(d.value(), lambda);
      } else if (method_text == "both") {
        int det = tsf::petrie_coefficient_det(d.value(), lambda);
        int rule = tsf::petrie_coefficient_rule(d.value(), lambda);
        out.result = {{"det", det}, {"rule", rule}, {"agree", det == rule}};
        if (det != rule)
          out.exit_code = kVerificationFailed;
      } else {
        throw UsageError("--method must be 'det', 'rule' or 'both'");
      }
    } else if (*verify) {
      command = "verify";
      out.params = {{"suite", suite_text}, {"max_n", max_n}, {"max_d", max_d}};
      std::vector<tsf::CheckResult> checks;
      try {
        checks = tsf::run_suite(suite_text, {max_n, max_d});
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
      bool all_passed = true;
      Json list = Json::array();
      for (const auto &c : checks) {
        all_passed = all_passed && c.passed;
        Json entry = {{"suite", c.suite}, {"name", c.name}, {"passed", c.passed},
                      {"elapsed_ms", c.elapsed_ms}};
        if (!c.detail.empty())
          entry["detail"] = c.detail;
        list.push_back(std::move(entry));
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << '\n';
      }
      out.result = {{"passed", all_passed}, {"checks", std::move(list)}};
      if (!all_passed)
        out.exit_code = kVerificationFailed;
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (raw) {
    std::cout << out.result.dump() << '\n';
  } else {
    Json envelope = {{"command", command}, {"params", out.params}, {"result", out.result},
                     {"elapsed_ms", elapsed}};
    std::cout << envelope.dump(2) << '\n';
  }
  return out.exit_code;
}
