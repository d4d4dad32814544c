#include "pawns_cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pawns/tiling.hpp"
#include "pawns/transfer.hpp"
#include "pawns_cli/count.hpp"
#include "pawns_cli/record.hpp"
#include "pawns_cli/verify.hpp"

namespace pawns::cli {
namespace {

const std::map<std::string, Quantity> kQuantities{
    {"M", Quantity::M}, {"U", Quantity::U}, {"L", Quantity::L}};

std::string fixed(double x, int digits = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CountOptions {
  std::string quantity = "M";
  std::size_t m = 0, n = 0;
  unsigned k = 2;
  std::string method = "auto";
  bool json = false;
};

OutputRecord count_record(const CountQuery& q, const std::string& method) {
  CountResult r = count(q, method);
  OutputRecord rec;
  rec.command = "count";
  rec.quantity = quantity_name(q);
  rec.m = static_cast<long long>(q.m);
  rec.n = static_cast<long long>(q.n);
  if (q.k != 2) rec.k = q.k;
  rec.method = r.method;
  rec.value = to_decimal(r.value);
  rec.annotations = std::move(r.annotations);
  return rec;
}

int cmd_count(const CountOptions& o, std::ostream& out) {
  const CountQuery q{kQuantities.at(o.quantity), o.m, o.n, o.k};
  const OutputRecord rec = count_record(q, o.method);
  if (o.json) {
    out << to_json(rec) << "\n";
    return kOk;
  }
  const std::string name = q.k == 2 ? rec.quantity : "U" + std::to_string(q.k);
  out << name << "(" << o.m << "," << o.n << ") = " << std::get<std::string>(rec.value) << "  ["
      << rec.method << "]\n";
  for (const auto& a : rec.annotations) out << "note: " << a << "\n";
  return kOk;
}

struct EigenOptions {
  std::size_t m = 0;
  double tol = 1e-10;
  std::size_t max_iter = 200000;
  bool spectrum = false;
  bool json = false;
};

int cmd_eigen(const EigenOptions& o, std::ostream& out) {
  const auto pats = ForbiddenPatternSet::m_set();
  OutputRecord rec;
  rec.command = "eigen";
  rec.quantity = "alpha";
  rec.m = static_cast<long long>(o.m);
  rec.method = "power-iteration";
  rec.value = dominant_eigenvalue(o.m, pats, {o.tol, o.max_iter});
  if (o.spectrum) rec.spectrum = spectrum_small(o.m, pats).eigenvalues;
  if (o.json) {
    out << to_json(rec) << "\n";
    return kOk;
  }
  out << "alpha_" << o.m << " = " << fixed(std::get<double>(rec.value)) << "\n";
  if (o.spectrum) {
    out << "spectrum of T_" << o.m << ":\n";
    for (double x : rec.spectrum) out << "  " << fixed(std::abs(x) < 1e-12 ? 0.0 : x) << "\n";
  }
  return kOk;
}

struct TableOptions {
  std::string quantity = "M";
  std::size_t max_m = 0, max_n = 0;
  std::string format = "markdown";
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  std::vector<OutputRecord> cells;
  for (std::size_t m = 1; m <= o.max_m; ++m) {
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      OutputRecord rec = count_record({kQuantities.at(o.quantity), m, n, 2}, "auto");
      rec.command = "table";
      cells.push_back(std::move(rec));
    }
  }
  if (o.format == "json") {
    out << to_json(cells) << "\n";
  } else if (o.format == "csv") {
    out << "m,n,quantity,value\n";
    for (const auto& c : cells) {
      out << *c.m << "," << *c.n << "," << c.quantity << "," << std::get<std::string>(c.value) << "\n";
    }
  } else {
    out << "| m \\ n |";
    for (std::size_t n = 1; n <= o.max_n; ++n) out << " " << n << " |";
    out << "\n|---|";
    for (std::size_t n = 1; n <= o.max_n; ++n) out << "---:|";
    out << "\n";
    for (std::size_t m = 1; m <= o.max_m; ++m) {
      out << "| " << m << " |";
      for (std::size_t n = 1; n <= o.max_n; ++n) {
        out << " " << std::get<std::string>(cells[(m - 1) * o.max_n + (n - 1)].value) << " |";
      }
      out << "\n";
    }
  }
  return kOk;
}

struct BijectionOptions {
  std::string matrix_file;
  std::string tiling_json;
  bool invert = false;
  bool ascii = false;
};

int cmd_bijection(const BijectionOptions& o, std::ostream& out, std::ostream& err) {
  if (o.invert != !o.tiling_json.empty() || o.matrix_file.empty() == o.tiling_json.empty()) {
    err << "error: use --matrix-file for theta, or --tiling-json with --invert for its inverse\n";
    return kUsage;
  }
  if (o.invert) {
    const Tiling t = tiling_from_json(read_input(o.tiling_json));
    out << format_matrix(theta_inverse(t));
    return kOk;
  }
  const Tiling t = theta_forward(parse_matrix(read_input(o.matrix_file)));
  out << (o.ascii ? render_ascii(t) : tiling_to_json(t) + "\n");
  return kOk;
}

struct VerifyOptions {
  std::string level = "quick";
  bool json = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto checks = run_verification(o.level == "full" ? VerifyLevel::full : VerifyLevel::quick);
  const bool ok = all_passed(checks);
  if (o.json) {
    nlohmann::ordered_json j;
    j["level"] = o.level;
    j["passed"] = ok;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    out << j.dump() << "\n";
  } else {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : checks) {
      std::string tag = to_string(c.status);
      std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
      out << std::left << std::setw(10) << tag << c.name << ": " << c.detail << "\n";
      ++counts[static_cast<int>(c.status)];
    }
    out << "verify " << o.level << ": " << counts[0] << " passed, " << counts[2]
        << " expected deviations, " << counts[1] << " failed\n";
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count nonattacking pawn placements, tilings and related quantities"};
  app.name("pawns");
  app.require_subcommand(1);

  CountOptions count_opts;
  auto* count_cmd = app.add_subcommand("count", "Count legal placements on an m x n board");
  count_cmd->add_option("-m", count_opts.m, "rows")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("-n", count_opts.n, "columns")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--quantity", count_opts.quantity, "M, U or L")
      ->check(CLI::IsMember({"M", "U", "L"}));
  count_cmd->add_option("--k", count_opts.k, "forbidden diagonal run length (U only)")
      ->check(CLI::Range(2U, 64U));
  count_cmd->add_option("--method", count_opts.method, "engine")
      ->check(CLI::IsMember({"auto", "oracle", "transfer", "closed", "decomposition"}));
  count_cmd->add_flag("--json", count_opts.json, "emit a JSON record");

  EigenOptions eigen_opts;
  auto* eigen_cmd = app.add_subcommand("eigen", "Dominant eigenvalue of the M transfer matrix");
  eigen_cmd->add_option("-m", eigen_opts.m, "column height")->required()->check(CLI::PositiveNumber);
  eigen_cmd->add_option("--tol", eigen_opts.tol, "relative tolerance")->check(CLI::PositiveNumber);
  eigen_cmd->add_option("--max-iter", eigen_opts.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  eigen_cmd->add_flag("--spectrum", eigen_opts.spectrum, "also list every eigenvalue");
  eigen_cmd->add_flag("--json", eigen_opts.json, "emit a JSON record");

  TableOptions table_opts;
  auto* table_cmd = app.add_subcommand("table", "Grid of exact counts");
  table_cmd->add_option("--quantity", table_opts.quantity, "M, U or L")
      ->check(CLI::IsMember({"M", "U", "L"}));
  table_cmd->add_option("--max-m", table_opts.max_m, "largest row count")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--max-n", table_opts.max_n, "largest column count")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_opts.format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));

  BijectionOptions bij_opts;
  auto* bij_cmd = app.add_subcommand("bijection", "Map an L-legal matrix to a tiling or back");
  bij_cmd->add_option("--matrix-file", bij_opts.matrix_file, "0/1 matrix file ('-' for stdin)");
  bij_cmd->add_option("--tiling-json", bij_opts.tiling_json, "tiling JSON file ('-' for stdin)");
  bij_cmd->add_flag("--invert", bij_opts.invert, "apply the inverse map");
  bij_cmd->add_flag("--ascii", bij_opts.ascii, "draw the tiling instead of printing JSON");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check");
  verify_cmd->add_option("--level", verify_opts.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_flag("--json", verify_opts.json, "emit a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count_cmd) return cmd_count(count_opts, out);
    if (*eigen_cmd) return cmd_eigen(eigen_opts, out);
    if (*table_cmd) return cmd_table(table_opts, out);
    if (*bij_cmd) return cmd_bijection(bij_opts, out, err);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    if (e.suggestion() != "none") err << "hint: try " << e.suggestion() << "\n";
    return kGuard;
  } catch (const NonConverged& e) {
    err << "error: " << e.what() << "\n";
    return kNonConverged;
  } catch (const IllegalMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidTiling& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pawns::cli
