#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pawns::cli {

/// One result line of the command-line tool. Exact counts travel as decimal
/// strings, floating results (eigenvalues, asymptotics) as numbers.
struct OutputRecord {
  std::string command;
  std::string quantity;  // M, U, Uk, L, B, W, alpha, c, tilings
  std::optional<long long> m;
  std::optional<long long> n;
  std::optional<long long> k;
  std::string method;
  std::variant<std::string, double> value;
  std::vector<std::string> annotations;
  std::vector<double> spectrum;  // eigen --spectrum only

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Single-line JSON with a fixed key order. Absent m, n, k and an empty
/// spectrum are omitted.
std::string to_json(const OutputRecord& r);
std::string to_json(const std::vector<OutputRecord>& rs);

/// Throws pawns::ParseError.
OutputRecord record_from_json(std::string_view text);

}  // namespace pawns::cli
