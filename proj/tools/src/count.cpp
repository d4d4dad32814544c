#include "pawns_cli/count.hpp"

#include <algorithm>

#include "pawns/closed_forms.hpp"
#include "pawns/decomposition.hpp"
#include "pawns/enumeration.hpp"
#include "pawns/transfer.hpp"

namespace pawns::cli {
namespace {

ForbiddenPatternSet patterns(const CountQuery& q) {
  switch (q.quantity) {
    case Quantity::M:
      return ForbiddenPatternSet::m_set();
    case Quantity::L:
      return ForbiddenPatternSet::l_set();
    case Quantity::U:
      return q.k == 2 ? ForbiddenPatternSet::u_set() : ForbiddenPatternSet::uk_set(q.k);
  }
  return {};
}

bool oracle_ok(const CountQuery& q) { return q.m * q.n <= kEnumerationGuard; }

bool transfer_ok(const CountQuery& q) {
  return (q.quantity != Quantity::U || q.k == 2) && std::min(q.m, q.n) <= kImplicitTransferGuard;
}

bool closed_ok(const CountQuery& q) {
  const std::size_t lo = std::min(q.m, q.n);
  switch (q.quantity) {
    case Quantity::U:
      return true;
    case Quantity::L:
      return lo <= 3;
    case Quantity::M:
      return lo <= 3 || (q.m >= 4 && q.m <= 6) || (q.n >= 4 && q.n <= 6);
  }
  return false;
}

bool decomposition_ok(const CountQuery& q) {
  // Largest colour class has ceil(mn/2) cells; a column holds ceil(m/2).
  return q.quantity == Quantity::M && (q.m * q.n + 1) / 2 <= kIndependentSetGuard && q.m <= 40;
}

std::string suggestion(const CountQuery& q, const std::string& failed) {
  for (const auto& m : viable_methods(q)) {
    if (m != failed) return m;
  }
  return "none";
}

CountResult closed_M(std::size_t m, std::size_t n) {
  if (m <= 3) return {table1_M(m, n), "closed", {}};
  PropValue p = prop_M(m, n);
  return {p.value, "closed", std::move(p.annotations)};
}

CountResult run_closed(const CountQuery& q) {
  switch (q.quantity) {
    case Quantity::U:
      return {upper_bound_U_k(q.m, q.n, q.k), "closed", {}};
    case Quantity::L:
      return {q.m <= 3 ? closed_L(q.m, q.n) : closed_L(q.n, q.m), "closed", {}};
    case Quantity::M:
      if (q.m <= 6) return closed_M(q.m, q.n);
      return closed_M(q.n, q.m);
  }
  return {};
}

CountResult run_decomposition(const CountQuery& q) {
  const auto [black, white] = split_by_color({q.m, q.n});
  const BigCount b = count_independent_sets(black);
  const BigCount w = count_independent_sets(white);
  return {b * w, "decomposition", {"B = " + to_decimal(b), "W = " + to_decimal(w)}};
}

}  // namespace

std::string quantity_name(const CountQuery& q) {
  switch (q.quantity) {
    case Quantity::M:
      return "M";
    case Quantity::L:
      return "L";
    case Quantity::U:
      return q.k == 2 ? "U" : "Uk";
  }
  return "?";
}

std::vector<std::string> viable_methods(const CountQuery& q) {
  std::vector<std::string> out;
  if (closed_ok(q)) out.push_back("closed");
  if (transfer_ok(q)) out.push_back("transfer");
  if (decomposition_ok(q)) out.push_back("decomposition");
  if (oracle_ok(q)) out.push_back("oracle");
  return out;
}

CountResult count(const CountQuery& q, const std::string& method) {
  if (q.k < 2) throw InvalidArgument("k must be at least 2");
  if (q.k != 2 && q.quantity != Quantity::U) throw InvalidArgument("--k applies to U only");

  if (method == "auto") {
    const auto options = viable_methods(q);
    if (options.empty()) {
      throw GuardExceeded(std::to_string(q.m) + "x" + std::to_string(q.n) +
                              " is beyond every engine's guard",
                          "none");
    }
    return count(q, options.front());
  }
  if (method == "oracle") {
    if (!oracle_ok(q)) {
      throw GuardExceeded("oracle enumeration of " + std::to_string(q.m * q.n) +
                              " cells exceeds the guard of " + std::to_string(kEnumerationGuard),
                          suggestion(q, method));
    }
    return {count_by_enumeration({q.m, q.n}, patterns(q)), "oracle", {}};
  }
  if (method == "transfer") {
    if (q.quantity == Quantity::U && q.k > 2) {
      throw InvalidArgument("the transfer engine handles diagonal runs of length 2 only; use closed");
    }
    if (!transfer_ok(q)) {
      throw GuardExceeded("transfer height " + std::to_string(std::min(q.m, q.n)) +
                              " exceeds the guard of " + std::to_string(kImplicitTransferGuard),
                          suggestion(q, method));
    }
    const std::size_t h = std::min(q.m, q.n), w = std::max(q.m, q.n);
    return {count_via_transfer(h, w, patterns(q)), "transfer", {}};
  }
  if (method == "closed") {
    if (!closed_ok(q)) {
      throw InvalidArgument("no closed form for " + quantity_name(q) + " on " + std::to_string(q.m) +
                            "x" + std::to_string(q.n) + "; use " + suggestion(q, method));
    }
    return run_closed(q);
  }
  if (method == "decomposition") {
    if (q.quantity != Quantity::M) throw InvalidArgument("decomposition counts M only");
    if (!decomposition_ok(q)) {
      throw GuardExceeded("colour classes of " + std::to_string(q.m) + "x" + std::to_string(q.n) +
                              " exceed the independent-set guard of " +
                              std::to_string(kIndependentSetGuard),
                          suggestion(q, method));
    }
    return run_decomposition(q);
  }
  throw InvalidArgument("unknown method " + method);
}

}  // namespace pawns::cli
