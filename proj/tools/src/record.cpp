#include "pawns_cli/record.hpp"

#include <nlohmann/json.hpp>

#include "pawns/board.hpp"

namespace pawns::cli {
namespace {

using nlohmann::ordered_json;

ordered_json as_json(const OutputRecord& r) {
  ordered_json j;
  j["command"] = r.command;
  j["quantity"] = r.quantity;
  if (r.m) j["m"] = *r.m;
  if (r.n) j["n"] = *r.n;
  if (r.k) j["k"] = *r.k;
  j["method"] = r.method;
  std::visit([&j](const auto& v) { j["value"] = v; }, r.value);
  j["annotations"] = r.annotations;
  if (!r.spectrum.empty()) j["spectrum"] = r.spectrum;
  return j;
}

std::optional<long long> optional_int(const ordered_json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<long long>();
}

}  // namespace

std::string to_json(const OutputRecord& r) { return as_json(r).dump(); }

std::string to_json(const std::vector<OutputRecord>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back(as_json(r));
  return arr.dump();
}

OutputRecord record_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    r.quantity = j.at("quantity").get<std::string>();
    r.m = optional_int(j, "m");
    r.n = optional_int(j, "n");
    r.k = optional_int(j, "k");
    r.method = j.at("method").get<std::string>();
    const auto& v = j.at("value");
    if (v.is_string()) {
      r.value = v.get<std::string>();
    } else if (v.is_number_float()) {
      r.value = v.get<double>();
    } else {
      throw ParseError("record value must be a decimal string or a float");
    }
    r.annotations = j.at("annotations").get<std::vector<std::string>>();
    if (j.contains("spectrum")) r.spectrum = j.at("spectrum").get<std::vector<double>>();
    return r;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad output record: ") + e.what());
  }
}

}  // namespace pawns::cli
