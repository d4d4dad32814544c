#include "pawns/recurrence.hpp"

#include <algorithm>

namespace pawns {
namespace {

void trim(Polynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

std::string format_polynomial(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigCount& c = p[i];
    if (c == 0) continue;
    const BigCount mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += to_decimal(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<BigCount> LinearRecurrence::coefficients() const {
  std::vector<BigCount> c;
  for (std::size_t i = 1; i < denominator.size(); ++i) c.push_back(-denominator[i]);
  return c;
}

std::string LinearRecurrence::to_string() const {
  return "(" + format_polynomial(numerator) + ") / (" + format_polynomial(denominator) + ")";
}

std::vector<BigCount> expand_gf(const LinearRecurrence& rec, std::size_t count) {
  if (rec.denominator.empty() || rec.denominator[0] != 1) {
    throw InvalidArgument("generating function denominator must have constant term 1");
  }
  std::vector<BigCount> out(count);
  const std::size_t deg = rec.denominator.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    BigCount s = i < rec.numerator.size() ? rec.numerator[i] : BigCount(0);
    for (std::size_t j = 1; j <= std::min(i, deg); ++j) s -= rec.denominator[j] * out[i - j];
    out[i] = s;
  }
  return out;
}

std::optional<LinearRecurrence> fit_linear_recurrence(const std::vector<BigCount>& seq,
                                                      std::size_t max_order) {
  if (seq.size() < 2 * max_order + 2) return std::nullopt;

  std::vector<mpq_class> conn{1};  // connection polynomial, C(0) = 1
  std::vector<mpq_class> prev{1};
  std::size_t length = 0;
  std::size_t shift = 1;
  mpq_class prev_disc = 1;

  for (std::size_t n = 0; n < seq.size(); ++n) {
    mpq_class d = seq[n];
    for (std::size_t i = 1; i <= length && i < conn.size(); ++i) d += conn[i] * seq[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const mpq_class scale = d / prev_disc;
    std::vector<mpq_class> updated = conn;
    if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) updated[i + shift] -= scale * prev[i];
    if (2 * length <= n) {
      prev = conn;
      length = n + 1 - length;
      prev_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(updated);
  }

  if (length > max_order) return std::nullopt;
  conn.resize(length + 1, 0);

  LinearRecurrence rec;
  for (const auto& c : conn) {
    if (c.get_den() != 1) return std::nullopt;
    rec.denominator.push_back(c.get_num());
  }
  // Numerator: (S * C) mod x^length.
  rec.numerator.assign(std::max<std::size_t>(length, 1), 0);
  for (std::size_t i = 0; i < rec.numerator.size(); ++i) {
    for (std::size_t j = 0; j <= i && j < rec.denominator.size(); ++j) {
      rec.numerator[i] += rec.denominator[j] * seq[i - j];
    }
  }
  trim(rec.numerator);
  trim(rec.denominator);

  if (expand_gf(rec, seq.size()) != seq) return std::nullopt;
  return rec;
}

}  // namespace pawns
