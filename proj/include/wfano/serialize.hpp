#pragma once

// Text forms: scenario specs ("family=pp-n1 n=4 a=2 b=1"), inclusive ranges
// ("3..6"), and the CSV / JSON row format shared by the CLI subcommands.
// Rationals are always written as exact "p/q" strings.

#include <wfano/classify.hpp>

#include <json.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wfano {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {
// Parses a decimal int occupying all of text; column points at text[0].
inline int parse_int_at(std::string_view text, int line, int column) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = first + text.size();
  if (text.empty()) throw ParseError(line, column, "expected an integer");
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, column, "integer out of range");
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, column + static_cast<int>(ptr - first),
                     "unexpected character in integer '" + std::string(text) + "'");
  return value;
}
}  // namespace detail

// "k" or "lo..hi", both ends inclusive.
inline IntRange parse_range(std::string_view text, int line = 1, int column = 1) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = detail::parse_int_at(text, line, column);
    return {v, v};
  }
  const int lo = detail::parse_int_at(text.substr(0, dots), line, column);
  const int hi = detail::parse_int_at(text.substr(dots + 2), line, column + static_cast<int>(dots) + 2);
  return {lo, hi};
}

// Whitespace- or comma-separated key=value pairs over one or more lines.
// Keys: family, n, a, b, d, t. Unset a, b, d default to 0 and t to the
// family's intersection count.
inline Scenario parse_scenario_spec(std::string_view text) {
  std::optional<Family> family;
  std::optional<int> n, a, b, d, t;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (is_sep(c)) {
      ++column;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]) && text[j] != '\n') ++j;
    const auto token = text.substr(i, j - i);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line, column, "expected key=value, got '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    const int value_col = column + static_cast<int>(eq) + 1;
    if (key == "family") {
      family = parse_family(value);
      if (!family) throw ParseError(line, value_col, "unknown family '" + std::string(value) + "'");
    } else {
      std::optional<int>* slot = key == "n"   ? &n
                                 : key == "a" ? &a
                                 : key == "b" ? &b
                                 : key == "d" ? &d
                                 : key == "t" ? &t
                                              : nullptr;
      if (!slot) throw ParseError(line, column, "unknown key '" + std::string(key) + "'");
      if (slot->has_value()) throw ParseError(line, column, "duplicate key '" + std::string(key) + "'");
      *slot = detail::parse_int_at(value, line, value_col);
    }
    column += static_cast<int>(j - i);
    i = j;
  }
  if (!family) throw ParseError(line, column, "missing family=");
  if (!n) throw ParseError(line, column, "missing n=");
  Scenario s;
  switch (*family) {
    case Family::pp_n1: s = Scenario::main(*n, a.value_or(0), b.value_or(0)); break;
    case Family::pp_n2: s = Scenario::p2(*n, d.value_or(0)); break;
    default: s = Scenario::pn(*family, *n, t.value_or(0)); break;
  }
  if (t) s.t = *t;
  return s;
}

// ---------------------------------------------------------------------------
// Row formats

inline const std::vector<std::string>& row_keys() {
  static const std::vector<std::string> keys{"family", "n",  "a",  "b",  "d",  "status",
                                             "c0",     "c1", "c2", "c3", "selfint"};
  return keys;
}

inline std::string csv_header() {
  std::string out;
  for (const auto& k : row_keys()) out += (out.empty() ? "" : ",") + k;
  return out;
}

inline std::string csv_row(const SweepRow& row) {
  const auto& s = row.scenario;
  const auto& v = row.verdict;
  std::ostringstream os;
  os << family_name(s.family) << ',' << s.n << ',';
  if (s.family == Family::pp_n1) os << s.a << ',' << s.b << ",,";
  else if (s.family == Family::pp_n2) os << ",," << s.d << ',';
  else os << ",,,";
  os << status_name(v.status);
  for (std::size_t i = 0; i < 4; ++i) {
    os << ',';
    if (i < v.coeffs.size()) os << to_string(v.coeffs[i]);
  }
  os << ',' << to_string(v.selfint);
  return os.str();
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

using Json = nlohmann::ordered_json;

inline Json json_row(const SweepRow& row) {
  const auto& s = row.scenario;
  const auto& v = row.verdict;
  Json j;
  j["family"] = std::string(family_name(s.family));
  j["n"] = s.n;
  j["a"] = s.family == Family::pp_n1 ? Json(s.a) : Json(nullptr);
  j["b"] = s.family == Family::pp_n1 ? Json(s.b) : Json(nullptr);
  j["d"] = s.family == Family::pp_n2 ? Json(s.d) : Json(nullptr);
  j["status"] = std::string(status_name(v.status));
  for (std::size_t i = 0; i < 4; ++i)
    j["c" + std::to_string(i)] = i < v.coeffs.size() ? Json(to_string(v.coeffs[i])) : Json(nullptr);
  j["selfint"] = to_string(v.selfint);
  // Not part of the CSV header; needed to tell the two pn-ex2 configurations apart.
  j["t"] = s.t;
  return j;
}

inline std::string to_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(json_row(r));
  return arr.dump(2) + "\n";
}

inline SweepRow row_from_json(const Json& j) {
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("unknown family in JSON row");
  const int n = j.at("n").get<int>();
  Scenario s;
  switch (*family) {
    case Family::pp_n1: s = Scenario::main(n, j.at("a").get<int>(), j.at("b").get<int>()); break;
    case Family::pp_n2: s = Scenario::p2(n, j.at("d").get<int>()); break;
    default: s = Scenario::pn(*family, n); break;
  }
  if (j.contains("t")) s.t = j.at("t").get<int>();
  const auto status = parse_status(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status in JSON row");
  Verdict v;
  v.status = *status;
  for (int i = 0; i < 4; ++i) {
    const auto& c = j.at("c" + std::to_string(i));
    if (!c.is_null()) v.coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  v.selfint = parse_rational(j.at("selfint").get<std::string>());
  return {s, v};
}

}  // namespace wfano
