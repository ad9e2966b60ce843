#pragma once

// Loop catalogs in the canonical text format, classification surveys over
// them, and report serialization.
//
// Canonical format (UTF-8, LF):
//
//   # comment lines start with '#'
//   loop <name>
//   order <n>
//   <n lines of n whitespace-separated integers in 1..n>
//
// with blank lines between records. Row i, column j holds the product of
// elements i and j, 1-indexed.

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "loopring/conditions.hpp"
#include "loopring/detail/scan.hpp"
#include "loopring/error.hpp"
#include "loopring/identities.hpp"
#include "loopring/loop_table.hpp"
#include "loopring/witness.hpp"

namespace loopring {

/// A record as read from text, before the loop axioms are checked.
struct RawRecord {
  std::string name;
  std::vector<std::vector<int>> rows;
  std::size_t source_line = 0;
};

struct CatalogRecord {
  std::string name;
  LoopTable loop;
  std::size_t source_line = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& reason) {
  throw LoopError(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + reason);
}

inline std::optional<long long> to_integer(std::string_view token) {
  long long v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

/// Reads records without checking the loop axioms. Throws ParseError with
/// the offending line number.
inline std::vector<RawRecord> parse_catalog_raw(std::istream& in) {
  std::vector<RawRecord> out;
  std::string buffer;
  std::size_t lineno = 0;

  // Next line that is not a comment, or nullopt at end of input.
  auto next_line = [&]() -> std::optional<std::string_view> {
    while (std::getline(in, buffer)) {
      ++lineno;
      if (!buffer.empty() && buffer.back() == '\r') buffer.pop_back();
      if (detail::is_comment(buffer)) continue;
      return std::string_view(buffer);
    }
    return std::nullopt;
  };

  while (auto line = next_line()) {
    auto text = detail::trim(*line);
    if (text.empty()) continue;

    RawRecord rec;
    rec.source_line = lineno;
    if (text.substr(0, 5) != "loop " && text.substr(0, 5) != "loop\t") {
      detail::parse_fail(lineno, "expected 'loop <name>', got '" + std::string(text) + "'");
    }
    rec.name = std::string(detail::trim(text.substr(5)));
    if (rec.name.empty()) detail::parse_fail(lineno, "record name is empty");

    auto order_line = next_line();
    if (!order_line) detail::parse_fail(lineno, "unexpected end of input, expected 'order <n>'");
    const auto order_tokens = detail::split_ws(*order_line);
    if (order_tokens.size() != 2 || order_tokens[0] != "order") {
      detail::parse_fail(lineno, "expected 'order <n>', got '" + std::string(detail::trim(*order_line)) + "'");
    }
    const auto n = detail::to_integer(order_tokens[1]);
    if (!n || *n < 1 || static_cast<std::size_t>(*n) > kMaxOrder) {
      detail::parse_fail(lineno, "invalid order '" + std::string(order_tokens[1]) + "'");
    }
    const auto order = static_cast<std::size_t>(*n);

    for (std::size_t r = 0; r < order; ++r) {
      auto row_line = next_line();
      if (!row_line) {
        detail::parse_fail(lineno, "unexpected end of input in record '" + rec.name + "', expected " +
                                       std::to_string(order - r) + " more rows");
      }
      const auto tokens = detail::split_ws(*row_line);
      if (tokens.empty()) {
        detail::parse_fail(lineno, "blank line inside record '" + rec.name + "'");
      }
      if (tokens.size() != order) {
        detail::parse_fail(lineno, "row has " + std::to_string(tokens.size()) + " entries, expected " +
                                       std::to_string(order));
      }
      std::vector<int> row;
      row.reserve(order);
      for (auto tok : tokens) {
        const auto v = detail::to_integer(tok);
        if (!v || *v < std::numeric_limits<int>::min() || *v > std::numeric_limits<int>::max()) {
          detail::parse_fail(lineno, "'" + std::string(tok) + "' is not an integer");
        }
        row.push_back(static_cast<int>(*v));
      }
      rec.rows.push_back(std::move(row));
    }

    // The grid must be followed by a blank line or the end of input.
    if (auto after = next_line(); after && !detail::trim(*after).empty()) {
      detail::parse_fail(lineno, "expected a blank line after the " + std::to_string(order) +
                                     " rows of record '" + rec.name + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// Validates one raw record. Throws ValidationError naming the record.
inline CatalogRecord validate_record(const RawRecord& raw) {
  try {
    return {raw.name, validate_table(raw.rows), raw.source_line};
  } catch (const LoopError& e) {
    throw LoopError(ErrorKind::validation_error, "record '" + raw.name + "' (line " +
                                                     std::to_string(raw.source_line) + "): " + e.what());
  }
}

/// Parses and validates a whole catalog, preserving record order.
inline std::vector<CatalogRecord> parse_catalog(std::istream& in) {
  const auto raw = parse_catalog_raw(in);
  std::vector<CatalogRecord> out;
  out.reserve(raw.size());
  std::set<std::string> names;
  for (const auto& r : raw) {
    if (!names.insert(r.name).second) {
      throw LoopError(ErrorKind::duplicate_name,
                      "record '" + r.name + "' at line " + std::to_string(r.source_line) + " reuses a name");
    }
    out.push_back(validate_record(r));
  }
  return out;
}

inline std::vector<CatalogRecord> parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_catalog(in);
}

inline void emit_record(std::ostream& out, std::string_view name, const LoopTable& loop) {
  out << "loop " << name << '\n' << "order " << loop.order() << '\n';
  for (const auto& row : loop.to_raw()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

/// Writes records in canonical form, one blank line between records.
inline void emit_catalog(std::ostream& out, const std::vector<CatalogRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << '\n';
    emit_record(out, records[i].name, records[i].loop);
  }
}

/// The classification battery for one loop.
struct Classification {
  std::string name;
  std::size_t order = 0;
  bool right_bol = false;
  bool moufang = false;
  bool srar = false;
  bool ra2 = false;
  bool extra = false;
  bool group = false;
  TripleCoverage coverage;
  TripleProfile profile;
  std::optional<Witness> srar_witness;
  std::optional<Witness> ra2_witness;
};

inline Classification classify(std::string name, const LoopTable& loop) {
  Classification c;
  c.name = std::move(name);
  c.order = loop.order();
  c.right_bol = is_right_bol(loop);
  c.moufang = is_moufang(loop);
  auto srar = is_srar(loop);
  c.srar = srar.holds;
  c.srar_witness = std::move(srar.witness);
  auto ra2 = is_ra2(loop);
  c.ra2 = ra2.holds;
  c.ra2_witness = std::move(ra2.witness);
  c.extra = is_extra(loop);
  c.group = is_group(loop);
  c.profile = triple_profile(loop);
  c.coverage = coverage_of(c.profile);
  return c;
}

enum class SurveyFilter { all, non_moufang_bol };

inline constexpr std::string_view to_string(SurveyFilter f) noexcept {
  return f == SurveyFilter::all ? "all" : "non-moufang-bol";
}

inline SurveyFilter parse_survey_filter(std::string_view s) {
  if (s == "all") return SurveyFilter::all;
  if (s == "non-moufang-bol" || s == "non_moufang_bol") return SurveyFilter::non_moufang_bol;
  throw LoopError(ErrorKind::unsupported_format, "unknown survey filter '" + std::string(s) + "'");
}

/// Aggregate counts. `total` and `non_moufang_bol` count every record; the
/// other counts and `rows` cover the records passing the filter.
struct SurveyReport {
  SurveyFilter filter = SurveyFilter::all;
  std::uint64_t total = 0;
  std::uint64_t non_moufang_bol = 0;
  std::uint64_t srar = 0;
  std::uint64_t non_srar = 0;
  std::uint64_t non_srar_with_def = 0;
  std::vector<Classification> rows;
};

inline SurveyReport survey(const std::vector<CatalogRecord>& records, SurveyFilter filter, unsigned jobs = 1) {
  auto rows = detail::parallel_map(records.size(), jobs, [&](std::size_t i) {
    return classify(records[i].name, records[i].loop);
  });
  SurveyReport report;
  report.filter = filter;
  report.total = rows.size();
  for (auto& row : rows) {
    const bool nmb = row.right_bol && !row.moufang;
    if (nmb) ++report.non_moufang_bol;
    if (filter == SurveyFilter::non_moufang_bol && !nmb) continue;
    if (row.srar) {
      ++report.srar;
    } else {
      ++report.non_srar;
      if (row.coverage.def_everywhere) ++report.non_srar_with_def;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw LoopError(ErrorKind::unsupported_format, "unknown report format '" + std::string(s) + "'");
}

/// Keys of the triple profile, by condition mask.
inline constexpr std::array<std::string_view, 8> kProfileKeys = {
    "none", "D'", "E'", "D'E'", "F'", "D'F'", "E'F'", "D'E'F'",
};

inline constexpr std::string_view kCsvHeader =
    "name,order,right_bol,moufang,srar,ra2,extra,group,def_everywhere,de,df,ef";

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const char* boolstr(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json flags;
  flags["right_bol"] = c.right_bol;
  flags["moufang"] = c.moufang;
  flags["srar"] = c.srar;
  flags["ra2"] = c.ra2;
  flags["extra"] = c.extra;
  flags["group"] = c.group;
  flags["def_everywhere"] = c.coverage.def_everywhere;
  flags["de"] = c.coverage.de_everywhere;
  flags["df"] = c.coverage.df_everywhere;
  flags["ef"] = c.coverage.ef_everywhere;
  nlohmann::ordered_json profile;
  for (std::size_t m = 0; m < kProfileKeys.size(); ++m) profile[std::string(kProfileKeys[m])] = c.profile.counts[m];
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["order"] = c.order;
  j["flags"] = std::move(flags);
  j["triple_profile"] = std::move(profile);
  return j;
}

inline void write_csv_row(std::ostream& out, const Classification& c) {
  using detail::boolstr;
  out << detail::csv_field(c.name) << ',' << c.order << ',' << boolstr(c.right_bol) << ','
      << boolstr(c.moufang) << ',' << boolstr(c.srar) << ',' << boolstr(c.ra2) << ',' << boolstr(c.extra)
      << ',' << boolstr(c.group) << ',' << boolstr(c.coverage.def_everywhere) << ','
      << boolstr(c.coverage.de_everywhere) << ',' << boolstr(c.coverage.df_everywhere) << ','
      << boolstr(c.coverage.ef_everywhere) << '\n';
}

/// One human-readable line per record, optionally followed by the SRAR and
/// RA2 counterexamples.
inline void write_text_row(std::ostream& out, const Classification& c, bool with_witnesses) {
  using detail::boolstr;
  out << c.name << " order=" << c.order << " right_bol=" << boolstr(c.right_bol)
      << " moufang=" << boolstr(c.moufang) << " srar=" << boolstr(c.srar) << " ra2=" << boolstr(c.ra2)
      << " extra=" << boolstr(c.extra) << " group=" << boolstr(c.group)
      << " def_everywhere=" << boolstr(c.coverage.def_everywhere) << " de=" << boolstr(c.coverage.de_everywhere)
      << " df=" << boolstr(c.coverage.df_everywhere) << " ef=" << boolstr(c.coverage.ef_everywhere) << '\n';
  if (!with_witnesses) return;
  if (c.srar_witness) out << "  srar: " << to_string(*c.srar_witness) << '\n';
  if (c.ra2_witness) out << "  ra2: " << to_string(*c.ra2_witness) << '\n';
}

inline void write_report(std::ostream& out, const SurveyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["aggregates"] = {
          {"filter", std::string(to_string(report.filter))},
          {"total", report.total},
          {"non_moufang_bol", report.non_moufang_bol},
          {"srar", report.srar},
          {"non_srar", report.non_srar},
          {"non_srar_with_def", report.non_srar_with_def},
      };
      j["records"] = nlohmann::ordered_json::array();
      for (const auto& row : report.rows) j["records"].push_back(to_json(row));
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      out << kCsvHeader << '\n';
      for (const auto& row : report.rows) write_csv_row(out, row);
      break;
    case ReportFormat::text:
      out << "records: " << report.total << " (filter: " << to_string(report.filter)
          << ", surveyed: " << report.rows.size() << ")\n";
      out << "non-Moufang Bol: " << report.non_moufang_bol << ", SRAR: " << report.srar
          << ", non-SRAR: " << report.non_srar
          << ", non-SRAR with D'/E'/F' everywhere: " << report.non_srar_with_def << '\n';
      for (const auto& row : report.rows) write_text_row(out, row, false);
      break;
  }
}

inline std::string write_report(const SurveyReport& report, ReportFormat format) {
  std::ostringstream os;
  write_report(os, report, format);
  return os.str();
}

}  // namespace loopring
