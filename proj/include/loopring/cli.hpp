#pragma once

// Command-line front end. `run` executes an already parsed configuration
// against caller-supplied streams; `main_entry` adds argument parsing.
//
// Exit codes: 0 success, 1 parse/validation error, 2 check failure or
// theorem violation, 3 usage error.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopring/catalog.hpp"
#include "loopring/enumerate.hpp"
#include "loopring/error.hpp"
#include "loopring/gf2_ring.hpp"
#include "loopring/sweep.hpp"

namespace loopring::cli {

enum class Subcommand { validate, classify, ring_check, survey, sweep, enumerate };

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCheckFailed = 2,
  kUsageError = 3,
};

struct CliConfig {
  Subcommand subcommand = Subcommand::validate;
  std::vector<std::string> inputs;
  ReportFormat format = ReportFormat::text;
  RingIdentity identity = RingIdentity::right_bol;
  std::vector<std::size_t> orders;
  std::vector<SweepCheck> checks;
  bool long_run = false;
  std::optional<std::size_t> cap;
  SurveyFilter filter = SurveyFilter::all;
  unsigned jobs = 1;
  bool timing = false;
};

inline RingIdentity parse_ring_identity(std::string_view s) {
  if (s == "right-bol") return RingIdentity::right_bol;
  if (s == "right-alt") return RingIdentity::right_alternative;
  if (s == "left-alt") return RingIdentity::left_alternative;
  if (s == "right-moufang") return RingIdentity::right_moufang;
  throw LoopError(ErrorKind::unsupported_format, "unknown ring identity '" + std::string(s) + "'");
}

namespace detail {

// Input failures already reported; carries the exit code out of helpers.
struct Abort {
  int code;
};

inline std::vector<CatalogRecord> load_catalogs(const std::vector<std::string>& paths, std::ostream& err) {
  std::vector<CatalogRecord> all;
  std::set<std::string> names;
  for (const auto& path : paths) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) {
        err << "error: " << path << ": cannot open\n";
        throw Abort{kInputError};
      }
      in = &file;
    }
    try {
      for (auto& rec : parse_catalog(*in)) {
        if (!names.insert(rec.name).second) {
          throw LoopError(ErrorKind::duplicate_name, "record '" + rec.name + "' appears in more than one input");
        }
        all.push_back(std::move(rec));
      }
    } catch (const LoopError& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      throw Abort{kInputError};
    }
  }
  return all;
}

inline RingCaps caps_of(const CliConfig& config) {
  RingCaps caps;
  if (config.cap) caps.two_var = caps.three_var = *config.cap;
  return caps;
}

inline int run_validate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  int code = kOk;
  std::set<std::string> names;
  for (const auto& path : config.inputs) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) {
        err << "error: " << path << ": cannot open\n";
        code = kInputError;
        continue;
      }
      in = &file;
    }
    std::vector<RawRecord> raw;
    try {
      raw = parse_catalog_raw(*in);
    } catch (const LoopError& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      out << "error " << path << ": " << e.what() << '\n';
      code = kInputError;
      continue;
    }
    for (const auto& r : raw) {
      if (!names.insert(r.name).second) {
        out << "error " << r.name << ": DuplicateName: line " << r.source_line << '\n';
        code = kInputError;
        continue;
      }
      try {
        const auto rec = validate_record(r);
        out << "ok " << rec.name << " order " << rec.loop.order() << " identity " << rec.loop.identity() + 1
            << '\n';
      } catch (const LoopError& e) {
        out << "error " << r.name << ": " << e.what() << '\n';
        code = kInputError;
      }
    }
  }
  return code;
}

inline int run_classify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto records = load_catalogs(config.inputs, err);
  const auto report = survey(records, SurveyFilter::all, config.jobs);
  switch (config.format) {
    case ReportFormat::text:
      for (const auto& row : report.rows) write_text_row(out, row, true);
      break;
    case ReportFormat::csv:
    case ReportFormat::json:
      write_report(out, report, config.format);
      break;
  }
  return kOk;
}

inline int run_ring_check(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto records = load_catalogs(config.inputs, err);
  const auto caps = caps_of(config);
  int code = kOk;
  for (const auto& rec : records) {
    std::optional<RingWitness> w;
    try {
      w = ring_identity_check(rec.loop, config.identity, caps, config.jobs);
    } catch (const LoopError& e) {
      err << "error: record '" << rec.name << "': " << e.what() << '\n';
      return kUsageError;
    }
    if (w) {
      out << rec.name << ": " << to_string(*w) << '\n';
      code = kCheckFailed;
    } else {
      out << rec.name << ": " << to_string(config.identity) << " holds\n";
    }
  }
  return code;
}

inline int run_survey(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto records = load_catalogs(config.inputs, err);
  write_report(out, survey(records, config.filter, config.jobs), config.format);
  return kOk;
}

inline int run_sweep_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
  SweepSpec base;
  base.jobs = config.jobs;
  base.long_run = config.long_run;
  base.caps = caps_of(config);
  const std::vector<std::size_t> orders =
      config.orders.empty() ? std::vector<std::size_t>{2, 3, 4, 5} : config.orders;

  SweepResult all;
  for (auto order : orders) {
    SweepSpec spec = base;
    spec.orders = {order};
    if (config.checks.empty()) {
      // Default: every check the caps admit at this order.
      for (auto c : kAllSweepChecks) {
        if (sweep_allowed(c, order, spec)) spec.checks.push_back(c);
      }
      if (spec.checks.empty()) {
        err << "error: no check may run at order " << order << " (order 7 requires --long)\n";
        return kUsageError;
      }
    } else {
      spec.checks = config.checks;
    }
    SweepResult part;
    try {
      part = run_sweep(spec);
    } catch (const LoopError& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
    for (auto& cell : part.cells) {
      if (config.timing) {
        err << "order " << cell.order << ' ' << to_string(cell.check) << ": " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double>(cell.wall_time).count() << " s\n";
      }
      all.cells.push_back(std::move(cell));
    }
  }
  write_sweep_report(out, all, config.format);
  return all.ok() ? kOk : kCheckFailed;
}

inline int run_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.orders.size() != 1) {
    err << "error: enumerate needs exactly one --order\n";
    return kUsageError;
  }
  const std::size_t n = config.orders.front();
  if (n == kMaxEnumerationOrder && !config.long_run) {
    err << "error: enumerating order 7 requires --long\n";
    return kUsageError;
  }
  std::uint64_t index = 0;
  try {
    enumerate_loops(n, [&](const LoopTable& loop) {
      if (index) out << '\n';
      emit_record(out, std::to_string(n) + "." + std::to_string(++index), loop);
    });
  } catch (const LoopError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace detail

/// Executes one subcommand. Diagnostics are single lines on `err`.
inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kUsageError;
  }
  try {
    switch (config.subcommand) {
      case Subcommand::validate: return detail::run_validate(config, out, err);
      case Subcommand::classify: return detail::run_classify(config, out, err);
      case Subcommand::ring_check: return detail::run_ring_check(config, out, err);
      case Subcommand::survey: return detail::run_survey(config, out, err);
      case Subcommand::sweep: return detail::run_sweep_command(config, out, err);
      case Subcommand::enumerate: return detail::run_enumerate(config, out, err);
    }
  } catch (const detail::Abort& a) {
    return a.code;
  } catch (const TheoremViolation& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const LoopError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

/// Parses argv into a CliConfig and runs it.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide Bol, Moufang, SRAR and RA2 properties of finite loops", "loopring"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "text";
  std::string identity;
  std::string filter = "all";
  std::vector<std::string> checks;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check catalog records against the loop axioms");
  validate->add_option("inputs", config.inputs, "Catalog files ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify", "Print the classification row of each record");
  classify->add_option("inputs", config.inputs, "Catalog files ('-' for stdin)")->required();
  add_format(classify);
  add_jobs(classify);

  auto* ring = app.add_subcommand("ring-check", "Brute-force a ring identity in GF(2)L for each record");
  ring->add_option("inputs", config.inputs, "Catalog files ('-' for stdin)")->required();
  ring->add_option("--identity", identity, "right-bol, right-alt, left-alt or right-moufang")
      ->required()
      ->check(CLI::IsMember({"right-bol", "right-alt", "left-alt", "right-moufang"}));
  ring->add_option("--cap", config.cap, "Largest order to accept (overrides the defaults 8 and 6)");
  add_jobs(ring);

  auto* surv = app.add_subcommand("survey", "Aggregate classification counts over catalogs");
  surv->add_option("inputs", config.inputs, "Catalog files ('-' for stdin)")->required();
  surv->add_option("--filter", filter, "all or non-moufang-bol")
      ->check(CLI::IsMember({"all", "non-moufang-bol"}));
  add_format(surv);
  add_jobs(surv);

  auto* sweep = app.add_subcommand("sweep", "Verify the structural results on every loop of small order");
  sweep->add_option("--order", config.orders, "Loop order (repeatable; default 2 3 4 5)");
  sweep->add_option("--check", checks, "Check name (repeatable; default all that fit the caps)");
  sweep->add_flag("--long", config.long_run, "Allow order 7, and order 6 for the ring-oracle checks");
  sweep->add_option("--cap", config.cap, "Ring-oracle order cap override");
  sweep->add_flag("--timing", config.timing, "Report wall time per check on stderr");
  add_format(sweep);
  add_jobs(sweep);

  auto* enumerate = app.add_subcommand("enumerate", "Stream every normalized loop of one order");
  enumerate->add_option("--order", config.orders, "Loop order, 1 to 7")->required();
  enumerate->add_flag("--long", config.long_run, "Allow order 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    config.format = parse_report_format(format);
    config.filter = parse_survey_filter(filter);
    if (!identity.empty()) config.identity = parse_ring_identity(identity);
    for (const auto& c : checks) config.checks.push_back(parse_sweep_check(c));
  } catch (const LoopError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (*validate) config.subcommand = Subcommand::validate;
  else if (*classify) config.subcommand = Subcommand::classify;
  else if (*ring) config.subcommand = Subcommand::ring_check;
  else if (*surv) config.subcommand = Subcommand::survey;
  else if (*sweep) config.subcommand = Subcommand::sweep;
  else config.subcommand = Subcommand::enumerate;

  return run(config, out, err);
}

}  // namespace loopring::cli
