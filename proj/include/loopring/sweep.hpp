#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "loopring/catalog.hpp"
#include "loopring/conditions.hpp"
#include "loopring/enumerate.hpp"
#include "loopring/error.hpp"
#include "loopring/gf2_ring.hpp"
#include "loopring/identities.hpp"
#include "loopring/theorems.hpp"

namespace loopring {

/// One proved statement, checked on every enumerated loop.
enum class SweepCheck {
  ring_bol_equiv,          // GF(2)L right Bol <=> SRAR
  ring_alt_equiv,          // GF(2)L left/right alternative <=> A/B/C, A*/B*/C*
  allthree,                // SRAR: all of D,E,F or exactly one
  lip_equiv,               // Bol: x^{-1}(xy)=y <=> x(x^{-1}y)=y
  commute_or_lip,          // Bol, every pair commutes or has LIP => Moufang
  pair_coverage,           // Bol, pair of D',E',F' everywhere => RA2 extra / group / abelian
  ra2_implies_srar,        // RA2 => SRAR
  pairs_imply_ra2,         // Bol, some pair everywhere => RA2
  odd_srar_associative,    // SRAR of odd order => group
  moufang_implies_bol,
  bol_implies_ralt_rip,
  bol_lip_implies_moufang,
  extra_characterization,  // extra <=> Moufang with squares in the nucleus
};

inline constexpr std::array kAllSweepChecks = {
    SweepCheck::ring_bol_equiv,       SweepCheck::ring_alt_equiv,       SweepCheck::allthree,
    SweepCheck::lip_equiv,            SweepCheck::commute_or_lip,       SweepCheck::pair_coverage,
    SweepCheck::ra2_implies_srar,     SweepCheck::pairs_imply_ra2,      SweepCheck::odd_srar_associative,
    SweepCheck::moufang_implies_bol,  SweepCheck::bol_implies_ralt_rip, SweepCheck::bol_lip_implies_moufang,
    SweepCheck::extra_characterization,
};

constexpr std::string_view to_string(SweepCheck c) noexcept {
  switch (c) {
    case SweepCheck::ring_bol_equiv: return "ring_bol_equiv";
    case SweepCheck::ring_alt_equiv: return "ring_alt_equiv";
    case SweepCheck::allthree: return "allthree";
    case SweepCheck::lip_equiv: return "lip_equiv";
    case SweepCheck::commute_or_lip: return "commute_or_lip";
    case SweepCheck::pair_coverage: return "pair_coverage";
    case SweepCheck::ra2_implies_srar: return "ra2_implies_srar";
    case SweepCheck::pairs_imply_ra2: return "pairs_imply_ra2";
    case SweepCheck::odd_srar_associative: return "odd_srar_associative";
    case SweepCheck::moufang_implies_bol: return "moufang_implies_bol";
    case SweepCheck::bol_implies_ralt_rip: return "bol_implies_ralt_rip";
    case SweepCheck::bol_lip_implies_moufang: return "bol_lip_implies_moufang";
    case SweepCheck::extra_characterization: return "extra_characterization";
  }
  return "?";
}

inline SweepCheck parse_sweep_check(std::string_view s) {
  for (auto c : kAllSweepChecks) {
    if (to_string(c) == s) return c;
  }
  throw LoopError(ErrorKind::unsupported_format, "unknown sweep check '" + std::string(s) + "'");
}

constexpr bool uses_ring(SweepCheck c) noexcept {
  return c == SweepCheck::ring_bol_equiv || c == SweepCheck::ring_alt_equiv;
}

/// Ring-oracle sweeps stop at order 6; everything else at order 7.
inline constexpr std::size_t kMaxRingSweepOrder = 6;

struct SweepSpec {
  std::vector<std::size_t> orders;
  std::vector<SweepCheck> checks;
  unsigned jobs = 1;
  /// Unlocks order 7, and order 6 for the ring-oracle checks.
  bool long_run = false;
  RingCaps caps;
};

/// Whether `check` may run at `order` under `spec`'s caps and gating; the
/// reason is filled in when it may not.
inline bool sweep_allowed(SweepCheck check, std::size_t order, const SweepSpec& spec, std::string* reason = nullptr) {
  auto deny = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const std::string label = std::string(to_string(check)) + " at order " + std::to_string(order);
  if (order > kMaxEnumerationOrder) return deny(label + ": enumeration stops at order 7");
  if (order == kMaxEnumerationOrder && !spec.long_run) return deny(label + " requires --long");
  if (uses_ring(check)) {
    const std::size_t cap = check == SweepCheck::ring_bol_equiv ? spec.caps.three_var : spec.caps.two_var;
    if (order > kMaxRingSweepOrder) return deny(label + ": ring-oracle sweeps stop at order 6");
    if (order > cap) return deny(label + " exceeds the ring cap " + std::to_string(cap));
    if (order == kMaxRingSweepOrder && !spec.long_run) return deny(label + " requires --long");
  }
  return true;
}

struct SweepViolation {
  LoopTable loop;
  std::string detail;
};

struct SweepCell {
  std::size_t order = 0;
  SweepCheck check{};
  std::uint64_t loops_scanned = 0;
  std::uint64_t applicable = 0;  // loops meeting the statement's standing hypothesis
  std::uint64_t violations = 0;
  std::optional<SweepViolation> first_violation;
  std::chrono::nanoseconds wall_time{0};
};

struct SweepResult {
  std::vector<SweepCell> cells;

  std::uint64_t violations() const noexcept {
    std::uint64_t v = 0;
    for (const auto& c : cells) v += c.violations;
    return v;
  }
  bool ok() const noexcept { return violations() == 0; }

  const SweepCell* find(std::size_t order, SweepCheck check) const noexcept {
    for (const auto& c : cells) {
      if (c.order == order && c.check == check) return &c;
    }
    return nullptr;
  }
};

namespace detail {

struct CheckOutcome {
  bool applicable = false;
  std::optional<std::string> violation;
};

inline std::string yes_no(bool b) { return b ? "holds" : "fails"; }

inline CheckOutcome run_check(SweepCheck check, const LoopTable& loop, const RingCaps& caps) {
  CheckOutcome out;
  auto implication = [&](const ImplicationCheck& c, std::string_view what) {
    out.applicable = c.hypothesis;
    if (!c.ok()) out.violation = std::string(what) + ": hypothesis holds but conclusion fails";
  };
  try {
    switch (check) {
      case SweepCheck::ring_bol_equiv: {
        out.applicable = true;
        const bool ring = ring_identity_holds(loop, RingIdentity::right_bol, caps);
        const auto srar = is_srar(loop);
        if (ring != srar.holds) {
          out.violation = "GF(2)L right Bol " + yes_no(ring) + ", pointwise SRAR criterion " + yes_no(srar.holds);
          if (srar.witness) *out.violation += " (" + to_string(*srar.witness) + ")";
        }
        break;
      }
      case SweepCheck::ring_alt_equiv: {
        out.applicable = true;
        const auto r = oracle_equiv_ra2(loop, caps);
        if (!r.ok()) {
          out.violation = "ring left alt " + yes_no(r.ring_left_alternative) + ", A/B/C everywhere " +
                          yes_no(r.left_pointwise) + ", loop left alt " + yes_no(r.loop_left_alternative) +
                          "; ring right alt " + yes_no(r.ring_right_alternative) + ", A*/B*/C* everywhere " +
                          yes_no(r.right_pointwise) + ", loop right alt " + yes_no(r.loop_right_alternative) +
                          "; Moufang " + yes_no(r.moufang) + ", RA2 " + yes_no(r.ra2);
        }
        break;
      }
      case SweepCheck::allthree: {
        if (!is_srar(loop).holds) break;
        out.applicable = true;
        if (auto w = verify_allthree(loop)) {
          out.violation = to_string(*w);
          break;
        }
        // The same pattern for D', E', F' on triples.
        const auto p = triple_profile(loop);
        const std::uint64_t odd = p.counts[0] + p.counts[cond::D | cond::E] + p.counts[cond::D | cond::F] +
                                  p.counts[cond::E | cond::F];
        if (odd) out.violation = std::to_string(odd) + " triples satisfy none or exactly two of D', E', F'";
        break;
      }
      case SweepCheck::lip_equiv:
        if (!is_right_bol(loop)) break;
        out.applicable = true;
        if (auto w = verify_lip_equivalence(loop)) out.violation = to_string(*w);
        break;
      case SweepCheck::commute_or_lip:
        if (!is_right_bol(loop)) break;
        out.applicable = verify_commute_or_lip(loop);
        break;
      case SweepCheck::pair_coverage: {
        if (!is_right_bol(loop)) break;
        const auto r = verify_pair_coverage(loop);
        out.applicable = r.clauses[0].hypothesis || r.clauses[1].hypothesis || r.clauses[2].hypothesis;
        static constexpr std::array<std::string_view, 3> names = {
            "D' or E' everywhere => RA2 and extra", "D' or F' everywhere => group",
            "E' or F' everywhere => abelian group"};
        for (std::size_t i = 0; i < 3; ++i) {
          if (!r.clauses[i].ok()) {
            out.violation = std::string(names[i]) + ": conclusion fails";
            break;
          }
        }
        break;
      }
      case SweepCheck::ra2_implies_srar:
        implication(verify_ra2_implies_srar(loop), "RA2 => SRAR");
        break;
      case SweepCheck::pairs_imply_ra2:
        implication(verify_pairs_imply_ra2(loop), "Bol with a covering pair of D', E', F' => RA2");
        break;
      case SweepCheck::odd_srar_associative:
        implication(verify_odd_srar_associative(loop), "SRAR of odd order => associative");
        break;
      case SweepCheck::moufang_implies_bol:
        implication(verify_moufang_implies_bol(loop), "Moufang => right Bol");
        break;
      case SweepCheck::bol_implies_ralt_rip:
        implication(verify_bol_implies_ralt_rip(loop), "right Bol => right alternative and RIP");
        break;
      case SweepCheck::bol_lip_implies_moufang:
        implication(verify_bol_lip_implies_moufang(loop), "right Bol with LIP => Moufang");
        break;
      case SweepCheck::extra_characterization: {
        const auto r = verify_extra_characterization(loop);
        out.applicable = r.extra_identity || r.moufang_squares_in_nucleus;
        if (!r.ok()) {
          out.violation = "extra identity " + yes_no(r.extra_identity) + ", Moufang with squares in nucleus " +
                          yes_no(r.moufang_squares_in_nucleus);
        }
        break;
      }
    }
  } catch (const TheoremViolation& e) {
    out.applicable = true;
    out.violation = e.what();
  }
  return out;
}

}  // namespace detail

/// Runs every requested check on every loop of every requested order.
/// Throws OrderExceedsCap before doing any work if a (check, order) pair is
/// outside the caps. Results do not depend on `jobs` except for wall_time.
inline SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.orders.empty()) throw LoopError(ErrorKind::malformed, "sweep needs at least one order");
  if (spec.checks.empty()) throw LoopError(ErrorKind::malformed, "sweep needs at least one check");
  for (auto order : spec.orders) {
    if (order == 0) throw LoopError(ErrorKind::malformed, "loop order must be positive");
    for (auto check : spec.checks) {
      std::string reason;
      if (!sweep_allowed(check, order, spec, &reason)) throw LoopError(ErrorKind::order_exceeds_cap, reason);
    }
  }

  struct Tally {
    std::atomic<std::uint64_t> applicable{0};
    std::atomic<std::uint64_t> violations{0};
    std::atomic<std::int64_t> nanos{0};
    std::mutex guard;
    std::optional<SweepViolation> first;
  };

  SweepResult result;
  for (auto order : spec.orders) {
    const std::size_t k = spec.checks.size();
    auto tallies = std::make_unique<Tally[]>(k);
    const std::uint64_t scanned = enumerate_loops(
        order,
        [&](const LoopTable& loop) {
          for (std::size_t i = 0; i < k; ++i) {
            const auto start = std::chrono::steady_clock::now();
            auto outcome = detail::run_check(spec.checks[i], loop, spec.caps);
            auto& t = tallies[i];
            t.nanos += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
                           .count();
            if (outcome.applicable) ++t.applicable;
            if (!outcome.violation) continue;
            ++t.violations;
            std::lock_guard lock(t.guard);
            if (!t.first || loop < t.first->loop) t.first = SweepViolation{loop, std::move(*outcome.violation)};
          }
        },
        spec.jobs);
    for (std::size_t i = 0; i < k; ++i) {
      SweepCell cell;
      cell.order = order;
      cell.check = spec.checks[i];
      cell.loops_scanned = scanned;
      cell.applicable = tallies[i].applicable.load();
      cell.violations = tallies[i].violations.load();
      cell.first_violation = std::move(tallies[i].first);
      cell.wall_time = std::chrono::nanoseconds(tallies[i].nanos.load());
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

/// Serializes a sweep in the same envelope as survey reports. Wall times
/// are left out so the output is reproducible.
inline void write_sweep_report(std::ostream& out, const SweepResult& result, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      std::uint64_t scanned = 0;
      for (const auto& c : result.cells) scanned += c.loops_scanned;
      j["aggregates"] = {
          {"cells", result.cells.size()},
          {"loops_scanned", scanned},
          {"violations", result.violations()},
      };
      j["records"] = nlohmann::ordered_json::array();
      for (const auto& c : result.cells) {
        nlohmann::ordered_json r;
        r["order"] = c.order;
        r["check"] = std::string(to_string(c.check));
        r["loops_scanned"] = c.loops_scanned;
        r["applicable"] = c.applicable;
        r["violations"] = c.violations;
        if (c.first_violation) {
          r["first_violation"] = {{"detail", c.first_violation->detail},
                                  {"table", c.first_violation->loop.to_raw()}};
        } else {
          r["first_violation"] = nullptr;
        }
        j["records"].push_back(std::move(r));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      out << "order,check,loops_scanned,applicable,violations\n";
      for (const auto& c : result.cells) {
        out << c.order << ',' << to_string(c.check) << ',' << c.loops_scanned << ',' << c.applicable << ','
            << c.violations << '\n';
      }
      break;
    case ReportFormat::text:
      for (const auto& c : result.cells) {
        out << "order " << c.order << ' ' << to_string(c.check) << ": scanned " << c.loops_scanned
            << ", applicable " << c.applicable << ", violations " << c.violations << '\n';
        if (c.first_violation) {
          out << "  first violation: " << c.first_violation->detail << '\n';
          emit_record(out, "violation", c.first_violation->loop);
        }
      }
      out << (result.ok() ? "sweep passed" : "sweep FAILED") << ": " << result.violations() << " violations\n";
      break;
  }
}

}  // namespace loopring
