#pragma once

// Text and line-delimited JSON rendering of verification reports.

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "autcrit/verify.hpp"

namespace autcrit {

enum class ReportFormat { Text, Json };

inline nlohmann::ordered_json row_json(const ReportRow& r) {
  nlohmann::ordered_json j;
  auto opt = [](std::optional<bool> b) { return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr); };
  j["group"] = r.group;
  j["order"] = r.order;
  j["prime"] = r.prime;
  j["criterion"] = std::string(to_string(r.criterion));
  j["predicted"] = opt(r.predicted);
  j["observed"] = opt(r.observed);
  j["match"] = opt(r.match());
  j["clause"] = r.clause;
  j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
  return j;
}

inline nlohmann::ordered_json summary_json(const InvariantSummary& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order;
  j["prime"] = s.prime ? nlohmann::ordered_json(*s.prime) : nlohmann::ordered_json(nullptr);
  j["abelian"] = s.abelian;
  j["center_order"] = s.center_order;
  j["derived_order"] = s.derived_order;
  j["class"] = s.nilpotence_class;
  j["rank"] = s.rank;
  j["exponent"] = s.exponent;
  j["purely_nonabelian"] = s.purely_nonabelian ? nlohmann::ordered_json(*s.purely_nonabelian) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json parts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : s.partitions) parts[k] = v;
  j["partitions"] = parts;
  return j;
}

inline std::string format_summary(const std::string& name, const InvariantSummary& s) {
  std::ostringstream out;
  out << name << ": order " << s.order;
  if (s.prime) out << ", p = " << *s.prime;
  out << '\n';
  if (s.abelian) out << "  abelian group (the criteria concern non-abelian groups)\n";
  out << "  |Z| = " << s.center_order << ", |G'| = " << s.derived_order << ", cl = " << s.nilpotence_class
      << ", d = " << s.rank << ", exp = " << s.exponent << '\n';
  for (const auto& [k, v] : s.partitions) out << "  " << std::left << std::setw(6) << k << ' ' << v << '\n';
  if (s.purely_nonabelian) out << "  purely non-abelian: " << (*s.purely_nonabelian ? "yes" : "no") << '\n';
  return out.str();
}

namespace detail {

inline std::string yes_no(std::optional<bool> b) { return b ? (*b ? "equal" : "differ") : "-"; }

}  // namespace detail

/// One line per row.
inline std::string format_rows(const GroupReport& rep, ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::Json) {
    for (const auto& r : rep.rows) out << row_json(r).dump() << '\n';
    return out.str();
  }
  if (rep.summary) out << format_summary(rep.group, *rep.summary);
  if (rep.error) out << "  error: " << *rep.error << '\n';
  for (const auto& r : rep.rows) {
    auto m = r.match();
    out << "  " << (m ? (*m ? "ok      " : "MISMATCH") : "skip    ") << ' ' << std::left << std::setw(9)
        << to_string(r.criterion) << " predicted " << std::setw(6) << detail::yes_no(r.predicted) << " observed "
        << std::setw(6) << detail::yes_no(r.observed) << ' ' << r.clause;
    if (!r.subgroups.empty()) out << "  [" << r.subgroups << ']';
    out << '\n';
  }
  return out.str();
}

/// Per-criterion tallies for one group; mismatching rows are listed in full.
inline std::string format_tally(const GroupReport& rep) {
  std::ostringstream out;
  out << rep.group << " (order " << rep.order << ")";
  if (rep.error) {
    out << "  error: " << *rep.error << '\n';
    return out.str();
  }
  out << '\n';
  struct Tally { std::size_t match = 0, mismatch = 0, skipped = 0; std::string reason; };
  std::map<CriterionId, Tally> t;
  for (const auto& r : rep.rows) {
    auto& x = t[r.criterion];
    auto m = r.match();
    if (!m) {
      ++x.skipped;
      x.reason = r.clause;
    } else if (*m) {
      ++x.match;
    } else {
      ++x.mismatch;
    }
  }
  for (const auto& [id, x] : t) {
    out << "  " << std::left << std::setw(9) << to_string(id) << " match " << x.match << ", mismatch " << x.mismatch;
    if (x.skipped) out << ", skipped " << x.skipped << ' ' << x.reason;
    out << '\n';
  }
  for (const auto& r : rep.rows)
    if (r.match() == false)
      out << "    MISMATCH " << to_string(r.criterion) << " predicted " << detail::yes_no(r.predicted) << " observed "
          << detail::yes_no(r.observed) << ' ' << r.clause << "  [" << r.subgroups << "]\n";
  return out.str();
}

}  // namespace autcrit
