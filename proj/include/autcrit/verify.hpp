#pragma once

// Runs every criterion against the automorphism engine and collects
// per-row agreement records.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autcrit/automorphism.hpp"
#include "autcrit/catalog.hpp"
#include "autcrit/criteria.hpp"

namespace autcrit {

struct InvariantSummary {
  std::size_t order = 0;
  std::optional<std::uint32_t> prime;
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t nilpotence_class = 0;
  std::size_t rank = 0;
  std::uint64_t exponent = 1;
  std::optional<bool> purely_nonabelian;  // unset for groups that are not p-groups
  std::vector<std::pair<std::string, std::string>> partitions;  // Z, G', G/G', G/G'Z, G/Z
};

inline InvariantSummary summarize(const FiniteGroup& g) {
  InvariantSummary s;
  s.order = g.order();
  s.prime = group_prime(g);
  s.abelian = g.is_abelian();
  auto z = center(g);
  auto dg = derived_subgroup(g);
  s.center_order = z.order();
  s.derived_order = dg.order();
  s.nilpotence_class = nilpotence_class(g);
  s.exponent = group_exponent(g);
  if (!s.prime) return s;
  const std::uint32_t p = *s.prime;
  s.rank = burnside_rank(g);
  s.purely_nonabelian = is_purely_nonabelian(g).purely_nonabelian;
  s.partitions.emplace_back("Z", abelian_partition(z, p).str());
  s.partitions.emplace_back("G'", abelian_partition(dg, p).str());
  s.partitions.emplace_back("G/G'", abelian_partition(quotient(g, dg).group, p).str());
  s.partitions.emplace_back("G/G'Z", abelian_partition(quotient(g, dg.join(z)).group, p).str());
  auto qz = quotient(g, z).group;
  if (qz.is_abelian()) s.partitions.emplace_back("G/Z", abelian_partition(qz, p).str());
  return s;
}

struct ReportRow {
  std::string group;
  std::size_t order = 0;
  std::uint32_t prime = 0;
  CriterionId criterion{};
  std::string subgroups;  // the swept tuple, empty for group-level criteria
  std::optional<bool> predicted;
  std::optional<bool> observed;
  std::string clause;  // verdict clause, or SKIPPED(<reason>)
  double elapsed_ms = 0;

  std::optional<bool> match() const {
    if (!predicted || !observed) return std::nullopt;
    return *predicted == *observed;
  }
};

struct GroupReport {
  std::string group;
  std::size_t order = 0;
  std::uint32_t prime = 0;
  std::optional<InvariantSummary> summary;
  std::vector<ReportRow> rows;
  std::optional<std::string> error;  // ingestion or validation failure

  bool ok() const {
    if (error) return false;
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.match() == false; });
  }
};

struct VerifyOptions {
  std::vector<CriterionId> criteria;  // empty = all
  std::size_t aut_bound = default_aut_bound();
  bool force = false;  // ignore aut_bound
  // Test hook applied to every verdict before comparison.
  std::function<void(CriterionVerdict&)> tamper;
};

namespace detail {

// Lazily computed automorphism sets of one group, shared by all rows.
class ObservedSets {
 public:
  ObservedSets(const GroupInvariants& inv, std::size_t bound) : inv_(inv), bound_(bound) {}

  const AutSet& upper_lower(const Subgroup& x, const Subgroup* y) {
    auto key = std::pair{x.members(), y ? y->members() : ElementSet()};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const auto& g = inv_.group();
      it = cache_.emplace(key, AutSet(g, AutKind::UpperLowerXY,
                                      search_automorphisms(g, {&x.members(), y ? &y->members() : nullptr}, bound_)))
               .first;
    }
    return it->second;
  }

  const AutSet& central() { return upper_lower(inv_.center(), nullptr); }
  const AutSet& c_star() { return upper_lower(inv_.center(), &inv_.center()); }
  const AutSet& ia() { return upper_lower(inv_.derived(), nullptr); }
  const AutSet& ia_star() { return upper_lower(inv_.derived(), &inv_.center()); }

 private:
  const GroupInvariants& inv_;
  std::size_t bound_;
  std::map<std::pair<ElementSet, ElementSet>, AutSet> cache_;
};

inline std::string subgroup_label(const Subgroup& s, const Subgroup& z, const Subgroup& dg) {
  if (s.is_trivial()) return "1";
  if (s.order() == s.parent().order()) return "G";
  if (s == z) return "Z";
  if (s == dg) return "G'";
  std::string out = "<";
  auto gens = generators_of(s.parent(), s.members());
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + std::to_string(gens[i]);
  return out + ">|" + std::to_string(s.order());
}

}  // namespace detail

/// Admissible (M1, N1, M2, N2) with M1 <= M2 <= N2 <= N1, M2 central, all normal.
struct SubgroupTuple {
  Subgroup m1, n1, m2, n2;
};

inline std::vector<SubgroupTuple> cor_2_3_tuples(const GroupInvariants& inv, std::size_t bound = kDefaultSubgroupBound) {
  auto normals = normal_subgroups(inv.group(), bound);
  auto centrals = subgroups_of(inv.center(), bound);
  std::vector<SubgroupTuple> out;
  for (const auto& m2 : centrals)
    for (const auto& n2 : normals) {
      if (!m2.is_subgroup_of(n2)) continue;
      for (const auto& m1 : centrals) {
        if (!m1.is_subgroup_of(m2)) continue;
        for (const auto& n1 : normals)
          if (n2.is_subgroup_of(n1)) out.push_back({m1, n1, m2, n2});
      }
    }
  return out;
}

/// Admissible (M, N) with M <= Z(G) <= N.
inline std::vector<std::pair<Subgroup, Subgroup>> central_pairs(const GroupInvariants& inv,
                                                                std::size_t bound = kDefaultSubgroupBound) {
  auto normals = normal_subgroups(inv.group(), bound);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const auto& m : subgroups_of(inv.center(), bound))
    for (const auto& n : normals)
      if (inv.center().is_subgroup_of(n)) out.emplace_back(m, n);
  return out;
}

inline GroupReport verify_group(const std::string& name, const FiniteGroup& g, const VerifyOptions& opt = {}) {
  GroupReport rep;
  rep.group = name;
  rep.order = g.order();
  rep.prime = group_prime(g).value_or(0);
  auto criteria = opt.criteria.empty() ? std::vector<CriterionId>(kAllCriteria.begin(), kAllCriteria.end()) : opt.criteria;
  std::sort(criteria.begin(), criteria.end());
  criteria.erase(std::unique(criteria.begin(), criteria.end()), criteria.end());

  auto skipped = [&](CriterionId id, const std::string& reason, std::optional<bool> predicted = std::nullopt,
                     std::string subgroups = {}) {
    ReportRow r{name, rep.order, rep.prime, id, std::move(subgroups), predicted, std::nullopt,
                "SKIPPED(" + reason + ")", 0};
    rep.rows.push_back(std::move(r));
  };

  std::optional<GroupInvariants> inv;
  try {
    inv.emplace(g);
  } catch (const Error& e) {
    for (auto id : criteria) skipped(id, std::string(to_string(e.code())));
    return rep;
  }
  rep.summary = summarize(g);
  const bool confirm = opt.force || g.order() <= opt.aut_bound;
  const std::size_t bound = opt.force ? std::max(opt.aut_bound, g.order()) : opt.aut_bound;
  detail::ObservedSets sets(*inv, bound);
  const auto& z = inv->center();
  const auto& dg = inv->derived();
  auto label = [&](const Subgroup& s) { return detail::subgroup_label(s, z, dg); };

  // Evaluates one row; `observe` returns whether the two sets coincide.
  auto run = [&](CriterionId id, std::string subgroups, const std::function<CriterionVerdict()>& predict,
                 const std::function<bool()>& observe) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionVerdict v;
    try {
      v = predict();
    } catch (const Error& e) {
      skipped(id, std::string(to_string(e.code())), std::nullopt, std::move(subgroups));
      return;
    }
    if (opt.tamper) opt.tamper(v);
    ReportRow r{name, rep.order, rep.prime, id, std::move(subgroups), v.predicted_equal, std::nullopt,
                std::string(to_string(v.clause)), 0};
    if (confirm) {
      r.observed = observe();
    } else {
      r.clause = "SKIPPED(ORDER_BOUND_EXCEEDED)";
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(std::move(r));
  };

  for (auto id : criteria) {
    try {
      switch (id) {
        case CriterionId::Cor2_3:
          for (const auto& t : cor_2_3_tuples(*inv)) {
            std::string desc = "M1=" + label(t.m1) + " N1=" + label(t.n1) + " M2=" + label(t.m2) + " N2=" + label(t.n2);
            run(id, desc, [&] { return cor_2_3(*inv, t.m1, t.n1, t.m2, t.n2); },
                [&] { return autset_equal(sets.upper_lower(t.m1, &t.n1), sets.upper_lower(t.m2, &t.n2)); });
          }
          break;
        case CriterionId::Cor2_4:
          for (const auto& [m, n] : central_pairs(*inv))
            run(id, "M=" + label(m) + " N=" + label(n), [&] { return cor_2_4(*inv, m, n); },
                [&] { return autset_equal(sets.upper_lower(m, &n), sets.c_star()); });
          break;
        case CriterionId::Cor2_5:
          for (const auto& [m, n] : central_pairs(*inv))
            run(id, "M=" + label(m) + " N=" + label(n), [&] { return cor_2_5(*inv, m, n); },
                [&] { return autset_equal(sets.upper_lower(m, &n), sets.central()); });
          break;
        case CriterionId::Cor2_6:
          run(id, {}, [&] { return cor_2_6(*inv); }, [&] { return autset_equal(sets.ia_star(), sets.central()); });
          break;
        case CriterionId::Cor2_7:
          run(id, {}, [&] { return cor_2_7(*inv); }, [&] { return autset_equal(sets.central(), sets.c_star()); });
          break;
        case CriterionId::Cor2_8:
          run(id, {}, [&] { return cor_2_8(*inv); }, [&] { return autset_equal(sets.ia(), sets.ia_star()); });
          break;
        case CriterionId::Cor2_9:
          run(id, {}, [&] { return cor_2_9(*inv); }, [&] { return autset_equal(sets.ia_star(), sets.c_star()); });
          break;
        case CriterionId::Cor2_10:
          run(id, {}, [&] { return cor_2_10(*inv); }, [&] { return autset_equal(sets.ia(), sets.c_star()); });
          break;
        case CriterionId::Thm2_12:
          run(id, {}, [&] { return thm_2_12(*inv); }, [&] { return autset_equal(sets.ia(), sets.central()); });
          break;
      }
    } catch (const Error& e) {
      // sweep enumeration or automorphism search out of bounds
      skipped(id, std::string(to_string(e.code())));
    }
  }
  return rep;
}

struct CorpusFilter {
  std::optional<std::size_t> max_order;
  std::optional<std::uint32_t> prime;
  bool include_abelian = false;
};

/// Verifies every matching catalog entry; reports are sorted by group name.
inline std::vector<GroupReport> verify_all(const CorpusFilter& filter = {}, const VerifyOptions& opt = {}) {
  std::vector<GroupReport> reports;
  for (const auto& spec : catalog()) {
    std::optional<FiniteGroup> g;
    try {
      g = load_group(spec);
    } catch (const Error& e) {
      GroupReport r;
      r.group = spec.name;
      r.error = e.what();
      reports.push_back(std::move(r));
      continue;
    }
    if (filter.max_order && g->order() > *filter.max_order) continue;
    if (filter.prime && group_prime(*g) != filter.prime) continue;
    if (!filter.include_abelian && g->is_abelian()) continue;
    reports.push_back(verify_group(spec.name, *g, opt));
  }
  std::sort(reports.begin(), reports.end(), [](const GroupReport& a, const GroupReport& b) { return a.group < b.group; });
  return reports;
}

}  // namespace autcrit
