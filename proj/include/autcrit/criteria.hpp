#pragma once

// Invariant-level predicates deciding equality of distinguished automorphism
// subgroups of a finite p-group. Each predicate checks its hypotheses, computes
// the abelian invariants involved and reports which clause decided.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autcrit/abelian.hpp"
#include "autcrit/automorphism.hpp"
#include "autcrit/group.hpp"

namespace autcrit {

enum class CriterionId { Cor2_3, Cor2_4, Cor2_5, Cor2_6, Cor2_7, Cor2_8, Cor2_9, Cor2_10, Thm2_12 };

inline constexpr std::array kAllCriteria{CriterionId::Cor2_3, CriterionId::Cor2_4, CriterionId::Cor2_5,
                                         CriterionId::Cor2_6, CriterionId::Cor2_7, CriterionId::Cor2_8,
                                         CriterionId::Cor2_9, CriterionId::Cor2_10, CriterionId::Thm2_12};

constexpr std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::Cor2_3: return "COR_2_3";
    case CriterionId::Cor2_4: return "COR_2_4";
    case CriterionId::Cor2_5: return "COR_2_5";
    case CriterionId::Cor2_6: return "COR_2_6";
    case CriterionId::Cor2_7: return "COR_2_7";
    case CriterionId::Cor2_8: return "COR_2_8";
    case CriterionId::Cor2_9: return "COR_2_9";
    case CriterionId::Cor2_10: return "COR_2_10";
    case CriterionId::Thm2_12: return "THM_2_12";
  }
  return "?";
}

inline std::optional<CriterionId> parse_criterion(std::string_view s) {
  for (auto id : kAllCriteria)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

/// What each criterion claims to decide, as a readable equation.
constexpr std::string_view statement(CriterionId id) {
  switch (id) {
    case CriterionId::Cor2_3: return "Aut^{M1}_{N1}(G) = Aut^{M2}_{N2}(G)";
    case CriterionId::Cor2_4: return "Aut^M_N(G) = C*";
    case CriterionId::Cor2_5: return "Aut^M_N(G) = Aut_c(G)";
    case CriterionId::Cor2_6: return "IA(G)* = Aut_c(G)";
    case CriterionId::Cor2_7: return "Aut_c(G) = C*";
    case CriterionId::Cor2_8: return "IA(G) = IA(G)*";
    case CriterionId::Cor2_9: return "IA(G)* = C*";
    case CriterionId::Cor2_10: return "IA(G) = C*";
    case CriterionId::Thm2_12: return "IA(G) = Aut_c(G)";
  }
  return "?";
}

enum class CriterionClause { CaseI, CaseII, None, DegenerateEquality };

constexpr std::string_view to_string(CriterionClause c) {
  switch (c) {
    case CriterionClause::CaseI: return "CASE_I";
    case CriterionClause::CaseII: return "CASE_II";
    case CriterionClause::None: return "NONE";
    case CriterionClause::DegenerateEquality: return "DEGENERATE_EQUALITY";
  }
  return "?";
}

struct Evidence {
  std::string name;
  std::string value;
};

struct CriterionVerdict {
  CriterionId criterion;
  bool predicted_equal = false;
  CriterionClause clause = CriterionClause::None;
  std::vector<Evidence> evidence;

  const std::string* find(std::string_view name) const {
    for (const auto& e : evidence)
      if (e.name == name) return &e.value;
    return nullptr;
  }
};

/// Partitions and subgroups shared by every predicate on one group.
class GroupInvariants {
 public:
  explicit GroupInvariants(FiniteGroup g)
      : g_(std::move(g)), p_(require_p_group(g_)), z_(autcrit::center(g_)), dg_(derived_subgroup(g_)) {
    if (g_.is_abelian()) throw Error(ErrorCode::AbelianInput, "the criteria concern non-abelian groups");
  }

  const FiniteGroup& group() const { return g_; }
  std::uint32_t prime() const { return p_; }
  const Subgroup& center() const { return z_; }
  const Subgroup& derived() const { return dg_; }

  std::size_t nilpotence_class() const {
    if (!cl_) cl_ = autcrit::nilpotence_class(g_);
    return *cl_;
  }

  /// Partition of G / G'N. Memoized per N; not safe for concurrent use.
  PPartition abelianized_quotient(const Subgroup& n) const {
    auto it = quotient_cache_.find(n.members());
    if (it == quotient_cache_.end())
      it = quotient_cache_.emplace(n.members(), abelian_partition(quotient(g_, dg_.join(n)).group, p_)).first;
    return it->second;
  }

  /// Partition of an abelian subgroup.
  PPartition partition(const Subgroup& s) const {
    auto it = subgroup_cache_.find(s.members());
    if (it == subgroup_cache_.end()) it = subgroup_cache_.emplace(s.members(), abelian_partition(s, p_)).first;
    return it->second;
  }

  /// Exponent of G/N as a power of p (G/N need not be abelian).
  PPower quotient_exponent(const Subgroup& n) const {
    std::uint64_t e = group_exponent(quotient(g_, n).group);
    std::uint32_t k = 0;
    for (; e > 1; e /= p_) ++k;
    return PPower(p_, k);
  }

 private:
  FiniteGroup g_;
  std::uint32_t p_;
  Subgroup z_;
  Subgroup dg_;
  mutable std::optional<std::size_t> cl_;
  mutable std::map<ElementSet, PPartition> quotient_cache_;
  mutable std::map<ElementSet, PPartition> subgroup_cache_;
};

namespace detail {

class VerdictBuilder {
 public:
  explicit VerdictBuilder(CriterionId id) { v_.criterion = id; }

  void note(std::string name, std::string value) { v_.evidence.push_back({std::move(name), std::move(value)}); }
  void note(std::string name, const PPartition& x) { note(std::move(name), x.str()); }
  void note(std::string name, const PPower& x) { note(std::move(name), x.str()); }
  void note_rank(std::string name, const PPartition& x) { note("d(" + name + ")", std::to_string(rank(x))); }

  /// var(x, y), recorded together with its index.
  PPower var_of(const std::string& label, const PPartition& x, const PPartition& y) {
    auto v = var(x, y);
    note("var(" + label + ")", v.value);
    note("r(" + label + ")", std::to_string(v.r));
    return v.value;
  }

  CriterionVerdict finish(bool equal, CriterionClause clause) {
    v_.predicted_equal = equal;
    v_.clause = equal ? clause : CriterionClause::None;
    return std::move(v_);
  }

 private:
  CriterionVerdict v_;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::HypothesisViolation, what);
}

// Shared body of the two-sided comparison Aut^{M1}_{N1} = Aut^{M2}_{N2} with
// M1 <= M2 central, N2 <= N1 and M_i <= N_i. Labels name the four subgroups in
// the evidence.
inline CriterionVerdict two_sided(CriterionId id, const GroupInvariants& inv, const Subgroup& m1, const Subgroup& n1,
                                  const Subgroup& m2, const Subgroup& n2, std::string_view lm1, std::string_view ln1,
                                  std::string_view lm2, std::string_view ln2) {
  for (const auto* s : {&m1, &n1, &m2, &n2}) {
    if (!s->parent().same_as(inv.group())) throw Error(ErrorCode::ParentMismatch, "subgroup of a different group");
    require(s->is_normal(), "all four subgroups must be normal");
  }
  require(m1.is_subgroup_of(inv.center()) && m1.is_subgroup_of(n1), std::string(lm1) + " must lie in Z(G) and " + std::string(ln1));
  require(m2.is_subgroup_of(inv.center()) && m2.is_subgroup_of(n2), std::string(lm2) + " must lie in Z(G) and " + std::string(ln2));
  require(m1.is_subgroup_of(m2), std::string(lm1) + " must lie in " + std::string(lm2));
  require(n2.is_subgroup_of(n1), std::string(ln2) + " must lie in " + std::string(ln1));

  VerdictBuilder b(id);
  const std::string q1n = "G/G'" + std::string(ln1), q2n = "G/G'" + std::string(ln2);
  const auto q1 = inv.abelianized_quotient(n1);
  const auto q2 = inv.abelianized_quotient(n2);
  const auto p1 = inv.partition(m1);
  const auto p2 = inv.partition(m2);
  b.note(q1n, q1);
  b.note(q2n, q2);
  b.note(std::string(lm1), p1);
  b.note(std::string(lm2), p2);

  const bool same_m = m1 == m2;
  const bool same_q = q1 == q2;

  // (i) equal M, quotients equal or close enough relative to exp(M1)
  bool case_i = false;
  if (same_m) {
    if (same_q) {
      case_i = true;
    } else {
      b.note_rank(q1n, q1);
      b.note_rank(q2n, q2);
      if (rank(q1) == rank(q2)) {
        auto e = exponent(p1);
        b.note("exp(" + std::string(lm1) + ")", e);
        case_i = e <= b.var_of(q1n + "," + q2n, q1, q2);
      }
    }
  }
  if (case_i) return b.finish(true, CriterionClause::CaseI);

  // (ii) equal quotients, M close enough relative to exp(G/G'N1)
  bool case_ii = false;
  if (same_q) {
    if (same_m) {
      case_ii = true;
    } else {
      b.note_rank(std::string(lm1), p1);
      b.note_rank(std::string(lm2), p2);
      if (rank(p1) == rank(p2)) {
        auto e = exponent(q1);
        b.note("exp(" + q1n + ")", e);
        case_ii = e <= b.var_of(std::string(lm1) + "," + std::string(lm2), p1, p2);
      }
    }
  }
  if (case_ii) return b.finish(true, CriterionClause::CaseII);

  // Both sides are Hom(.., ..) into or out of a trivial group.
  if (q2.is_trivial() || p2.is_trivial()) return b.finish(true, CriterionClause::DegenerateEquality);
  return b.finish(false, CriterionClause::None);
}

}  // namespace detail

inline CriterionVerdict cor_2_3(const GroupInvariants& inv, const Subgroup& m1, const Subgroup& n1, const Subgroup& m2,
                                const Subgroup& n2) {
  return detail::two_sided(CriterionId::Cor2_3, inv, m1, n1, m2, n2, "M1", "N1", "M2", "N2");
}

/// Aut^M_N(G) = C*, for M <= Z(G) <= N.
inline CriterionVerdict cor_2_4(const GroupInvariants& inv, const Subgroup& m, const Subgroup& n) {
  detail::require(m.is_subgroup_of(inv.center()) && inv.center().is_subgroup_of(n), "need M <= Z(G) <= N");
  return detail::two_sided(CriterionId::Cor2_4, inv, m, n, inv.center(), inv.center(), "M", "N", "Z", "Z");
}

/// Aut^M_N(G) = Aut_c(G), for M <= Z(G) <= N.
inline CriterionVerdict cor_2_5(const GroupInvariants& inv, const Subgroup& m, const Subgroup& n) {
  for (const auto* s : {&m, &n}) {
    if (!s->parent().same_as(inv.group())) throw Error(ErrorCode::ParentMismatch, "subgroup of a different group");
    detail::require(s->is_normal(), "M and N must be normal");
  }
  detail::require(m.is_subgroup_of(inv.center()) && inv.center().is_subgroup_of(n), "need M <= Z(G) <= N");
  detail::VerdictBuilder b(CriterionId::Cor2_5);
  const auto& z = inv.center();
  const bool n_in_derived = n.is_subgroup_of(inv.derived());
  const bool m_is_center = m == z;
  b.note("N<=G'", n_in_derived ? "true" : "false");
  b.note("M=Z", m_is_center ? "true" : "false");

  bool case_i = false;
  if (m_is_center) {
    if (n_in_derived) {
      case_i = true;
    } else {
      auto qn = inv.abelianized_quotient(n);
      auto qab = inv.abelianized_quotient(Subgroup::trivial(inv.group()));
      b.note("G/G'N", qn);
      b.note("G/G'", qab);
      b.note_rank("G/G'N", qn);
      b.note_rank("G/G'", qab);
      if (rank(qn) == rank(qab)) {
        auto e = exponent(inv.partition(m));
        b.note("exp(M)", e);
        case_i = e <= b.var_of("G/G'N,G/G'", qn, qab);
      }
    }
  }
  if (case_i) return b.finish(true, CriterionClause::CaseI);

  bool case_ii = false;
  if (n_in_derived) {
    if (m_is_center) {
      case_ii = true;
    } else {
      auto pm = inv.partition(m), pz = inv.partition(z);
      b.note("M", pm);
      b.note("Z", pz);
      b.note_rank("M", pm);
      b.note_rank("Z", pz);
      if (rank(pm) == rank(pz)) {
        auto qab = inv.abelianized_quotient(Subgroup::trivial(inv.group()));
        auto e = exponent(qab);
        b.note("exp(G/G')", e);
        case_ii = e <= b.var_of("M,Z", pm, pz);
      }
    }
  }
  return b.finish(case_ii, CriterionClause::CaseII);
}

/// IA(G)* = Aut_c(G).
inline CriterionVerdict cor_2_6(const GroupInvariants& inv) {
  detail::VerdictBuilder b(CriterionId::Cor2_6);
  const bool eq = inv.derived() == inv.center();
  b.note("G'=Z", eq ? "true" : "false");
  return b.finish(eq, CriterionClause::CaseI);
}

/// Aut_c(G) = C*.
inline CriterionVerdict cor_2_7(const GroupInvariants& inv) {
  detail::VerdictBuilder b(CriterionId::Cor2_7);
  const bool z_in_derived = inv.center().is_subgroup_of(inv.derived());
  b.note("Z<=G'", z_in_derived ? "true" : "false");
  if (z_in_derived) return b.finish(true, CriterionClause::CaseI);
  auto qz = inv.abelianized_quotient(inv.center());
  auto qab = inv.abelianized_quotient(Subgroup::trivial(inv.group()));
  b.note("G/G'Z", qz);
  b.note("G/G'", qab);
  b.note_rank("G/G'Z", qz);
  b.note_rank("G/G'", qab);
  if (rank(qz) != rank(qab)) return b.finish(false, CriterionClause::None);
  auto e = exponent(inv.partition(inv.center()));
  b.note("exp(Z)", e);
  return b.finish(e <= b.var_of("G/G'Z,G/G'", qz, qab), CriterionClause::CaseII);
}

/// IA(G) = IA(G)*, for class-2 groups.
inline CriterionVerdict cor_2_8(const GroupInvariants& inv) {
  if (inv.nilpotence_class() != 2)
    throw Error(ErrorCode::ClassNotTwo, "nilpotence class is " + std::to_string(inv.nilpotence_class()));
  detail::VerdictBuilder b(CriterionId::Cor2_8);
  const bool eq = inv.derived() == inv.center();
  b.note("G'=Z", eq ? "true" : "false");
  if (eq) return b.finish(true, CriterionClause::CaseI);
  auto qz = abelian_partition(quotient(inv.group(), inv.center()).group, inv.prime());
  auto qab = inv.abelianized_quotient(Subgroup::trivial(inv.group()));
  b.note("G/Z", qz);
  b.note("G/G'", qab);
  b.note_rank("G/Z", qz);
  b.note_rank("G/G'", qab);
  if (rank(qz) != rank(qab)) return b.finish(false, CriterionClause::None);
  auto e = exponent(inv.partition(inv.derived()));
  b.note("exp(G')", e);
  return b.finish(e <= b.var_of("G/Z,G/G'", qz, qab), CriterionClause::CaseII);
}

/// IA(G)* = C*. False outright when G' is not central.
inline CriterionVerdict cor_2_9(const GroupInvariants& inv) {
  detail::VerdictBuilder b(CriterionId::Cor2_9);
  const bool central = inv.derived().is_subgroup_of(inv.center());
  b.note("G'<=Z", central ? "true" : "false");
  if (!central) return b.finish(false, CriterionClause::None);
  const bool eq = inv.derived() == inv.center();
  b.note("G'=Z", eq ? "true" : "false");
  if (eq) return b.finish(true, CriterionClause::CaseI);
  auto pd = inv.partition(inv.derived()), pz = inv.partition(inv.center());
  b.note("G'", pd);
  b.note("Z", pz);
  b.note_rank("G'", pd);
  b.note_rank("Z", pz);
  if (rank(pd) != rank(pz)) return b.finish(false, CriterionClause::None);
  auto e = inv.quotient_exponent(inv.center());
  b.note("exp(G/Z)", e);
  return b.finish(e <= b.var_of("G',Z", pd, pz), CriterionClause::CaseII);
}

/// IA(G) = C*. False outright for class >= 3.
inline CriterionVerdict cor_2_10(const GroupInvariants& inv) {
  detail::VerdictBuilder b(CriterionId::Cor2_10);
  const bool central = inv.derived().is_subgroup_of(inv.center());
  b.note("G'<=Z", central ? "true" : "false");
  if (!central) return b.finish(false, CriterionClause::None);
  const bool eq = inv.derived() == inv.center();
  b.note("G'=Z", eq ? "true" : "false");
  if (eq) return b.finish(true, CriterionClause::CaseI);
  auto pd = inv.partition(inv.derived()), pz = inv.partition(inv.center());
  auto qz = abelian_partition(quotient(inv.group(), inv.center()).group, inv.prime());
  auto qab = inv.abelianized_quotient(Subgroup::trivial(inv.group()));
  b.note("G'", pd);
  b.note("Z", pz);
  b.note("G/Z", qz);
  b.note("G/G'", qab);
  b.note_rank("G'", pd);
  b.note_rank("Z", pz);
  b.note_rank("G/Z", qz);
  b.note_rank("G/G'", qab);
  if (rank(pd) != rank(pz) || rank(qz) != rank(qab)) return b.finish(false, CriterionClause::None);
  auto e_d = exponent(pd);
  auto v1 = b.var_of("G/Z,G/G'", qz, qab);
  auto e_q = exponent(qz);
  auto v2 = b.var_of("G',Z", pd, pz);
  b.note("exp(G')", e_d);
  b.note("exp(G/Z)", e_q);
  return b.finish(e_d == v1 && v1 == e_q && e_q == v2, CriterionClause::CaseII);
}

/// IA(G) = Aut_c(G). False outright for class >= 3.
inline CriterionVerdict thm_2_12(const GroupInvariants& inv) {
  detail::VerdictBuilder b(CriterionId::Thm2_12);
  const bool central = inv.derived().is_subgroup_of(inv.center());
  b.note("G'<=Z", central ? "true" : "false");
  if (!central) return b.finish(false, CriterionClause::None);
  const bool eq = inv.derived() == inv.center();
  b.note("G'=Z", eq ? "true" : "false");
  if (eq) return b.finish(true, CriterionClause::CaseI);
  auto pd = inv.partition(inv.derived()), pz = inv.partition(inv.center());
  b.note("G'", pd);
  b.note("Z", pz);
  b.note_rank("G'", pd);
  b.note_rank("Z", pz);
  if (rank(pd) != rank(pz)) return b.finish(false, CriterionClause::None);
  auto e = exponent(inv.abelianized_quotient(Subgroup::trivial(inv.group())));
  b.note("exp(G/G')", e);
  return b.finish(e <= b.var_of("G',Z", pd, pz), CriterionClause::CaseII);
}

/// Class 2 with d(G') = d(Z(G)) forces G to be purely non-abelian. Returns
/// whether that holds for `g`.
inline bool lemma_2_11_check(const FiniteGroup& g) {
  GroupInvariants inv(g);
  detail::require(inv.nilpotence_class() == 2, "nilpotence class must be 2");
  detail::require(rank(inv.partition(inv.derived())) == rank(inv.partition(inv.center())), "need d(G') = d(Z(G))");
  return is_purely_nonabelian(g).purely_nonabelian;
}

/// |Aut_c(G)| = |Hom(G/G', Z(G))| for purely non-abelian G.
inline bool adney_yen_check(const FiniteGroup& g, std::size_t bound = default_aut_bound()) {
  GroupInvariants inv(g);
  detail::require(is_purely_nonabelian(g).purely_nonabelian, "G must be purely non-abelian");
  auto central = distinguished(g, Distinguished::Central, bound);
  auto expected = hom_order(inv.abelianized_quotient(Subgroup::trivial(g)), inv.partition(inv.center()));
  return BigInt(central.size()) == expected;
}

}  // namespace autcrit
