#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace autcrit;

namespace {

FiniteGroup load(const std::string& ref) { return load_group(resolve_spec(ref)); }

std::vector<std::pair<std::string, FiniteGroup>> nonabelian_catalog(std::size_t max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& s : catalog()) {
    auto g = load_group(s);
    if (g.order() <= max_order && !g.is_abelian()) out.emplace_back(s.name, g);
  }
  return out;
}

// Recomputes every evidence entry of a verdict from the named subgroups.
class EvidenceChecker {
 public:
  explicit EvidenceChecker(const FiniteGroup& g) : g_(g), p_(*group_prime(g)) {
    auto z = center(g), dg = derived_subgroup(g);
    subgroups_.emplace("Z", z);
    subgroups_.emplace("G'", dg);
  }

  void name(const std::string& label, const Subgroup& s) { subgroups_.insert_or_assign(label, s); }

  void check(const CriterionVerdict& v) {
    EXPECT_EQ(v.clause == CriterionClause::None, !v.predicted_equal);
    for (const auto& e : v.evidence) {
      SCOPED_TRACE(e.name + " = " + e.value);
      if (auto inner = unwrap(e.name, "d(")) {
        EXPECT_EQ(e.value, std::to_string(rank(partition(*inner))));
      } else if (auto inner = unwrap(e.name, "exp(")) {
        EXPECT_EQ(e.value, std::to_string(exponent_of(*inner)));
      } else if (auto inner = unwrap(e.name, "var(")) {
        auto [x, y] = split(*inner);
        EXPECT_EQ(e.value, var(partition(x), partition(y)).value.str());
      } else if (auto inner = unwrap(e.name, "r(")) {
        auto [x, y] = split(*inner);
        EXPECT_EQ(e.value, std::to_string(var(partition(x), partition(y)).r));
      } else if (auto pos = e.name.find("<="); pos != std::string::npos) {
        bool in = group_of(e.name.substr(0, pos)).is_subgroup_of(group_of(e.name.substr(pos + 2)));
        EXPECT_EQ(e.value, in ? "true" : "false");
      } else if (auto eq = e.name.find('='); eq != std::string::npos) {
        bool same = group_of(e.name.substr(0, eq)) == group_of(e.name.substr(eq + 1));
        EXPECT_EQ(e.value, same ? "true" : "false");
      } else {
        EXPECT_EQ(e.value, partition(e.name).str());
      }
    }
  }

 private:
  static std::optional<std::string> unwrap(const std::string& s, const std::string& head) {
    if (s.rfind(head, 0) != 0 || s.back() != ')') return std::nullopt;
    return s.substr(head.size(), s.size() - head.size() - 1);
  }

  static std::pair<std::string, std::string> split(const std::string& s) {
    auto c = s.find(',');
    return {s.substr(0, c), s.substr(c + 1)};
  }

  const Subgroup& group_of(const std::string& label) const {
    auto it = subgroups_.find(label);
    if (it == subgroups_.end()) throw std::runtime_error("unknown evidence label " + label);
    return it->second;
  }

  // Either a named subgroup or a quotient written G/<label> or G/G'<label>.
  FiniteGroup realize(const std::string& label) const {
    if (label.rfind("G/", 0) != 0) return subgroup_as_group(group_of(label));
    std::string rest = label.substr(2);
    if (rest == "G'") return quotient(g_, group_of("G'")).group;
    if (rest.rfind("G'", 0) == 0) return quotient(g_, subgroup_product(group_of("G'"), group_of(rest.substr(2)))).group;
    return quotient(g_, group_of(rest)).group;
  }

  static FiniteGroup subgroup_as_group(const Subgroup& s) {
    const auto& g = s.parent();
    auto elems = s.elements();
    std::map<Element, Element> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
    std::vector<std::vector<Element>> rows(elems.size(), std::vector<Element>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) rows[i][j] = index.at(g.mul(elems[i], elems[j]));
    return FiniteGroup::from_cayley_table(rows);
  }

  PPartition partition(const std::string& label) const { return abelian_partition(realize(label), p_); }

  std::uint64_t exponent_of(const std::string& label) const { return group_exponent(realize(label)); }

  FiniteGroup g_;
  std::uint32_t p_;
  std::map<std::string, Subgroup> subgroups_;
};

}  // namespace

TEST(Invariants, RejectsAbelianAndNonPGroups) {
  EXPECT_ERROR_CODE(GroupInvariants(load("C4")), ErrorCode::AbelianInput);
  auto s3 = from_permutation_generators({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 3);
  EXPECT_ERROR_CODE(GroupInvariants{s3}, ErrorCode::NotPGroup);
}

TEST(CriterionIds, RoundTrip) {
  for (auto id : kAllCriteria) {
    EXPECT_EQ(parse_criterion(to_string(id)), id);
    EXPECT_FALSE(statement(id).empty());
  }
  EXPECT_FALSE(parse_criterion("COR_2_11"));
}

TEST(TwoSided, IdenticalArgumentsAreEqual) {
  GroupInvariants inv(load("D16"));
  for (const auto& n : normal_subgroups(inv.group()))
    for (const auto& m : subgroups_of(inv.center())) {
      if (!m.is_subgroup_of(n)) continue;
      auto v = cor_2_3(inv, m, n, m, n);
      EXPECT_TRUE(v.predicted_equal);
      EXPECT_EQ(v.clause, CriterionClause::CaseI);
    }
}

TEST(TwoSided, Q8RankMismatch) {
  GroupInvariants inv(load("Q8"));
  const auto& z = inv.center();
  auto g = Subgroup::whole(inv.group());
  auto v = cor_2_3(inv, z, g, z, z);
  EXPECT_FALSE(v.predicted_equal);
  EXPECT_EQ(v.clause, CriterionClause::None);
  EXPECT_EQ(*v.find("d(G/G'N1)"), "0");
  EXPECT_EQ(*v.find("d(G/G'N2)"), "2");
  EXPECT_EQ(aut_upper_lower(inv.group(), z, g).size(), 1u);
  EXPECT_EQ(aut_upper_lower(inv.group(), z, z).size(), 4u);
}

TEST(TwoSided, Hypotheses) {
  GroupInvariants inv(load("D8xC2"));
  const auto& g = inv.group();
  const auto& z = inv.center();
  auto t = Subgroup::trivial(g), w = Subgroup::whole(g);
  // M2 not contained in N2
  EXPECT_ERROR_CODE(cor_2_3(inv, t, w, z, t), ErrorCode::HypothesisViolation);
  // M1 not contained in M2
  EXPECT_ERROR_CODE(cor_2_3(inv, z, w, t, w), ErrorCode::HypothesisViolation);
  // N2 not contained in N1
  EXPECT_ERROR_CODE(cor_2_3(inv, t, z, t, w), ErrorCode::HypothesisViolation);
  // M not central
  EXPECT_ERROR_CODE(cor_2_3(inv, w, w, w, w), ErrorCode::HypothesisViolation);
  for (const auto& h : all_subgroups(g))
    if (!h.is_normal()) {
      EXPECT_ERROR_CODE(cor_2_3(inv, t, h, t, h), ErrorCode::HypothesisViolation);
      break;
    }
  GroupInvariants other(load("Q8"));
  EXPECT_ERROR_CODE(cor_2_3(inv, center(other.group()), w, z, w), ErrorCode::ParentMismatch);
}

TEST(TwoSided, SecondClauseOccursAndIsConfirmed) {
  std::size_t seen = 0;
  for (const auto& [name, g] : nonabelian_catalog(32)) {
    GroupInvariants inv(g);
    for (const auto& t : cor_2_3_tuples(inv)) {
      auto v = cor_2_3(inv, t.m1, t.n1, t.m2, t.n2);
      if (v.clause != CriterionClause::CaseII) continue;
      ++seen;
      EXPECT_TRUE(autset_equal(aut_upper_lower(g, t.m1, t.n1), aut_upper_lower(g, t.m2, t.n2))) << name;
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(TwoSided, DegenerateSidesAreBothIdentity) {
  for (const auto& [name, g] : nonabelian_catalog(32)) {
    GroupInvariants inv(g);
    for (const auto& t : cor_2_3_tuples(inv)) {
      auto v = cor_2_3(inv, t.m1, t.n1, t.m2, t.n2);
      if (v.clause != CriterionClause::DegenerateEquality) continue;
      EXPECT_EQ(aut_upper_lower(g, t.m2, t.n2).size(), 1u) << name;
      EXPECT_EQ(aut_upper_lower(g, t.m1, t.n1).size(), 1u) << name;
    }
  }
}

TEST(CStarComparison, Examples) {
  {
    GroupInvariants inv(load("D8"));
    const auto& z = inv.center();
    EXPECT_TRUE(cor_2_4(inv, z, z).predicted_equal);
  }
  {
    GroupInvariants inv(load("Q8"));
    auto v = cor_2_4(inv, inv.derived(), Subgroup::whole(inv.group()));
    EXPECT_FALSE(v.predicted_equal);
    EXPECT_FALSE(autset_equal(aut_upper_lower(inv.group(), inv.derived(), Subgroup::whole(inv.group())),
                              distinguished(inv.group(), Distinguished::CStar)));
  }
  {
    GroupInvariants inv(load("D8"));
    const auto& z = inv.center();
    auto n = subgroup_product(inv.derived(), z);
    auto v = cor_2_4(inv, z, n);
    EXPECT_EQ(v.predicted_equal, autset_equal(aut_upper_lower(inv.group(), z, n), distinguished(inv.group(), Distinguished::CStar)));
  }
  GroupInvariants inv(load("D8"));
  EXPECT_ERROR_CODE(cor_2_4(inv, Subgroup::whole(inv.group()), Subgroup::whole(inv.group())), ErrorCode::HypothesisViolation);
  EXPECT_ERROR_CODE(cor_2_4(inv, Subgroup::trivial(inv.group()), Subgroup::trivial(inv.group())), ErrorCode::HypothesisViolation);
}

TEST(CStarComparison, AgreesWithGeneralTwoSidedForm) {
  for (const auto& [name, g] : nonabelian_catalog(64)) {
    GroupInvariants inv(g);
    for (const auto& [m, n] : central_pairs(inv)) {
      auto a = cor_2_4(inv, m, n);
      auto b = cor_2_3(inv, m, n, inv.center(), inv.center());
      EXPECT_EQ(a.predicted_equal, b.predicted_equal) << name;
      EXPECT_EQ(a.clause, b.clause) << name;
    }
  }
}

TEST(CentralComparison, Examples) {
  {
    GroupInvariants inv(load("D8"));
    const auto& z = inv.center();
    auto v = cor_2_5(inv, z, z);
    EXPECT_TRUE(v.predicted_equal);
    EXPECT_TRUE(autset_equal(aut_upper_lower(inv.group(), z, z), distinguished(inv.group(), Distinguished::Central)));
  }
  {
    GroupInvariants inv(load("M16"));
    auto w = Subgroup::whole(inv.group());
    auto v = cor_2_5(inv, inv.center(), w);
    EXPECT_FALSE(v.predicted_equal);
    EXPECT_EQ(*v.find("d(G/G'N)"), "0");
    EXPECT_EQ(*v.find("d(G/G')"), "2");
    EXPECT_FALSE(autset_equal(aut_upper_lower(inv.group(), inv.center(), w), distinguished(inv.group(), Distinguished::Central)));
  }
  {
    // N with G'N = G' gives identical quotients
    GroupInvariants inv(load("Q8"));
    auto v = cor_2_5(inv, inv.center(), inv.derived());
    EXPECT_TRUE(v.predicted_equal);
    EXPECT_EQ(v.clause, CriterionClause::CaseI);
  }
}

TEST(DerivedEqualsCenter, Examples) {
  EXPECT_TRUE(cor_2_6(GroupInvariants(load("Q8"))).predicted_equal);
  EXPECT_TRUE(cor_2_6(GroupInvariants(load("D8"))).predicted_equal);
  GroupInvariants m(load("M16"));
  EXPECT_FALSE(cor_2_6(m).predicted_equal);
  EXPECT_FALSE(autset_equal(distinguished(m.group(), Distinguished::IAStar), distinguished(m.group(), Distinguished::Central)));
}

TEST(CentralVersusCStar, Examples) {
  GroupInvariants q(load("Q8"));
  auto v = cor_2_7(q);
  EXPECT_TRUE(v.predicted_equal);
  EXPECT_EQ(v.clause, CriterionClause::CaseI);
  GroupInvariants qc(load("Q8xC2"));
  v = cor_2_7(qc);
  EXPECT_TRUE(v.find("d(G/G'Z)") != nullptr);
  EXPECT_EQ(v.predicted_equal,
            autset_equal(distinguished(qc.group(), Distinguished::Central), distinguished(qc.group(), Distinguished::CStar)));
}

TEST(IaVersusIaStar, Examples) {
  EXPECT_TRUE(cor_2_8(GroupInvariants(load("Q8"))).predicted_equal);
  GroupInvariants m(load("M16"));
  auto v = cor_2_8(m);
  EXPECT_TRUE(v.predicted_equal);
  EXPECT_EQ(v.clause, CriterionClause::CaseII);
  EXPECT_EQ(*v.find("d(G/Z)"), "2");
  EXPECT_EQ(*v.find("d(G/G')"), "2");
  EXPECT_EQ(*v.find("exp(G')"), "2");
  EXPECT_EQ(*v.find("var(G/Z,G/G')"), "2");
  EXPECT_TRUE(autset_equal(distinguished(m.group(), Distinguished::IA), distinguished(m.group(), Distinguished::IAStar)));
  EXPECT_ERROR_CODE(cor_2_8(GroupInvariants(load("D16"))), ErrorCode::ClassNotTwo);
}

TEST(IaStarVersusCStar, Examples) {
  EXPECT_TRUE(cor_2_9(GroupInvariants(load("D8"))).predicted_equal);
  GroupInvariants m(load("M16"));
  auto v = cor_2_9(m);
  EXPECT_TRUE(v.predicted_equal);
  EXPECT_EQ(*v.find("exp(G/Z)"), "2");
  EXPECT_EQ(*v.find("var(G',Z)"), "2");
  EXPECT_TRUE(autset_equal(distinguished(m.group(), Distinguished::IAStar), distinguished(m.group(), Distinguished::CStar)));
  GroupInvariants qc(load("Q8xC2"));
  v = cor_2_9(qc);
  EXPECT_FALSE(v.predicted_equal);
  EXPECT_EQ(*v.find("d(G')"), "1");
  EXPECT_EQ(*v.find("d(Z)"), "2");
  EXPECT_FALSE(autset_equal(distinguished(qc.group(), Distinguished::IAStar), distinguished(qc.group(), Distinguished::CStar)));
  EXPECT_FALSE(cor_2_9(GroupInvariants(load("D16"))).predicted_equal);
}

TEST(IaVersusCStar, Examples) {
  EXPECT_TRUE(cor_2_10(GroupInvariants(load("Q8"))).predicted_equal);
  GroupInvariants m(load("M16"));
  auto v = cor_2_10(m);
  EXPECT_TRUE(v.predicted_equal);
  EXPECT_EQ(v.clause, CriterionClause::CaseII);
  EXPECT_TRUE(autset_equal(distinguished(m.group(), Distinguished::IA), distinguished(m.group(), Distinguished::CStar)));
  GroupInvariants qc(load("Q8xC2"));
  EXPECT_FALSE(cor_2_10(qc).predicted_equal);
  EXPECT_FALSE(autset_equal(distinguished(qc.group(), Distinguished::IA), distinguished(qc.group(), Distinguished::CStar)));
}

TEST(IaVersusCentral, Examples) {
  GroupInvariants q(load("Q8"));
  EXPECT_TRUE(thm_2_12(q).predicted_equal);
  EXPECT_TRUE(autset_equal(distinguished(q.group(), Distinguished::IA), distinguished(q.group(), Distinguished::Central)));
  GroupInvariants m(load("M16"));
  auto v = thm_2_12(m);
  EXPECT_FALSE(v.predicted_equal);
  EXPECT_EQ(*v.find("exp(G/G')"), "4");
  EXPECT_EQ(*v.find("var(G',Z)"), "2");
  GroupInvariants d(load("D16"));
  EXPECT_FALSE(thm_2_12(d).predicted_equal);
  EXPECT_FALSE(autset_equal(distinguished(d.group(), Distinguished::IA), distinguished(d.group(), Distinguished::Central)));
}

TEST(Implications, IaEqualsCStarForcesTheOtherTwo) {
  for (const auto& [name, g] : nonabelian_catalog(81)) {
    GroupInvariants inv(g);
    if (!cor_2_10(inv).predicted_equal) continue;
    EXPECT_TRUE(cor_2_8(inv).predicted_equal) << name;
    EXPECT_TRUE(cor_2_9(inv).predicted_equal) << name;
  }
}

TEST(Evidence, RecomputesFromScratch) {
  for (const auto& [name, g] : nonabelian_catalog(32)) {
    SCOPED_TRACE(name);
    GroupInvariants inv(g);
    EvidenceChecker c(g);
    for (auto* f : {&cor_2_6, &cor_2_7, &cor_2_9, &cor_2_10, &thm_2_12}) c.check(f(inv));
    if (inv.nilpotence_class() == 2) c.check(cor_2_8(inv));
    for (const auto& [m, n] : central_pairs(inv)) {
      c.name("M", m);
      c.name("N", n);
      c.check(cor_2_4(inv, m, n));
      c.check(cor_2_5(inv, m, n));
    }
    auto tuples = cor_2_3_tuples(inv);
    for (std::size_t i = 0; i < tuples.size(); i += 7) {
      const auto& t = tuples[i];
      c.name("M1", t.m1);
      c.name("N1", t.n1);
      c.name("M2", t.m2);
      c.name("N2", t.n2);
      c.check(cor_2_3(inv, t.m1, t.n1, t.m2, t.n2));
    }
  }
}

TEST(Soundness, SmallGroupsMatchBruteForce) {
  for (const auto& [name, g] : nonabelian_catalog(16)) {
    auto rep = verify_group(name, g);
    EXPECT_TRUE(rep.ok()) << name;
    for (const auto& r : rep.rows)
      if (r.clause.rfind("SKIPPED", 0) != 0) {
        EXPECT_EQ(r.match(), true) << name << " " << to_string(r.criterion);
      }
  }
}

TEST(PurityFromRanks, Examples) {
  EXPECT_TRUE(lemma_2_11_check(load("Q8")));
  EXPECT_TRUE(lemma_2_11_check(load("M16")));
  EXPECT_TRUE(lemma_2_11_check(load("Heis3")));
  EXPECT_ERROR_CODE(lemma_2_11_check(load("D16")), ErrorCode::HypothesisViolation);
  EXPECT_ERROR_CODE(lemma_2_11_check(load("Q8xC2")), ErrorCode::HypothesisViolation);
}

TEST(CentralCount, Examples) {
  EXPECT_TRUE(adney_yen_check(load("Q8")));
  EXPECT_TRUE(adney_yen_check(load("D8")));
  EXPECT_TRUE(adney_yen_check(load("M16")));
  EXPECT_EQ(distinguished(load("Q8"), Distinguished::Central).size(), 4u);
  EXPECT_ERROR_CODE(adney_yen_check(load("D8xC2")), ErrorCode::HypothesisViolation);
}
