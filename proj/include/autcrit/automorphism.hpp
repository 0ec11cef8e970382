#pragma once

// Exhaustive automorphism search and the distinguished automorphism subgroups
// Aut^X_Y(G) (automorphisms centralizing G/X and fixing Y pointwise).

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "autcrit/group.hpp"

namespace autcrit {

inline constexpr std::size_t kDefaultAutBound = 128;

/// Automorphism bound, overridable through AUTCRIT_AUT_BOUND.
inline std::size_t default_aut_bound() {
  if (const char* env = std::getenv("AUTCRIT_AUT_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultAutBound;
}

struct Automorphism {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline Automorphism identity_automorphism(const FiniteGroup& g) {
  Automorphism a{std::vector<Element>(g.order())};
  for (Element x = 0; x < g.order(); ++x) a.images[x] = x;
  return a;
}

/// (a o b)(x) = a(b(x)).
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism r{std::vector<Element>(a.images.size())};
  for (std::size_t x = 0; x < r.images.size(); ++x) r.images[x] = a.images[b.images[x]];
  return r;
}

inline Automorphism inverse(const Automorphism& a) {
  Automorphism r{std::vector<Element>(a.images.size())};
  for (std::size_t x = 0; x < r.images.size(); ++x) r.images[a.images[x]] = static_cast<Element>(x);
  return r;
}

/// Bijective and multiplicative on every pair.
inline bool is_automorphism(const FiniteGroup& g, const std::vector<Element>& images) {
  if (images.size() != g.order() || images[0] != 0) return false;
  ElementSet hit(g.order());
  for (Element x : images) {
    if (x >= g.order() || hit.contains(x)) return false;
    hit.insert(x);
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (images[g.mul(a, b)] != g.mul(images[a], images[b])) return false;
  return true;
}

enum class AutKind { Full, Inn, Central, CStar, IA, IAStar, UpperX, LowerY, UpperLowerXY };

constexpr std::string_view to_string(AutKind k) {
  switch (k) {
    case AutKind::Full: return "FULL";
    case AutKind::Inn: return "INN";
    case AutKind::Central: return "CENTRAL";
    case AutKind::CStar: return "C_STAR";
    case AutKind::IA: return "IA";
    case AutKind::IAStar: return "IA_STAR";
    case AutKind::UpperX: return "UPPER_X";
    case AutKind::LowerY: return "LOWER_Y";
    case AutKind::UpperLowerXY: return "UPPER_LOWER_XY";
  }
  return "?";
}

/// A finite set of automorphisms of one group, kept sorted by image array.
class AutSet {
 public:
  AutSet(FiniteGroup parent, AutKind kind, std::vector<Automorphism> members)
      : parent_(std::move(parent)), kind_(kind), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!contains(identity_automorphism(parent_)))
      throw Error(ErrorCode::HypothesisViolation, std::string("automorphism set ") + std::string(to_string(kind)) +
                                                      " lacks the identity");
  }

  const FiniteGroup& parent() const { return parent_; }
  AutKind kind() const { return kind_; }
  const std::vector<Automorphism>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Automorphism& a) const { return std::binary_search(members_.begin(), members_.end(), a); }

  bool is_subset_of(const AutSet& other) const {
    require_same_parent(other);
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  /// Closed under composition; for a finite set with the identity this makes
  /// it a group.
  bool is_closed() const {
    for (const auto& a : members_)
      for (const auto& b : members_)
        if (!contains(compose(a, b))) return false;
    return true;
  }

  void require_same_parent(const AutSet& other) const {
    if (!parent_.same_as(other.parent_)) throw Error(ErrorCode::ParentMismatch, "automorphism sets of different groups");
  }

 private:
  FiniteGroup parent_;
  AutKind kind_;
  std::vector<Automorphism> members_;
};

inline bool autset_equal(const AutSet& a, const AutSet& b) {
  a.require_same_parent(b);
  return a.members() == b.members();
}

/// Restrictions applied during the search: g^-1 a(g) in `upper` for every g,
/// and a(y) = y for every y in `lower`.
struct AutConstraints {
  const ElementSet* upper = nullptr;
  const ElementSet* lower = nullptr;
};

namespace detail {

constexpr Element kUnmapped = ~Element{0};

struct PartialMap {
  std::vector<Element> image;
  ElementSet used;
  std::vector<Element> mapped;  // domain in discovery order
};

// Extends the partial map after generator `k` received its image, checking
// f(a s) = f(a) f(s) on every new (element, generator) pair. Returns false on
// the first inconsistency or constraint violation.
template <class Admit>
bool extend_partial_map(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Element>& gens,
                        const std::vector<Element>& gen_images, std::size_t k, PartialMap& m, bool injective,
                        Admit&& admit) {
  auto assign = [&](Element b, Element target) {
    if (m.image[b] != kUnmapped) return m.image[b] == target;
    if (injective && m.used.contains(target)) return false;
    if (!admit(b, target)) return false;
    m.image[b] = target;
    if (injective) m.used.insert(target);
    m.mapped.push_back(b);
    return true;
  };
  const std::size_t old = m.mapped.size();
  for (std::size_t i = 0; i < old; ++i) {
    Element a = m.mapped[i];
    if (!assign(src.mul(a, gens[k]), dst.mul(m.image[a], gen_images[k]))) return false;
  }
  for (std::size_t i = old; i < m.mapped.size(); ++i) {
    Element a = m.mapped[i];
    for (std::size_t j = 0; j <= k; ++j)
      if (!assign(src.mul(a, gens[j]), dst.mul(m.image[a], gen_images[j]))) return false;
  }
  return true;
}

inline PartialMap initial_map(std::size_t src_order, std::size_t dst_order) {
  PartialMap m{std::vector<Element>(src_order, kUnmapped), ElementSet(dst_order), {0}};
  m.image[0] = 0;
  m.used.insert(0);
  return m;
}

}  // namespace detail

/// Backtracking over images of a minimal generating sequence. Candidates for
/// a generator are the elements of equal order that satisfy the constraints;
/// each partial assignment is closed under products and checked for
/// consistency, injectivity and the constraints before descending. Completed
/// maps are verified on the full table. Results are sorted by image array.
inline std::vector<Automorphism> search_automorphisms(const FiniteGroup& g, AutConstraints c = {},
                                                      std::size_t bound = default_aut_bound()) {
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded,
                "automorphism search on order " + std::to_string(g.order()) + " exceeds " + std::to_string(bound));
  const auto gens = minimal_generators(g, c.lower);
  auto admit = [&](Element x, Element target) {
    if (c.upper && !c.upper->contains(g.mul(g.inv(x), target))) return false;
    if (c.lower && c.lower->contains(x) && target != x) return false;
    return true;
  };
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element t = 0; t < g.order(); ++t)
      if (g.element_order(t) == g.element_order(gens[k]) && admit(gens[k], t)) candidates[k].push_back(t);

  std::vector<Automorphism> out;
  std::vector<Element> gen_images(gens.size());
  auto rec = [&](auto&& self, std::size_t k, const detail::PartialMap& m) -> void {
    if (k == gens.size()) {
      if (m.mapped.size() == g.order() && is_automorphism(g, m.image)) out.push_back(Automorphism{m.image});
      return;
    }
    for (Element t : candidates[k]) {
      if (m.used.contains(t)) continue;
      gen_images[k] = t;
      detail::PartialMap next = m;
      if (detail::extend_partial_map(g, g, gens, gen_images, k, next, true, admit)) self(self, k + 1, next);
    }
  };
  rec(rec, 0, detail::initial_map(g.order(), g.order()));
  std::sort(out.begin(), out.end());
  return out;
}

/// All homomorphisms from `src` into the subgroup `allowed` of `dst`, as image
/// arrays indexed by elements of `src`.
inline std::vector<std::vector<Element>> enumerate_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst,
                                                                 const ElementSet& allowed) {
  const auto gens = minimal_generators(src);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element t : allowed.elements())
      if (src.element_order(gens[k]) % dst.element_order(t) == 0) candidates[k].push_back(t);

  std::vector<std::vector<Element>> out;
  std::vector<Element> gen_images(gens.size());
  auto any = [](Element, Element) { return true; };
  auto rec = [&](auto&& self, std::size_t k, const detail::PartialMap& m) -> void {
    if (k == gens.size()) {
      out.push_back(m.image);
      return;
    }
    for (Element t : candidates[k]) {
      gen_images[k] = t;
      detail::PartialMap next = m;
      if (detail::extend_partial_map(src, dst, gens, gen_images, k, next, false, any)) self(self, k + 1, next);
    }
  };
  rec(rec, 0, detail::initial_map(src.order(), dst.order()));
  std::sort(out.begin(), out.end());
  return out;
}

inline AutSet automorphism_group(const FiniteGroup& g, std::size_t bound = default_aut_bound()) {
  return AutSet(g, AutKind::Full, search_automorphisms(g, {}, bound));
}

inline AutSet inner_automorphisms(const FiniteGroup& g) {
  std::vector<Automorphism> conj;
  for (Element h = 0; h < g.order(); ++h) {
    Automorphism a{std::vector<Element>(g.order())};
    for (Element x = 0; x < g.order(); ++x) a.images[x] = g.conj(x, h);
    conj.push_back(std::move(a));
  }
  return AutSet(g, AutKind::Inn, std::move(conj));
}

namespace detail {
inline void require_normal(const Subgroup& s, std::string_view what) {
  if (!s.is_normal()) throw Error(ErrorCode::NotNormal, std::string(what) + " is not normal");
}
inline void require_parent(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_as(g)) throw Error(ErrorCode::ParentMismatch, "subgroup of a different group");
}
}  // namespace detail

/// Aut^X(G): automorphisms with g^-1 a(g) in X for all g.
inline AutSet aut_upper(const FiniteGroup& g, const Subgroup& x, std::size_t bound = default_aut_bound()) {
  detail::require_parent(g, x);
  detail::require_normal(x, "X");
  return AutSet(g, AutKind::UpperX, search_automorphisms(g, {&x.members(), nullptr}, bound));
}

/// Aut_Y(G): automorphisms fixing Y pointwise.
inline AutSet aut_lower(const FiniteGroup& g, const Subgroup& y, std::size_t bound = default_aut_bound()) {
  detail::require_parent(g, y);
  detail::require_normal(y, "Y");
  return AutSet(g, AutKind::LowerY, search_automorphisms(g, {nullptr, &y.members()}, bound));
}

/// Aut^X_Y(G) = Aut^X(G) n Aut_Y(G).
inline AutSet aut_upper_lower(const FiniteGroup& g, const Subgroup& x, const Subgroup& y,
                              std::size_t bound = default_aut_bound(), AutKind kind = AutKind::UpperLowerXY) {
  detail::require_parent(g, x);
  detail::require_parent(g, y);
  detail::require_normal(x, "X");
  detail::require_normal(y, "Y");
  return AutSet(g, kind, search_automorphisms(g, {&x.members(), &y.members()}, bound));
}

/// Filters an already computed set by the same two conditions. Used to
/// cross-check the constrained search against full enumeration.
inline AutSet restrict_upper_lower(const AutSet& s, const Subgroup* x, const Subgroup* y, AutKind kind) {
  const auto& g = s.parent();
  std::vector<Automorphism> kept;
  for (const auto& a : s.members()) {
    bool ok = true;
    for (Element e = 0; e < g.order() && ok; ++e) {
      if (x && !x->contains(g.mul(g.inv(e), a(e)))) ok = false;
      if (y && y->contains(e) && a(e) != e) ok = false;
    }
    if (ok) kept.push_back(a);
  }
  return AutSet(g, kind, std::move(kept));
}

enum class Distinguished { Central, CStar, IA, IAStar };

inline AutSet distinguished(const FiniteGroup& g, Distinguished which, std::size_t bound = default_aut_bound()) {
  const auto z = center(g);
  const auto dg = derived_subgroup(g);
  auto search = [&](const Subgroup& x, const Subgroup* y, AutKind kind) {
    return AutSet(g, kind, search_automorphisms(g, {&x.members(), y ? &y->members() : nullptr}, bound));
  };
  switch (which) {
    case Distinguished::Central: return search(z, nullptr, AutKind::Central);
    case Distinguished::CStar: return search(z, &z, AutKind::CStar);
    case Distinguished::IA: return search(dg, nullptr, AutKind::IA);
    case Distinguished::IAStar: return search(dg, &z, AutKind::IAStar);
  }
  throw Error(ErrorCode::HypothesisViolation, "unknown distinguished subgroup");
}

/// The Hom(G/Y, X) side of the correspondence, with everything needed to
/// build a(g) = g f(gY).
struct HomCorrespondence {
  Quotient source;                           // G / G'Y, the abelianization of G/Y
  std::vector<std::vector<Element>> homs;    // maps source.group -> X (as G elements)
};

inline HomCorrespondence hom_correspondence(const FiniteGroup& g, const Subgroup& x, const Subgroup& y) {
  detail::require_parent(g, x);
  detail::require_parent(g, y);
  if (!y.is_normal()) throw Error(ErrorCode::HypothesisViolation, "Y is not normal");
  if (!x.is_central()) throw Error(ErrorCode::HypothesisViolation, "X is not central");
  if (!x.is_subgroup_of(y)) throw Error(ErrorCode::HypothesisViolation, "X is not contained in Y");
  auto q = quotient(g, derived_subgroup(g).join(y));
  auto homs = enumerate_homomorphisms(q.group, g, x.members());
  return {std::move(q), std::move(homs)};
}

/// a_f(g) = g f(gY).
inline Automorphism automorphism_from_hom(const FiniteGroup& g, const Quotient& source,
                                          const std::vector<Element>& f) {
  Automorphism a{std::vector<Element>(g.order())};
  for (Element e = 0; e < g.order(); ++e) a.images[e] = g.mul(e, f[source.projection[e]]);
  return a;
}

/// Aut^X_Y(G) built from Hom(G/Y, X) instead of by search. Requires X central,
/// X <= Y, Y normal.
inline AutSet hom_construct_auts(const FiniteGroup& g, const Subgroup& x, const Subgroup& y) {
  auto corr = hom_correspondence(g, x, y);
  std::vector<Automorphism> auts;
  auts.reserve(corr.homs.size());
  for (const auto& f : corr.homs) auts.push_back(automorphism_from_hom(g, corr.source, f));
  return AutSet(g, AutKind::UpperLowerXY, std::move(auts));
}

}  // namespace autcrit
