#pragma once

// Finite groups as validated Cayley tables, with subgroups and quotients.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "autcrit/abelian.hpp"
#include "autcrit/element_set.hpp"
#include "autcrit/error.hpp"

namespace autcrit {

inline constexpr std::size_t kDefaultIngestBound = 10000;
inline constexpr std::size_t kDefaultSubgroupBound = 128;

class FiniteGroup {
 public:
  /// Validates Latin-square shape, identity and associativity. If the
  /// identity is not at index 0 it is swapped there.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::NotLatinSquare, "empty table");
    std::vector<Element> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n)
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " has " +
                                                   std::to_string(rows[a].size()) + " entries, expected " +
                                                   std::to_string(n));
      for (std::size_t b = 0; b < n; ++b) {
        if (rows[a][b] >= n) throw Error(ErrorCode::NotLatinSquare, "entry out of range in row " + std::to_string(a));
        t[a * n + b] = rows[a][b];
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> row_seen(n), col_seen(n);
      for (std::size_t b = 0; b < n; ++b) {
        if (row_seen[t[a * n + b]]) throw Error(ErrorCode::NotLatinSquare, "repeated entry in row " + std::to_string(a));
        if (col_seen[t[b * n + a]]) throw Error(ErrorCode::NotLatinSquare, "repeated entry in column " + std::to_string(a));
        row_seen[t[a * n + b]] = true;
        col_seen[t[b * n + a]] = true;
      }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
      if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (t[ab * n + c] != t[a * n + t[b * n + c]])
            throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                                       std::to_string(c) + " differs");
      }

    if (*identity != 0) {
      // Relabel by the transposition (0 identity).
      auto swap_label = [&](Element x) -> Element { return x == 0 ? *identity : (x == *identity ? 0 : x); };
      std::vector<Element> relabeled(n * n);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          relabeled[swap_label(a) * n + swap_label(b)] = swap_label(t[a * n + b]);
      t = std::move(relabeled);
    }
    return FiniteGroup(n, std::move(t), {});
  }

  /// For tables that are groups by construction (permutation closure,
  /// quotients, products). Identity must already be at index 0.
  static FiniteGroup from_trusted_table(std::size_t n, std::vector<Element> table,
                                        std::vector<std::string> labels = {}) {
    return FiniteGroup(n, std::move(table), std::move(labels));
  }

  static FiniteGroup trivial() { return FiniteGroup(1, {0}, {}); }

  std::size_t order() const { return d_->n; }
  Element mul(Element a, Element b) const { return d_->table[a * d_->n + b]; }
  Element inv(Element a) const { return d_->inverse[a]; }
  std::uint32_t element_order(Element a) const { return d_->orders[a]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  Element pow(Element a, std::uint64_t k) const {
    Element r = 0;
    for (std::uint64_t i = 0; i < k % element_order(a); ++i) r = mul(r, a);
    return r;
  }

  Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> r(order(), std::vector<Element>(order()));
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < order(); ++b) r[a][b] = mul(a, b);
    return r;
  }

  /// True when both handles refer to the same constructed group.
  bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }
  bool same_table(const FiniteGroup& other) const { return d_->table == other.d_->table; }

 private:
  struct Data {
    std::size_t n;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::uint32_t> orders;
    std::vector<std::string> labels;
  };

  FiniteGroup(std::size_t n, std::vector<Element> table, std::vector<std::string> labels) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->table = std::move(table);
    d->labels = std::move(labels);
    d->inverse.assign(n, 0);
    d->orders.assign(n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (d->table[a * n + b] == 0) {
          d->inverse[a] = b;
          break;
        }
    for (Element a = 0; a < n; ++a) {
      std::uint32_t k = 1;
      for (Element x = a; x != 0; x = d->table[x * n + a]) ++k;
      d->orders[a] = a == 0 ? 1 : k;
    }
    d_ = std::move(d);
  }

  std::shared_ptr<const Data> d_;
};

/// Elements generated by `gens` inside G.
inline ElementSet closure(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet span(g.order());
  span.insert(0);
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : gens) {
      Element x = g.mul(queue[i], s);
      if (!span.contains(x)) {
        span.insert(x);
        queue.push_back(x);
      }
    }
  return span;
}

/// A generating set of the subgroup `members` (at most log2 of its order).
inline std::vector<Element> generators_of(const FiniteGroup& g, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(0);
  for (Element x : members.elements())
    if (!span.contains(x)) {
      gens.push_back(x);
      span = closure(g, gens);
    }
  return gens;
}

class Subgroup {
 public:
  static Subgroup generated(const FiniteGroup& g, std::span<const Element> gens) {
    return Subgroup(g, closure(g, gens));
  }

  /// Validates closure; throws NOT_A_SUBGROUP otherwise.
  static Subgroup from_elements(const FiniteGroup& g, const ElementSet& members) {
    if (members.universe() != g.order() || !members.contains(0))
      throw Error(ErrorCode::NotASubgroup, "missing identity");
    auto elems = members.elements();
    for (Element a : elems)
      for (Element b : elems)
        if (!members.contains(g.mul(a, b))) throw Error(ErrorCode::NotASubgroup, "set not closed under products");
    return Subgroup(g, members);
  }

  static Subgroup trivial(const FiniteGroup& g) {
    ElementSet s(g.order());
    s.insert(0);
    return Subgroup(g, s);
  }

  static Subgroup whole(const FiniteGroup& g) {
    ElementSet s(g.order());
    for (Element x = 0; x < g.order(); ++x) s.insert(x);
    return Subgroup(g, s);
  }

  const FiniteGroup& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::vector<Element> elements() const { return members_.elements(); }
  std::size_t order() const { return order_; }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_normal() const { return normal_; }
  bool is_central() const { return central_; }
  bool is_trivial() const { return order_ == 1; }

  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  Subgroup intersect(const Subgroup& other) const {
    require_same_parent(other);
    return Subgroup(parent_, members_ & other.members_);
  }

  /// Subgroup generated by the union.
  Subgroup join(const Subgroup& other) const {
    require_same_parent(other);
    auto gens = generators_of(parent_, members_);
    auto more = generators_of(parent_, other.members_);
    gens.insert(gens.end(), more.begin(), more.end());
    return Subgroup(parent_, closure(parent_, gens));
  }

  bool is_abelian() const {
    auto e = elements();
    for (Element a : e)
      for (Element b : e)
        if (parent_.mul(a, b) != parent_.mul(b, a)) return false;
    return true;
  }

  void require_same_parent(const Subgroup& other) const {
    if (!parent_.same_as(other.parent_)) throw Error(ErrorCode::ParentMismatch, "subgroups of different groups");
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  Subgroup(FiniteGroup g, ElementSet members)
      : parent_(std::move(g)), members_(std::move(members)), order_(members_.count()) {
    auto elems = members_.elements();
    normal_ = true;
    central_ = true;
    for (Element h : elems)
      for (Element x = 0; x < parent_.order(); ++x) {
        if (normal_ && !members_.contains(parent_.conj(h, x))) normal_ = false;
        if (central_ && parent_.mul(h, x) != parent_.mul(x, h)) central_ = false;
        if (!normal_ && !central_) return;
      }
  }

  FiniteGroup parent_;
  ElementSet members_;
  std::size_t order_;
  bool normal_ = false;
  bool central_ = false;
};

struct Quotient {
  FiniteGroup base;
  Subgroup kernel;
  FiniteGroup group;
  std::vector<Element> projection;  // element of base -> coset index
  std::vector<Element> representatives;
};

/// Returns (p, k) with n = p^k, k >= 1; nullopt otherwise.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p) ++p;
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), k};
}

/// The prime of a nontrivial p-group.
inline std::optional<std::uint32_t> group_prime(const FiniteGroup& g) {
  auto pp = prime_power(g.order());
  if (!pp) return std::nullopt;
  return pp->first;
}

inline std::uint32_t require_p_group(const FiniteGroup& g) {
  auto p = group_prime(g);
  if (!p) throw Error(ErrorCode::NotPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  return *p;
}

/// Small generating sequence: repeatedly adds the highest-order element
/// (ties by index) outside the current span, starting inside `prefix` if
/// given so that a generating set of `prefix` comes first.
inline std::vector<Element> greedy_generators(const FiniteGroup& g, const ElementSet* prefix = nullptr) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(0);
  auto absorb = [&](auto pred) {
    for (Element x : by_order)
      if (pred(x) && !span.contains(x)) {
        gens.push_back(x);
        span = closure(g, gens);
      }
  };
  if (prefix) absorb([&](Element x) { return prefix->contains(x); });
  absorb([](Element) { return true; });
  return gens;
}

/// Minimal generating sequence of a p-group: greedily picks elements outside
/// <picked> Phi(G), so exactly d(G) elements are returned. Elements in
/// `priority` are preferred, then higher element order, then lower index.
/// Groups that are not p-groups fall back to spanning without Phi.
inline std::vector<Element> minimal_generators(const FiniteGroup& g, const ElementSet* priority = nullptr);

inline Subgroup center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) z.insert(a);
  }
  return Subgroup::from_elements(g, z);
}

/// [H, K], generated by all h^-1 k^-1 h k.
inline Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  h.require_same_parent(k);
  const auto& g = h.parent();
  ElementSet comms(g.order());
  auto ke = k.elements();
  for (Element a : h.elements())
    for (Element b : ke) comms.insert(g.commutator(a, b));
  auto gens = comms.elements();
  return Subgroup::generated(g, gens);
}

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  auto whole = Subgroup::whole(g);
  return commutator_subgroup(whole, whole);
}

/// The set HK; requires it to be a subgroup.
inline Subgroup subgroup_product(const Subgroup& h, const Subgroup& k) {
  h.require_same_parent(k);
  const auto& g = h.parent();
  ElementSet prod(g.order());
  auto ke = k.elements();
  for (Element a : h.elements())
    for (Element b : ke) prod.insert(g.mul(a, b));
  return Subgroup::from_elements(g, prod);
}

inline Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw Error(ErrorCode::ParentMismatch, "kernel is not a subgroup of this group");
  if (!n.is_normal()) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> proj(g.order(), kUnset);
  std::vector<Element> reps;
  auto kernel = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (proj[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : kernel) proj[g.mul(x, k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = proj[g.mul(reps[a], reps[b])];
  return Quotient{g, n, FiniteGroup::from_trusted_table(m, std::move(table)), std::move(proj), std::move(reps)};
}

/// Partition of an abelian subgroup, viewed as a group in its own right.
inline PPartition abelian_partition(const Subgroup& h, std::uint32_t prime) {
  if (!h.is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian_partition of a non-abelian subgroup");
  const auto& g = h.parent();
  if (h.order() > 1) {
    auto pp = prime_power(h.order());
    if (!pp || pp->first != prime) throw Error(ErrorCode::NotPGroup, "subgroup is not a " + std::to_string(prime) + "-group");
  }
  std::vector<std::uint32_t> conj;  // conj[k-1] = #{i : e_i >= k}
  std::uint32_t prev = 0;
  std::uint64_t pk = 1;
  auto elems = h.elements();
  while (true) {
    pk *= prime;
    std::uint64_t count = 0;
    for (Element x : elems)
      if (pk % g.element_order(x) == 0) ++count;
    std::uint32_t l = 0;
    for (std::uint64_t c = count; c > 1; c /= prime) ++l;
    if (l == prev) break;
    conj.push_back(l - prev);
    prev = l;
  }
  std::vector<std::uint32_t> exps;
  for (std::size_t k = 0; k < conj.size(); ++k) {
    if (exps.size() < conj[k]) exps.resize(conj[k], 0);
    for (std::uint32_t i = 0; i < conj[k]; ++i) ++exps[i];
  }
  return PPartition(prime, std::move(exps));
}

/// Cyclic decomposition of an abelian p-group, recovered from the counts of
/// elements whose order divides p^k. `prime` is required for the trivial group.
inline PPartition abelian_partition(const FiniteGroup& g, std::optional<std::uint32_t> prime = std::nullopt) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian_partition of a non-abelian group");
  if (g.order() == 1) {
    if (!prime) throw Error(ErrorCode::NotPGroup, "the trivial group needs an explicit prime");
    return PPartition::trivial(*prime);
  }
  const std::uint32_t p = require_p_group(g);
  if (prime && *prime != p)
    throw Error(ErrorCode::PrimeMismatch, "group is a " + std::to_string(p) + "-group, expected " + std::to_string(*prime));
  return abelian_partition(Subgroup::whole(g), p);
}

inline std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, std::uint64_t{g.element_order(x)});
  return e;
}

/// Length of the lower central series; 0 for the trivial group.
inline std::size_t nilpotence_class(const FiniteGroup& g) {
  auto whole = Subgroup::whole(g);
  auto term = whole;
  std::size_t c = 0;
  while (!term.is_trivial()) {
    auto next = commutator_subgroup(term, whole);
    ++c;
    if (next.order() == term.order())
      throw Error(ErrorCode::NotNilpotent, "lower central series stabilises at order " + std::to_string(term.order()));
    term = next;
  }
  return c;
}

/// Phi(G) = G' G^p for a p-group.
inline Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  const std::uint32_t p = require_p_group(g);
  ElementSet powers(g.order());
  for (Element x = 0; x < g.order(); ++x) powers.insert(g.pow(x, p));
  auto gens = powers.elements();
  return derived_subgroup(g).join(Subgroup::generated(g, gens));
}

inline std::vector<Element> minimal_generators(const FiniteGroup& g, const ElementSet* priority) {
  std::vector<Element> by_rank(g.order());
  std::iota(by_rank.begin(), by_rank.end(), 0);
  auto key = [&](Element x) {
    return std::tuple(priority && priority->contains(x) ? 0 : 1, -static_cast<long>(g.element_order(x)), x);
  };
  std::sort(by_rank.begin(), by_rank.end(), [&](Element a, Element b) { return key(a) < key(b); });
  std::vector<Element> span_gens;
  if (g.order() > 1 && group_prime(g)) span_gens = generators_of(g, frattini_subgroup(g).members());
  std::vector<Element> gens;
  ElementSet span = closure(g, span_gens);
  for (Element x : by_rank)
    if (!span.contains(x)) {
      gens.push_back(x);
      span_gens.push_back(x);
      span = closure(g, span_gens);
    }
  return gens;
}

/// d(G) as the rank of the Frattini quotient.
inline std::size_t burnside_rank(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  const std::uint32_t p = require_p_group(g);
  auto q = quotient(g, frattini_subgroup(g));
  return rank(abelian_partition(q.group, p));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::size_t bound = kDefaultIngestBound) {
  const std::size_t n = a.order() * b.order();
  if (n > bound)
    throw Error(ErrorCode::OrderBoundExceeded, "direct product of order " + std::to_string(n) + " exceeds " + std::to_string(bound));
  const std::size_t m = b.order();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[x * n + y] = static_cast<Element>(a.mul(x / m, y / m) * m + b.mul(x % m, y % m));
  return FiniteGroup::from_trusted_table(n, std::move(table));
}

/// Normal closure of base together with `extra`; `base` must be normal.
inline Subgroup normal_closure(const FiniteGroup& g, const ElementSet& base, std::span<const Element> extra) {
  auto g_gens = greedy_generators(g);
  std::vector<Element> gens = generators_of(g, base);
  ElementSet span = base;
  std::vector<Element> pending(extra.begin(), extra.end());
  while (!pending.empty()) {
    bool grew = false;
    for (Element x : pending)
      if (!span.contains(x)) {
        gens.push_back(x);
        span = closure(g, gens);
        grew = true;
      }
    pending.clear();
    if (!grew) break;
    for (Element x : gens)
      for (Element s : g_gens) {
        Element c = g.conj(x, s);
        if (!span.contains(c)) pending.push_back(c);
      }
  }
  return Subgroup::from_elements(g, span);
}

namespace detail {
inline void check_subgroup_bound(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw Error(ErrorCode::OrderBoundExceeded,
                "subgroup enumeration on order " + std::to_string(g.order()) + " exceeds " + std::to_string(bound));
}

inline std::vector<Subgroup> sorted_by_order(std::vector<Subgroup> v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return v;
}

// Elements generating the same cyclic subgroup as x.
inline void mark_cyclic_generators(const FiniteGroup& g, Element x, ElementSet& tried) {
  const std::uint32_t o = g.element_order(x);
  for (std::uint32_t k = 1; k < std::max<std::uint32_t>(o, 2); ++k)
    if (std::gcd(k, o) == 1) tried.insert(g.pow(x, k));
}
}  // namespace detail

/// All normal subgroups, sorted by (order, member bitset). Every normal
/// subgroup is reached by adjoining one conjugacy class at a time.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound) {
  detail::check_subgroup_bound(g, bound);
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::vector<ElementSet> seen{found.front().members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i].members();
    ElementSet tried = base;
    for (Element x = 0; x < g.order(); ++x) {
      if (tried.contains(x)) continue;
      for (Element y = 0; y < g.order(); ++y) detail::mark_cyclic_generators(g, g.conj(x, y), tried);
      auto n = normal_closure(g, base, std::span<const Element>(&x, 1));
      if (std::find(seen.begin(), seen.end(), n.members()) == seen.end()) {
        seen.push_back(n.members());
        found.push_back(n);
      }
    }
  }
  return detail::sorted_by_order(std::move(found));
}

/// All subgroups of `h`, sorted by (order, member bitset).
inline std::vector<Subgroup> subgroups_of(const Subgroup& h, std::size_t bound = kDefaultSubgroupBound) {
  const auto& g = h.parent();
  detail::check_subgroup_bound(g, bound);
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::vector<std::vector<Element>> found_gens{{}};
  std::vector<ElementSet> seen{found.front().members()};
  auto elems = h.elements();
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i].members();
    ElementSet tried = base;
    for (Element x : elems) {
      if (tried.contains(x)) continue;
      detail::mark_cyclic_generators(g, x, tried);
      auto gens = found_gens[i];
      gens.push_back(x);
      auto s = closure(g, gens);
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
        seen.push_back(s);
        found.push_back(Subgroup::from_elements(g, s));
        found_gens.push_back(std::move(gens));
      }
    }
  }
  return detail::sorted_by_order(std::move(found));
}

inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound) {
  return subgroups_of(Subgroup::whole(g), bound);
}

struct PurityResult {
  bool purely_nonabelian;
  std::optional<std::pair<Subgroup, Subgroup>> witness;  // G = A x B with A abelian, A != 1
};

/// Searches for an internal direct decomposition G = A x B with A a nontrivial
/// abelian normal subgroup. Such an A exists iff G has a cyclic direct factor
/// <z>, and that happens iff z is central of order p^k with z^(p^(k-1)) outside
/// H = G'G^(p^k). The complement is then any subgroup above H maximal among
/// those meeting <z> trivially, so one greedy pass builds it.
inline PurityResult is_purely_nonabelian(const FiniteGroup& g) {
  auto z = center(g);
  auto dg = derived_subgroup(g);
  for (Element c : z.elements()) {
    if (c == 0) continue;
    std::uint64_t pk = g.element_order(c);
    std::vector<Element> gens = generators_of(g, dg.members());
    for (Element x = 0; x < g.order(); ++x) gens.push_back(g.pow(x, pk));
    auto h = closure(g, gens);
    if (h.contains(g.pow(c, pk / *group_prime(g)))) continue;
    auto a = closure(g, std::vector<Element>{c});
    auto meets = [&](const ElementSet& s) {
      for (Element y : s.elements())
        if (y != 0 && a.contains(y)) return true;
      return false;
    };
    auto b = h;
    for (Element x = 0; x < g.order(); ++x) {
      if (b.contains(x)) continue;
      std::vector<Element> more = generators_of(g, b);
      more.push_back(x);
      auto next = closure(g, more);
      if (!meets(next)) b = std::move(next);
    }
    return {false, std::pair{Subgroup::from_elements(g, a), Subgroup::from_elements(g, b)}};
  }
  return {true, std::nullopt};
}

}  // namespace autcrit
