#pragma once

// Arithmetic on cyclic decompositions of finite abelian p-groups.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autcrit/error.hpp"

namespace autcrit {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The integer p^k, kept symbolically so comparisons never overflow.
class PPower {
 public:
  PPower(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidPartition, "p = " + std::to_string(p) + " is not prime");
  }

  std::uint32_t prime() const { return p_; }
  std::uint32_t log() const { return k_; }

  BigInt value() const {
    BigInt v = 1;
    for (std::uint32_t i = 0; i < k_; ++i) v *= p_;
    return v;
  }

  friend bool operator==(const PPower&, const PPower&) = default;

  friend std::strong_ordering operator<=>(const PPower& a, const PPower& b) {
    if (a.p_ != b.p_)
      throw Error(ErrorCode::PrimeMismatch,
                  "comparing powers of " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
    return a.k_ <=> b.k_;
  }

  std::string str() const { return value().str(); }

 private:
  std::uint32_t p_;
  std::uint32_t k_;
};

/// C_{p^e1} x ... x C_{p^eh} with e1 >= ... >= eh >= 1. The empty sequence is
/// the trivial group.
class PPartition {
 public:
  PPartition(std::uint32_t p, std::vector<std::uint32_t> exps) : p_(p), exps_(std::move(exps)) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidPartition, "p = " + std::to_string(p) + " is not prime");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) throw Error(ErrorCode::InvalidPartition, "zero exponent in " + str());
      if (i > 0 && exps_[i] > exps_[i - 1])
        throw Error(ErrorCode::InvalidPartition, "exponents not non-increasing in " + str());
    }
  }

  /// Accepts exponents in any order and drops zeros.
  static PPartition normalized(std::uint32_t p, std::vector<std::uint32_t> exps) {
    std::erase(exps, 0u);
    std::sort(exps.begin(), exps.end(), std::greater<>());
    return PPartition(p, std::move(exps));
  }

  static PPartition trivial(std::uint32_t p) { return PPartition(p, {}); }

  std::uint32_t prime() const { return p_; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  bool is_trivial() const { return exps_.empty(); }

  std::uint32_t log_order() const {
    std::uint32_t s = 0;
    for (auto e : exps_) s += e;
    return s;
  }
  BigInt order() const { return PPower(p_, log_order()).value(); }

  friend bool operator==(const PPartition&, const PPartition&) = default;

  std::string str() const {
    std::string s = std::to_string(p_) + "^[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(exps_[i]);
    }
    return s + "]";
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> exps_;
};

/// Parses `p^[e1,e2,...]`; whitespace is ignored.
inline PPartition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'"); };
  auto caret = s.find("^[");
  if (caret == std::string::npos || caret == 0 || s.back() != ']') throw fail();
  auto read_uint = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 9) throw fail();
    std::uint32_t v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw fail();
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
  };
  std::uint32_t p = read_uint(std::string_view(s).substr(0, caret));
  std::string_view body = std::string_view(s).substr(caret + 2, s.size() - caret - 3);
  std::vector<std::uint32_t> exps;
  while (!body.empty()) {
    auto comma = body.find(',');
    exps.push_back(read_uint(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw fail();
  }
  return PPartition(p, std::move(exps));
}

namespace detail {
inline void require_same_prime(const PPartition& a, const PPartition& b) {
  if (a.prime() != b.prime())
    throw Error(ErrorCode::PrimeMismatch, a.str() + " vs " + b.str());
}
}  // namespace detail

inline std::size_t rank(const PPartition& x) { return x.exps().size(); }

inline PPower exponent(const PPartition& x) {
  return PPower(x.prime(), x.is_trivial() ? 0 : x.exps().front());
}

/// X is isomorphic to a subgroup (equivalently, a quotient) of Y.
inline bool embeds(const PPartition& x, const PPartition& y) {
  detail::require_same_prime(x, y);
  if (rank(x) > rank(y)) return false;
  for (std::size_t i = 0; i < rank(x); ++i)
    if (x.exps()[i] > y.exps()[i]) return false;
  return true;
}

struct VarResult {
  PPower value;
  std::size_t r;  // 1-based index of the last strictly smaller factor
};

/// Order of the last cyclic factor of X smaller than the matching factor of Y.
/// Only defined for X properly embedded in Y with equal ranks.
inline VarResult var(const PPartition& x, const PPartition& y) {
  detail::require_same_prime(x, y);
  if (rank(x) != rank(y))
    throw Error(ErrorCode::VarUndefined, "ranks differ: " + x.str() + " vs " + y.str());
  if (!embeds(x, y)) throw Error(ErrorCode::VarUndefined, x.str() + " does not embed in " + y.str());
  for (std::size_t i = rank(x); i-- > 0;)
    if (x.exps()[i] < y.exps()[i]) return {PPower(x.prime(), x.exps()[i]), i + 1};
  throw Error(ErrorCode::VarUndefined, "identical partitions " + x.str());
}

/// |Hom(A, B)| = prod_{i,j} p^min(a_i, b_j).
inline BigInt hom_order(const PPartition& a, const PPartition& b) {
  detail::require_same_prime(a, b);
  std::uint32_t log = 0;
  for (auto ai : a.exps())
    for (auto bj : b.exps()) log += std::min(ai, bj);
  return PPower(a.prime(), log).value();
}

/// Isomorphism type of Hom(A, B), using Hom(C_{p^a}, C_{p^b}) = C_{p^min(a,b)}.
inline PPartition hom_type(const PPartition& a, const PPartition& b) {
  detail::require_same_prime(a, b);
  std::vector<std::uint32_t> parts;
  for (auto ai : a.exps())
    for (auto bj : b.exps()) parts.push_back(std::min(ai, bj));
  return PPartition::normalized(a.prime(), std::move(parts));
}

enum class HomClause {
  Identical,   // the two groups coincide
  RankAndVar,  // equal ranks and the exponent bound against var holds
  TrivialHom,  // the fixed side is trivial, so both Hom groups are trivial
  Unequal,
};

constexpr std::string_view to_string(HomClause c) {
  switch (c) {
    case HomClause::Identical: return "IDENTICAL";
    case HomClause::RankAndVar: return "RANK_AND_VAR";
    case HomClause::TrivialHom: return "TRIVIAL_HOM";
    case HomClause::Unequal: return "UNEQUAL";
  }
  return "?";
}

struct HomVerdict {
  bool equal;
  HomClause clause;
  std::optional<std::size_t> r_index;
  std::string detail;
};

namespace detail {

// Shared core of both decisions: `small` embeds in `large`, `bound` is the
// exponent that must not exceed var(small, large).
inline HomVerdict decide_hom_equal(const PPartition& small, const PPartition& large,
                                   const PPartition& fixed) {
  if (small == large) return {true, HomClause::Identical, std::nullopt, small.str() + " = " + large.str()};
  if (fixed.is_trivial())
    return {true, HomClause::TrivialHom, std::nullopt, "fixed side " + fixed.str() + " is trivial"};
  if (rank(small) != rank(large))
    return {false, HomClause::Unequal, std::nullopt,
            "d(" + small.str() + ") = " + std::to_string(rank(small)) + " != d(" + large.str() +
                ") = " + std::to_string(rank(large))};
  VarResult v = var(small, large);
  PPower e = exponent(fixed);
  std::string cmp = "exp(" + fixed.str() + ") = " + e.str() + (e <= v.value ? " <= " : " > ") +
                    "var = " + v.value.str() + " (r = " + std::to_string(v.r) + ")";
  if (e <= v.value) return {true, HomClause::RankAndVar, v.r, cmp};
  return {false, HomClause::Unequal, std::nullopt, cmp};
}

}  // namespace detail

/// Decides Hom(A, B) = Hom(A, C) for B a subgroup of C.
inline HomVerdict decide_hom_equal_targets(const PPartition& a, const PPartition& b, const PPartition& c) {
  detail::require_same_prime(a, b);
  detail::require_same_prime(b, c);
  if (!embeds(b, c)) throw Error(ErrorCode::HypothesisViolation, b.str() + " is not a subgroup of " + c.str());
  return detail::decide_hom_equal(b, c, a);
}

/// Decides |Hom(D, B)| = |Hom(A, B)| for D a quotient of A.
inline HomVerdict decide_hom_equal_sources(const PPartition& d, const PPartition& a, const PPartition& b) {
  detail::require_same_prime(d, a);
  detail::require_same_prime(a, b);
  if (!embeds(d, a)) throw Error(ErrorCode::HypothesisViolation, d.str() + " is not a quotient of " + a.str());
  return detail::decide_hom_equal(d, a, b);
}

/// All partitions of the given prime with exponent sum in [0, max_sum].
inline std::vector<PPartition> partitions_up_to(std::uint32_t p, std::uint32_t max_sum) {
  std::vector<PPartition> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t cap) -> void {
    out.emplace_back(p, cur);
    for (std::uint32_t e = std::min(remaining, cap); e >= 1; --e) {
      cur.push_back(e);
      self(self, remaining - e, e);
      cur.pop_back();
    }
  };
  rec(rec, max_sum, max_sum);
  return out;
}

}  // namespace autcrit
