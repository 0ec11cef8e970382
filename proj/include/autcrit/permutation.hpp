#pragma once

// Permutation generators in disjoint-cycle notation and their closure into a
// Cayley table.

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autcrit/error.hpp"
#include "autcrit/group.hpp"

namespace autcrit {

/// Images of 0..d-1. Products act on the right: (a*b)(x) = b(a(x)).
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size());
  for (auto x : p) {
    if (x >= p.size() || seen[x]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    seen[x] = true;
  }
}

/// Parses e.g. `(1 2 3 4)(5 6)` on points 1..degree; `()` is the identity.
/// Commas between points are accepted.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<bool> used(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error(ErrorCode::InvalidPermutation, "empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::InvalidPermutation, "expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error(ErrorCode::InvalidPermutation, "bad cycle in '" + std::string(text) + "'");
      std::uint64_t v = std::stoull(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree)
        throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size());
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    for (std::uint32_t x = s; !done[x]; x = p[x]) {
      if (x != s) out += ' ';
      out += std::to_string(x + 1);
      done[x] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Closes the generated set and returns its Cayley table; the identity is
/// element 0 and elements are numbered in breadth-first discovery order.
inline FiniteGroup from_permutation_generators(const std::vector<Permutation>& gens, std::size_t degree,
                                               std::size_t bound = kDefaultIngestBound) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error(ErrorCode::InvalidPermutation, "generator on wrong number of points");
    validate_permutation(g);
  }
  std::vector<Permutation> elems{identity_permutation(degree)};
  std::map<Permutation, Element> index{{elems.front(), 0}};
  std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};  // elems[i] = elems[parent] * gens[k]
  std::vector<std::vector<Element>> right(gens.size());          // right[k][x] = x * gens[k]
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation x = compose(elems[i], gens[k]);
      auto it = index.find(x);
      if (it == index.end()) {
        if (elems.size() >= bound)
          throw Error(ErrorCode::OrderBoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
        it = index.emplace(x, static_cast<Element>(elems.size())).first;
        parent.emplace_back(static_cast<Element>(i), k);
        elems.push_back(std::move(x));
      }
      right[k].push_back(it->second);
    }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) table[a * n + b] = right[parent[b].second][table[a * n + parent[b].first]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(format_cycles(e));
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(labels));
}

}  // namespace autcrit
