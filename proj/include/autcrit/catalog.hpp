#pragma once

// Built-in catalog of small p-groups and the recipe language used to define
// them. Every recipe is turned into permutation generators (right regular
// representation of a normal-form multiplication) and ingested through
// from_permutation_generators.
//
// Recipe grammar (factors joined by " x " form a direct product):
//   cyclic n | dihedral n | quaternion n | semidihedral n | modular n
//   extraspecial p e        (p odd, e = p or p^2; order p^3)
//   heisenberg p            (upper unitriangular 3x3 over F_p)
//   metacyclic m k r s      (<a,b | a^m, b^k = a^s, b a b^-1 = a^r>)
//   split m1,m2,.. t v1;v2;..   (Z_m1 x Z_m2 x .. by C_t; generator maps e_j to v_j)
//   abelian p^[e1,e2,..]
//   <catalog name>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "autcrit/abelian.hpp"
#include "autcrit/io.hpp"
#include "autcrit/permutation.hpp"

namespace autcrit {

enum class SpecSource { Catalog, CayleyFile, PermFile };

struct GroupSpec {
  std::string name;
  SpecSource source = SpecSource::Catalog;
  std::string recipe;  // recipe text, or the file path for file sources
};

struct PermGenerators {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
};

namespace detail {

// Right regular representation of a group given by a multiplication on
// indices 0..n-1 with identity 0.
inline PermGenerators regular_generators(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                         const std::vector<std::size_t>& gens) {
  PermGenerators out{{}, n};
  for (std::size_t g : gens) {
    Permutation p(n);
    for (std::size_t y = 0; y < n; ++y) p[y] = static_cast<std::uint32_t>(mul(y, g));
    out.gens.push_back(std::move(p));
  }
  return out;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

inline Error recipe_error(const std::string& recipe, const std::string& why) {
  return Error(ErrorCode::ParseError, "recipe '" + recipe + "': " + why);
}

}  // namespace detail

/// <a, b | a^m = 1, b^k = a^s, b a b^-1 = a^r>, elements a^i b^j.
inline PermGenerators metacyclic_generators(std::uint64_t m, std::uint64_t k, std::uint64_t r, std::uint64_t s) {
  if (m == 0 || k == 0) throw Error(ErrorCode::ParseError, "metacyclic orders must be positive");
  r %= m;
  s %= m;
  if (detail::pow_mod(r, k, m) != 1 % m || (s * r) % m != s)
    throw Error(ErrorCode::ParseError, "inconsistent metacyclic parameters");
  auto mul = [=](std::size_t x, std::size_t y) -> std::size_t {
    std::uint64_t i = x / k, j = x % k, u = y / k, v = y % k;
    std::uint64_t a = (i + u * detail::pow_mod(r, j, m)) % m;
    std::uint64_t b = j + v;
    if (b >= k) {
      b -= k;
      a = (a + s) % m;
    }
    return static_cast<std::size_t>(a * k + b);
  };
  std::vector<std::size_t> gens;
  if (m > 1) gens.push_back(k);  // a
  if (k > 1) gens.push_back(1);  // b
  return detail::regular_generators(m * k, mul, gens);
}

/// (Z_{m_1} x .. x Z_{m_h}) by a cyclic group of order t whose generator sends
/// basis vector e_j to images[j]. Elements are (vector, power).
inline PermGenerators split_generators(const std::vector<std::uint64_t>& mods, std::uint64_t t,
                                       const std::vector<std::vector<std::uint64_t>>& images) {
  const std::size_t h = mods.size();
  if (t == 0 || images.size() != h) throw Error(ErrorCode::ParseError, "split: need one image per factor");
  for (auto m : mods)
    if (m == 0) throw Error(ErrorCode::ParseError, "split: zero modulus");
  std::size_t nvec = 1;
  for (auto m : mods) nvec *= m;
  using Vec = std::vector<std::uint64_t>;
  auto encode = [&](const Vec& v) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < h; ++j) idx = idx * mods[j] + v[j] % mods[j];
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    Vec v(h);
    for (std::size_t j = h; j-- > 0;) {
      v[j] = idx % mods[j];
      idx /= mods[j];
    }
    return v;
  };
  auto act = [&](const Vec& v) {
    Vec out(h, 0);
    for (std::size_t j = 0; j < h; ++j) {
      if (images[j].size() != h) throw Error(ErrorCode::ParseError, "split: image has wrong length");
      for (std::size_t i = 0; i < h; ++i) out[i] = (out[i] + v[j] * images[j][i]) % mods[i];
    }
    return out;
  };
  // act must be a well-defined automorphism of order dividing t.
  for (std::size_t j = 0; j < h; ++j) {
    Vec e(h, 0);
    e[j] = mods[j];
    if (encode(act(e)) != 0) throw Error(ErrorCode::ParseError, "split: action not well defined");
  }
  std::vector<std::vector<std::size_t>> power_table(t, std::vector<std::size_t>(nvec));
  for (std::size_t idx = 0; idx < nvec; ++idx) {
    Vec v = decode(idx);
    for (std::uint64_t i = 0; i < t; ++i) {
      power_table[i][idx] = encode(v);
      v = act(v);
    }
    if (encode(v) != idx) throw Error(ErrorCode::ParseError, "split: action order does not divide t");
  }
  auto mul = [=](std::size_t x, std::size_t y) -> std::size_t {
    std::size_t vx = x / t, ix = x % t, vy = y / t, iy = y % t;
    Vec a = decode(vx), b = decode(power_table[ix][vy]);
    for (std::size_t j = 0; j < h; ++j) a[j] = (a[j] + b[j]) % mods[j];
    return encode(a) * t + (ix + iy) % t;
  };
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < h; ++j) {
    Vec e(h, 0);
    e[j] = 1;
    if (mods[j] > 1) gens.push_back(encode(e) * t);
  }
  if (t > 1) gens.push_back(1);
  return detail::regular_generators(nvec * t, mul, gens);
}

inline PermGenerators disjoint_product(const PermGenerators& a, const PermGenerators& b) {
  PermGenerators out{{}, a.degree + b.degree};
  for (const auto& g : a.gens) {
    Permutation p = identity_permutation(out.degree);
    std::copy(g.begin(), g.end(), p.begin());
    out.gens.push_back(std::move(p));
  }
  for (const auto& g : b.gens) {
    Permutation p = identity_permutation(out.degree);
    for (std::size_t i = 0; i < b.degree; ++i) p[a.degree + i] = static_cast<std::uint32_t>(a.degree + g[i]);
    out.gens.push_back(std::move(p));
  }
  return out;
}

inline PermGenerators recipe_generators(const std::string& recipe);

namespace detail {

inline std::vector<std::uint64_t> parse_uint_list(const std::string& text, char sep, const std::string& recipe) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw recipe_error(recipe, "bad number list '" + text + "'");
    out.push_back(std::stoull(item));
  }
  return out;
}

inline std::uint64_t log2_exact(std::uint64_t n, const std::string& recipe) {
  if (n < 2 || (n & (n - 1))) throw recipe_error(recipe, "order must be a power of 2");
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

inline PermGenerators factor_generators(const std::string& factor);

}  // namespace detail

inline PermGenerators abelian_generators(const PPartition& x) {
  std::vector<std::uint64_t> mods;
  for (auto e : x.exps()) mods.push_back(PPower(x.prime(), e).value().convert_to<std::uint64_t>());
  std::vector<std::vector<std::uint64_t>> ident(mods.size(), std::vector<std::uint64_t>(mods.size(), 0));
  for (std::size_t j = 0; j < mods.size(); ++j) ident[j][j] = 1;
  return split_generators(mods, 1, ident);
}

/// Display name of an abelian group, e.g. C4xC2; C1 for the trivial group.
inline std::string abelian_name(const PPartition& x) {
  if (x.is_trivial()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < x.exps().size(); ++i) {
    if (i) s += 'x';
    s += "C" + PPower(x.prime(), x.exps()[i]).str();
  }
  return s;
}

/// The built-in catalog, in a fixed order.
inline const std::vector<GroupSpec>& catalog() {
  static const std::vector<GroupSpec> entries = [] {
    std::vector<GroupSpec> v;
    auto add = [&](std::string name, std::string recipe) {
      v.push_back({std::move(name), SpecSource::Catalog, std::move(recipe)});
    };
    // order 8
    add("D8", "dihedral 8");
    add("Q8", "quaternion 8");
    // the nine non-abelian groups of order 16
    add("D16", "dihedral 16");
    add("Q16", "quaternion 16");
    add("SD16", "semidihedral 16");
    add("M16", "modular 16");
    add("D8xC2", "dihedral 8 x cyclic 2");
    add("Q8xC2", "quaternion 8 x cyclic 2");
    add("C4:C4", "metacyclic 4 4 3 0");
    add("(C4xC2):C2", "split 4,2 2 1,1;0,1");
    add("D8oC4", "split 4,2 2 1,0;2,1");
    // order 27
    add("Heis3", "heisenberg 3");
    add("C9:C3", "extraspecial 3 9");
    // order 32
    add("D32", "dihedral 32");
    add("Q32", "quaternion 32");
    add("SD32", "semidihedral 32");
    add("M32", "modular 32");
    add("D8xC4", "dihedral 8 x cyclic 4");
    add("Q8xC4", "quaternion 8 x cyclic 4");
    add("D16xC2", "dihedral 16 x cyclic 2");
    add("D8xC2xC2", "dihedral 8 x cyclic 2 x cyclic 2");
    add("C8:C4", "metacyclic 8 4 7 0");
    add("C4:C8", "metacyclic 4 8 3 0");
    add("D8oC4xC2", "split 4,2 2 1,0;2,1 x cyclic 2");
    // order 64
    add("D8xD8", "dihedral 8 x dihedral 8");
    add("Q8xQ8", "quaternion 8 x quaternion 8");
    add("D8xC8", "dihedral 8 x cyclic 8");
    add("M64", "modular 64");
    add("C8:C8", "metacyclic 8 8 5 0");
    // order 81
    add("Heis3xC3", "heisenberg 3 x cyclic 3");
    add("C9:C3xC3", "extraspecial 3 9 x cyclic 3");
    add("C27:C3", "metacyclic 27 3 10 0");
    add("C9:C9", "metacyclic 9 9 4 0");
    add("(C9xC3):C3", "split 9,3 3 1,1;0,1");
    // abelian groups
    for (std::uint32_t p : {2u, 3u})
      for (const auto& x : partitions_up_to(p, 5))
        if (!x.is_trivial()) add(abelian_name(x), "abelian " + x.str());
    return v;
  }();
  return entries;
}

inline std::optional<GroupSpec> find_in_catalog(const std::string& name) {
  for (const auto& s : catalog())
    if (s.name == name) return s;
  return std::nullopt;
}

namespace detail {

inline PermGenerators factor_generators(const std::string& factor) {
  std::istringstream in(factor);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw recipe_error(factor, "empty factor");
  auto num = [&](std::size_t i) -> std::uint64_t {
    if (i >= words.size() || words[i].find_first_not_of("0123456789") != std::string::npos)
      throw recipe_error(factor, "expected a number at position " + std::to_string(i));
    return std::stoull(words[i]);
  };
  auto expect_args = [&](std::size_t n) {
    if (words.size() != n + 1) throw recipe_error(factor, "expected " + std::to_string(n) + " argument(s)");
  };
  const std::string& kind = words[0];
  if (words.size() == 1) {
    if (auto s = find_in_catalog(kind)) return recipe_generators(s->recipe);
  }
  if (kind == "cyclic") {
    expect_args(1);
    return metacyclic_generators(num(1), 1, 1, 0);
  }
  if (kind == "dihedral") {
    expect_args(1);
    std::uint64_t n = num(1);
    if (n < 4 || n % 2) throw recipe_error(factor, "dihedral order must be even and >= 4");
    return metacyclic_generators(n / 2, 2, n / 2 - 1, 0);
  }
  if (kind == "quaternion") {
    expect_args(1);
    std::uint64_t n = num(1);
    log2_exact(n, factor);
    if (n < 8) throw recipe_error(factor, "quaternion order must be >= 8");
    return metacyclic_generators(n / 2, 2, n / 2 - 1, n / 4);
  }
  if (kind == "semidihedral" || kind == "modular") {
    expect_args(1);
    std::uint64_t n = num(1);
    log2_exact(n, factor);
    if (n < 16) throw recipe_error(factor, kind + " order must be >= 16");
    std::uint64_t m = n / 2;
    return metacyclic_generators(m, 2, kind == "modular" ? m / 2 + 1 : m / 2 - 1, 0);
  }
  if (kind == "extraspecial") {
    expect_args(2);
    std::uint64_t p = num(1), e = num(2);
    if (!is_prime(p) || p == 2) throw recipe_error(factor, "extraspecial needs an odd prime");
    if (e == p) return recipe_generators("heisenberg " + std::to_string(p));
    if (e != p * p) throw recipe_error(factor, "exponent must be p or p^2");
    return metacyclic_generators(p * p, p, p + 1, 0);
  }
  if (kind == "heisenberg") {
    expect_args(1);
    std::uint64_t p = num(1);
    if (!is_prime(p)) throw recipe_error(factor, "heisenberg needs a prime");
    return split_generators({p, p}, p, {{1, 1}, {0, 1}});
  }
  if (kind == "metacyclic") {
    expect_args(4);
    return metacyclic_generators(num(1), num(2), num(3), num(4));
  }
  if (kind == "split") {
    expect_args(3);
    auto mods = parse_uint_list(words[1], ',', factor);
    std::vector<std::vector<std::uint64_t>> images;
    std::stringstream ss(words[3]);
    for (std::string v; std::getline(ss, v, ';');) images.push_back(parse_uint_list(v, ',', factor));
    return split_generators(mods, num(2), images);
  }
  if (kind == "abelian") {
    expect_args(1);
    return abelian_generators(parse_partition(words[1]));
  }
  throw Error(ErrorCode::UnknownGroup, "unknown group or recipe '" + factor + "'");
}

}  // namespace detail

inline PermGenerators recipe_generators(const std::string& recipe) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    auto pos = recipe.find(" x ", start);
    factors.push_back(recipe.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  PermGenerators out = detail::factor_generators(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) out = disjoint_product(out, detail::factor_generators(factors[i]));
  return out;
}

/// Resolves a reference: catalog name, then existing file path, then recipe.
inline GroupSpec resolve_spec(const std::string& ref) {
  if (auto s = find_in_catalog(ref)) return *s;
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) {
    auto text = read_file(ref);
    auto lines = detail::content_lines(text);
    bool perm = !lines.empty() && lines[0].rfind("perm", 0) == 0;
    return {ref, perm ? SpecSource::PermFile : SpecSource::CayleyFile, ref};
  }
  return {ref, SpecSource::Catalog, ref};
}

inline FiniteGroup load_group(const GroupSpec& spec, std::size_t bound = kDefaultIngestBound) {
  switch (spec.source) {
    case SpecSource::Catalog: {
      auto pg = recipe_generators(spec.recipe);
      return from_permutation_generators(pg.gens, pg.degree, bound);
    }
    case SpecSource::CayleyFile: return read_cayley(read_file(spec.recipe));
    case SpecSource::PermFile: return read_perm(read_file(spec.recipe), bound);
  }
  throw Error(ErrorCode::UnknownGroup, spec.name);
}

}  // namespace autcrit
