#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <optional>

#include "isoprod/error.hpp"
#include "isoprod/pipeline.hpp"

namespace testing {

using namespace isoprod;

inline std::filesystem::path data_dir() { return ISOPROD_DATA_DIR; }
inline std::filesystem::path group_path(const std::string& name) { return data_dir() / "groups" / name; }
inline std::filesystem::path surface_path(const std::string& name) { return data_dir() / "surfaces" / name; }

inline GroupPtr perm_group(std::vector<std::vector<std::int64_t>> one_based) {
  std::vector<Permutation> gens;
  for (const auto& g : one_based) gens.push_back(Permutation::from_one_based(g));
  return FiniteGroup::closure(gens);
}

inline GroupPtr bundled(const std::string& name) { return load_group_file(group_path(name)).build(); }

/// D4 on the square's corners.
inline GroupPtr dihedral4() { return perm_group({{2, 3, 4, 1}, {1, 4, 3, 2}}); }

/// Loaded surfaces are cached: several tests share them.
inline const LoadedSurface& family(int k, bool use_extra = true) {
  static std::map<std::pair<int, bool>, LoadedSurface> cache;
  const auto key = std::make_pair(k, use_extra);
  if (!cache.count(key)) {
    RunConfig config;
    config.use_extra = use_extra;
    cache.emplace(key, load_surface(family_spec_path(data_dir(), k), config));
  }
  return cache.at(key);
}

/// The ErrorKind thrown by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Oracles. These deliberately avoid the library's shortcuts.

/// |Fix(f)| on C counted as fixed points of f on the fibres H/K_j: the branch
/// points over x_j are the left cosets gK_j, and f fixes gK_j iff f g K_j = g K_j.
inline std::int64_t coset_fiber_fixed_points(const GeneratingVector& v, Elem f) {
  const auto& h = *v.group;
  std::int64_t count = 0;
  for (auto hj : v.entries) {
    std::vector<Elem> cyclic{FiniteGroup::kIdentity};
    for (Elem p = hj; p != FiniteGroup::kIdentity; p = h.mul(p, hj)) cyclic.push_back(p);
    std::set<std::set<Elem>> cosets;
    for (Elem g = 0; g < h.order(); ++g) {
      std::set<Elem> coset;
      for (auto k : cyclic) coset.insert(h.mul(g, k));
      cosets.insert(coset);
    }
    for (const auto& coset : cosets) {
      std::set<Elem> moved;
      for (auto x : coset) moved.insert(h.mul(f, x));
      if (moved == coset) ++count;
    }
  }
  return count;
}

/// Order of <x, y> in Z_2 ⋉ Z_q with x y x^-1 = y^r, by closure over pairs
/// (a, b) meaning x^a y^b.
inline std::size_t semidirect_order(int q, int r) {
  auto mul = [&](std::pair<int, int> u, std::pair<int, int> v) {
    // x^a y^b x^c y^d = x^(a+c) y^(b r^c + d)
    int b = u.second;
    if (v.first) b = (b * r) % q;
    return std::make_pair((u.first + v.first) % 2, (b + v.second) % q);
  };
  std::set<std::pair<int, int>> seen{{0, 0}};
  std::vector<std::pair<int, int>> frontier{{0, 0}};
  const std::vector<std::pair<int, int>> gens{{1, 0}, {0, 1}};
  while (!frontier.empty()) {
    auto u = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      auto w = mul(u, g);
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen.size();
}

}  // namespace testing
