#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoprod/covering.hpp"
#include "isoprod/exact_linalg.hpp"
#include "isoprod/mixed_surface.hpp"

namespace isoprod {

/// The orbit divisor induced by the graphs Delta_f, f in `members` (H indices).
struct OrbitDivisor {
  int label = 0;  ///< 1-based, ordered by smallest member
  std::vector<Elem> members;

  std::size_t n() const { return members.size(); }
};

/// Image of Delta_f under h in G0 (`mixed` = false) or under tau'h
/// (`mixed` = true). `h` is a g0 index; f and the result are H indices.
///   h(Delta_f)    = Delta_{phi(h) f h^-1}
///   tau'h(Delta_f) = Delta_{tau h f^-1 phi(h^-1)}
Elem act_on_graph(const SurfaceData& s, Elem h, bool mixed, Elem f);

/// Partition of the |H| graph classes into G-orbits.
std::vector<OrbitDivisor> graph_orbits(const SurfaceData& s);

/// Delta_{f1} . Delta_{f2} = |Fix(f1^-1 f2)| for f1 != f2.
std::int64_t graph_intersection(Elem f1, Elem f2, const CoveringData& cover);

struct IntersectionTable {
  std::vector<OrbitDivisor> divisors;
  RationalMatrix pairing;
  std::vector<Rational> kdot;
  std::int64_t genus_minus_1 = 0;
  std::uint64_t order_G = 0;

  std::size_t size() const { return pairing.size(); }
  /// Entry by 1-based labels.
  const Rational& at(int i, int j) const { return pairing.at(i - 1).at(j - 1); }

  /// A bare table (labels 1..k, no members) for tests of the cone logic.
  static IntersectionTable from_matrix(RationalMatrix pairing);
};

/// Builds the table from the orbit formulas:
///   D.D' = (1/|G|) sum Delta.Delta',
///   D^2  = (-2(g-1) n + 2 sum_{i<j} Delta_i.Delta_j)/|G|,
///   K.D  = 4(g-1) n/|G|,
/// then asserts integrality, symmetry, adjunction parity, rank <= 2 and the
/// Hodge index sign pattern.
IntersectionTable intersection_table(const std::vector<OrbitDivisor>& orbits, const SurfaceData& s,
                                     const CoveringData& cover, int parallel = 1);

/// |G| D^2 recomputed from the full n x n table of graph intersections with
/// Delta^2 = -2(g-1) on the diagonal.
std::int64_t pullback_self_intersection(const OrbitDivisor& d, const SurfaceData& s, const CoveringData& cover);

/// Aligned human-readable table.
std::string format_table(const IntersectionTable& t);
/// Machine record (JSON), byte-stable.
std::string format_record(const IntersectionTable& t);

}  // namespace isoprod
