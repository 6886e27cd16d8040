#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isoprod/covering.hpp"
#include "isoprod/finite_group.hpp"

namespace isoprod {

/// Marks "no element" in partial maps between groups.
inline constexpr Elem kNoElem = ~Elem{0};

/// The mixed action data (G, G0, tau') with tau = tau'^2 and
/// phi(h) = tau' h tau'^-1 on G0.
///
/// G0 is also materialised as a standalone group (`g0`), and every table
/// below that lives on G0 is indexed by `g0` element indices.
struct MixedAction {
  GroupPtr G;
  Subgroup G0;
  Elem tau_prime = 0;  ///< in G
  Elem tau = 0;        ///< in G

  GroupPtr g0;
  std::vector<Elem> to_parent;    ///< g0 index -> G index
  std::vector<Elem> from_parent;  ///< G index -> g0 index, kNoElem outside G0
  std::vector<Elem> phi;          ///< on g0 indices
  Elem tau_local = 0;             ///< tau as a g0 index

  /// g0 index of a G element; throws if it is outside G0.
  Elem local(Elem g) const;
};

/// Throws a validation error unless [G:G0] = 2 and tau' is outside G0;
/// asserts that phi is an automorphism with phi^2 = conjugation by tau.
MixedAction build_mixed_action(GroupPtr G, Subgroup G0, Elem tau_prime);

struct SurfaceData {
  MixedAction action;
  /// G0 acting on C, the vector given in g0 indices.
  CoveringData covering;
  /// Group whose elements index the graph classes (G0 itself unless extra
  /// automorphisms are supplied).
  GroupPtr H;
  std::vector<Elem> embedding;  ///< g0 index -> H index
  std::vector<Elem> phi_h;      ///< phi transported to H; kNoElem off the image
  Elem tau_h = 0;
  /// Number of (x, y) pairs on which the embedding was checked to be multiplicative.
  std::size_t homomorphism_pairs_checked = 0;
};

/// Surface data with H = G0 and the identity embedding. `vector` lives in
/// action.g0.
SurfaceData make_surface(MixedAction action, GeneratingVector vector);

struct FreenessReport {
  bool no_isolated_fixed_points = false;
  bool no_fixed_curves = false;
  /// Non-trivial element of Sigma_V ∩ phi(Sigma_V) (as a G index).
  std::optional<Elem> isolated_witness;
  /// g in G \ G0 with g^2 in Sigma_V (as a G index).
  std::optional<Elem> fixed_curve_witness;

  bool free() const { return no_isolated_fixed_points && no_fixed_curves; }
};

FreenessReport check_free_action(const SurfaceData& s);
/// Same conditions for an arbitrary element set `sigma` of G0 (g0 indices).
FreenessReport check_free_action(const MixedAction& a, std::span<const Elem> sigma);

struct SurfaceInvariants {
  std::int64_t genus = 0;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t euler = 0;
  std::int64_t q = 0;
  std::int64_t pg = 0;
};

/// (g-1)^2/|G|; throws a validation error when it is not an integer.
std::int64_t euler_characteristic(std::int64_t genus, std::uint64_t order_G);

/// chi = (g-1)^2/|G|, K^2 = 8 chi, e = 4 chi, q = g', p_g = chi - 1 + q.
SurfaceInvariants surface_invariants(const SurfaceData& s);

/// Embeds G0 into H by sending the defining vector entries to
/// `induced_entries` and extending multiplicatively; the map is checked on
/// all |G0|^2 products. tau and phi are transported along it.
SurfaceData transport_structure(const SurfaceData& s, GroupPtr H, std::span<const Elem> induced_entries,
                                int parallel = 1);

struct InducedVectors {
  Subgroup derived;                ///< [H,H]
  Subgroup second_derived;         ///< [[H,H],[H,H]]
  std::array<Elem, 3> first{};     ///< (d,e,f) = (aba^-1, b, c^2), type [0;3,3,4]
  std::array<Elem, 3> second{};    ///< (efe^-1, e^2fe^-2, f), type [0;4,4,4]
};

/// From a [0;2,3,8] vector (a,b,c) of H derives the vectors of the derived
/// subgroups and validates both (orders, product one, generation).
InducedVectors derive_induced_vectors(const GroupPtr& H, Elem a, Elem b, Elem c);

}  // namespace isoprod
