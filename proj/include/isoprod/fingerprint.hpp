#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isoprod/finite_group.hpp"

namespace isoprod {

/// Isomorphism invariants used to validate bundled group data. Two groups
/// with equal fingerprints need not be isomorphic.
struct GroupFingerprint {
  std::uint64_t order = 0;
  /// element order -> number of elements of that order
  std::map<std::uint64_t, std::uint64_t> element_orders;
  /// invariants of G/[G,G] as sorted prime powers; empty when G is perfect
  std::vector<std::uint64_t> abelian_invariants;
  /// |G|, |G'|, |G''|, ... until the series stabilises
  std::vector<std::uint64_t> derived_series;
  std::uint64_t center_order = 0;
  std::uint64_t class_count = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupPtr& group);

/// Prime-power invariants of the abelian quotient group/normal.
std::vector<std::uint64_t> abelian_quotient_invariants(const Subgroup& normal);

/// One line per field, "field: value".
std::string describe(const GroupFingerprint& fp);

}  // namespace isoprod
