#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "isoprod/permutation.hpp"

namespace isoprod {

/// Index of an element inside its FiniteGroup. Index 0 is always the identity.
using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite permutation group with every element enumerated.
///
/// Elements are ordered breadth-first over words in the generators; within
/// one word length, by lexicographic image sequence. The ordering is
/// deterministic and drives every downstream label.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;
  /// Groups up to this order get a precomputed Cayley table.
  static constexpr std::size_t kTableLimit = 2048;
  static constexpr Elem kIdentity = 0;

  static GroupPtr closure(std::vector<Permutation> generators,
                          std::size_t budget = kDefaultBudget);

  std::uint32_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Elem e) const { return elements_[e]; }

  /// Element indices of the generators, in input order.
  const std::vector<Elem>& generator_indices() const { return generator_indices_; }

  std::optional<Elem> find(const Permutation& p) const;
  /// Like find, but throws a validation error when `p` is not in the group.
  Elem index_of(const Permutation& p) const;

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return index_of(elements_[a] * elements_[b]);
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  /// a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inverse_[a], inverse_[b])); }
  Elem pow(Elem a, std::int64_t k) const;
  std::uint32_t elem_order(Elem a) const { return orders_[a]; }

  /// Product of a sequence, left to right.
  Elem product(std::span<const Elem> factors) const;

  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

/// A subgroup of a FiniteGroup, stored as a sorted set of parent indices.
class Subgroup {
 public:
  /// Empty placeholder; not a valid subgroup until assigned.
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> generators);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Elem e) const { return mask_[e]; }

  bool is_normal() const;
  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

  /// The subgroup as a standalone permutation group on the parent's points,
  /// generated by the images of `generators()`.
  GroupPtr as_group() const;

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
};

Subgroup whole_group(const GroupPtr& group);

/// Smallest subgroup containing `seeds`.
Subgroup subgroup_generated(const GroupPtr& group, std::span<const Elem> seeds);

/// [S,S] for a subgroup S, as a subgroup of the same parent.
Subgroup commutator_subgroup(const Subgroup& s);
/// [G,G] of the whole group.
Subgroup derived_subgroup(const GroupPtr& group);

Subgroup center(const GroupPtr& group);

/// { g f g^-1 : g in G }, sorted.
std::vector<Elem> conjugacy_class(const FiniteGroup& group, Elem f);

/// All conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& group);

/// Canonical class label: for every element, the smallest member of its class.
std::vector<Elem> class_representative_map(const FiniteGroup& group);

}  // namespace isoprod
