#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isoprod/finite_group.hpp"

namespace isoprod {

/// Signature [g'; m_1, ..., m_r] of a Galois cover C -> C/H.
struct CoverType {
  std::int64_t g_prime = 0;
  std::vector<std::int64_t> m;

  /// Accepts "[0;2,3,8]" and the shorthand "[0;2^5]" / "[0;4^3]".
  static CoverType parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const CoverType&, const CoverType&) = default;
};

/// 2g - 2 = |H| (2g' - 2 + sum (m_i - 1)/m_i). Throws if g is not an integer.
std::int64_t hurwitz_genus(std::uint64_t order, const CoverType& type);

struct GeneratingVector {
  GroupPtr group;
  CoverType type;
  std::vector<Elem> entries;
};

struct VectorReport {
  bool arity_ok = false;
  bool orders_ok = false;
  bool product_ok = false;
  bool generates_ok = false;
  /// Short tags for each failed check: "arity", "order", "product", "generation".
  std::vector<std::string> reasons;

  bool valid() const { return arity_ok && orders_ok && product_ok && generates_ok; }
};

/// Checks the generating-vector conditions one by one. g' > 0 is rejected as
/// unsupported.
VectorReport validate_generating_vector(const GeneratingVector& v);

/// Throws a validation error naming the failed checks unless `v` is valid.
void require_valid(const GeneratingVector& v);

/// Sigma_V: all conjugates of all powers of the entries, identity included.
/// Sorted by element index.
std::vector<Elem> stabilizer_set(const GeneratingVector& v);

/// |Fix(f)| = sum_j (1/m_j) #{g in H : f in g K_j g^-1}, K_j = <h_j>.
std::int64_t fixed_point_count(Elem f, const GeneratingVector& v);

/// Fixed-point counts of every element; the identity slot holds -1 (unset).
class FixTable {
 public:
  FixTable() = default;
  explicit FixTable(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}

  /// Throws for the identity.
  std::int64_t operator[](Elem f) const;
  std::size_t size() const { return counts_.size(); }
  const std::vector<std::int64_t>& raw() const { return counts_; }

 private:
  std::vector<std::int64_t> counts_;
};

FixTable fixed_point_table(const GeneratingVector& v);

/// Generating vectors of `type` for g' = 0, one per simultaneous-conjugacy
/// class, in deterministic scan order, at most `limit` of them.
std::vector<GeneratingVector> search_generating_vectors(const GroupPtr& group, const CoverType& type,
                                                        std::size_t limit);

/// Covering data for a validated vector.
struct CoveringData {
  GeneratingVector vector;
  std::int64_t genus = 0;
  std::vector<Subgroup> branch_stabilizers;
  std::vector<Elem> sigma_v;
  FixTable fix_table;
};

CoveringData make_covering(GeneratingVector v);

}  // namespace isoprod
