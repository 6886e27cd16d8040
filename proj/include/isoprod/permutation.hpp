#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace isoprod {

/// A bijection of {1..n}. Stored 0-indexed; the text formats are 1-indexed.
///
/// Products compose as functions: (a * b)(x) = a(b(x)), so `b` acts first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::uint32_t degree);

  /// Validates that `images` is a bijection of {1..images.size()}.
  static Permutation from_one_based(std::span<const std::int64_t> images);
  /// Validates that `images` is a bijection of {0..images.size()-1}.
  static Permutation from_zero_based(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<std::int64_t> one_based() const;

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation, e.g. "(1,2,3)(4,5)"; "()" for the identity.
  std::string to_cycle_string() const;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace isoprod
