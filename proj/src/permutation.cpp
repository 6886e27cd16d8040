#include "isoprod/permutation.hpp"

#include <numeric>
#include <sstream>

#include "isoprod/error.hpp"

namespace isoprod {

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<std::uint32_t> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) {
      fail(ErrorKind::Parse, "group-core",
           "image " + std::to_string(v) + " at position " + std::to_string(i + 1) +
               " is outside 1.." + std::to_string(images.size()));
    }
    zero[i] = static_cast<std::uint32_t>(v - 1);
  }
  return from_zero_based(std::move(zero));
}

Permutation Permutation::from_zero_based(std::vector<std::uint32_t> images) {
  if (images.empty()) fail(ErrorKind::Parse, "group-core", "permutation of degree 0");
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) {
      fail(ErrorKind::Parse, "group-core", "image sequence is not a bijection");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

std::vector<std::int64_t> Permutation::one_based() const {
  std::vector<std::int64_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::Validation, "group-core", "degree mismatch in product");
  std::vector<std::uint32_t> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != start) os << ',';
      os << x + 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace isoprod
