#include "isoprod/fingerprint.hpp"

#include <algorithm>
#include <sstream>

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ']';
  return out.str();
}

}  // namespace

std::vector<std::uint64_t> abelian_quotient_invariants(const Subgroup& normal) {
  const auto& group = *normal.parent();
  const std::size_t n = group.order();

  // Label each coset xN by its smallest member.
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    reps.push_back(x);
    for (auto m : normal.members()) coset[group.mul(x, m)] = x;
  }
  const Elem one = coset[FiniteGroup::kIdentity];

  // In an abelian group A, log_p |A[p^k]| - log_p |A[p^(k-1)]| is the number
  // of cyclic p-factors of order >= p^k.
  std::vector<std::uint64_t> invariants;
  std::uint64_t rest = reps.size();
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::uint64_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    std::vector<std::uint64_t> at_least;  // at_least[k-1]: factors of order >= p^k
    std::uint64_t previous = 1;
    for (std::uint64_t pk = p; previous < p_part; pk *= p) {
      std::uint64_t killed = 0;
      for (auto r : reps)
        if (coset[group.pow(r, static_cast<std::int64_t>(pk))] == one) ++killed;
      std::uint64_t ratio = killed / previous, count = 0;
      while (ratio > 1) {
        ratio /= p;
        ++count;
      }
      at_least.push_back(count);
      previous = killed;
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::uint64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i <= k; ++i) pk *= p;
      for (std::uint64_t c = next; c < at_least[k]; ++c) invariants.push_back(pk);
    }
  }
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

GroupFingerprint fingerprint(const GroupPtr& group) {
  GroupFingerprint fp;
  fp.order = group->order();
  for (Elem e = 0; e < group->order(); ++e) ++fp.element_orders[group->elem_order(e)];

  const auto derived = derived_subgroup(group);
  fp.abelian_invariants = abelian_quotient_invariants(derived);

  fp.derived_series.push_back(group->order());
  Subgroup term = derived;
  std::size_t last = group->order();
  while (term.order() != last) {
    fp.derived_series.push_back(term.order());
    last = term.order();
    if (last == 1) break;
    term = commutator_subgroup(term);
  }

  fp.center_order = center(group).order();
  fp.class_count = conjugacy_classes(*group).size();
  return fp;
}

std::string describe(const GroupFingerprint& fp) {
  std::ostringstream out;
  out << "order: " << fp.order << '\n';
  out << "element_orders:";
  for (auto [o, c] : fp.element_orders) out << ' ' << o << ':' << c;
  out << '\n';
  out << "abelian_invariants: " << join(fp.abelian_invariants) << '\n';
  out << "derived_series: " << join(fp.derived_series) << '\n';
  out << "center_order: " << fp.center_order << '\n';
  out << "class_count: " << fp.class_count << '\n';
  return out.str();
}

}  // namespace isoprod
