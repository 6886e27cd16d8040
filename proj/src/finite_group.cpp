#include "isoprod/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

constexpr const char* kModule = "group-core";

}  // namespace

GroupPtr FiniteGroup::closure(std::vector<Permutation> generators, std::size_t budget) {
  if (generators.empty()) fail(ErrorKind::Validation, kModule, "closure needs at least one generator");
  const auto degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorKind::Validation, kModule,
           "generator degree mismatch: " + std::to_string(g.degree()) + " vs " + std::to_string(degree));
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->generators_ = std::move(generators);

  // Breadth-first over words; each new layer sorted lexicographically.
  // parent/via record the spanning tree: element = elements[parent] * gens[via].
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  group->elements_.push_back(Permutation::identity(degree));
  group->index_.emplace(group->elements_.front(), 0);
  std::size_t layer_begin = 0;
  while (layer_begin < group->elements_.size()) {
    const std::size_t layer_end = group->elements_.size();
    std::vector<std::pair<Permutation, std::pair<Elem, std::uint32_t>>> next;
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen_next;
    for (std::size_t x = layer_begin; x < layer_end; ++x) {
      for (std::uint32_t k = 0; k < group->generators_.size(); ++k) {
        auto y = group->elements_[x] * group->generators_[k];
        if (group->index_.contains(y) || seen_next.contains(y)) continue;
        seen_next.emplace(y, next.size());
        next.emplace_back(std::move(y), std::make_pair(static_cast<Elem>(x), k));
        if (group->elements_.size() + next.size() > budget) {
          fail(ErrorKind::Budget, kModule,
               "closure exceeds element budget of " + std::to_string(budget));
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [perm, tree] : next) {
      group->index_.emplace(perm, static_cast<Elem>(group->elements_.size()));
      group->elements_.push_back(std::move(perm));
      parent.push_back(tree.first);
      via.push_back(tree.second);
    }
    layer_begin = layer_end;
  }

  const std::size_t n = group->elements_.size();
  for (const auto& g : group->generators_) group->generator_indices_.push_back(group->index_.at(g));

  if (n <= kTableLimit) {
    // Right-multiplication by generators, then rows by walking the spanning tree.
    const std::size_t ngen = group->generators_.size();
    std::vector<Elem> right(n * ngen);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < ngen; ++k)
        right[x * ngen + k] = group->index_.at(group->elements_[x] * group->generators_[k]);
    group->table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      Elem* row = group->table_.data() + a * n;
      row[0] = static_cast<Elem>(a);
      for (std::size_t b = 1; b < n; ++b) row[b] = right[row[parent[b]] * ngen + via[b]];
    }
    group->inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      const Elem* row = group->table_.data() + a * n;
      for (std::size_t b = 0; b < n; ++b) {
        if (row[b] == kIdentity) {
          group->inverse_[a] = static_cast<Elem>(b);
          break;
        }
      }
    }
  } else {
    group->inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) group->inverse_[a] = group->index_.at(group->elements_[a].inverse());
  }

  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) group->orders_[a] = static_cast<std::uint32_t>(group->elements_[a].order());
  return group;
}

std::optional<Elem> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) fail(ErrorKind::Validation, kModule, "permutation " + p.to_cycle_string() + " is not in the group");
  return it->second;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  const std::int64_t m = orders_[a];
  k %= m;
  if (k < 0) k += m;
  Elem result = kIdentity;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteGroup::product(std::span<const Elem> factors) const {
  Elem acc = kIdentity;
  for (auto f : factors) acc = mul(acc, f);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : generator_indices_)
    for (auto b : generator_indices_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  mask_.assign(parent_->order(), false);
  for (auto m : members_) mask_[m] = true;
  if (members_.empty() || parent_->order() % members_.size() != 0) {
    fail(ErrorKind::Assertion, kModule,
         "subgroup order " + std::to_string(members_.size()) + " does not divide " +
             std::to_string(parent_->order()));
  }
}

bool Subgroup::is_normal() const {
  for (auto g : parent_->generator_indices())
    for (auto m : members_)
      if (!mask_[parent_->conj(g, m)]) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  std::vector<Permutation> gens;
  for (auto g : generators_) gens.push_back(parent_->element(g));
  if (gens.empty()) gens.push_back(parent_->element(FiniteGroup::kIdentity));
  return FiniteGroup::closure(std::move(gens));
}

namespace {

std::vector<Elem> close_under(const FiniteGroup& group, std::span<const Elem> gens) {
  std::vector<bool> in(group.order(), false);
  std::vector<Elem> members{FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      auto y = group.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

}  // namespace

Subgroup whole_group(const GroupPtr& group) {
  std::vector<Elem> all(group->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(group, std::move(all), group->generator_indices());
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const Elem> seeds) {
  std::vector<Elem> gens;
  std::vector<Elem> members{FiniteGroup::kIdentity};
  std::vector<bool> in(group->order(), false);
  in[FiniteGroup::kIdentity] = true;
  for (auto s : seeds) {
    if (s >= group->order()) fail(ErrorKind::Validation, kModule, "element index out of range");
    if (in[s]) continue;
    gens.push_back(s);
    members = close_under(*group, gens);
    std::fill(in.begin(), in.end(), false);
    for (auto m : members) in[m] = true;
  }
  return Subgroup(group, std::move(members), std::move(gens));
}

Subgroup commutator_subgroup(const Subgroup& s) {
  const auto& group = *s.parent();
  const auto& sgens = s.generators();
  std::vector<Elem> seeds;
  for (auto a : sgens)
    for (auto b : sgens) seeds.push_back(group.commutator(a, b));
  // Normal closure inside s of the generator commutators.
  auto current = subgroup_generated(s.parent(), seeds);
  for (;;) {
    std::vector<Elem> extra;
    for (auto g : sgens)
      for (auto t : current.generators()) {
        auto c = group.conj(g, t);
        if (!current.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return current;
    seeds = current.generators();
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    current = subgroup_generated(s.parent(), seeds);
  }
}

Subgroup derived_subgroup(const GroupPtr& group) { return commutator_subgroup(whole_group(group)); }

Subgroup center(const GroupPtr& group) {
  std::vector<Elem> members;
  for (Elem x = 0; x < group->order(); ++x) {
    bool central = true;
    for (auto g : group->generator_indices()) {
      if (group->mul(g, x) != group->mul(x, g)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return subgroup_generated(group, members);
}

std::vector<Elem> conjugacy_class(const FiniteGroup& group, Elem f) {
  std::vector<Elem> cls{f};
  std::set<Elem> seen{f};
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (auto g : group.generator_indices()) {
      auto y = group.conj(g, cls[i]);
      if (seen.insert(y).second) cls.push_back(y);
    }
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

std::vector<Elem> class_representative_map(const FiniteGroup& group) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> rep(group.order(), kUnset);
  for (Elem x = 0; x < group.order(); ++x) {
    if (rep[x] != kUnset) continue;
    // x is the smallest unassigned element, hence the smallest in its class.
    std::vector<Elem> queue{x};
    rep[x] = x;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : group.generator_indices()) {
        auto y = group.conj(g, queue[i]);
        if (rep[y] == kUnset) {
          rep[y] = x;
          queue.push_back(y);
        }
      }
    }
  }
  return rep;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& group) {
  const auto rep = class_representative_map(group);
  std::map<Elem, std::vector<Elem>> by_rep;
  for (Elem x = 0; x < group.order(); ++x) by_rep[rep[x]].push_back(x);
  std::vector<std::vector<Elem>> out;
  for (auto& [r, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

}  // namespace isoprod
