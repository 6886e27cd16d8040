#include "isoprod/covering.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "isoprod/error.hpp"
#include "isoprod/rational.hpp"

namespace isoprod {

namespace {

const std::string kModule = "covering";

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  CoverType run() {
    CoverType type;
    expect('[');
    type.g_prime = integer();
    expect(';');
    skip_space();
    if (peek() != ']') {
      for (;;) {
        const auto m = integer();
        std::int64_t repeat = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          repeat = integer();
          if (repeat < 1) error("repetition count must be positive");
        }
        if (m < 2) error("branching index must be at least 2");
        type.m.insert(type.m.end(), static_cast<std::size_t>(repeat), m);
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(']');
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return type;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const auto* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) error("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, kModule,
         "bad cover type '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_genus_zero(const CoverType& type) {
  if (type.g_prime != 0)
    fail(ErrorKind::Unsupported, kModule, "quotient genus g' > 0 is not supported (type " + type.to_string() + ")");
}

}  // namespace

CoverType CoverType::parse(std::string_view text) {
  auto type = TypeParser(text).run();
  if (type.g_prime < 0) fail(ErrorKind::Parse, kModule, "negative quotient genus in '" + std::string(text) + "'");
  return type;
}

std::string CoverType::to_string() const {
  std::ostringstream out;
  out << '[' << g_prime << ';';
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
  out << ']';
  return out.str();
}

std::int64_t hurwitz_genus(std::uint64_t order, const CoverType& type) {
  if (order < 1) fail(ErrorKind::Validation, kModule, "group order must be positive");
  Rational sum(2 * type.g_prime - 2);
  for (auto m : type.m) sum += Rational(m - 1, m);
  const Rational two_g_minus_2 = sum * static_cast<std::int64_t>(order);
  const Rational g = two_g_minus_2 / 2 + 1;
  if (!is_integral(g))
    fail(ErrorKind::Validation, kModule,
         "Hurwitz formula gives non-integral genus " + isoprod::to_string(g) + " for order " +
             std::to_string(order) + " and type " + type.to_string());
  return g.numerator();
}

VectorReport validate_generating_vector(const GeneratingVector& v) {
  require_genus_zero(v.type);
  const auto& group = *v.group;
  VectorReport report;
  report.arity_ok = !v.entries.empty() && v.entries.size() == v.type.m.size();
  if (!report.arity_ok) report.reasons.push_back("arity");

  report.orders_ok = report.arity_ok;
  for (std::size_t i = 0; report.arity_ok && i < v.entries.size(); ++i)
    if (v.entries[i] >= group.order() || group.elem_order(v.entries[i]) != v.type.m[i]) report.orders_ok = false;
  if (!report.orders_ok) report.reasons.push_back("order");

  for (auto e : v.entries)
    if (e >= group.order()) fail(ErrorKind::Validation, kModule, "vector entry index out of range");
  report.product_ok = group.product(v.entries) == FiniteGroup::kIdentity;
  if (!report.product_ok) report.reasons.push_back("product");

  report.generates_ok = subgroup_generated(v.group, v.entries).order() == group.order();
  if (!report.generates_ok) report.reasons.push_back("generation");
  return report;
}

void require_valid(const GeneratingVector& v) {
  const auto report = validate_generating_vector(v);
  if (report.valid()) return;
  std::string reasons;
  for (const auto& r : report.reasons) reasons += (reasons.empty() ? "" : ", ") + r;
  fail(ErrorKind::Validation, kModule,
       "not a generating vector of type " + v.type.to_string() + " (failed: " + reasons + ")");
}

std::vector<Elem> stabilizer_set(const GeneratingVector& v) {
  const auto& group = *v.group;
  std::vector<bool> in_sigma(group.order(), false);
  in_sigma[FiniteGroup::kIdentity] = true;
  std::vector<bool> seen_power(group.order(), false);
  for (auto h : v.entries) {
    for (Elem p = h; p != FiniteGroup::kIdentity; p = group.mul(p, h)) {
      if (seen_power[p]) continue;
      seen_power[p] = true;
      for (Elem g = 0; g < group.order(); ++g) in_sigma[group.conj(g, p)] = true;
    }
  }
  std::vector<Elem> sigma;
  for (Elem e = 0; e < group.order(); ++e)
    if (in_sigma[e]) sigma.push_back(e);
  return sigma;
}

std::int64_t fixed_point_count(Elem f, const GeneratingVector& v) {
  const auto& group = *v.group;
  if (f == FiniteGroup::kIdentity) fail(ErrorKind::Validation, kModule, "fixed points of the identity are not counted");
  if (f >= group.order()) fail(ErrorKind::Validation, kModule, "element index out of range");
  Rational total(0);
  for (std::size_t j = 0; j < v.entries.size(); ++j) {
    const auto kj = subgroup_generated(v.group, std::span(&v.entries[j], 1));
    std::int64_t hits = 0;
    // f in g K g^-1  <=>  g^-1 f g in K
    for (Elem g = 0; g < group.order(); ++g)
      if (kj.contains(group.conj(group.inv(g), f))) ++hits;
    total += Rational(hits, v.type.m[j]);
  }
  if (!is_integral(total))
    fail(ErrorKind::Assertion, kModule, "non-integral fixed-point count " + isoprod::to_string(total));
  return total.numerator();
}

std::int64_t FixTable::operator[](Elem f) const {
  if (f == FiniteGroup::kIdentity) fail(ErrorKind::Validation, kModule, "fix table has no entry for the identity");
  if (f >= counts_.size()) fail(ErrorKind::Validation, kModule, "element index out of range");
  return counts_[f];
}

FixTable fixed_point_table(const GeneratingVector& v) {
  const auto& group = *v.group;
  const std::size_t n = group.order();
  std::vector<Rational> total(n, Rational(0));
  std::vector<std::int64_t> hits(n);
  for (std::size_t j = 0; j < v.entries.size(); ++j) {
    std::fill(hits.begin(), hits.end(), 0);
    const Elem h = v.entries[j];
    // Every g contributes one hit to each non-trivial member of g K_j g^-1.
    for (Elem g = 0; g < n; ++g)
      for (Elem p = h; p != FiniteGroup::kIdentity; p = group.mul(p, h)) ++hits[group.conj(g, p)];
    for (Elem f = 1; f < n; ++f)
      if (hits[f]) total[f] += Rational(hits[f], v.type.m[j]);
  }
  std::vector<std::int64_t> counts(n, -1);
  for (Elem f = 1; f < n; ++f) {
    if (!is_integral(total[f]))
      fail(ErrorKind::Assertion, kModule,
           "non-integral fixed-point count " + isoprod::to_string(total[f]) + " for element " + std::to_string(f));
    counts[f] = total[f].numerator();
  }
  return FixTable(std::move(counts));
}

std::vector<GeneratingVector> search_generating_vectors(const GroupPtr& group, const CoverType& type,
                                                        std::size_t limit) {
  require_genus_zero(type);
  const std::size_t r = type.m.size();
  if (r < 2) fail(ErrorKind::Validation, kModule, "vector search needs at least two branch points");
  const auto& g = *group;
  const std::size_t n = g.order();

  std::vector<std::vector<Elem>> candidates(r);
  for (std::size_t i = 0; i < r; ++i)
    for (Elem e = 0; e < n; ++e)
      if (g.elem_order(e) == type.m[i]) candidates[i].push_back(e);
  // The first entry only needs one representative per conjugacy class.
  const auto rep = class_representative_map(g);
  std::erase_if(candidates[0], [&](Elem e) { return rep[e] != e; });

  std::vector<GeneratingVector> found;
  std::set<std::vector<Elem>> seen;
  std::vector<Elem> tuple(r);

  auto canonical = [&](const std::vector<Elem>& t) {
    std::vector<Elem> best = t, image(r);
    for (Elem x = 1; x < n; ++x) {
      for (std::size_t i = 0; i < r; ++i) image[i] = g.conj(x, t[i]);
      if (image < best) best = image;
    }
    return best;
  };

  // Depth-first over positions 1..r-2 carrying the running product.
  auto recurse = [&](auto&& self, std::size_t pos, Elem prefix) -> bool {
    if (pos == r - 1) {
      const Elem last = g.inv(prefix);
      if (g.elem_order(last) != type.m[r - 1]) return false;
      tuple[r - 1] = last;
      if (subgroup_generated(group, tuple).order() != n) return false;
      if (!seen.insert(canonical(tuple)).second) return false;
      found.push_back(GeneratingVector{group, type, tuple});
      return found.size() >= limit;
    }
    for (auto e : candidates[pos]) {
      tuple[pos] = e;
      if (self(self, pos + 1, g.mul(prefix, e))) return true;
    }
    return false;
  };

  if (limit == 0) return found;
  for (auto first : candidates[0]) {
    tuple[0] = first;
    if (recurse(recurse, 1, first)) break;
  }
  return found;
}

CoveringData make_covering(GeneratingVector v) {
  require_valid(v);
  CoveringData data;
  data.genus = hurwitz_genus(v.group->order(), v.type);
  for (auto h : v.entries) data.branch_stabilizers.push_back(subgroup_generated(v.group, std::span(&h, 1)));
  data.sigma_v = stabilizer_set(v);
  data.fix_table = fixed_point_table(v);
  data.vector = std::move(v);
  return data;
}

}  // namespace isoprod
