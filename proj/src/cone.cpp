#include "isoprod/cone.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

const std::string kModule = "cone";

std::string label(int i) { return "D" + std::to_string(i); }

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::MoriDream_EffEqNefEqSAmp ? "MoriDream_EffEqNefEqSAmp" : "Inconclusive";
}

Basis choose_basis(const IntersectionTable& t) {
  const auto r = rank(t.pairing);
  if (r != 2) fail(ErrorKind::Validation, kModule, "pairing has rank " + std::to_string(r) + "; need exactly 2");
  const int k = static_cast<int>(t.size());
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (t.at(i, i) == Rational(0) && t.at(j, j) == Rational(0) && t.at(i, j) > Rational(0)) return {i, j};
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (t.at(i, i) * t.at(j, j) - t.at(i, j) * t.at(i, j) != Rational(0)) return {i, j};
  fail(ErrorKind::Assertion, kModule, "rank 2 pairing without a nondegenerate pair");
}

std::vector<NumericalClass> numerical_classes(const IntersectionTable& t, Basis basis) {
  const auto [A, B] = basis;
  const int k = static_cast<int>(t.size());
  if (A < 1 || B < 1 || A > k || B > k) fail(ErrorKind::Validation, kModule, "basis label out of range");
  const Rational aa = t.at(A, A), ab = t.at(A, B), bb = t.at(B, B);
  const Rational det = aa * bb - ab * ab;
  if (det == Rational(0)) fail(ErrorKind::Validation, kModule, "basis pairing is singular");

  std::map<std::pair<Rational, Rational>, std::vector<int>> grouped;
  for (int d = 1; d <= k; ++d) {
    const Rational da = t.at(d, A), db = t.at(d, B);
    const Rational alpha = (da * bb - db * ab) / det;
    const Rational beta = (db * aa - da * ab) / det;
    // D is numerically alpha A + beta B only if this holds against every divisor.
    for (int x = 1; x <= k; ++x)
      if (t.at(d, x) != alpha * t.at(A, x) + beta * t.at(B, x))
        fail(ErrorKind::Assertion, kModule, label(d) + " is not in the span of the basis");
    grouped[{alpha, beta}].push_back(d);
  }

  std::vector<NumericalClass> classes;
  for (auto& [coords, members] : grouped) {
    // Members of one class must intersect everything identically.
    for (auto m : members)
      for (int x = 1; x <= k; ++x)
        if (t.at(m, x) != t.at(members.front(), x))
          fail(ErrorKind::Assertion, kModule, "class grouping is not a numerical equivalence");
    classes.push_back(NumericalClass{coords.first, coords.second, members});
  }
  return classes;
}

bool satisfies_divfq(const IntersectionTable& t, const std::array<int, 4>& d) {
  const int k = static_cast<int>(t.size());
  for (int i = 0; i < 4; ++i) {
    if (d[i] < 1 || d[i] > k) return false;
    for (int j = 0; j < i; ++j)
      if (d[i] == d[j]) return false;
  }
  const auto [d1, d2, d3, d4] = d;
  for (auto x : d)
    if (t.at(x, x) != Rational(0)) return false;
  if (t.at(d1, d4) != Rational(0) || t.at(d2, d3) != Rational(0)) return false;
  const Rational p = t.at(d1, d2);
  return p > Rational(0) && t.at(d1, d3) == p && t.at(d4, d2) == p && t.at(d4, d3) == p;
}

std::optional<DivFQWitness> find_divfq_quadruple(const IntersectionTable& t) {
  const int k = static_cast<int>(t.size());
  for (int d1 = 1; d1 <= k; ++d1) {
    if (t.at(d1, d1) != Rational(0)) continue;
    for (int d2 = 1; d2 <= k; ++d2)
      for (int d3 = 1; d3 <= k; ++d3)
        for (int d4 = 1; d4 <= k; ++d4)
          if (satisfies_divfq(t, {d1, d2, d3, d4})) return DivFQWitness{d1, d4, d2, d3};
  }
  return std::nullopt;
}

ConeReport cone_report(const IntersectionTable& t) {
  ConeReport r;
  const int k = static_cast<int>(t.size());
  for (int i = 1; i <= k; ++i)
    if (t.at(i, i) < Rational(0)) r.negative_curves.push_back(i);
  if (k == 0) return r;
  if (rank(t.pairing) == 2) {
    r.basis = choose_basis(t);
    r.classes = numerical_classes(t, *r.basis);
  }
  r.witness = find_divfq_quadruple(t);
  if (r.witness && satisfies_divfq(t, r.witness->criterion_order())) {
    r.verdict = Verdict::MoriDream_EffEqNefEqSAmp;
    r.generators = {r.witness->a, r.witness->b};
  }
  return r;
}

std::string format_cone_text(const ConeReport& r) {
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.verdict == Verdict::MoriDream_EffEqNefEqSAmp)
    out << "Eff(S) = Nef(S) = SAmp(S) = cone(" << label(r.generators[0]) << ", " << label(r.generators[1])
        << "); S is a Mori dream surface without negative curves (Pic^0(S) = 0 assumed)\n";
  if (r.basis) out << "basis: A = " << label(r.basis->first) << ", B = " << label(r.basis->second) << '\n';
  for (const auto& c : r.classes) {
    out << "  (" << to_string(c.alpha) << ", " << to_string(c.beta) << ")  size " << c.members.size() << ":";
    for (auto m : c.members) out << ' ' << label(m);
    out << '\n';
  }
  if (r.witness)
    out << "witness (A, A', B, B'): " << label(r.witness->a) << ", " << label(r.witness->a_prime) << ", "
        << label(r.witness->b) << ", " << label(r.witness->b_prime) << '\n';
  if (!r.negative_curves.empty()) {
    out << "negative self-intersection:";
    for (auto m : r.negative_curves) out << ' ' << label(m);
    out << '\n';
  }
  return out.str();
}

std::string format_cone_record(const ConeReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["verdict"] = to_string(r.verdict);
  j["generators"] = r.generators;
  j["basis"] = r.basis ? ordered_json::array({r.basis->first, r.basis->second}) : ordered_json();
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json x;
    x["coordinates"] = {to_string(c.alpha), to_string(c.beta)};
    x["members"] = c.members;
    classes.push_back(x);
  }
  j["classes"] = classes;
  j["witness"] = r.witness ? ordered_json::array({r.witness->a, r.witness->a_prime, r.witness->b, r.witness->b_prime})
                           : ordered_json();
  j["negative_curves"] = r.negative_curves;
  return j.dump(2) + "\n";
}

}  // namespace isoprod
