#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace isoprod;
using namespace testing;

namespace {

const DivisorAnalysis& analysis(int k) {
  static std::map<int, DivisorAnalysis> cache;
  if (!cache.count(k)) cache.emplace(k, analyse_divisors(family(k), RunConfig{}));
  return cache.at(k);
}

using Coord = std::pair<std::int64_t, std::int64_t>;

/// Table of divisors x A + y B in a hyperbolic plane with A^2 = B^2 = 0, A.B = p.
IntersectionTable hyperbolic_table(const std::vector<Coord>& cs, std::int64_t p) {
  RationalMatrix m(cs.size(), std::vector<Rational>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      m[i][j] = Rational(p * (cs[i].first * cs[j].second + cs[j].first * cs[i].second));
  return IntersectionTable::from_matrix(std::move(m));
}

/// In the hyperbolic plane the criterion needs two divisors at the same point
/// x A and two at the same point y B with x y > 0.
bool oracle_has_quadruple(const std::vector<Coord>& cs) {
  std::map<Coord, int> count;
  for (auto c : cs) ++count[c];
  for (const auto& [ca, na] : count) {
    if (na < 2 || ca.second != 0 || ca.first == 0) continue;
    for (const auto& [cb, nb] : count)
      if (nb >= 2 && cb.first == 0 && cb.second != 0 && ca.first * cb.second > 0) return true;
  }
  return false;
}

std::vector<Coord> random_coords(std::mt19937& rng, std::size_t k) {
  std::uniform_int_distribution<int> axis(0, 2), value(-1, 2);
  std::vector<Coord> cs;
  for (std::size_t i = 0; i < k; ++i) {
    const int a = axis(rng);
    if (a == 0) cs.push_back({value(rng), 0});
    else if (a == 1) cs.push_back({0, value(rng)});
    else cs.push_back({value(rng), value(rng)});
  }
  return cs;
}

}  // namespace

TEST_CASE("choose_basis on the bundled families") {
  const auto& t1 = analysis(1).table;
  const auto b1 = choose_basis(t1);
  CHECK(t1.at(b1.first, b1.first) == Rational(0));
  CHECK(t1.at(b1.second, b1.second) == Rational(0));
  CHECK(t1.at(b1.first, b1.second) == Rational(4));
  CHECK(b1.first < b1.second);

  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    const auto& t = analysis(k).table;
    const auto b = choose_basis(t);
    CHECK(t.at(b.first, b.first) == Rational(0));
    CHECK(t.at(b.second, b.second) == Rational(0));
    CHECK(t.at(b.first, b.second) == Rational(16));
  }
}

TEST_CASE("choose_basis rejects other ranks") {
  auto rank1 = IntersectionTable::from_matrix({{Rational(8), Rational(8)}, {Rational(8), Rational(8)}});
  CHECK(error_kind([&] { choose_basis(rank1); }) == ErrorKind::Validation);
  const auto rank3 = hyperbolic_table({{1, 0}, {0, 1}}, 1);
  auto m = rank3.pairing;
  for (auto& row : m) row.push_back(Rational(0));
  m.push_back({Rational(0), Rational(0), Rational(-1)});
  CHECK(error_kind([&] { choose_basis(IntersectionTable::from_matrix(m)); }) == ErrorKind::Validation);
  // nondegenerate but no isotropic pair
  const auto diag = IntersectionTable::from_matrix({{Rational(2), Rational(0)}, {Rational(0), Rational(-2)}});
  CHECK(choose_basis(diag) == Basis{1, 2});
}

TEST_CASE("numerical classes: family 1") {
  const auto& a = analysis(1);
  const auto classes = numerical_classes(a.table, *a.cone.basis);
  REQUIRE(classes.size() == 2);
  std::multiset<std::pair<Rational, Rational>> coords;
  for (const auto& c : classes) {
    CHECK(c.members.size() == 2);
    coords.insert({c.alpha, c.beta});
  }
  CHECK(coords == std::multiset<std::pair<Rational, Rational>>{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

TEST_CASE("numerical classes: families 2-5") {
  const std::map<std::pair<Rational, Rational>, std::size_t> expected{
      {{Rational(1), Rational(0)}, 3},
      {{Rational(0), Rational(1)}, 3},
      {{Rational(1, 2), Rational(1, 2)}, 4},
      {{Rational(1), Rational(1)}, 3},
      {{Rational(2), Rational(2)}, 2}};
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    const auto& a = analysis(k);
    const auto basis = *a.cone.basis;
    std::map<std::pair<Rational, Rational>, std::size_t> got;
    std::size_t total = 0;
    for (const auto& c : a.cone.classes) {
      got[{c.alpha, c.beta}] = c.members.size();
      total += c.members.size();
      for (auto m : c.members) {
        // every member intersects everything like alpha A + beta B
        for (int x = 1; x <= static_cast<int>(a.table.size()); ++x)
          CHECK(a.table.at(m, x) == c.alpha * a.table.at(basis.first, x) + c.beta * a.table.at(basis.second, x));
      }
    }
    CHECK(got == expected);
    CHECK(total == 15);
    // the basis divisors themselves have coordinates (1,0) and (0,1)
    for (const auto& c : a.cone.classes) {
      if (std::count(c.members.begin(), c.members.end(), basis.first)) {
        CHECK(c.alpha == Rational(1));
        CHECK(c.beta == Rational(0));
      }
      if (std::count(c.members.begin(), c.members.end(), basis.second)) {
        CHECK(c.alpha == Rational(0));
        CHECK(c.beta == Rational(1));
      }
    }
  }
}

TEST_CASE("numerical classes reject bad bases") {
  const auto& t = analysis(1).table;
  CHECK(error_kind([&] { numerical_classes(t, {0, 1}); }) == ErrorKind::Validation);
  CHECK(error_kind([&] { numerical_classes(t, {1, 9}); }) == ErrorKind::Validation);
  const auto b = choose_basis(t);
  CHECK(error_kind([&] { numerical_classes(t, {b.first, b.first}); }) == ErrorKind::Validation);
}

TEST_CASE("witness re-checks and verdicts on the bundled families") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const auto& a = analysis(k);
    REQUIRE(a.cone.witness.has_value());
    const auto w = *a.cone.witness;
    CHECK(satisfies_divfq(a.table, w.criterion_order()));
    CHECK(a.cone.verdict == Verdict::MoriDream_EffEqNefEqSAmp);
    CHECK(a.cone.generators == std::vector<int>{w.a, w.b});
    CHECK(a.cone.negative_curves.empty());
    // A ~ A' and B ~ B' numerically
    for (int x = 1; x <= static_cast<int>(a.table.size()); ++x) {
      CHECK(a.table.at(w.a, x) == a.table.at(w.a_prime, x));
      CHECK(a.table.at(w.b, x) == a.table.at(w.b_prime, x));
    }
  }
  // Family 1: the labels of the printed quadruple
  const auto w1 = *analysis(1).cone.witness;
  CHECK(w1.criterion_order() == std::array<int, 4>{1, 3, 4, 2});
}

TEST_CASE("satisfies_divfq edge cases") {
  const auto t = hyperbolic_table({{1, 0}, {0, 1}, {0, 1}, {1, 0}}, 4);
  CHECK(satisfies_divfq(t, {1, 2, 3, 4}));
  CHECK_FALSE(satisfies_divfq(t, {1, 2, 2, 4}));   // not distinct
  CHECK_FALSE(satisfies_divfq(t, {1, 2, 3, 5}));   // out of range
  CHECK_FALSE(satisfies_divfq(t, {1, 3, 4, 2}));   // D1.D4 != 0
  const auto unequal = hyperbolic_table({{1, 0}, {0, 1}, {0, 2}, {1, 0}}, 4);
  CHECK_FALSE(satisfies_divfq(unequal, {1, 2, 3, 4}));
  const auto negative = hyperbolic_table({{-1, 0}, {0, 1}, {0, 1}, {-1, 0}}, 4);
  CHECK_FALSE(satisfies_divfq(negative, {1, 2, 3, 4}));
}

TEST_CASE("no witness in an all-positive table") {
  RationalMatrix m(5, std::vector<Rational>(5, Rational(2)));
  for (int i = 0; i < 5; ++i) m[i][i] = Rational(4);
  const auto t = IntersectionTable::from_matrix(m);
  CHECK_FALSE(find_divfq_quadruple(t).has_value());
  const auto r = cone_report(t);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.generators.empty());
}

TEST_CASE("negative self-intersections are reported and stay inconclusive") {
  RationalMatrix m{{Rational(-1), Rational(1)}, {Rational(1), Rational(0)}};
  const auto r = cone_report(IntersectionTable::from_matrix(m));
  CHECK(r.negative_curves == std::vector<int>{1});
  CHECK(r.verdict == Verdict::Inconclusive);
  REQUIRE(r.basis.has_value());
  CHECK(r.classes.size() == 2);
}

TEST_CASE("empty table") {
  const auto r = cone_report(IntersectionTable::from_matrix({}));
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK_FALSE(r.basis.has_value());
  CHECK(r.classes.empty());
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("property: quadruple search agrees with the hyperbolic-plane oracle") {
  std::mt19937 rng(20261016);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto cs = random_coords(rng, 5 + trial % 6);
    const auto t = hyperbolic_table(cs, 1 + trial % 3);
    const auto w = find_divfq_quadruple(t);
    CAPTURE(trial);
    CHECK(w.has_value() == oracle_has_quadruple(cs));
    if (w) {
      ++found;
      CHECK(satisfies_divfq(t, w->criterion_order()));
      CHECK(cone_report(t).verdict == Verdict::MoriDream_EffEqNefEqSAmp);
    }
  }
  CHECK(found > 20);
}

TEST_CASE("property: search order is lexicographic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cs = random_coords(rng, 6);
    const auto t = hyperbolic_table(cs, 2);
    const auto w = find_divfq_quadruple(t);
    if (!w) continue;
    const auto first = w->criterion_order();
    const int k = static_cast<int>(t.size());
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b)
        for (int c = 1; c <= k; ++c)
          for (int d = 1; d <= k; ++d) {
            const std::array<int, 4> q{a, b, c, d};
            if (q < first) CHECK_FALSE(satisfies_divfq(t, q));
          }
  }
}

TEST_CASE("property: adding divisors keeps a verdict") {
  std::mt19937 rng(99);
  for (int k = 1; k <= 2; ++k) {
    const auto& base = analysis(k).table;
    const auto basis = choose_basis(base);
    for (int trial = 0; trial < 10; ++trial) {
      // extend by divisors numerically equal to x A + y B
      auto m = base.pairing;
      const std::size_t n = m.size();
      std::uniform_int_distribution<int> value(0, 2);
      std::vector<std::pair<Rational, Rational>> extra;
      for (int e = 0; e < 3; ++e) extra.push_back({Rational(value(rng)), Rational(value(rng))});
      auto row_of = [&](std::pair<Rational, Rational> c, std::size_t x) {
        return c.first * m[basis.first - 1][x] + c.second * m[basis.second - 1][x];
      };
      for (auto c : extra)
        for (std::size_t i = 0; i < n; ++i) m[i].push_back(row_of(c, i));
      for (std::size_t e = 0; e < extra.size(); ++e) {
        std::vector<Rational> row;
        for (std::size_t x = 0; x < m[0].size(); ++x) {
          if (x < n) {
            row.push_back(row_of(extra[e], x));
          } else {
            const auto& c = extra[e];
            const auto& d = extra[x - n];
            const Rational ab = base.at(basis.first, basis.second);
            const Rational aa = base.at(basis.first, basis.first), bb = base.at(basis.second, basis.second);
            row.push_back(c.first * d.first * aa + (c.first * d.second + c.second * d.first) * ab +
                          c.second * d.second * bb);
          }
        }
        m.push_back(row);
      }
      const auto r = cone_report(IntersectionTable::from_matrix(m));
      CHECK(r.verdict == Verdict::MoriDream_EffEqNefEqSAmp);
      CHECK(r.witness->criterion_order() <= analysis(k).cone.witness->criterion_order());
    }
  }
}

TEST_CASE("formatting") {
  const auto& r = analysis(2).cone;
  const auto text = format_cone_text(r);
  CHECK(text.find("MoriDream_EffEqNefEqSAmp") != std::string::npos);
  CHECK(text.find("(1/2, 1/2)") != std::string::npos);
  const auto rec = format_cone_record(r);
  CHECK(rec.find("\"verdict\"") != std::string::npos);
  CHECK(to_string(Verdict::Inconclusive) == "Inconclusive");
}
