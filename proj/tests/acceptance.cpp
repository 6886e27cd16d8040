// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace isoprod;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ReproduceResult reproduce(int k) { return reproduce_family(k, data_dir(), RunConfig{}); }

std::string failed_checks(const ReproduceResult& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += (s.empty() ? "" : ", ") + c.name + " (" + c.detail + ")";
  return s;
}

// 1 ----------------------------------------------------------------------------
void family_one(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = reproduce(1);
  const double dt = seconds_since(t0);
  o.require(r.pass(), "reproduce 1 failed: " + failed_checks(r));
  if (!r.analysis) return;
  const auto& t = r.analysis->table;
  o.require(t.size() == 4, "divisor count " + std::to_string(t.size()));
  if (t.size() != 4) return;
  for (int i = 1; i <= 4; ++i) {
    o.require(t.kdot[i - 1] == Rational(4), "K.D" + std::to_string(i) + " != 4");
    o.require(t.at(i, i) == Rational(0), "D" + std::to_string(i) + "^2 != 0");
  }
  std::array<int, 4> p{1, 2, 3, 4};
  bool pattern = false;
  do {
    bool ok = t.at(p[0], p[3]) == Rational(0) && t.at(p[1], p[2]) == Rational(0);
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {3, 1}, {3, 2}}) ok = ok && t.at(p[i], p[j]) == Rational(4);
    pattern = pattern || ok;
  } while (std::next_permutation(p.begin(), p.end()));
  o.require(pattern, "no relabeling gives the 0/4 pattern");
  o.require(r.analysis->cone.verdict == Verdict::MoriDream_EffEqNefEqSAmp, "verdict not MoriDream");
  o.require(dt < 5, "runtime " + std::to_string(dt) + " s");
  o.detail << (o.pass ? "4 divisors, K.D = 4, D^2 = 0, MoriDream" : "");
}

// 2 ----------------------------------------------------------------------------
void families_two_to_five(Outcome& o) {
  const std::multiset<std::pair<std::pair<Rational, Rational>, std::size_t>> expected{
      {{Rational(1), Rational(0)}, 3},
      {{Rational(0), Rational(1)}, 3},
      {{Rational(1, 2), Rational(1, 2)}, 4},
      {{Rational(1), Rational(1)}, 3},
      {{Rational(2), Rational(2)}, 2}};
  double slowest = 0;
  for (int k = 2; k <= 5; ++k) {
    const auto tag = "family " + std::to_string(k) + ": ";
    const auto t0 = Clock::now();
    const auto r = reproduce(k);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    o.require(r.pass(), tag + "reproduce failed: " + failed_checks(r));
    o.require(dt < 60, tag + "runtime " + std::to_string(dt) + " s");
    if (!r.analysis) continue;
    const auto& t = r.analysis->table;
    const auto& cone = r.analysis->cone;
    o.require(t.size() == 15, tag + "divisor count " + std::to_string(t.size()));
    if (!cone.basis) {
      o.require(false, tag + "no basis");
      continue;
    }
    const auto [A, B] = *cone.basis;
    o.require(t.at(A, A) == Rational(0) && t.at(B, B) == Rational(0) && t.at(A, B) == Rational(16),
              tag + "basis is not A^2 = B^2 = 0, A.B = 16");
    std::multiset<std::pair<std::pair<Rational, Rational>, std::size_t>> got;
    for (const auto& c : cone.classes) {
      got.insert({{c.alpha, c.beta}, c.members.size()});
      // coordinates re-checked against every divisor
      for (auto m : c.members)
        for (int x = 1; x <= static_cast<int>(t.size()); ++x)
          o.require(t.at(m, x) == c.alpha * t.at(A, x) + c.beta * t.at(B, x),
                    tag + "D" + std::to_string(m) + " off its class");
    }
    o.require(got == expected, tag + "class partition differs");
    o.require(cone.verdict == Verdict::MoriDream_EffEqNefEqSAmp, tag + "verdict not MoriDream");
  }
  if (o.pass) o.detail << "15 divisors, classes {3,3,4,3,2}, A.B = 16, MoriDream; slowest " << std::fixed
                       << std::setprecision(2) << slowest << " s";
}

// 3 ----------------------------------------------------------------------------
void invariants(Outcome& o) {
  for (int k = 1; k <= 5; ++k) {
    const auto tag = "family " + std::to_string(k) + ": ";
    const auto inv = surface_invariants(family(k).surface);
    o.require(inv.genus == (k == 1 ? 9 : 17), tag + "g(C) = " + std::to_string(inv.genus));
    o.require(inv.chi == 1 && inv.K2 == 8 && inv.euler == 4 && inv.q == 0 && inv.pg == 0,
              tag + "invariants differ");
    o.require(hurwitz_genus(family(k).surface.action.g0->order(), family(k).surface.covering.vector.type) == inv.genus,
              tag + "Hurwitz genus differs");
  }
  if (o.pass) o.detail << "g = 9, 17, 17, 17, 17; chi = 1, K^2 = 8, e = 4, q = p_g = 0";
}

// 4 ----------------------------------------------------------------------------
bool in_sigma(const SurfaceData& s, Elem g) {
  const auto& sigma = s.covering.sigma_v;
  return s.action.G0.contains(g) && std::binary_search(sigma.begin(), sigma.end(), s.action.local(g));
}

void freeness(Outcome& o) {
  for (int k = 1; k <= 5; ++k) o.require(family(k).freeness.free(), "family " + std::to_string(k) + " not free");
  int witnessed = 0;
  for (const auto* name : {"neg_family1_isolated.json", "neg_family1_fixed_curve.json", "neg_three_point_isolated.json"}) {
    const auto l = load_surface(surface_path(name), RunConfig{});
    const auto& s = l.surface;
    const auto& G = *s.action.G;
    o.require(!l.freeness.free(), std::string(name) + " is free");
    bool witness = false;
    if (!l.freeness.no_isolated_fixed_points) {
      const auto w = l.freeness.isolated_witness;
      const bool ok = w && *w != FiniteGroup::kIdentity && in_sigma(s, *w) &&
                      in_sigma(s, G.conj(G.inv(s.action.tau_prime), *w));
      o.require(ok, std::string(name) + ": isolated-point witness does not verify");
      witness = witness || ok;
    }
    if (!l.freeness.no_fixed_curves) {
      const auto w = l.freeness.fixed_curve_witness;
      const bool ok = w && !s.action.G0.contains(*w) && in_sigma(s, G.mul(*w, *w));
      o.require(ok, std::string(name) + ": fixed-curve witness does not verify");
      witness = witness || ok;
    }
    witnessed += witness;
  }
  if (o.pass) o.detail << "5 families free; " << witnessed << "/3 negative fixtures fail with verified witnesses";
}

// 5 ----------------------------------------------------------------------------
void tower(Outcome& o) {
  const auto H = load_checked_group(group_path("h768.json"), RunConfig{});
  o.require(H->order() == 768, "|H| = " + std::to_string(H->order()));
  const auto found = search_generating_vectors(H, CoverType::parse("[0;2,3,8]"), 8);
  o.require(!found.empty(), "no [0;2,3,8] vector");
  if (found.empty()) return;
  const auto& e = found.front().entries;
  const auto iv = derive_induced_vectors(H, e[0], e[1], e[2]);
  o.require(commutator_subgroup(whole_group(H)).order() == 384, "|[H,H]| != 384");
  o.require(iv.derived.order() == 384 && iv.second_derived.order() == 128, "derived orders differ");
  auto orders = [&](const std::vector<Elem>& xs) {
    std::vector<std::uint64_t> r;
    for (auto x : xs) r.push_back(H->elem_order(x));
    std::sort(r.begin(), r.end());
    return r;
  };
  const std::vector<Elem> first(iv.first.begin(), iv.first.end()), second(iv.second.begin(), iv.second.end());
  o.require(orders(first) == std::vector<std::uint64_t>{3, 3, 4} && H->product(first) == FiniteGroup::kIdentity &&
                subgroup_generated(H, first).order() == 384,
            "first derived vector is not [0;3,3,4] for [H,H]");
  o.require(orders(second) == std::vector<std::uint64_t>{4, 4, 4} && H->product(second) == FiniteGroup::kIdentity &&
                subgroup_generated(H, second).order() == 128,
            "second derived vector is not [0;4^3] for [[H,H],[H,H]]");
  o.require(hurwitz_genus(384, CoverType::parse("[0;3,3,4]")) == 17 && hurwitz_genus(128, CoverType::parse("[0;4^3]")) == 17 &&
                hurwitz_genus(768, CoverType::parse("[0;2,3,8]")) == 17,
            "tower genera differ");

  std::size_t pairs = 0;
  for (int k = 2; k <= 5; ++k) {
    const auto& s = family(k).surface;
    const auto& g0 = *s.action.g0;
    const auto& h = *s.H;
    std::size_t ok = 0;
    for (Elem x = 0; x < g0.order(); ++x)
      for (Elem y = 0; y < g0.order(); ++y) ok += s.embedding[g0.mul(x, y)] == h.mul(s.embedding[x], s.embedding[y]);
    o.require(ok == 16384 && s.homomorphism_pairs_checked == 16384,
              "family " + std::to_string(k) + ": embedding homomorphic on " + std::to_string(ok) + " pairs");
    pairs += ok;
  }
  if (o.pass)
    o.detail << found.size() << " [0;2,3,8] classes; 768 > 384 > 128; " << pairs << " pairs verified (4 x 16384)";
}

// 6 ----------------------------------------------------------------------------
void oracle_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t compared = 0;
  for (const auto* v : {&family(1).surface.covering.vector, &family(2).h_cover.vector}) {
    for (Elem f = 1; f < v->group->order(); ++f) {
      const auto lib = fixed_point_count(f, *v);
      const auto oracle = coset_fiber_fixed_points(*v, f);
      o.require(lib == oracle, "mismatch at element " + std::to_string(f) + " of order-" +
                                   std::to_string(v->group->order()) + " group");
      ++compared;
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 30, "runtime " + std::to_string(dt) + " s");
  if (o.pass) o.detail << compared << " elements agree (31 + 767)";
}

// 7 ----------------------------------------------------------------------------
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = std::string(ISOPROD_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void properties(Outcome& o) {
  // ramification-sum identity
  std::vector<const GeneratingVector*> vectors{&family(2).h_cover.vector};
  for (int k = 1; k <= 5; ++k) vectors.push_back(&family(k).surface.covering.vector);
  for (const auto* v : vectors) {
    std::int64_t lhs = 0, rhs = 0;
    for (Elem f = 1; f < v->group->order(); ++f) lhs += fixed_point_count(f, *v);
    for (auto m : v->type.m) rhs += static_cast<std::int64_t>(v->group->order() / m) * (m - 1);
    o.require(lhs == rhs, "ramification sum " + std::to_string(lhs) + " != " + std::to_string(rhs));
  }

  for (int k = 1; k <= 5; ++k) {
    const auto tag = "family " + std::to_string(k) + ": ";
    const auto& l = family(k);
    const auto a = analyse_divisors(l, RunConfig{});
    const auto& t = a.table;
    bool integral = true, parity = true, symmetric = true;
    for (std::size_t i = 0; i < t.size(); ++i) {
      integral = integral && is_integral(t.kdot[i]);
      const auto s = t.pairing[i][i] + t.kdot[i];
      parity = parity && is_integral(s) && s.numerator() % 2 == 0;
      for (std::size_t j = 0; j < t.size(); ++j) {
        integral = integral && is_integral(t.pairing[i][j]);
        symmetric = symmetric && t.pairing[i][j] == t.pairing[j][i];
      }
    }
    o.require(integral, tag + "non-integral entry");
    o.require(parity, tag + "adjunction parity");
    o.require(symmetric, tag + "asymmetric pairing");
    o.require(rank(t.pairing) == 2, tag + "rank != 2");
    const auto in = inertia(t.pairing);
    o.require(in.positive == 1 && in.negative == 1, tag + "Hodge sign pattern");
    std::size_t total = 0;
    for (const auto& d : a.orbits) {
      total += d.n();
      o.require(l.surface.action.G->order() % d.n() == 0, tag + "orbit size does not divide |G|");
    }
    o.require(total == l.surface.H->order(), tag + "orbit sizes do not sum to |H|");

    const auto spec = "'" + surface_path("family" + std::to_string(k) + ".json").string() + "'";
    for (const auto* cmd : {"divisors", "cone"}) {
      const auto one = run_cli(std::string("--parallel 1 ") + cmd + " --format record " + spec);
      const auto eight = run_cli(std::string("--parallel 8 ") + cmd + " --format record " + spec);
      o.require(one.first == 0 && eight.first == 0 && !one.second.empty() && one.second == eight.second,
                tag + cmd + " record differs between --parallel 1 and 8");
    }
  }
  if (o.pass)
    o.detail << "ramification sums, integrality, parity, rank 2, Hodge index, orbit sizes, byte-stable records";
}

// 8 ----------------------------------------------------------------------------
void todd_coxeter_orders(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"cyclic5.json", 5}, {"dihedral8.json", 8}, {"d_2_8_5.json", 16}};
  for (const auto& [name, order] : cases) {
    const auto file = load_presentation_file(data_dir() / "presentations" / name);
    const auto tc = todd_coxeter(file.presentation);
    o.require(tc.group->order() == order, name + ": order " + std::to_string(tc.group->order()));
    Assignment a;
    for (std::size_t i = 0; i < file.presentation.generators.size(); ++i)
      a[file.presentation.generators[i]] = tc.group->index_of(tc.generator_images[i]);
    for (const auto& r : file.presentation.relators)
      o.require(evaluate_word(r, *tc.group, a) == FiniteGroup::kIdentity, name + ": relator " + r.to_string());
  }
  const double dt = seconds_since(t0);
  o.require(dt < 1, "runtime " + std::to_string(dt) + " s");
  if (o.pass) o.detail << "orders 5, 8, 16; all relators trivial";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"family 1 reproduction", family_one},
      {"families 2-5 reproduction", families_two_to_five},
      {"genus and invariants", invariants},
      {"freeness and negative fixtures", freeness},
      {"extra-automorphism tower", tower},
      {"fixed-point oracle equivalence", oracle_equivalence},
      {"property suite", properties},
      {"Todd-Coxeter orders", todd_coxeter_orders},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << dt << " s): " << o.detail.str() << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria pass"))
            << std::endl;
  return failures ? 1 : 0;
}
