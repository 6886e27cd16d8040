#include "isoprod/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

const std::string kModule = "pipeline";

std::optional<ExtraTower> try_tower(const GroupPtr& H, std::array<Elem, 3> abc, SurfaceData& surface,
                                    const RunConfig& config) {
  ExtraTower tower{H, GeneratingVector{H, CoverType{0, {2, 3, 8}}, {abc[0], abc[1], abc[2]}}, {}};
  tower.induced = derive_induced_vectors(H, abc[0], abc[1], abc[2]);
  surface = transport_structure(surface, H, tower.induced.second, config.parallel);
  return tower;
}

}  // namespace

GroupPtr load_checked_group(const std::filesystem::path& path, const RunConfig& config) {
  const auto file = load_group_file(path);
  auto group = file.build(config.closure_budget);
  if (!(fingerprint(group) == file.expected))
    fail(ErrorKind::Validation, kModule, path.filename().string() + ": computed fingerprint differs from the recorded one");
  return group;
}

LoadedSurface load_surface(const std::filesystem::path& spec_path, const RunConfig& config) {
  LoadedSurface out;
  out.spec = load_surface_spec(spec_path);
  const auto& spec = out.spec;
  const auto G = load_checked_group(spec.group_file, config);

  std::vector<Elem> g0_gens;
  for (const auto& w : spec.g0_generators) g0_gens.push_back(evaluate_in(*G, w));
  auto action = build_mixed_action(G, subgroup_generated(G, g0_gens), evaluate_in(*G, spec.tau_prime));

  std::vector<Elem> entries;
  for (const auto& w : spec.vector) entries.push_back(action.local(evaluate_in(*G, w)));
  auto g0 = action.g0;
  out.surface = make_surface(std::move(action), GeneratingVector{g0, spec.cover_type, entries});
  out.freeness = check_free_action(out.surface);
  out.h_cover = out.surface.covering;

  if (config.use_extra && spec.extra) {
    const auto H = load_checked_group(spec.extra->group_file, config);
    if (!spec.extra->search) {
      if (spec.extra->vector.size() != 3)
        fail(ErrorKind::Validation, kModule, "extra-automorphism vector must have three entries");
      std::array<Elem, 3> abc{};
      for (std::size_t i = 0; i < 3; ++i) abc[i] = evaluate_in(*H, spec.extra->vector[i]);
      out.tower = try_tower(H, abc, out.surface, config);
    } else {
      const auto found = search_generating_vectors(H, CoverType{0, {2, 3, 8}}, config.search_limit);
      for (const auto& v : found) {
        try {
          out.tower = try_tower(H, {v.entries[0], v.entries[1], v.entries[2]}, out.surface, config);
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Validation) throw;
        }
      }
      if (!out.tower)
        fail(ErrorKind::Validation, kModule,
             "no [0;2,3,8] vector of H among " + std::to_string(found.size()) + " found induces the G0 vector");
    }
    out.h_cover = make_covering(out.tower->h_vector);
    if (out.h_cover.genus != out.surface.covering.genus)
      fail(ErrorKind::Assertion, kModule, "H and G0 covers have different genera");
  }
  return out;
}

DivisorAnalysis analyse_divisors(const LoadedSurface& loaded, const RunConfig& config) {
  if (!loaded.freeness.free())
    fail(ErrorKind::Validation, kModule, "the action is not free; orbit divisors are not defined on a smooth quotient");
  DivisorAnalysis a;
  a.orbits = graph_orbits(loaded.surface);
  a.table = intersection_table(a.orbits, loaded.surface, loaded.h_cover, config.parallel);
  a.cone = cone_report(a.table);
  return a;
}

std::string format_surface_report(const LoadedSurface& loaded) {
  const auto& s = loaded.surface;
  const auto& a = s.action;
  std::ostringstream out;
  out << "surface: " << loaded.spec.name << '\n';
  out << "|G| = " << a.G->order() << ", |G0| = " << a.g0->order() << ", type " << s.covering.vector.type.to_string()
      << '\n';
  out << "g(C) = " << s.covering.genus << ", |Sigma_V| = " << s.covering.sigma_v.size() << '\n';
  const auto& f = loaded.freeness;
  out << "no isolated fixed points: " << (f.no_isolated_fixed_points ? "yes" : "no");
  if (f.isolated_witness) out << "  witness " << a.G->element(*f.isolated_witness).to_cycle_string();
  out << '\n';
  out << "no fixed curves: " << (f.no_fixed_curves ? "yes" : "no");
  if (f.fixed_curve_witness) out << "  witness " << a.G->element(*f.fixed_curve_witness).to_cycle_string();
  out << '\n';
  if (f.free()) {
    const auto inv = surface_invariants(s);
    out << "chi = " << inv.chi << ", K^2 = " << inv.K2 << ", e = " << inv.euler << ", q = " << inv.q
        << ", p_g = " << inv.pg << '\n';
  } else {
    out << "action is not free: S is not a surface isogenous to a product\n";
  }
  if (loaded.tower) {
    const auto& t = *loaded.tower;
    out << "extra automorphisms: |H| = " << t.H->order() << ", |[H,H]| = " << t.induced.derived.order()
        << ", |[[H,H],[H,H]]| = " << t.induced.second_derived.order() << ", embedding checked on "
        << s.homomorphism_pairs_checked << " pairs\n";
  }
  return out.str();
}

bool ReproduceResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::filesystem::path family_spec_path(const std::filesystem::path& data_dir, int family) {
  return data_dir / "surfaces" / ("family" + std::to_string(family) + ".json");
}

ReproduceResult reproduce_family(int family, const std::filesystem::path& data_dir, const RunConfig& config,
                                 const Expectations& expectations) {
  if (family < 1 || family > 5) fail(ErrorKind::Validation, kModule, "family must be 1..5");
  ReproduceResult r;
  r.family = family;
  const auto start = std::chrono::steady_clock::now();
  auto check = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  };

  const bool small = family == 1;
  const std::int64_t genus = small ? 9 : 17;
  const std::size_t divisor_count = expectations.divisor_count.value_or(small ? 4 : 15);
  try {
    r.loaded = load_surface(family_spec_path(data_dir, family), config);
    const auto& s = r.loaded->surface;
    check("genus", s.covering.genus == genus, "g(C) = " + std::to_string(s.covering.genus));
    check("free action", r.loaded->freeness.free(),
          std::string("i) ") + (r.loaded->freeness.no_isolated_fixed_points ? "holds" : "fails") + ", ii) " +
              (r.loaded->freeness.no_fixed_curves ? "holds" : "fails"));
    if (!r.loaded->freeness.free()) throw Error(ErrorKind::Validation, kModule, "action not free");
    const auto inv = surface_invariants(s);
    check("invariants", inv.chi == 1 && inv.K2 == 8 && inv.euler == 4 && inv.q == 0 && inv.pg == 0,
          "chi " + std::to_string(inv.chi) + ", K^2 " + std::to_string(inv.K2) + ", e " + std::to_string(inv.euler) +
              ", q " + std::to_string(inv.q) + ", p_g " + std::to_string(inv.pg));
    if (!small) {
      const auto& t = r.loaded->tower;
      const bool ok = t && t->H->order() == 768 && t->induced.derived.order() == 384 &&
                      t->induced.second_derived.order() == 128 && s.homomorphism_pairs_checked == 128 * 128;
      check("extra-automorphism tower", ok,
            t ? "768 > " + std::to_string(t->induced.derived.order()) + " > " +
                    std::to_string(t->induced.second_derived.order()) + ", " +
                    std::to_string(s.homomorphism_pairs_checked) + " pairs"
              : "missing");
    }

    r.analysis = analyse_divisors(*r.loaded, config);
    const auto& T = r.analysis->table;
    const int k = static_cast<int>(T.size());
    check("divisor count", T.size() == divisor_count,
          std::to_string(T.size()) + " orbit divisors, expected " + std::to_string(divisor_count));

    if (small) {
      bool kd = true, squares = true, pattern = true;
      for (int i = 1; i <= k; ++i) {
        kd = kd && T.kdot[i - 1] == Rational(4);
        squares = squares && T.at(i, i) == Rational(0);
        int zeros = 0;
        for (int j = 1; j <= k; ++j) {
          if (j == i) continue;
          if (T.at(i, j) == Rational(0))
            ++zeros;
          else if (T.at(i, j) != Rational(4))
            pattern = false;
        }
        pattern = pattern && zeros == 1;
      }
      check("K.D_i = 4", kd, "");
      check("D_i^2 = 0", squares, "");
      check("pairing pattern", pattern, "each divisor meets exactly one other in 0, all others in 4");
    } else {
      const auto& c = r.analysis->cone;
      bool basis_ok = c.basis && T.at(c.basis->first, c.basis->first) == Rational(0) &&
                      T.at(c.basis->second, c.basis->second) == Rational(0) && T.at(c.basis->first, c.basis->second) == Rational(16);
      check("basis A^2 = B^2 = 0, A.B = 16", basis_ok, "");
      std::map<std::pair<Rational, Rational>, std::size_t> got, want{
          {{Rational(1), Rational(0)}, 3}, {{Rational(0), Rational(1)}, 3}, {{Rational(1, 2), Rational(1, 2)}, 4},
          {{Rational(1), Rational(1)}, 3}, {{Rational(2), Rational(2)}, 2}};
      std::string detail;
      for (const auto& cl : c.classes) {
        got[{cl.alpha, cl.beta}] = cl.members.size();
        detail += "(" + to_string(cl.alpha) + "," + to_string(cl.beta) + "):" + std::to_string(cl.members.size()) + " ";
      }
      check("numerical classes", got == want, detail);
    }
    check("verdict", r.analysis->cone.verdict == Verdict::MoriDream_EffEqNefEqSAmp,
          to_string(r.analysis->cone.verdict));
  } catch (const Error& e) {
    check("pipeline", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_reproduce(const ReproduceResult& r) {
  std::ostringstream out;
  out << "family " << r.family << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace isoprod
