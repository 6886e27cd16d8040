#include "isoprod/divisors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

const std::string kModule = "divisors";

void require_embedding(const SurfaceData& s) {
  if (!s.H || s.embedding.size() != s.action.g0->order() || s.phi_h.size() != s.H->order())
    fail(ErrorKind::Validation, kModule, "G0 is not embedded in H");
}

// Sum of |Fix(a^-1 b)| over a in `xs`, b in `ys` (a != b implied: distinct orbits).
std::int64_t cross_sum(const FiniteGroup& h, const std::vector<std::int64_t>& fix, const std::vector<Elem>& xs,
                       const std::vector<Elem>& ys) {
  std::int64_t total = 0;
  for (auto a : xs) {
    const Elem ai = h.inv(a);
    for (auto b : ys) total += fix[h.mul(ai, b)];
  }
  return total;
}

// Sum over unordered pairs of distinct members.
std::int64_t inner_sum(const FiniteGroup& h, const std::vector<std::int64_t>& fix, const std::vector<Elem>& xs) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Elem ai = h.inv(xs[i]);
    for (std::size_t j = i + 1; j < xs.size(); ++j) total += fix[h.mul(ai, xs[j])];
  }
  return total;
}

std::int64_t as_integer(const Rational& r, const std::string& what) {
  if (!is_integral(r)) fail(ErrorKind::Assertion, kModule, what + " = " + to_string(r) + " is not an integer");
  return r.numerator();
}

}  // namespace

Elem act_on_graph(const SurfaceData& s, Elem h, bool mixed, Elem f) {
  require_embedding(s);
  const auto& H = *s.H;
  if (h >= s.embedding.size()) fail(ErrorKind::Validation, kModule, "acting element is not in G0");
  if (f >= H.order()) fail(ErrorKind::Validation, kModule, "graph class index out of range");
  const Elem hh = s.embedding[h];
  if (!mixed) return H.mul(H.mul(s.phi_h[hh], f), H.inv(hh));
  return H.mul(H.mul(H.mul(s.tau_h, hh), H.inv(f)), s.phi_h[H.inv(hh)]);
}

std::vector<OrbitDivisor> graph_orbits(const SurfaceData& s) {
  require_embedding(s);
  const auto& H = *s.H;
  const std::size_t n0 = s.action.g0->order();
  const std::size_t order_G = s.action.G->order();

  auto orbit_of = [&](Elem f) {
    std::vector<Elem> orbit;
    orbit.reserve(2 * n0);
    for (Elem h = 0; h < n0; ++h) {
      orbit.push_back(act_on_graph(s, h, false, f));
      orbit.push_back(act_on_graph(s, h, true, f));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
  };

  std::vector<int> label(H.order(), 0);
  std::vector<OrbitDivisor> orbits;
  for (Elem f = 0; f < H.order(); ++f) {
    if (label[f]) continue;
    OrbitDivisor d{static_cast<int>(orbits.size()) + 1, orbit_of(f)};
    for (auto m : d.members) {
      if (label[m]) fail(ErrorKind::Assertion, kModule, "graph orbits overlap; the embedding is broken");
      label[m] = d.label;
    }
    if (order_G % d.n() != 0)
      fail(ErrorKind::Assertion, kModule, "orbit size " + std::to_string(d.n()) + " does not divide |G|");
    orbits.push_back(std::move(d));
  }
  // Closure: every member must generate the same orbit.
  for (const auto& d : orbits)
    for (auto m : d.members)
      if (orbit_of(m) != d.members)
        fail(ErrorKind::Assertion, kModule, "orbit of D" + std::to_string(d.label) + " is not closed");
  return orbits;
}

std::int64_t graph_intersection(Elem f1, Elem f2, const CoveringData& cover) {
  if (f1 == f2) fail(ErrorKind::Validation, kModule, "graph intersection needs distinct graphs");
  const auto& H = *cover.vector.group;
  return cover.fix_table[H.mul(H.inv(f1), f2)];
}

IntersectionTable IntersectionTable::from_matrix(RationalMatrix pairing) {
  IntersectionTable t;
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    if (pairing[i].size() != pairing.size()) fail(ErrorKind::Validation, kModule, "pairing matrix is not square");
    t.divisors.push_back(OrbitDivisor{static_cast<int>(i) + 1, {}});
  }
  t.pairing = std::move(pairing);
  return t;
}

IntersectionTable intersection_table(const std::vector<OrbitDivisor>& orbits, const SurfaceData& s,
                                     const CoveringData& cover, int parallel) {
  require_embedding(s);
  if (cover.vector.group != s.H) fail(ErrorKind::Validation, kModule, "covering data is not for H");
  if (cover.genus != s.covering.genus)
    fail(ErrorKind::Assertion, kModule,
         "H and G0 covers have different genera (" + std::to_string(cover.genus) + " vs " +
             std::to_string(s.covering.genus) + ")");
  const auto& H = *s.H;
  const auto& fix = cover.fix_table.raw();
  const std::size_t k = orbits.size();

  IntersectionTable t;
  t.divisors = orbits;
  t.genus_minus_1 = cover.genus - 1;
  t.order_G = s.action.G->order();
  const auto order_G = static_cast<std::int64_t>(t.order_G);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) cells.emplace_back(i, j);
  std::vector<std::int64_t> sums(cells.size());
  const auto cell_count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for num_threads(parallel) schedule(dynamic)
  for (std::int64_t c = 0; c < cell_count; ++c) {
    const auto [i, j] = cells[c];
    sums[c] = i == j ? inner_sum(H, fix, orbits[i].members) : cross_sum(H, fix, orbits[i].members, orbits[j].members);
  }

  t.pairing.assign(k, std::vector<Rational>(k));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto [i, j] = cells[c];
    const auto n = static_cast<std::int64_t>(orbits[i].n());
    const Rational value = i == j ? Rational(-2 * t.genus_minus_1 * n + 2 * sums[c], order_G)
                                  : Rational(sums[c], order_G);
    as_integer(value, "D" + std::to_string(i + 1) + ".D" + std::to_string(j + 1));
    t.pairing[i][j] = t.pairing[j][i] = value;
  }
  for (const auto& d : orbits) {
    const Rational kd(4 * t.genus_minus_1 * static_cast<std::int64_t>(d.n()), order_G);
    as_integer(kd, "K.D" + std::to_string(d.label));
    t.kdot.push_back(kd);
  }

  for (std::size_t i = 0; i < k; ++i) {
    if ((t.kdot[i] + t.pairing[i][i]).numerator() % 2 != 0)
      fail(ErrorKind::Assertion, kModule, "adjunction parity fails for D" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j)
      if (t.pairing[i][j] != t.pairing[j][i]) fail(ErrorKind::Assertion, kModule, "pairing is not symmetric");
  }
  if (const auto r = rank(t.pairing); r > 2)
    fail(ErrorKind::Assertion, kModule, "pairing has rank " + std::to_string(r) + " > 2");
  if (inertia(t.pairing).positive > 1)
    fail(ErrorKind::Assertion, kModule, "pairing has more than one positive eigenvalue (Hodge index)");
  return t;
}

std::int64_t pullback_self_intersection(const OrbitDivisor& d, const SurfaceData& s, const CoveringData& cover) {
  require_embedding(s);
  const std::int64_t self = -2 * (cover.genus - 1);
  std::int64_t total = 0;
  for (auto a : d.members)
    for (auto b : d.members) total += a == b ? self : graph_intersection(a, b, cover);
  return total;
}

std::string format_table(const IntersectionTable& t) {
  const std::size_t k = t.size();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"", "n", "K.D"};
  for (std::size_t j = 0; j < k; ++j) header.push_back("D" + std::to_string(t.divisors[j].label));
  rows.push_back(header);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::string> row{"D" + std::to_string(t.divisors[i].label), std::to_string(t.divisors[i].n()),
                                 i < t.kdot.size() ? to_string(t.kdot[i]) : "-"};
    for (std::size_t j = 0; j < k; ++j) row.push_back(to_string(t.pairing[i][j]));
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << "orbit divisors: " << k << "  (g(C) - 1 = " << t.genus_minus_1 << ", |G| = " << t.order_G << ")\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << std::right;
      else
        out << "  " << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string format_record(const IntersectionTable& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["genus"] = t.genus_minus_1 + 1;
  j["order_G"] = t.order_G;
  j["divisor_count"] = t.size();
  ordered_json divisors = ordered_json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    ordered_json d;
    d["label"] = t.divisors[i].label;
    d["n"] = t.divisors[i].n();
    d["min_member"] = t.divisors[i].members.empty() ? 0 : t.divisors[i].members.front();
    d["kdot"] = i < t.kdot.size() ? to_string(t.kdot[i]) : "";
    d["self"] = to_string(t.pairing[i][i]);
    divisors.push_back(d);
  }
  j["divisors"] = divisors;
  ordered_json pairing = ordered_json::array();
  for (const auto& row : t.pairing) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    pairing.push_back(r);
  }
  j["pairing"] = pairing;
  return j.dump(2) + "\n";
}

}  // namespace isoprod
