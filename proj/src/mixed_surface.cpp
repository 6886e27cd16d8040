#include "isoprod/mixed_surface.hpp"

#include <deque>

#include "isoprod/error.hpp"
#include "isoprod/rational.hpp"

namespace isoprod {

namespace {

const std::string kModule = "mixed-surface";

}  // namespace

Elem MixedAction::local(Elem g) const {
  if (g >= from_parent.size() || from_parent[g] == kNoElem)
    fail(ErrorKind::Validation, kModule, "element " + std::to_string(g) + " is not in G0");
  return from_parent[g];
}

MixedAction build_mixed_action(GroupPtr G, Subgroup G0, Elem tau_prime) {
  if (G0.parent() != G) fail(ErrorKind::Validation, kModule, "G0 is not a subgroup of the given G");
  if (G0.index() != 2)
    fail(ErrorKind::Validation, kModule, "[G:G0] = " + std::to_string(G0.index()) + ", expected 2");
  if (tau_prime >= G->order()) fail(ErrorKind::Validation, kModule, "tau' index out of range");
  if (G0.contains(tau_prime)) fail(ErrorKind::Validation, kModule, "tau' lies in G0");

  MixedAction a;
  a.G = G;
  a.G0 = G0;
  a.tau_prime = tau_prime;
  a.tau = G->mul(tau_prime, tau_prime);
  a.g0 = G0.as_group();
  const std::size_t n = a.g0->order();
  a.to_parent.resize(n);
  a.from_parent.assign(G->order(), kNoElem);
  for (Elem x = 0; x < n; ++x) {
    a.to_parent[x] = G->index_of(a.g0->element(x));
    a.from_parent[a.to_parent[x]] = x;
  }
  a.phi.resize(n);
  for (Elem x = 0; x < n; ++x) a.phi[x] = a.local(G->conj(tau_prime, a.to_parent[x]));
  a.tau_local = a.local(a.tau);

  const auto& g0 = *a.g0;
  std::vector<bool> hit(n, false);
  for (Elem x = 0; x < n; ++x) {
    if (hit[a.phi[x]]) fail(ErrorKind::Assertion, kModule, "phi is not injective");
    hit[a.phi[x]] = true;
    if (a.phi[a.phi[x]] != g0.conj(a.tau_local, x))
      fail(ErrorKind::Assertion, kModule, "phi^2 differs from conjugation by tau");
    for (Elem y = 0; y < n; ++y)
      if (a.phi[g0.mul(x, y)] != g0.mul(a.phi[x], a.phi[y]))
        fail(ErrorKind::Assertion, kModule, "phi is not a homomorphism");
  }
  return a;
}

SurfaceData make_surface(MixedAction action, GeneratingVector vector) {
  if (vector.group != action.g0) fail(ErrorKind::Validation, kModule, "generating vector does not live in G0");
  SurfaceData s;
  s.covering = make_covering(std::move(vector));
  s.H = action.g0;
  const std::size_t n = action.g0->order();
  s.embedding.resize(n);
  for (Elem x = 0; x < n; ++x) s.embedding[x] = x;
  s.phi_h = action.phi;
  s.tau_h = action.tau_local;
  s.action = std::move(action);
  return s;
}

FreenessReport check_free_action(const SurfaceData& s) { return check_free_action(s.action, s.covering.sigma_v); }

FreenessReport check_free_action(const MixedAction& a, std::span<const Elem> sigma) {
  const auto& G = *a.G;
  const std::size_t n = a.g0->order();
  std::vector<bool> in_sigma(n, false);
  for (auto x : sigma) {
    if (x >= n) fail(ErrorKind::Validation, kModule, "Sigma_V element out of range");
    in_sigma[x] = true;
  }

  FreenessReport report;
  report.no_isolated_fixed_points = true;
  for (Elem x = 1; x < n; ++x) {
    // x in phi(Sigma) <=> phi^-1(x) = tau'^-1 x tau' in Sigma
    if (!in_sigma[x]) continue;
    const Elem pre = a.local(G.conj(G.inv(a.tau_prime), a.to_parent[x]));
    if (in_sigma[pre]) {
      report.no_isolated_fixed_points = false;
      report.isolated_witness = a.to_parent[x];
      break;
    }
  }

  report.no_fixed_curves = true;
  for (Elem g = 0; g < G.order(); ++g) {
    if (a.G0.contains(g)) continue;
    if (in_sigma[a.local(G.mul(g, g))]) {
      report.no_fixed_curves = false;
      report.fixed_curve_witness = g;
      break;
    }
  }
  return report;
}

std::int64_t euler_characteristic(std::int64_t genus, std::uint64_t order_G) {
  const Rational chi((genus - 1) * (genus - 1), static_cast<std::int64_t>(order_G));
  if (!is_integral(chi))
    fail(ErrorKind::Validation, kModule,
         "chi = (g-1)^2/|G| = " + to_string(chi) + " is not an integer; inconsistent data");
  return chi.numerator();
}

SurfaceInvariants surface_invariants(const SurfaceData& s) {
  if (!check_free_action(s).free())
    fail(ErrorKind::Validation, kModule, "invariants need a free action; the freeness conditions fail");
  SurfaceInvariants inv;
  inv.genus = s.covering.genus;
  inv.chi = euler_characteristic(inv.genus, s.action.G->order());
  inv.K2 = 8 * inv.chi;
  inv.euler = 4 * inv.chi;
  inv.q = s.covering.vector.type.g_prime;
  inv.pg = inv.chi - 1 + inv.q;
  return inv;
}

SurfaceData transport_structure(const SurfaceData& s, GroupPtr H, std::span<const Elem> induced_entries,
                                int parallel) {
  const auto& g0 = *s.action.g0;
  const auto& h = *H;
  const auto& defining = s.covering.vector.entries;
  if (induced_entries.size() != defining.size())
    fail(ErrorKind::Validation, kModule, "induced vector has the wrong number of entries");
  for (std::size_t i = 0; i < defining.size(); ++i) {
    if (induced_entries[i] >= h.order()) fail(ErrorKind::Validation, kModule, "induced entry index out of range");
    if (h.elem_order(induced_entries[i]) != g0.elem_order(defining[i]))
      fail(ErrorKind::Validation, kModule,
           "induced entry " + std::to_string(i + 1) + " has order " +
               std::to_string(h.elem_order(induced_entries[i])) + ", expected " +
               std::to_string(g0.elem_order(defining[i])));
  }

  // Breadth-first over G0 along right multiplication by the defining entries.
  const std::size_t n = g0.order();
  std::vector<Elem> psi(n, kNoElem);
  psi[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
  std::deque<Elem> queue{FiniteGroup::kIdentity};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < defining.size(); ++i) {
      const Elem y = g0.mul(x, defining[i]);
      const Elem image = h.mul(psi[x], induced_entries[i]);
      if (psi[y] == kNoElem) {
        psi[y] = image;
        queue.push_back(y);
      } else if (psi[y] != image) {
        fail(ErrorKind::Validation, kModule, "generator matching does not extend to a homomorphism");
      }
    }
  }
  std::vector<bool> hit(h.order(), false);
  for (Elem x = 0; x < n; ++x) {
    if (psi[x] == kNoElem) fail(ErrorKind::Validation, kModule, "defining vector does not generate G0");
    if (hit[psi[x]]) fail(ErrorKind::Validation, kModule, "generator matching is not injective");
    hit[psi[x]] = true;
  }

  bool multiplicative = true;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(parallel) schedule(static) reduction(&& : multiplicative)
  for (std::int64_t xi = 0; xi < rows; ++xi) {
    const auto x = static_cast<Elem>(xi);
    for (Elem y = 0; y < n; ++y)
      multiplicative = multiplicative && psi[g0.mul(x, y)] == h.mul(psi[x], psi[y]);
  }
  if (!multiplicative) fail(ErrorKind::Validation, kModule, "generator matching is not a homomorphism");

  SurfaceData out = s;
  out.H = std::move(H);
  out.embedding = psi;
  out.phi_h.assign(out.H->order(), kNoElem);
  for (Elem x = 0; x < n; ++x) out.phi_h[psi[x]] = psi[s.action.phi[x]];
  out.tau_h = psi[s.action.tau_local];
  out.homomorphism_pairs_checked = n * n;
  return out;
}

InducedVectors derive_induced_vectors(const GroupPtr& H, Elem a, Elem b, Elem c) {
  const auto& h = *H;
  require_valid(GeneratingVector{H, CoverType{0, {2, 3, 8}}, {a, b, c}});

  InducedVectors out;
  out.derived = derived_subgroup(H);
  out.second_derived = commutator_subgroup(out.derived);

  const Elem d = h.conj(a, b), e = b, f = h.pow(c, 2);
  out.first = {d, e, f};
  const Elem e2 = h.mul(e, e);
  out.second = {h.conj(e, f), h.conj(e2, f), f};

  auto check = [&](const std::array<Elem, 3>& v, const std::array<std::uint32_t, 3>& orders, const Subgroup& target,
                   const std::string& what) {
    for (std::size_t i = 0; i < 3; ++i)
      if (h.elem_order(v[i]) != orders[i])
        fail(ErrorKind::Validation, kModule,
             what + ": entry " + std::to_string(i + 1) + " has order " + std::to_string(h.elem_order(v[i])));
    if (h.product(v) != FiniteGroup::kIdentity) fail(ErrorKind::Validation, kModule, what + ": product is not 1");
    if (!(subgroup_generated(H, v) == target))
      fail(ErrorKind::Validation, kModule, what + ": entries do not generate the derived subgroup");
  };
  check(out.first, {3, 3, 4}, out.derived, "vector (aba^-1, b, c^2)");
  check(out.second, {4, 4, 4}, out.second_derived, "vector (efe^-1, e^2fe^-2, f)");
  return out;
}

}  // namespace isoprod
