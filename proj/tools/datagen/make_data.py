#!/usr/bin/env python3
"""Regenerates the bundled group and surface data under data/.

Everything is derived from first principles:

* H (order 768) is the quotient of the (2,3,8) triangle group by the extra
  relator (b(ab)^3)^4, realised by sympy's coset enumeration on the cosets
  of <ab> (96 points).
* G0 for families 2-5 is [[H,H],[H,H]], carrying the induced (4,4,4) vector.
  All index-2 extensions (phi, tau) of G0 satisfying the two freeness
  conditions are enumerated, grouped up to change of tau' and automorphisms
  of G0, and told apart by H_1(S, Z) plus an explicit isomorphism test
  between the extension groups.
* Family 1 starts from Z2^2 x D4 and searches extensions and (2,2,2,2,2)
  vectors the same way; H_1(S, Z) is checked against Z2^3 x Z8.

Group fingerprints are computed with sympy, independently of the C++ code.
Run from the repository root:  python3 tools/datagen/make_data.py
"""
import itertools
import json
import os
import re
import sys
from collections import Counter

import sympy
from sympy.combinatorics import Permutation as SPerm
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.fp_groups import FpGroup, coset_enumeration_r
from sympy.combinatorics.free_groups import free_group

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from fingroup import Group, extend_hom, perm_inverse  # noqa: E402
from homology import first_homology, primary_decomposition  # noqa: E402

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
DATA = os.path.join(ROOT, "data")
STAMP = "2026-10-16"
PROVENANCE = (f"tools/datagen/make_data.py with sympy {sympy.__version__} "
              f"(coset enumeration, fingerprint oracle), {STAMP}")


# --------------------------------------------------------------------------
# helpers

def fingerprint(perms):
    P = PermutationGroup([SPerm(list(p)) for p in perms])
    hist = Counter(g.order() for g in P.generate())
    return {
        "order": int(P.order()),
        "element_orders": {str(k): v for k, v in sorted(hist.items())},
        "abelian_invariants": [int(x) for x in P.abelian_invariants()],
        "derived_series": [int(H.order()) for H in P.derived_series()],
        "center_order": int(P.center().order()),
        "class_count": len(list(P.conjugacy_classes())),
    }


def write_group(fname, name, claimed_id, perms):
    perms = [list(p) for p in perms]
    rec = {
        "name": name,
        "claimed_id": claimed_id,
        "degree": len(perms[0]),
        "generators": [[x + 1 for x in p] for p in perms],
        "fingerprint": fingerprint(perms),
        "provenance": PROVENANCE,
    }
    path = os.path.join(DATA, "groups", fname)
    with open(path, "w") as fh:
        fh.write(dump(rec))
    print("wrote", os.path.relpath(path, ROOT))


def dump(rec):
    """JSON with every integer array kept on one line."""
    text = json.dumps(rec, indent=2)
    text = re.sub(r"\[\s+((?:-?\d+,\s+)*-?\d+)\s+\]",
                  lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def write_spec(fname, rec):
    path = os.path.join(DATA, "surfaces", fname)
    with open(path, "w") as fh:
        fh.write(dump(rec))
    print("wrote", os.path.relpath(path, ROOT))


def automorphisms(G, gens):
    auts = []
    cands = [[x for x in range(G.order) if G.orders[x] == G.orders[g]] for g in gens]
    for images in itertools.product(*cands):
        m = extend_hom(G, gens, G, list(images))
        if m is not None and len(set(m)) == G.order:
            auts.append(m)
    return auts


def free_extensions(G0, gens, auts, sigma):
    """All (phi, tau) giving a degree-2 extension in which both freeness conditions hold."""
    out = []
    for phi in auts:
        if len({phi[x] for x in sigma} & sigma) != 1:
            continue
        for tau in range(G0.order):
            if phi[tau] != tau:
                continue
            if any(phi[phi[g]] != G0.conj(tau, g) for g in gens):
                continue
            if any(G0.prod([phi[h], tau, h]) in sigma for h in range(G0.order)):
                continue
            out.append((phi, tau))
    out.sort(key=lambda s: (s[0], s[1]))
    return out


def extension_mul(G0, phi, tau):
    N = G0.order

    def m(x, y):
        a, i = x % N, x // N
        b, j = y % N, y // N
        c = G0.mul(a, phi[b] if i else b)
        if i + j == 2:
            c = G0.mul(c, tau)
        return c + N * ((i + j) % 2)
    return m


def extension_perms(G0, gens, phi, tau):
    """Left-regular permutations (degree 2|G0|) of the lifts of gens and of tau'."""
    N = G0.order
    m = extension_mul(G0, phi, tau)
    return [tuple(m(x, y) for y in range(2 * N)) for x in list(gens) + [N]]


def same_data(G0, gens, auts, s1, s2):
    """(phi, tau) pairs related by a G0-automorphism and a change of tau'."""
    phi1, tau1 = s1
    phi2, tau2 = s2
    for al in auts:
        for g in range(G0.order):
            if al[tau1] != G0.prod([phi2[g], tau2, g]):
                continue
            if all(al[phi1[h]] == phi2[G0.conj(g, al[h])] for h in gens):
                return True
    return False


def extension_isomorphism(G0, gens, s1, s2):
    """An isomorphism Ext(s1) -> Ext(s2) as a list over 0..2N-1, or None."""
    phi1, tau1 = s1
    N = G0.order
    m2 = extension_mul(G0, *s2)

    def order(x):
        k, y = 1, x
        while y != 0:
            y = m2(y, x)
            k += 1
        return k
    cands = [[x for x in range(2 * N) if order(x) == G0.orders[g]] for g in gens]
    for images in itertools.product(*cands):
        psi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for s, t in zip(gens, images):
                    b = G0.mul(a, s)
                    v = m2(psi[a], t)
                    if b in psi:
                        if psi[b] != v:
                            ok = False
                            break
                    else:
                        psi[b] = v
                        nxt.append(b)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(set(psi.values())) != N:
            continue
        img = set(psi.values())
        for z in range(2 * N):
            if z in img:
                continue
            if all(m2(z, psi[h]) == m2(psi[phi1[h]], z) for h in gens) and m2(z, z) == psi[tau1]:
                return [psi[x] if x < N else m2(psi[x - N], z) for x in range(2 * N)]
    return None


def word_table(G):
    """Shortest positive word (list of generator positions) for every element."""
    return G.shortlex_words()


def word_string(word):
    if not word:
        return "1"
    out = []
    for k, grp in itertools.groupby(word):
        e = len(list(grp))
        out.append(f"g{k + 1}" + (f"^{e}" if e != 1 else ""))
    return "*".join(out)


# --------------------------------------------------------------------------
# H of order 768 and families 2-5

def build_h():
    F, a, b = free_group("a b")
    fp = FpGroup(F, [a**2, b**3, (a * b)**8, (b * (a * b)**3)**4])
    table = coset_enumeration_r(fp, [a * b])
    table.compress()
    table.standardize()
    # sympy's table is a right action; inverting gives composition order.
    right = [tuple(row[2 * i] for row in table.table) for i in range(2)]
    gens = [perm_inverse(p) for p in right]
    H = Group(gens)
    assert H.order == 768
    A, B = H.gen_idx
    C = H.inv[H.mul(A, B)]
    assert (H.orders[A], H.orders[B], H.orders[C]) == (2, 3, 8)
    AB = H.mul(A, B)
    assert H.pow(H.prod([B, AB, AB, AB]), 4) == 0
    return H, (A, B, C)


def induced_vectors(H, abc):
    A, B, C = abc
    d = H.prod([A, B, H.inv[A]])
    e = B
    f = H.mul(C, C)
    assert [H.orders[x] for x in (d, e, f)] == [3, 3, 4] and H.prod([d, e, f]) == 0
    w = [H.prod([e, f, H.inv[e]]), H.prod([e, e, f, H.inv[e], H.inv[e]]), f]
    assert [H.orders[x] for x in w] == [4, 4, 4] and H.prod(w) == 0
    return (d, e, f), w


def families_2_to_5(H, abc):
    _, w = induced_vectors(H, abc)
    G0 = Group([H.elements[w[0]], H.elements[w[1]]])
    derived = H.commutator_subgroup(H.commutator_subgroup(range(H.order)))
    assert len(derived) == 128 and set(H.generated(w)) == derived
    g0, g1 = G0.gen_idx
    V = [g0, g1, G0.inv[G0.mul(g0, g1)]]
    auts = automorphisms(G0, [g0, g1])
    sigma = G0.stabilizer_set(V)
    sols = free_extensions(G0, [g0, g1], auts, sigma)
    print(f"families 2-5: |Aut(G0)| = {len(auts)}, free extensions = {len(sols)}")

    classes = []
    for s in sols:
        for c in classes:
            if same_data(G0, [g0, g1], auts, c[0], s):
                c.append(s)
                break
        else:
            classes.append([s])
    assert len(classes) == 4, len(classes)
    reps = [c[0] for c in classes]
    homology = [tuple(primary_decomposition(first_homology(G0, V, *s))) for s in reps]
    print("  H_1 per class:", homology)

    by_h = {}
    for s, h in zip(reps, homology):
        by_h.setdefault(h, []).append(s)
    fam5 = by_h[(4, 4, 4)][0]
    fam4 = by_h[(2, 2, 2, 2, 4)][0]
    iso4 = extension_isomorphism(G0, [g0, g1], fam4, fam5)
    assert iso4 is not None
    pair = by_h[(2, 2, 4, 4)]
    assert len(pair) == 2
    isos = [extension_isomorphism(G0, [g0, g1], s, fam5) for s in pair]
    assert sum(i is not None for i in isos) == 1
    fam3 = pair[0] if isos[0] is not None else pair[1]
    iso3 = isos[0] if isos[0] is not None else isos[1]
    fam2 = pair[1] if isos[0] is not None else pair[0]
    return G0, V, {2: fam2, 3: fam3, 4: fam4, 5: fam5}, {3: iso3, 4: iso4}, sigma, auts


# --------------------------------------------------------------------------
# family 1

def perm_from_cycles(cycles, n):
    img = list(range(n))
    for c in cycles:
        for i in range(len(c)):
            img[c[i]] = c[(i + 1) % len(c)]
    return tuple(img)


def family_1():
    gens = [perm_from_cycles([(0, 1)], 8), perm_from_cycles([(2, 3)], 8),
            perm_from_cycles([(4, 5, 6, 7)], 8), perm_from_cycles([(5, 7)], 8)]
    G0 = Group(gens)
    assert G0.order == 32
    gi = G0.gen_idx
    auts = automorphisms(G0, gi)
    invols = [x for x in range(G0.order) if G0.orders[x] == 2]
    vectors = {}
    for h in itertools.product(invols, repeat=4):
        h5 = G0.inv[G0.prod(h)]
        if G0.orders[h5] != 2:
            continue
        V = list(h) + [h5]
        S = frozenset(G0.stabilizer_set(V))
        if S in vectors or len(G0.generated(V)) != G0.order:
            continue
        vectors[S] = V
    exts = []
    for phi in auts:
        for tau in range(G0.order):
            if phi[tau] == tau and all(phi[phi[g]] == G0.conj(tau, g) for g in gi):
                exts.append((phi, tau))
    exts.sort()
    chosen = None
    for S, V in sorted(vectors.items(), key=lambda kv: kv[1]):
        for phi, tau in exts:
            if len({phi[x] for x in S} & S) != 1:
                continue
            if any(G0.prod([phi[h], tau, h]) in S for h in range(G0.order)):
                continue
            chosen = (V, phi, tau)
            break
        if chosen:
            break
    V, phi, tau = chosen
    h1 = primary_decomposition(first_homology(G0, V, phi, tau))
    assert h1 == [2, 2, 2, 8], h1
    print("family 1: H_1 =", h1)

    # Negative fixtures. Same (G, G0, tau') with a vector that has isolated
    # fixed points; and the same vector inside another extension of G0 in
    # which some element of G minus G0 squares into Sigma_V (fixed curves).
    neg_isolated = None
    for S, W in sorted(vectors.items(), key=lambda kv: kv[1]):
        if len({phi[x] for x in S} & S) != 1:
            neg_isolated = W
            break
    S = G0.stabilizer_set(V)
    neg_curve = None
    for phi2, tau2 in exts:
        # Every such extension also breaks condition i) for this vector.
        if any(G0.prod([phi2[h], tau2, h]) in S for h in range(G0.order)):
            neg_curve = (phi2, tau2)
            break
    assert neg_isolated and neg_curve
    return G0, V, phi, tau, neg_isolated, neg_curve


def check_d285_semidirect(G):
    """G has a normal D_{2,8,5} with a complement isomorphic to Z2^2."""
    n = G.order
    for y in range(n):
        if G.orders[y] != 8:
            continue
        y5 = G.pow(y, 5)
        for x in range(n):
            if G.orders[x] != 2 or G.conj(x, y) != y5:
                continue
            N = G.generated([x, y])
            if len(N) != 16 or any(G.conj(g, m) not in N for g in G.gen_idx for m in N):
                continue
            for u, v in itertools.combinations(range(1, n), 2):
                if G.orders[u] == 2 and G.orders[v] == 2 and G.mul(u, v) == G.mul(v, u):
                    K = G.generated([u, v])
                    if len(K) == 4 and len(K & N) == 1:
                        return True
    return False


# --------------------------------------------------------------------------

def main():
    os.makedirs(os.path.join(DATA, "groups"), exist_ok=True)
    os.makedirs(os.path.join(DATA, "surfaces"), exist_ok=True)

    # ---- family 1
    G0, V, phi, tau, neg_i, neg_ii = family_1()
    ext = extension_perms(G0, G0.gen_idx, phi, tau)
    G = Group(ext)
    assert G.order == 64 and check_d285_semidirect(G)
    write_group("g64_92.json", "family-1 ambient group D_{2,8,5} x| Z2^2", "G(64,92)", ext)
    write_group("g32_46.json", "family-1 G0 = Z2^2 x D4", "G(32,46)", G0.gens)
    words = word_table(G)
    N = G0.order

    def lift(x):  # element of G0 -> element index of G (regular rep)
        return G.index[tuple(extension_mul(G0, phi, tau)(x, y) for y in range(2 * N))]

    def vec_words(vec):
        return [word_string(words[lift(v)]) for v in vec]

    base = {
        "group": "../groups/g64_92.json",
        "g0_generators": ["g1", "g2", "g3", "g4"],
        "tau_prime": "g5",
        "cover_type": "[0;2,2,2,2,2]",
    }
    write_spec("family1.json", {"name": "family-1", "family": 1, **base, "vector": vec_words(V)})
    write_spec("neg_family1_isolated.json",
               {"name": "negative: family-1 group with a vector that has isolated fixed points",
                "family": 1, **base, "vector": vec_words(neg_i)})
    ext_neg = extension_perms(G0, G0.gen_idx, *neg_ii)
    write_group("neg_g64_fixed_curve.json", "extension of Z2^2 x D4 with fixed curves for the family-1 vector",
                "none", ext_neg)
    Gn = Group(ext_neg)
    words_n = word_table(Gn)
    mn = extension_mul(G0, *neg_ii)
    write_spec("neg_family1_fixed_curve.json", {
        "name": "negative: family-1 vector in an extension whose non-G0 elements square into Sigma_V",
        "family": 1, **base, "group": "../groups/neg_g64_fixed_curve.json",
        "vector": [word_string(words_n[Gn.index[tuple(mn(v, y) for y in range(2 * N))]]) for v in V]})

    # ---- H and families 2-5
    H, abc = build_h()
    write_group("h768.json", "extra automorphism group H, (2,3,8) quotient", "G(768,1085341)", H.gens)
    G0, V, fams, isos, sigma, auts = families_2_to_5(H, abc)
    write_group("g128_36.json", "families 2-5 G0 = [H',H']", "G(128,36)", G0.gens)
    N = G0.order
    g0, g1 = G0.gen_idx

    ext2 = extension_perms(G0, [g0, g1], *fams[2])
    write_group("g256_3679.json", "family-2 ambient group", "G(256,3679)", ext2)
    ext5 = extension_perms(G0, [g0, g1], *fams[5])
    write_group("g256_3678.json", "families 3-5 ambient group", "G(256,3678)", ext5)
    G5 = Group(ext5)
    words5 = word_table(G5)
    m5 = extension_mul(G0, *fams[5])

    def index5(x):
        return G5.index[tuple(m5(x, y) for y in range(2 * N))]

    extra = {"group": "../groups/h768.json", "vector": ["g1", "g2", "(g1*g2)^-1"]}
    vector_words = ["g1", "g2", "(g1*g2)^-1"]
    write_spec("family2.json", {
        "name": "family-2", "family": 2, "group": "../groups/g256_3679.json",
        "g0_generators": ["g1", "g2"], "tau_prime": "g3", "cover_type": "[0;4,4,4]",
        "vector": vector_words, "extra_automorphisms": extra})
    for fam in (3, 4):
        iso = isos[fam]
        w = lambda x: word_string(words5[index5(iso[x])])  # noqa: E731
        write_spec(f"family{fam}.json", {
            "name": f"family-{fam}", "family": fam, "group": "../groups/g256_3678.json",
            "g0_generators": [w(g0), w(g1)], "tau_prime": w(N),
            "cover_type": "[0;4,4,4]",
            "vector": [w(v) for v in V], "extra_automorphisms": extra})
    write_spec("family5.json", {
        "name": "family-5", "family": 5, "group": "../groups/g256_3678.json",
        "g0_generators": ["g1", "g2"], "tau_prime": "g3", "cover_type": "[0;4,4,4]",
        "vector": vector_words, "extra_automorphisms": extra})

    # Negative fixtures for the three-point case: extensions of G0 in which
    # the induced vector breaks exactly one of the two conditions. Every
    # (4,4,4) vector of G0 is an automorphic image of the induced one, so
    # the failure has to come from the extension, not from the vector.
    negatives = {}
    for phi in auts:
        cond_i = len({phi[x] for x in sigma} & sigma) == 1
        for tau in range(N):
            if phi[tau] != tau or any(phi[phi[g]] != G0.conj(tau, g) for g in (g0, g1)):
                continue
            cond_ii = not any(G0.prod([phi[h], tau, h]) in sigma for h in range(N))
            if cond_i != cond_ii:
                negatives.setdefault("isolated" if cond_ii else "fixed_curve", (phi, tau))
        if len(negatives) == 2:
            break
    for kind, ext_data in sorted(negatives.items()):
        perms = extension_perms(G0, [g0, g1], *ext_data)
        write_group(f"neg_g256_{kind}.json", f"extension of G(128,36) with {kind.replace('_', ' ')} for the induced vector",
                    "none", perms)
        write_spec(f"neg_three_point_{kind}.json", {
            "name": f"negative: (4,4,4) vector in an extension with {kind.replace('_', ' ')}",
            "family": 0, "group": f"../groups/neg_g256_{kind}.json",
            "g0_generators": ["g1", "g2"], "tau_prime": "g3", "cover_type": "[0;4,4,4]",
            "vector": vector_words})


if __name__ == "__main__":
    main()
