"""H_1(S, Z) for S = (C x C)/G of mixed type, from (G0, V, phi, tau).

pi_1(S) is the preimage in the wreath product T wr Z2 (T the orbifold group
of C -> C/G0) of the subgroup generated by {(g, phi(g))} and (1, tau) s of
G0 wr Z2. It has index |G0|; its cosets are labelled by kappa in G0 and the
generators act on the right by
    kappa . x_i = phi(V_i)^-1 kappa,     kappa . s = phi(kappa)^-1 tau.
The abelianized Reidemeister-Schreier relation matrix is then reduced to
its elementary divisors.
"""
from math import gcd


def _relators(r, orders):
    # letters: (gen, +-1); gens 0..r-2 are x_1..x_{r-1}, gen r-1 is s
    s = r - 1
    rels = []
    for i in range(r - 1):
        rels.append([(i, 1)] * orders[i])
    rels.append([(i, 1) for i in range(r - 1)] * orders[r - 1])
    rels.append([(s, 1), (s, 1)])
    for i in range(r - 1):
        for j in range(r - 1):
            # x_i (s x_j s) x_i^-1 (s x_j^-1 s)
            rels.append([(i, 1), (s, 1), (j, 1), (s, 1), (i, -1), (s, -1), (j, -1), (s, -1)])
    return rels


def elementary_divisors(rows, ncols):
    """rows: list of dict col->int. Returns invariants != 1 (0 for free factors)."""
    rows = [dict(r) for r in rows if r]
    active_cols = set(range(ncols))
    divisors = []
    # Sparse elimination on unit pivots first.
    while True:
        pivot = None
        for ri, r in enumerate(rows):
            for c, v in r.items():
                if v in (1, -1):
                    pivot = (ri, c)
                    break
            if pivot:
                break
        if pivot is None:
            break
        ri, c = pivot
        prow = rows.pop(ri)
        pv = prow[c]
        for r in rows:
            if c in r:
                f = r[c] * pv  # pv = +-1, so r - f*prow kills column c
                for cc, vv in prow.items():
                    nv = r.get(cc, 0) - f * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
        rows = [r for r in rows if r]
        active_cols.discard(c)
        divisors.append(1)
    cols = sorted(active_cols)
    mat = [[r.get(c, 0) for c in cols] for r in rows]
    return [d for d in _snf_dense(mat, len(cols)) if d != 1]


def _snf_dense(mat, ncols):
    m = [row[:] for row in mat]
    diag = []
    nrows = len(m)
    r0 = 0
    cols = list(range(ncols))
    for c0 in range(ncols):
        # bring a nonzero minimal entry to (r0, c0) repeatedly
        while True:
            best = None
            for i in range(r0, nrows):
                for j in range(c0, ncols):
                    if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            m[r0], m[i] = m[i], m[r0]
            for row in m:
                row[c0], row[j] = row[j], row[c0]
            p = m[r0][c0]
            done = True
            for i in range(r0 + 1, nrows):
                q = m[i][c0] // p
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r0])]
                if m[i][c0]:
                    done = False
            for j in range(c0 + 1, ncols):
                q = m[r0][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[c0]
                if m[r0][j]:
                    done = False
            if done:
                # ensure divisibility of remaining block
                bad = None
                for i in range(r0 + 1, nrows):
                    for j in range(c0 + 1, ncols):
                        if m[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                m[r0] = [a + b for a, b in zip(m[r0], m[bad])]
        if r0 < nrows and m[r0][c0] if r0 < nrows else False:
            diag.append(abs(m[r0][c0]))
            r0 += 1
        else:
            diag.append(0)
    return diag


def first_homology(G0, vector, phi, tau):
    r = len(vector)
    orders = [G0.orders[v] for v in vector]
    N = G0.order
    s = r - 1
    inv = G0.inv

    def act(k, gen):
        if gen < r - 1:
            return G0.mul(inv[phi[vector[gen]]], k)
        return G0.mul(inv[phi[k]], tau)

    act_tab = [[act(k, g) for g in range(r)] for k in range(N)]
    back = [[None] * r for _ in range(N)]
    for k in range(N):
        for g in range(r):
            back[act_tab[k][g]][g] = k
    # Schreier transversal from coset 0
    tree = set()
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for k in frontier:
            for g in range(r):
                y = act_tab[k][g]
                if y not in seen:
                    seen.add(y)
                    tree.add((k, g))
                    nxt.append(y)
        frontier = nxt
    assert len(seen) == N
    col = {}
    for k in range(N):
        for g in range(r):
            if (k, g) not in tree:
                col[(k, g)] = len(col)
    rows = []
    for rel in _relators(r, orders):
        for start in range(N):
            row = {}
            d = start
            for g, e in rel:
                if e == 1:
                    key = (d, g)
                    d = act_tab[d][g]
                    sign = 1
                else:
                    d = back[d][g]
                    key = (d, g)
                    sign = -1
                if key in col:
                    c = col[key]
                    row[c] = row.get(c, 0) + sign
                    if row[c] == 0:
                        del row[c]
            assert d == start
            rows.append(row)
    return sorted(elementary_divisors(rows, len(col)))


def primary_decomposition(invariants):
    """Cyclic invariants -> sorted prime-power orders (0 stays 0)."""
    out = []
    for n in invariants:
        if n == 0:
            out.append(0)
            continue
        p = 2
        while n > 1:
            if n % p == 0:
                q = 1
                while n % p == 0:
                    n //= p
                    q *= p
                out.append(q)
            p += 1
    return sorted(out)
