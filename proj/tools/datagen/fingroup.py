"""Small finite groups as Cayley tables over explicit permutations.

Permutations are 0-indexed image tuples; products compose as functions,
mul(a, b) = a after b, matching the C++ library.
"""
from collections import deque


def compose(a, b):
    return tuple(a[i] for i in b)


def perm_inverse(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


class Group:
    def __init__(self, gens):
        gens = [tuple(g) for g in gens]
        n = len(gens[0])
        ident = tuple(range(n))
        self.gens = gens
        self.elements = [ident]
        self.index = {ident: 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = compose(x, g)
                if y not in self.index:
                    self.index[y] = len(self.elements)
                    self.elements.append(y)
                    queue.append(y)
        N = len(self.elements)
        self.order = N
        gidx = [self.index[g] for g in gens]
        self.gen_idx = gidx
        right = [[self.index[compose(x, g)] for g in gens] for x in self.elements]
        # BFS tree for table rows
        parent = [None] * N
        parent[0] = (0, None)
        order = [0]
        seen = [False] * N
        seen[0] = True
        for x in order:
            for k in range(len(gens)):
                y = right[x][k]
                if not seen[y]:
                    seen[y] = True
                    parent[y] = (x, k)
                    order.append(y)
        self.table = []
        for a in range(N):
            row = [0] * N
            row[0] = a
            for b in order[1:]:
                p, k = parent[b]
                row[b] = right[row[p]][k]
            self.table.append(row)
        self.inv = [row.index(0) for row in self.table]
        self.orders = [self._order(x) for x in range(N)]

    def _order(self, x):
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def mul(self, a, b):
        return self.table[a][b]

    def prod(self, seq):
        acc = 0
        for s in seq:
            acc = self.table[acc][s]
        return acc

    def conj(self, g, x):
        return self.table[self.table[g][x]][self.inv[g]]

    def pow(self, x, k):
        k %= self.orders[x]
        acc = 0
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    def generated(self, seeds):
        members = {0}
        frontier = [0]
        seeds = list(seeds)
        while frontier:
            nxt = []
            for x in frontier:
                for s in seeds:
                    y = self.table[x][s]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return members

    def conj_class(self, x):
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in self.gen_idx:
                    z = self.conj(g, y)
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        return cls

    def classes(self):
        seen = set()
        out = []
        for x in range(self.order):
            if x not in seen:
                c = self.conj_class(x)
                seen |= c
                out.append(sorted(c))
        return out

    def commutator_subgroup(self, members):
        members = list(members)
        comms = {self.mul(self.mul(a, b), self.mul(self.inv[a], self.inv[b])) for a in members for b in members}
        return self.generated(comms)

    def stabilizer_set(self, vector):
        sigma = set()
        for h in vector:
            for k in range(self.orders[h]):
                sigma |= self.conj_class(self.pow(h, k))
        return sigma

    def word_to_element(self, word):
        """word: list of (generator position, exponent)."""
        acc = 0
        for k, e in word:
            acc = self.mul(acc, self.pow(self.gen_idx[k], e))
        return acc

    def shortlex_words(self):
        """For every element, a shortest word in gens (BFS on right multiplication)."""
        words = {0: []}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for k, g in enumerate(self.gen_idx):
                    y = self.mul(x, g)
                    if y not in words:
                        words[y] = words[x] + [k]
                        nxt.append(y)
            frontier = nxt
        return words


def extend_hom(src, src_gens, dst, images):
    """Extend src_gens[i] -> images[i] to a homomorphism src -> dst; None if impossible."""
    phi = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(src_gens, images):
                y = src.mul(x, s)
                v = dst.mul(phi[x], t)
                if y in phi:
                    if phi[y] != v:
                        return None
                else:
                    phi[y] = v
                    nxt.append(y)
        frontier = nxt
    # check full multiplicativity on generators (right mult) suffices for BFS-defined maps
    for x in range(src.order):
        for s, t in zip(src_gens, images):
            if phi[src.mul(x, s)] != dst.mul(phi[x], t):
                return None
    return [phi[x] for x in range(src.order)]
