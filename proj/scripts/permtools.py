"""Small permutation-group toolkit shared by the fixture derivation scripts.

Permutations are tuples of images on 0-based points. Products compose
left-to-right: (p * q)(x) = q(p(x)), matching the word semantics used by the
C++ library and the fixture file formats.
"""

from itertools import combinations


def compose(p, q):
    return tuple(q[p[x]] for x in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for x, y in enumerate(p):
        r[y] = x
    return tuple(r)


def identity(n):
    return tuple(range(n))


def perm_order(p):
    n = len(p)
    q = p
    k = 1
    while q != identity(n):
        q = compose(q, p)
        k += 1
    return k


def from_cycles(n, cycles):
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def closure(gens, limit=None):
    """All elements of <gens> by breadth-first products."""
    n = len(gens[0])
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if limit is not None and len(seen) > limit:
                        raise RuntimeError("closure exceeds limit")
        frontier = nxt
    return seen


def closure_with_words(named_gens, limit=None):
    """Map element -> shortest-found word, words like 'a*b*a'."""
    n = len(next(iter(named_gens.values())))
    words = {identity(n): ""}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for name, g in named_gens.items():
                q = compose(p, g)
                if q not in words:
                    w = words[p]
                    words[q] = name if not w else w + "*" + name
                    nxt.append(q)
                    if limit is not None and len(words) > limit:
                        raise RuntimeError("closure exceeds limit")
        frontier = nxt
    return words


def orbit(point, gens):
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit_partition(n, gens):
    """Sorted orbit-length multiset plus the orbits themselves."""
    todo = set(range(n))
    orbits = []
    while todo:
        x = min(todo)
        o = orbit(x, gens)
        todo -= o
        orbits.append(sorted(o))
    orbits.sort(key=lambda o: (len(o), o))
    return [len(o) for o in orbits], orbits


def pair_rank(n):
    """Rank map {i,j} -> index, in lexicographic order of (i,j), i<j."""
    rank = {}
    for idx, (i, j) in enumerate(combinations(range(n), 2)):
        rank[(i, j)] = idx
    return rank


def induce_on_pairs(p, rank):
    n = len(p)
    img = [0] * len(rank)
    for (i, j), idx in rank.items():
        a, b = p[i], p[j]
        if a > b:
            a, b = b, a
        img[idx] = rank[(a, b)]
    return tuple(img)


def set_orbit(block, gens):
    """Orbit of a frozenset of points under the given permutations."""
    start = frozenset(block)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = frozenset(g[x] for x in s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


class StabChain:
    """Deterministic Schreier-Sims stabilizer chain.

    base_hint points are installed as the leading base points before any
    generator is processed, so level k of the chain is exactly the pointwise
    stabilizer of base_hint[:k] intersected with the group.
    """

    def __init__(self, gens, base_hint=()):
        gens = [g for g in gens]
        self.n = len(gens[0])
        self.base = []
        self.S = []  # S[i]: strong generators fixing base[:i]
        self.T = []  # T[i]: transversal point -> u with u(base[i]) = point
        for p in base_hint:
            self._append_level(p)
        for g in gens:
            self._install(g)
        self._verify()

    # -- construction ------------------------------------------------------
    def _append_level(self, pt):
        self.base.append(pt)
        self.S.append([])
        self.T.append({pt: identity(self.n)})

    def _fixed_prefix(self, g):
        m = 0
        while m < len(self.base) and g[self.base[m]] == self.base[m]:
            m += 1
        return m

    def _install(self, g):
        if g == identity(self.n):
            return
        m = self._fixed_prefix(g)
        if m == len(self.base):
            self._append_level(next(p for p in range(self.n) if g[p] != p))
        for l in range(min(m, len(self.base) - 1) + 1):
            if g not in self.S[l]:
                self.S[l].append(g)

    def _rebuild_orbit(self, i):
        pt = self.base[i]
        tr = {pt: identity(self.n)}
        frontier = [pt]
        while frontier:
            nxt = []
            for x in frontier:
                ux = tr[x]
                for g in self.S[i]:
                    y = g[x]
                    if y not in tr:
                        tr[y] = compose(ux, g)
                        nxt.append(y)
            frontier = nxt
        self.T[i] = tr

    def _sift_from(self, start, g):
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            u = self.T[i].get(x)
            if u is None:
                return g, i
            g = compose(g, inverse(u))
        return g, len(self.base)

    def _verify(self):
        """Bottom-up Schreier-generator verification (Holt's procedure)."""
        for l in range(len(self.base)):
            self._rebuild_orbit(l)
        i = len(self.base) - 1
        ident = identity(self.n)
        while i >= 0:
            self._rebuild_orbit(i)
            deeper = None
            for x, ux in list(self.T[i].items()):
                for g in self.S[i]:
                    v = self.T[i][g[x]]
                    s = compose(compose(ux, g), inverse(v))
                    if s == ident:
                        continue
                    h, j = self._sift_from(i + 1, s)
                    if h != ident:
                        if j == len(self.base):
                            self._append_level(
                                next(p for p in range(self.n) if h[p] != p))
                        for l in range(i + 1, j + 1):
                            self.S[l].append(h)
                            self._rebuild_orbit(l)
                        deeper = j
                        break
                if deeper is not None:
                    break
            if deeper is not None:
                i = deeper
            else:
                i -= 1

    # -- queries -----------------------------------------------------------
    def order(self):
        o = 1
        for t in self.T:
            o *= len(t)
        return o

    def sift(self, g):
        h, _ = self._sift_from(0, g)
        return h

    def contains(self, g):
        return self.sift(g) == identity(self.n)

    def level_generators(self, k):
        """Generators of the pointwise stabilizer of base[:k]."""
        if k >= len(self.base):
            return [identity(self.n)]
        return list(self.S[k])

    def random_element(self, rng):
        g = identity(self.n)
        for t in self.T:
            g = compose(g, t[rng.choice(list(t))])
        return g


def pair_coverage(v, blocks):
    """Histogram of unordered point-pair coverage counts over the blocks."""
    cover = {}
    for blk in blocks:
        for a, b in combinations(sorted(blk), 2):
            cover[(a, b)] = cover.get((a, b), 0) + 1
    hist = {}
    total_pairs = v * (v - 1) // 2
    uncovered = total_pairs - len(cover)
    if uncovered:
        hist[0] = uncovered
    for c in cover.values():
        hist[c] = hist.get(c, 0) + 1
    return hist
