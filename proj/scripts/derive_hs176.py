#!/usr/bin/env python3
"""Derive the degree-176 generator fixture for HS and its base block.

Everything is built from first principles, bottom of the chain upward:

  1. binary Golay code: the length-23 quadratic-residue code extended by a
     parity position, checked against the known weight distribution;
  2. M24 as code automorphisms: the projective maps x+1, 2x, -1/x on
     P1(F23) plus one further code-preserving map, order checked by a
     stabilizer chain (244823040);
  3. M22 as the pointwise stabilizer of {infinity, 0}, order 443520;
  4. the 100-vertex graph on {*} + 22 points + 77 hexads (the octads through
     both fixed points), checked to be strongly regular (100,22,0,6);
  5. a graph automorphism moving *, found by color-refinement backtracking,
     which together with M22 generates the full rank-3 group on the graph;
     its derived subgroup of order 44352000 is HS;
  6. one 50-vertex subgraph isomorphic to the Hoffman-Singleton graph
     (checked SRG(50,7,0,1)); its orbit consists of 352 such halves in 176
     complementary pairs, and the action on the pairs is the degree-176
     action of HS;
  7. an 8-point base block: an orbit of an order-8 subgroup whose developed
     block set has size 1100 and covers every point pair exactly twice.

The emitted fixtures are fixtures/hs176.gens and fixtures/case31.block.
All randomized searches use a fixed seed, so the output is reproducible
byte for byte.
"""

import os
import random
import sys
from collections import defaultdict
from itertools import combinations

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from permtools import StabChain, compose, identity, inverse, pair_coverage

FIXDIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
INF = 23  # index of the parity position, the point "infinity"


# --------------------------------------------------------------------- code
def golay_octads():
    """Supports of the 759 weight-8 words of the extended Golay code."""
    gpoly = 0
    for e in (0, 2, 4, 5, 6, 10, 11):
        gpoly |= 1 << e
    basis = []
    for i in range(12):
        w = 0
        for e in range(23):
            if (gpoly >> e) & 1:
                w |= 1 << ((e + i) % 23)
        basis.append(w)
    words = [0]
    for bw in basis:
        words += [w ^ bw for w in words]
    assert len(words) == 4096
    dist = defaultdict(int)
    octads = []
    for w in words:
        wt = bin(w).count("1")
        ext = w | (1 << INF) if wt % 2 else w
        ewt = bin(ext).count("1")
        dist[ewt] += 1
        if ewt == 8:
            octads.append(frozenset(p for p in range(24) if (ext >> p) & 1))
    assert dict(dist) == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, dict(dist)
    return octads


# --------------------------------------------------------------------- M24
def mod_maps():
    q = 23
    sq = {(i * i) % q for i in range(1, q)}
    alpha = tuple([(x + 1) % q for x in range(q)] + [INF])
    beta = tuple([(2 * x) % q for x in range(q)] + [INF])
    img_gamma = [0] * 24
    img_gamma[0] = INF
    img_gamma[INF] = 0
    for x in range(1, q):
        img_gamma[x] = (-pow(x, q - 2, q)) % q
    gamma = tuple(img_gamma)
    deltas = []
    for sq_branch, nsq_branch in (((1, 9), (9, 1)), ((9, 1), (1, 9))):
        img = [0] * 24
        img[0] = 0
        img[INF] = INF
        for x in range(1, q):
            num, den = sq_branch if x in sq else nsq_branch
            img[x] = (num * pow(x, 3, q) * pow(den, q - 2, q)) % q
        deltas.append(tuple(img))
    return alpha, beta, gamma, deltas


def preserves(perm, octad_set):
    return all(frozenset(perm[p] for p in o) in octad_set for o in octad_set)


# ---------------------------------------------------- automorphism backtrack
def refine_pair(cola, colb, adj, n):
    while True:
        sigs_a = []
        sigs_b = []
        for col, sigs in ((cola, sigs_a), (colb, sigs_b)):
            for v in range(n):
                cnt = defaultdict(int)
                for u in adj[v]:
                    cnt[col[u]] += 1
                sigs.append((col[v], tuple(sorted(cnt.items()))))
        if sorted(sigs_a) != sorted(sigs_b):
            return None
        remap = {}
        for s in sigs_a:
            if s not in remap:
                remap[s] = len(remap)
        newa = [remap[s] for s in sigs_a]
        newb = [remap[s] for s in sigs_b]
        if newa == cola and newb == colb:
            return cola, colb
        cola, colb = newa, newb


def find_automorphism(adj, n, forced):
    """One automorphism of the graph honoring the forced vertex images."""

    def rec(cola, colb, nxt):
        r = refine_pair(cola, colb, adj, n)
        if r is None:
            return None
        cola, colb = r
        cells_a = defaultdict(list)
        cells_b = defaultdict(list)
        for v in range(n):
            cells_a[cola[v]].append(v)
            cells_b[colb[v]].append(v)
        split = None
        for c, vs in sorted(cells_a.items(), key=lambda kv: (len(kv[1]), kv[0])):
            if len(vs) > 1:
                split = (c, vs)
                break
        if split is None:
            img = [0] * n
            for c, vs in cells_a.items():
                img[vs[0]] = cells_b[c][0]
            for v in range(n):
                for u in adj[v]:
                    if img[u] not in adj_sets[img[v]]:
                        return None
            return tuple(img)
        c, vs = split
        v = vs[0]
        for w in cells_b[c]:
            ca = list(cola)
            cb = list(colb)
            ca[v] = nxt
            cb[w] = nxt
            got = rec(ca, cb, nxt + 1)
            if got is not None:
                return got
        return None

    adj_sets = [set(a) for a in adj]
    cola = [0] * n
    colb = [0] * n
    nxt = 1
    for v, w in forced:
        cola[v] = nxt
        colb[w] = nxt
        nxt += 1
    return rec(cola, colb, nxt)


# ------------------------------------------------------------------ helpers
def act_on_sets(perm, sets_index, sets_list):
    return tuple(sets_index[frozenset(perm[p] for p in s)] for s in sets_list)


def capped_set_orbit(block, gens, cap):
    seen = {frozenset(block)}
    frontier = [frozenset(block)]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = frozenset(g[x] for x in s)
                if t not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def set_orbit_with_reps(block, gens, n):
    start = frozenset(block)
    reps = {start: identity(n)}
    order_found = [start]
    i = 0
    while i < len(order_found):
        s = order_found[i]
        i += 1
        u = reps[s]
        for g in gens:
            t = frozenset(g[x] for x in s)
            if t not in reps:
                reps[t] = compose(u, g)
                order_found.append(t)
    return order_found, reps


def perm_cycle_order(p):
    n = len(p)
    seen = [False] * n
    from math import lcm
    o = 1
    for x in range(n):
        if not seen[x]:
            l = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = p[y]
                l += 1
            o = lcm(o, l)
    return o


def main():
    rng = random.Random(20260814)

    octads = golay_octads()
    octad_set = set(octads)
    print("octads:", len(octads))

    alpha, beta, gamma, deltas = mod_maps()
    for name, p in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        assert preserves(p, octad_set), name
    delta = next((d for d in deltas if preserves(d, octad_set)), None)
    assert delta is not None, "no code-preserving cube map variant"
    m24_chain = StabChain([alpha, beta, gamma, delta], base_hint=[INF, 0])
    print("M24 order:", m24_chain.order())
    assert m24_chain.order() == 244823040

    m22_gens24 = m24_chain.level_generators(2)
    m22_chain24 = StabChain(m22_gens24)
    assert m22_chain24.order() == 443520
    print("M22 order:", m22_chain24.order(), f"({len(m22_gens24)} strong generators)")

    # ---- the 100-vertex graph: vertex 0 = *, 1..22 points, 23.. hexads
    hexads = sorted(tuple(sorted(o - {INF, 0})) for o in octads
                    if INF in o and 0 in o)
    assert len(hexads) == 77
    hex_id = {frozenset(h): 23 + i for i, h in enumerate(hexads)}
    nverts = 100
    adj = [set() for _ in range(nverts)]
    for p in range(1, 23):
        adj[0].add(p)
        adj[p].add(0)
    for h, hid in ((frozenset(h), 23 + i) for i, h in enumerate(hexads)):
        for p in h:
            adj[p].add(hid)
            adj[hid].add(p)
    for (h1, i1), (h2, i2) in combinations(hex_id.items(), 2):
        if not h1 & h2:
            adj[i1].add(i2)
            adj[i2].add(i1)
    for v in range(nverts):
        assert len(adj[v]) == 22
    for u, v in combinations(range(nverts), 2):
        common = len(adj[u] & adj[v])
        assert common == (0 if v in adj[u] else 6)
    print("graph is SRG(100,22,0,6)")
    adj_list = [sorted(a) for a in adj]

    def vertex_perm(g24):
        img = [0] * nverts
        for p in range(1, 23):
            img[p] = g24[p]
        for h, hid in hex_id.items():
            img[hid] = hex_id[frozenset(g24[p] for p in h)]
        return tuple(img)

    m22_vperms = [vertex_perm(g) for g in m22_gens24]

    sigma = find_automorphism(adj_list, nverts, [(0, 1), (1, 0)])
    assert sigma is not None
    print("extra graph automorphism found; sigma(*) =", sigma[0])

    big = StabChain(m22_vperms + [sigma])
    print("<M22, sigma> order:", big.order())
    assert big.order() in (44352000, 88704000)
    if big.order() == 44352000:
        hs_chain100 = big
    else:
        gens = m22_vperms + [sigma]
        comm = []
        for a in gens:
            for b in gens:
                c = compose(compose(a, b), inverse(compose(b, a)))
                if c != identity(nverts):
                    comm.append(c)
        hs_chain100 = StabChain(comm[:8])
        while hs_chain100.order() != 44352000:
            g = big.random_element(rng)
            c = comm[rng.randrange(len(comm))]
            comm.append(compose(compose(inverse(g), c), g))
            hs_chain100 = StabChain(comm[-10:] + comm[:4])
    print("HS (degree 100) order:", hs_chain100.order())

    # two-element generating set
    pair = None
    for _ in range(40):
        x = hs_chain100.random_element(rng)
        y = hs_chain100.random_element(rng)
        if StabChain([x, y]).order() == 44352000:
            pair = (x, y)
            break
    assert pair is not None
    print("two-generator set for HS found")

    # ---- one Hoffman-Singleton half: * + a heptad + the 42 hexads meeting
    # the heptad in exactly one point
    heptads = sorted(tuple(sorted(o - {INF})) for o in octads
                     if INF in o and 0 not in o)
    assert len(heptads) == 176
    h0 = set(heptads[0])
    half = {0} | h0
    for h, hid in hex_id.items():
        if len(h & h0) == 1:
            half.add(hid)
    assert len(half) == 50, len(half)
    for v in half:
        deg = len(adj[v] & half)
        assert deg == 7, (v, deg)
    for u, v in combinations(sorted(half), 2):
        common = len(adj[u] & adj[v] & half)
        assert common == (0 if v in adj[u] else 1)
    print("half is SRG(50,7,0,1): a Hoffman-Singleton subgraph")

    halves, _ = set_orbit_with_reps(half, list(pair), nverts)
    assert len(halves) == 352
    allv = frozenset(range(nverts))
    split_key = {}
    splits = []
    for s in halves:
        k = min(tuple(sorted(s)), tuple(sorted(allv - s)))
        if k not in split_key:
            split_key[k] = len(splits)
            splits.append(k)
    assert len(splits) == 176

    def split_perm(g):
        img = [0] * 176
        for i, k in enumerate(splits):
            t = frozenset(g[x] for x in k)
            img[i] = split_key[min(tuple(sorted(t)), tuple(sorted(allv - t)))]
        return tuple(img)

    a176, b176 = split_perm(pair[0]), split_perm(pair[1])
    hs176 = StabChain([a176, b176])
    print("HS (degree 176) order:", hs176.order())
    assert hs176.order() == 44352000

    # ---- base block search: 8-point orbits of order-8 cyclic subgroups
    block = None
    tried = 0
    while block is None and tried < 500:
        g = hs176.random_element(rng)
        o = perm_cycle_order(g)
        if o % 8 != 0:
            continue
        tried += 1
        g8 = g
        for _ in range(o // 8 - 1):
            g8 = compose(g8, g)
        seen = [False] * 176
        for x in range(176):
            if seen[x]:
                continue
            cyc = [x]
            y = g8[x]
            while y != x:
                seen[y] = True
                cyc.append(y)
                y = g8[y]
            seen[x] = True
            if len(cyc) != 8:
                continue
            orb = capped_set_orbit(cyc, [a176, b176], 1200)
            if orb is not None and len(orb) == 1100:
                hist = pair_coverage(176, orb)
                if hist == {2: 15400}:
                    block = tuple(sorted(cyc))
                    blocks = orb
                    break
    assert block is not None
    print("base block:", block)
    print("developed blocks:", len(blocks), "| pair coverage constant 2")

    # ---- setwise stabilizer of the block: order and orbit lengths
    blist, reps = set_orbit_with_reps(block, [a176, b176], 176)
    bset = frozenset(block)
    stab_gens = []
    stab = None
    for t in blist:
        u = reps[t]
        for g in (a176, b176):
            img = frozenset(g[x] for x in t)
            s = compose(compose(u, g), inverse(reps[img]))
            if s != identity(176) and s not in stab_gens:
                stab_gens.append(s)
                stab = StabChain(stab_gens)
                if stab.order() == 40320:
                    break
        if stab is not None and stab.order() == 40320:
            break
    assert stab is not None and stab.order() == 40320
    lens = []
    seen = [False] * 176
    for x in range(176):
        if not seen[x]:
            orb = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in stab_gens:
                        z = g[y]
                        if z not in orb:
                            orb.add(z)
                            nxt.append(z)
                frontier = nxt
            for y in orb:
                seen[y] = True
            lens.append(len(orb))
    lens.sort()
    print("block stabilizer order 40320, orbit lengths", lens)
    assert lens == [8, 168]
    # the 8-point stabilizer orbit must be the block itself
    orb8 = {block[0]}
    frontier = [block[0]]
    while frontier:
        nxt = []
        for y in frontier:
            for g in stab_gens:
                z = g[y]
                if z not in orb8:
                    orb8.add(z)
                    nxt.append(z)
        frontier = nxt
    assert orb8 == set(block)

    # ---- flag and antiflag transitivity
    sorted_blocks = sorted(tuple(sorted(s)) for s in blocks)
    bindex = {frozenset(s): i for i, s in enumerate(sorted_blocks)}
    bact = []
    for g in (a176, b176):
        bact.append(tuple(bindex[frozenset(g[x] for x in s)]
                          for s in sorted_blocks))
    incident = [(p, i) for i, s in enumerate(sorted_blocks) for p in s]
    assert len(incident) == 8800
    flag0 = incident[0]
    seenf = {flag0}
    frontier = [flag0]
    while frontier:
        nxt = []
        for (p, i) in frontier:
            for g, bg in ((a176, bact[0]), (b176, bact[1])):
                f2 = (g[p], bg[i])
                if f2 not in seenf:
                    seenf.add(f2)
                    nxt.append(f2)
        frontier = nxt
    print("flag orbit size:", len(seenf))
    assert len(seenf) == 8800
    inc_set = set(incident)
    anti0 = next((p, i) for p in range(176) for i in range(1100)
                 if (p, i) not in inc_set)
    seena = {anti0}
    frontier = [anti0]
    while frontier:
        nxt = []
        for (p, i) in frontier:
            for g, bg in ((a176, bact[0]), (b176, bact[1])):
                f2 = (g[p], bg[i])
                if f2 not in seena:
                    seena.add(f2)
                    nxt.append(f2)
        frontier = nxt
    print("antiflag orbit size:", len(seena))
    assert len(seena) == 176 * 1100 - 8800

    # ---- emit fixtures
    os.makedirs(FIXDIR, exist_ok=True)
    with open(os.path.join(FIXDIR, "hs176.gens"), "w") as f:
        f.write("# Higman-Sims group acting on the 176 splittings of its graph\n")
        f.write("# into complementary Hoffman-Singleton halves. Derived bottom-up\n")
        f.write("# from the binary Golay code by scripts/derive_hs176.py.\n")
        f.write("degree 176\nname HS\n")
        f.write("gen a " + " ".join(map(str, a176)) + "\n")
        f.write("gen b " + " ".join(map(str, b176)) + "\n")
    with open(os.path.join(FIXDIR, "case31.block"), "w") as f:
        f.write("# 8-point orbit of an order-8 cyclic subgroup; develops under HS\n")
        f.write("# to 1100 blocks covering every point pair exactly twice.\n")
        f.write("v 176\n")
        f.write("block " + " ".join(map(str, block)) + "\n")
    print("fixtures written: hs176.gens, case31.block")


if __name__ == "__main__":
    main()
