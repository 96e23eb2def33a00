#!/usr/bin/env python3
"""Derive the M11 subgroup fixtures used by the case runner.

Everything is computed from scratch from the two standard degree-11
generators of M11: the full element list (7920 elements, with words), the
point stabilizer of 0 (order 720), one representative of each conjugacy
class of subgroups of order 8 (C8, Q8, D8), the Sylow 2-subgroup SD16
(order 16), and a subgroup S5 (order 120). Representatives are written as
word fixtures (.sub) against fixtures/m11.gens.

The script independently checks every value the test suite later relies on:
orbit-length multisets on the 55 unordered point pairs, block-orbit sizes of
developed candidate blocks, and the pair-coverage histogram of the developed
66-block structure for the order-120 case.
"""

import os
import sys
from itertools import combinations

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from permtools import (closure, closure_with_words, compose, from_cycles,
                       induce_on_pairs, orbit_partition, pair_coverage,
                       pair_rank, perm_order, set_orbit)

FIXDIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def short_elements(words):
    return sorted(words, key=lambda p: (len(words[p]), words[p]))


def subgroup_order_multiset(elems):
    return sorted(perm_order(p) for p in elems)


def main():
    n = 11
    a = from_cycles(n, [list(range(11))])
    b = from_cycles(n, [[2, 6, 10, 7], [3, 9, 4, 5]])
    gens = {"a": a, "b": b}

    words = closure_with_words(gens, limit=8000)
    assert len(words) == 7920, len(words)
    print("M11 order:", len(words))

    elems = short_elements(words)

    # ---- point stabilizer of 0: order 720, orbits {1, 10} on points
    stab0 = [p for p in elems if p[0] == 0]
    assert len(stab0) == 720
    m10_gens = None
    for i in range(1, len(stab0)):
        for j in range(i):
            if len(closure([stab0[i], stab0[j]], limit=800)) == 720:
                m10_gens = [stab0[j], stab0[i]]
                break
        if m10_gens:
            break
    lengths, _ = orbit_partition(n, m10_gens)
    assert lengths == [1, 10], lengths
    print("M10 generators found; point orbits", lengths)

    # ---- Sylow 2-subgroup SD16 and its three order-8 subgroups
    order8 = [p for p in elems if perm_order(p) == 8]
    involutions = [p for p in elems if perm_order(p) == 2]
    assert len(order8) == 1980 and len(involutions) == 165

    def sylow_shapes(x):
        """From an order-8 element, build SD16 and its C8/Q8/D8 subgroups."""
        t = None
        for v in involutions:
            try:
                if len(closure([x, v], limit=20)) == 16:
                    t = v
                    break
            except RuntimeError:
                continue
        assert t is not None
        x2 = compose(x, x)
        xt = compose(x, t)
        c8 = closure([x])
        d8 = closure([x2, t])
        q8 = closure([x2, xt])
        sd16 = closure([x, t])
        assert len(c8) == 8 and len(d8) == 8 and len(q8) == 8 and len(sd16) == 16
        assert subgroup_order_multiset(c8) == [1, 2, 4, 4, 8, 8, 8, 8]
        assert subgroup_order_multiset(d8) == [1, 2, 2, 2, 2, 2, 4, 4]
        assert subgroup_order_multiset(q8) == [1, 2, 4, 4, 4, 4, 4, 4]
        return x, t, c8, q8, d8, sd16

    rank = pair_rank(n)
    ind_a = induce_on_pairs(a, rank)
    ind_b = induce_on_pairs(b, rank)

    def pair_orbits(subgens):
        ind = [induce_on_pairs(g, rank) for g in subgens]
        return orbit_partition(len(rank), ind)

    x, t, c8, q8, d8, sd16 = sylow_shapes(order8[0])
    c8_lens, c8_orbs = pair_orbits([x])
    q8_lens, q8_orbs = pair_orbits([compose(x, x), compose(x, t)])
    d8_lens, d8_orbs = pair_orbits([compose(x, x), t])
    sd_lens, sd_orbs = pair_orbits([x, t])
    print("C8  pair orbits:", c8_lens)
    print("Q8  pair orbits:", q8_lens)
    print("D8  pair orbits:", d8_lens)
    print("SD16 pair orbits:", sd_lens)
    assert c8_lens == [1, 2, 4, 8, 8, 8, 8, 8, 8]
    assert sd_lens == [1, 2, 4, 8, 8, 16, 16]

    # shape-invariance across many Sylow 2-subgroups
    for seed in range(0, 200, 8):
        xx, tt, *_ = sylow_shapes(order8[seed])
        assert pair_orbits([xx])[0] == c8_lens
        assert pair_orbits([compose(xx, xx), compose(xx, tt)])[0] == q8_lens
        assert pair_orbits([compose(xx, xx), tt])[0] == d8_lens
        assert pair_orbits([xx, tt])[0] == sd_lens
    print("orbit multisets constant across 25 Sylow representatives")

    # ---- order-120 subgroups containing a fixed C5
    u = next(p for p in elems if perm_order(p) == 5)
    found = {}
    for v in involutions:
        try:
            cl = closure([u, v], limit=130)
        except RuntimeError:
            continue
        if len(cl) == 120:
            found.setdefault(frozenset(cl), v)
    assert len(found) == 1, f"expected a unique order-120 subgroup over <u>, got {len(found)}"
    s5_set, v5 = next(iter(found.items()))
    n_invol = sum(1 for p in s5_set if perm_order(p) == 2)
    assert n_invol == 25  # symmetric-group pattern: 10 + 15 involutions
    s5_lens, s5_orbs = pair_orbits([u, v5])
    print("S5  pair orbits:", s5_lens)
    assert s5_lens == [10, 15, 30]

    # ---- develop-and-count oracles on the 55-point pair action
    def develop_size(block):
        return len(set_orbit(block, [ind_a, ind_b]))

    def orbits_of_length(orbs, length):
        return [frozenset(o) for o in orbs if len(o) == length]

    # case with k=4, b=495: unique orbit union of size 4 is the length-4 orbit
    (b4,) = orbits_of_length(sd_orbs, 4)
    n4 = develop_size(b4)
    print("SD16 4-orbit develops to", n4, "blocks (b would be 495)")
    assert n4 == 165

    # case with k=3, b=990: every size-3 orbit union develops to != 990 blocks
    def unions_summing_to(orbs, k):
        """All unions of distinct orbits whose lengths sum to exactly k."""
        out = []

        def rec(i, left, chosen):
            if left == 0:
                out.append(frozenset().union(*chosen) if chosen else frozenset())
                return
            if i == len(orbs) or left < 0:
                return
            rec(i + 1, left, chosen)
            rec(i + 1, left - len(orbs[i]), chosen + [set(orbs[i])])

        rec(0, k, [])
        return out

    for name, orbs in (("C8", c8_orbs), ("Q8", q8_orbs), ("D8", d8_orbs)):
        hits = [develop_size(blk) for blk in unions_summing_to(orbs, 3)]
        print(f"{name}: size-3 unions develop to", sorted(hits))
        assert hits and all(sz != 990 for sz in hits)

    # case with k=10, b=66: the length-10 orbit develops to exactly b blocks
    # but the developed structure is not a 2-design
    (b10,) = orbits_of_length(s5_orbs, 10)
    blocks66 = set_orbit(b10, [ind_a, ind_b])
    print("S5 10-orbit develops to", len(blocks66), "blocks")
    assert len(blocks66) == 66
    hist = pair_coverage(len(rank), blocks66)
    print("pair-coverage histogram of the 66-block structure:", dict(sorted(hist.items())))
    assert set(hist) != {2}

    # ---- emit fixtures
    os.makedirs(FIXDIR, exist_ok=True)

    def img(p):
        return " ".join(str(i) for i in p)

    with open(os.path.join(FIXDIR, "m11.gens"), "w") as f:
        f.write("# Mathieu group M11, natural degree-11 action.\n")
        f.write("# a = (0 .. 10), b = (2 6 10 7)(3 9 4 5): a standard generating pair.\n")
        f.write("degree 11\nname M11\n")
        f.write(f"gen a {img(a)}\n")
        f.write(f"gen b {img(b)}\n")

    wa, wx, wt, wu, wv = (words[m10_gens[0]], words[x], words[t], words[u], words[v5])
    wb = words[m10_gens[1]]

    def sub(path, name, wordlist, comment):
        with open(os.path.join(FIXDIR, path), "w") as f:
            f.write(f"# {comment}\n")
            f.write(f"subgroup {name} of M11\n")
            for w in wordlist:
                f.write(f"word {w}\n")

    sub("case1_m10.sub", "M10", [wa, wb],
        "Point stabilizer of 0 in M11: order 720, point orbits 1 + 10.")
    sub("case3_c8.sub", "C8", [wx],
        "Cyclic subgroup of order 8; pair orbits 1 2 4 8 8 8 8 8 8.")
    sub("case3_q8.sub", "Q8", [f"({wx})^2", f"{wx}*{wt}"],
        f"Quaternion subgroup of order 8; pair orbits {' '.join(map(str, q8_lens))}.")
    sub("case3_d8.sub", "D8", [f"({wx})^2", wt],
        f"Dihedral subgroup of order 8; pair orbits {' '.join(map(str, d8_lens))}.")
    sub("case4_sd16.sub", "SD16", [wx, wt],
        "Sylow 2-subgroup (semidihedral of order 16); pair orbits 1 2 4 8 8 16 16.")
    sub("case5_s5.sub", "S5", [wu, wv],
        "Subgroup S5 of order 120; pair orbits 10 15 30.")

    print("fixtures written to", os.path.normpath(FIXDIR))
    print("frozen: case4 develop size", n4, "| case5 histogram",
          dict(sorted(hist.items())))


if __name__ == "__main__":
    main()
