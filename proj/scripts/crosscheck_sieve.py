#!/usr/bin/env python3
"""Independent cross-check of data/table1_golden.tsv.

Re-derives every row of the golden table from data/atlas.dat alone:
admissible parameter tuples for each (group, maximal subgroup) pair, and
the depth-1 subgroup-order divisibility verdicts.  This is a separate
implementation from the C++ library; any disagreement fails loudly.

Run:  python3 scripts/crosscheck_sieve.py
"""

import os
import re
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")

# Groups whose rows appear in the report: the sporadic simple groups and
# their index-2 extensions, in catalog file order.  Auxiliary nested
# entries (for the recursive divisibility filter) are deliberately not
# sieved.
SIEVED = {
    "M11", "M12", "M12:2", "M22", "M22:2", "M23", "M24",
    "J1", "J2", "J2:2", "J3", "J3:2", "J4",
    "HS", "HS:2", "McL", "McL:2", "Suz", "Suz:2", "He", "He:2",
    "Ru", "O'N", "O'N:2", "Co1", "Co2", "Co3",
    "Fi22", "Fi22:2", "Fi23", "Fi24'", "Fi24",
    "HN", "HN:2", "Ly", "Th", "B", "Monster",
}


def parse_catalog(path):
    entries = {}
    order = []
    cur = None
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                cur = None if not line else cur
                continue
            m = re.fullmatch(r"group (\S+) order (\d+) out ([12]) complete (yes|no)", line)
            if m:
                cur = {
                    "name": m.group(1),
                    "order": int(m.group(2)),
                    "out": int(m.group(3)),
                    "complete": m.group(4) == "yes",
                    "max": [],
                }
                entries[cur["name"]] = cur
                order.append(cur["name"])
                continue
            m = re.fullmatch(r"max (\S+) order (\d+)", line)
            assert m and cur is not None, line
            assert cur["order"] % int(m.group(2)) == 0, (cur["name"], line)
            cur["max"].append((m.group(1), int(m.group(2))))
    return entries, order


def admissible(v, group_order):
    """All (v,b,r,k,2) with k-1 | 2(v-1), 2<k<v, b integral, b>=v,
    b | group_order -- via the divisors of 2(v-1), ascending k."""
    from sympy import divisors
    target = 2 * (v - 1)
    rows = []
    for km1 in sorted(divisors(target)):
        k = km1 + 1
        if not 2 < k < v:
            continue
        num = 2 * v * (v - 1)
        den = k * (k - 1)
        if num % den:
            continue
        b = num // den
        if b < v or group_order % b:
            continue
        r = target // km1
        assert b * k == v * r and 2 * (v - 1) == r * (k - 1)
        rows.append((v, b, r, k, 2))
    return rows


def filter_passes(stab, entry, entries, depth):
    for mname, morder in entry["max"]:
        if morder % stab:
            continue
        if depth == 0:
            return True
        if mname not in entries:
            print(f"  note: {mname} absent from catalog; treated as passing")
            return True
        if filter_passes(stab, entries[mname], entries, depth - 1):
            return True
    return False


def main():
    entries, file_order = parse_catalog(os.path.join(ROOT, "data", "atlas.dat"))
    assert SIEVED <= set(file_order), SIEVED - set(file_order)
    rows = []
    for gname in (n for n in file_order if n in SIEVED):
        e = entries[gname]
        for mname, morder in e["max"]:
            v = e["order"] // morder
            if v <= 2:
                continue
            for (vv, b, r, k, lam) in admissible(v, e["order"]):
                stab = e["order"] // b
                passes = filter_passes(stab, e, entries, 1)
                verdict = "DataRequired" if passes else "Eliminated(divisibility)"
                rows.append((gname, mname, vv, b, r, k, lam, stab, verdict))

    golden = []
    with open(os.path.join(ROOT, "data", "table1_golden.tsv")) as f:
        for line in f:
            parts = line.rstrip("\n").split("\t")
            assert len(parts) == 9, parts
            golden.append(parts)

    assert len(rows) == len(golden) == 61, (len(rows), len(golden))
    for i, (row, g) in enumerate(zip(rows, golden), 1):
        gname, mname, v, b, r, k, lam, stab, verdict = row
        got = [str(i), gname, mname, str(v), str(b), str(r), str(k), str(lam), verdict]
        if got != g:
            print("MISMATCH at row", i)
            print("  recomputed:", got)
            print("  golden:    ", g)
            sys.exit(1)
    div = sum(1 for r in rows if r[-1].startswith("Eliminated"))
    print(f"cross-check passed: 61 rows, {div} eliminated by the divisibility"
          f" filter, {61 - div} requiring further data")


if __name__ == "__main__":
    main()
