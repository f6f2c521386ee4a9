#!/usr/bin/env python3
"""Regenerate data/catalog.json.

Each Small-Groups id is realized by an explicit construction (metacyclic
normal form, abelian-by-K semidirect product, or a classical permutation
action). The element orders are checked against the expected exponent rows,
then the group is written as a permutation action on the cosets of a
core-free cyclic subgroup (regular action as a fallback).

Run: python3 tools/gen_catalog.py > data/catalog.json
"""
import json
import sys
from math import gcd

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from group_families import a4, metacyclic, perm_group, semidirect, sl23  # noqa: E402

DIVISORS = [1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168]


def z_by(n, K, units):
    return semidirect(n, 1, K, [((u,),) for u in units], f"Z{n}:{K.label}")


def z7sq_by(m, a, b):
    K = metacyclic(1, m, 0, 0)
    return semidirect(7, 2, K, [((1, 0), (0, 1)), ((a, 0), (0, b))], f"Z7^2:C{m}")


def gf8_mul(a, b):
    r = 0
    for i in range(3):
        if b >> i & 1:
            r ^= a << i
    for i in (4, 3):
        if r >> i & 1:
            r ^= 0b1011 << (i - 3)
    return r


def agaml_1_8():
    t = tuple(x ^ 1 for x in range(8))
    m = tuple(gf8_mul(x, 2) for x in range(8))
    f = tuple(gf8_mul(x, x) for x in range(8))
    return perm_group([t, m, f], "AGammaL(1,8)")


def gl32():
    def act(M):
        def ap(v):
            bits = [(v >> i) & 1 for i in range(3)]
            w = [sum(M[r][c] * bits[c] for c in range(3)) % 2 for r in range(3)]
            return w[0] | w[1] << 1 | w[2] << 2
        return tuple(ap(v + 1) - 1 for v in range(7))
    return perm_group([act(((1, 1, 0), (0, 1, 0), (0, 0, 1))),
                       act(((0, 0, 1), (1, 0, 0), (0, 1, 0)))], "GL(3,2)")


D4 = metacyclic(4, 2, 3, 0)

# (order, index, name, side, multiplicity, construction, expected exponent row)
ENTRIES = [
    (4, 1, "C_4", "G", 9, lambda: metacyclic(1, 4, 0, 0),
     [1, 2, 1, 4, 2, 1, 4, 4, 2, 1, 4, 4, 2, 4, 4, 4]),
    (6, 1, "D_3", "G", 6, lambda: metacyclic(3, 2, 2, 0),
     [1, 4, 3, 4, 6, 1, 4, 6, 4, 3, 6, 4, 6, 4, 6, 6]),
    (7, 1, "C_7", "G", 1, lambda: metacyclic(1, 7, 0, 0),
     [1, 1, 1, 1, 1, 7, 1, 1, 7, 7, 1, 7, 7, 7, 7, 7]),
    (8, 3, "D_4", "G", 9, lambda: metacyclic(4, 2, 3, 0),
     [1, 6, 1, 8, 6, 1, 8, 8, 6, 1, 8, 8, 6, 8, 8, 8]),
    (14, 1, "D_7", "G", 18, lambda: metacyclic(7, 2, 6, 0),
     [1, 8, 1, 8, 8, 7, 8, 8, 14, 7, 8, 14, 14, 14, 14, 14]),
    (24, 3, "SL(2,3)", "G", 21, sl23,
     [1, 2, 9, 8, 18, 1, 8, 24, 2, 9, 24, 8, 18, 8, 24, 24]),
    (48, 6, "C_24:C_2", "G", 3, lambda: metacyclic(24, 2, 11, 0),
     [1, 14, 3, 28, 18, 1, 32, 36, 14, 3, 48, 28, 18, 32, 36, 48]),
    (56, 7, "C_7:D_4", "G", 3, lambda: z_by(7, D4, (6, 1)),
     [1, 18, 1, 32, 18, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56]),
    (84, 1, "C_7:C_12", "G", 6, lambda: metacyclic(7, 12, 3, 0),
     [1, 2, 15, 16, 30, 7, 16, 72, 14, 21, 72, 28, 42, 28, 84, 84]),
    (84, 5, "Dic_21", "G", 6, lambda: metacyclic(21, 4, 20, 0),
     [1, 2, 3, 44, 6, 7, 44, 48, 14, 21, 48, 56, 42, 56, 84, 84]),
    (84, 11, "C_7:A_4", "G", 21, lambda: z_by(7, a4(), (1, 2)),
     [1, 4, 57, 4, 60, 7, 4, 60, 28, 63, 60, 28, 84, 28, 84, 84]),
    (98, 4, "C_7:D_7", "G", 2, lambda: z7sq_by(2, 6, 6),
     [1, 50, 1, 50, 50, 49, 50, 50, 98, 49, 50, 98, 98, 98, 98, 98]),
    (168, 9, "C_4:F_7", "G", 21, lambda: metacyclic(28, 6, 3, 0),
     [1, 30, 15, 32, 114, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168]),
    (168, 15, "C_21:D_4", "G", 9, lambda: z_by(21, D4, (20, 8)),
     [1, 22, 3, 64, 54, 7, 64, 96, 70, 21, 96, 112, 126, 112, 168, 168]),
    (168, 17, "C_7:D_12", "G", 6, lambda: z_by(7, metacyclic(12, 2, 11, 0), (6, 1)),
     [1, 50, 3, 64, 54, 7, 64, 96, 98, 21, 96, 112, 126, 112, 168, 168]),
    (168, 43, "F_8:C_3", "G", 3, agaml_1_8,
     [1, 8, 57, 8, 120, 49, 8, 120, 56, 105, 120, 56, 168, 56, 168, 168]),
    (224, 106, "D_8:D_7", "G", 3, lambda: z_by(56, metacyclic(2, 2, 1, 0), (13, 15)),
     [1, 52, 1, 96, 52, 7, 128, 96, 112, 7, 128, 168, 112, 224, 168, 224]),
    (336, 31, "C_7:D_24", "G", 3, lambda: z_by(7, metacyclic(24, 2, 23, 0), (6, 1)),
     [1, 98, 3, 100, 102, 7, 128, 108, 182, 21, 192, 196, 210, 224, 252, 336]),
    (2, 1, "C_2", "H", 21, lambda: metacyclic(1, 2, 0, 0),
     [1, 2, 1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2]),
    (3, 1, "C_3", "H", 3, lambda: metacyclic(1, 3, 0, 0),
     [1, 1, 3, 1, 3, 1, 1, 3, 1, 3, 3, 1, 3, 1, 3, 3]),
    (12, 1, "Dic_3", "H", 6, lambda: metacyclic(3, 4, 2, 0),
     [1, 2, 3, 8, 6, 1, 8, 12, 2, 3, 12, 8, 6, 8, 12, 12]),
    (12, 3, "A_4", "H", 21, a4,
     [1, 4, 9, 4, 12, 1, 4, 12, 4, 9, 12, 4, 12, 4, 12, 12]),
    (16, 8, "SD_16", "H", 3, lambda: metacyclic(8, 2, 3, 0),
     [1, 6, 1, 12, 6, 1, 16, 12, 6, 1, 16, 12, 6, 16, 12, 16]),
    (21, 1, "C_7:C_3", "H", 4, lambda: metacyclic(7, 3, 2, 0),
     [1, 1, 15, 1, 15, 7, 1, 15, 7, 21, 15, 7, 21, 7, 21, 21]),
    (24, 6, "D_12", "H", 6, lambda: metacyclic(12, 2, 11, 0),
     [1, 14, 3, 16, 18, 1, 16, 24, 14, 3, 24, 16, 18, 16, 24, 24]),
    (24, 8, "C_3:D_4", "H", 6, lambda: z_by(3, D4, (2, 1)),
     [1, 10, 3, 16, 18, 1, 16, 24, 10, 3, 24, 16, 18, 16, 24, 24]),
    (28, 1, "Dic_7", "H", 15, lambda: metacyclic(7, 4, 6, 0),
     [1, 2, 1, 16, 2, 7, 16, 16, 14, 7, 16, 28, 14, 28, 28, 28]),
    (42, 1, "F_7", "H", 18, lambda: metacyclic(7, 6, 3, 0),
     [1, 8, 15, 8, 36, 7, 8, 36, 14, 21, 36, 14, 42, 14, 42, 42]),
    (42, 5, "D_21", "H", 6, lambda: metacyclic(21, 2, 20, 0),
     [1, 22, 3, 22, 24, 7, 22, 24, 28, 21, 24, 28, 42, 28, 42, 42]),
    (48, 7, "D_24", "H", 3, lambda: metacyclic(24, 2, 23, 0),
     [1, 26, 3, 28, 30, 1, 32, 36, 26, 3, 48, 28, 30, 32, 36, 48]),
    (56, 5, "D_28", "H", 27, lambda: metacyclic(28, 2, 27, 0),
     [1, 30, 1, 32, 30, 7, 32, 32, 42, 7, 32, 56, 42, 56, 56, 56]),
    (168, 11, "Dic_7:C_6", "H", 3, lambda: z_by(7, metacyclic(4, 6, 3, 0), (6, 2)),
     [1, 18, 15, 32, 102, 7, 32, 144, 42, 21, 144, 56, 126, 56, 168, 168]),
    (168, 23, "C_14.A_4", "H", 21, lambda: z_by(7, sl23(), (2, 1)),
     [1, 2, 57, 8, 114, 7, 8, 120, 14, 63, 120, 56, 126, 56, 168, 168]),
    (168, 42, "GL(3,2)", "H", 3, gl32,
     [1, 22, 57, 64, 78, 49, 64, 120, 70, 105, 120, 112, 126, 112, 168, 168]),
    (294, 10, "C_7:F_7", "H", 2, lambda: z7sq_by(6, 3, 6),
     [1, 50, 15, 50, 162, 49, 50, 162, 98, 147, 162, 98, 294, 98, 294, 294]),
    (336, 36, "D_12.D_7", "H", 3, lambda: z_by(7, metacyclic(24, 2, 11, 0), (6, 1)),
     [1, 14, 3, 100, 18, 7, 128, 108, 98, 21, 192, 196, 126, 224, 252, 336]),
]


def coset_action(G, els):
    """Action on cosets of the largest core-free cyclic subgroup."""
    els = list(els)
    inv = {}
    for g in els:
        if g not in inv:
            h = next(h for h in els if G.mul(g, h) == G.e)
            inv[g], inv[h] = h, g
    cycles = {}
    for x in els:
        cyc = [G.e]
        y = x
        while y != G.e:
            cyc.append(y)
            y = G.mul(y, x)
        cycles.setdefault(frozenset(cyc), cyc)
    best = [G.e]
    for cyc in sorted(cycles.values(), key=len, reverse=True):
        core = set(cyc)
        for g in els:
            core &= {G.mul(G.mul(g, c), inv[g]) for c in cyc}
            if len(core) == 1:
                break
        if len(core) == 1:
            best = cyc
            break
    cosets, index = [], {}
    for g in els:
        if g in index:
            continue
        cls = [G.mul(g, c) for c in best]
        for c in cls:
            index[c] = len(cosets)
        cosets.append(cls)
    return [[index[G.mul(s, cls[0])] for cls in cosets] for s in G.gens]


def check_row(G, els, row):
    orders = [G.eorder(x) for x in els]
    got = [sum(1 for o in orders if d % o == 0) for d in DIVISORS]
    if got != row:
        raise SystemExit(f"{G.label}: row mismatch {got} != {row}")


def entry(order, index, name, side, mult, gens, solvable, degree):
    return {"id": [order, index], "name": name, "degree": degree,
            "generators": gens, "solvable": solvable, "side": side,
            "multiplicity": mult}


def main():
    out = []
    for order, index, name, side, mult, build, row in ENTRIES:
        G = build()
        els = G.elements()
        if len(els) != order:
            raise SystemExit(f"{name}: order {len(els)} != {order}")
        check_row(G, els, row)
        gens = [g for g in coset_action(G, els) if g != sorted(g)]
        out.append(entry(order, index, name, side, mult, gens,
                         name != "GL(3,2)", len(gens[0])))
    out.append(entry(1, 1, "1", "aux", 0, [[0]], True, 1))
    out.append(entry(60, 5, "A_5", "aux", 0,
                     [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]], False, 5))
    print("[")
    print(",\n".join("  " + json.dumps(e, separators=(",", ":")) for e in out))
    print("]")


if __name__ == "__main__":
    main()
