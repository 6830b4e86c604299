#!/usr/bin/env python3
"""Regenerate the shipped permutation groups under data/groups."""

import itertools
import json
import os
import sys


def cycle(n, *cycles):
    p = list(range(1, n + 1))
    for c in cycles:
        for i, x in enumerate(c):
            p[x - 1] = c[(i + 1) % len(c)]
    return p


def symmetric(n):
    if n == 1:
        return []
    if n == 2:
        return [cycle(2, (1, 2))]
    return [cycle(n, (1, 2)), cycle(n, tuple(range(1, n + 1)))]


def alternating(n):
    if n < 3:
        return []
    return [cycle(n, (1, 2, k)) for k in range(3, n + 1)]


def cyclic(m):
    return [cycle(m, tuple(range(1, m + 1)))] if m > 1 else []


def dihedral(m):
    # symmetries of the m-gon, order 2m
    refl = list(range(1, m + 1))
    for i in range(m):
        refl[i] = (-i) % m + 1
    return [cycle(m, tuple(range(1, m + 1))), refl]


def field(q):
    """Elements and arithmetic of F_q for q prime, q = 4 or q = 9."""
    if q == 9:
        elems = [(a, b) for b in range(3) for a in range(3)]  # a + b x, x^2 = -1

        def add(u, v):
            return ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3)

        def mul(u, v):
            a, b = u
            c, d = v
            return ((a * c - b * d) % 3, (a * d + b * c) % 3)

        return elems, add, mul, (0, 0), (1, 0), (1, 1)
    if q == 4:
        elems = [(0, 0), (1, 0), (0, 1), (1, 1)]  # a + b x, x^2 = x + 1

        def add(u, v):
            return ((u[0] + v[0]) % 2, (u[1] + v[1]) % 2)

        def mul(u, v):
            a, b = u
            c, d = v
            # (a + bx)(c + dx) = ac + (ad + bc)x + bd(x + 1)
            return ((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)

        return elems, add, mul, (0, 0), (1, 0), (0, 1)
    elems = list(range(q))
    return elems, (lambda u, v: (u + v) % q), (lambda u, v: (u * v) % q), 0, 1, None


def sl2(q):
    elems, add, mul, zero, one, x = field(q)
    vecs = [(a, b) for a in elems for b in elems if (a, b) != (zero, zero)]

    def act(m):
        (m00, m01), (m10, m11) = m
        perm = []
        for (a, b) in vecs:
            w = (add(mul(m00, a), mul(m01, b)), add(mul(m10, a), mul(m11, b)))
            perm.append(vecs.index(w) + 1)
        return perm

    neg_one = next(e for e in elems if add(e, one) == zero)
    gens = [act(((one, one), (zero, one))), act(((zero, neg_one), (one, zero)))]
    if q in (4, 9):
        # diag(x, x^-1), x a generator of F_q^*, is needed over F_4 and F_9
        xinv = next(e for e in elems if mul(e, x) == one)
        gens.append(act(((x, zero), (zero, xinv))))
    return len(vecs), gens


def direct_product(g1, n1, g2, n2):
    gens = []
    for g in g1:
        gens.append(g + list(range(n1 + 1, n1 + n2 + 1)))
    for g in g2:
        gens.append(list(range(1, n1 + 1)) + [x + n1 for x in g])
    return n1 + n2, gens


def quaternion():
    # regular representation of Q8 = <i, j>
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    table = {}
    base = {("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1", ("i", "j"): "k", ("j", "k"): "i",
            ("k", "i"): "j", ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}

    def split(s):
        return (-1, s[1:]) if s.startswith("-") else (1, s)

    def mul(a, b):
        sa, ua = split(a)
        sb, ub = split(b)
        s = sa * sb
        if ua == "1":
            r = ub
        elif ub == "1":
            r = ua
        else:
            r = base[(ua, ub)]
        sr, ur = split(r)
        s *= sr
        return ur if s == 1 else "-" + ur

    def right(g):
        return [names.index(mul(h, g)) + 1 for h in names]

    return 8, [right("i"), right("j")]


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "groups")
    os.makedirs(out, exist_ok=True)
    groups = {}
    for n in range(1, 8):
        groups["S%d" % n] = (n, symmetric(n))
        groups["A%d" % n] = (n, alternating(n))
    for m in range(1, 13):
        groups["C%d" % m] = (m, cyclic(m))
    for m in range(3, 7):
        groups["D%d" % (2 * m)] = (m, dihedral(m))
    for q in (2, 3, 4, 5):
        groups["SL2_%d" % q] = sl2(q)
    deg, gens = sl2(9)
    groups["2A6"] = (deg, gens)
    groups["C2xC2"] = direct_product(cyclic(2), 2, cyclic(2), 2)
    groups["C6xC2"] = direct_product(cyclic(6), 6, cyclic(2), 2)
    groups["Q8"] = quaternion()
    for name, (deg, gens) in sorted(groups.items()):
        with open(os.path.join(out, name + ".json"), "w") as f:
            json.dump({"name": name, "degree": deg, "generators": gens}, f)
            f.write("\n")


if __name__ == "__main__":
    main()
