#!/usr/bin/env python3
"""Regenerate the shipped 2-cocycles under data/cocycles.

Each cocycle is written over an explicit field F_ell[x]/(poly). Elements of
the field are coefficient lists, constant term first.
"""

import json
import os
import sys


def compose(p, q):
    # first p, then q (1-based images)
    return [q[x - 1] for x in p]


def words(gens_by_name, order_of):
    """Map a word dict {name: exponent} to a permutation."""
    def build(exps):
        n = len(next(iter(gens_by_name.values())))
        p = list(range(1, n + 1))
        for name in order_of:
            for _ in range(exps[name]):
                p = compose(p, gens_by_name[name])
        return p
    return build


class Field:
    def __init__(self, ell, poly):
        self.ell, self.poly, self.d = ell, poly, len(poly) - 1

    def norm(self, a):
        a = [x % self.ell for x in a] + [0] * (2 * self.d)
        for k in range(len(a) - 1, self.d - 1, -1):
            c = a[k]
            if c:
                for i in range(self.d + 1):
                    a[k - self.d + i] -= c * self.poly[i]
        return [x % self.ell for x in a[: self.d]]

    def mul(self, a, b):
        out = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self.norm(out)

    def pow(self, a, k):
        r = self.norm([1])
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        q = self.ell ** self.d
        return self.pow(a, q - 2)


def sign_cocycle(elements, coords, F, f=None):
    """gamma(g, h) = -1 iff b(g) = a(h) = 1, times the coboundary of f."""
    minus = F.norm([-1])
    one = F.norm([1])
    index = {tuple(p): i for i, p in enumerate(elements)}
    mult = {}
    vals = []
    for i, g in enumerate(elements):
        row = []
        for j, h in enumerate(elements):
            a = coords[i]
            b = coords[j]
            v = minus if (a[1] % 2 and b[0] % 2) else one
            if f is not None:
                gh = index[tuple(compose(g, h))]
                v = F.mul(F.mul(v, f[i]), F.mul(f[j], F.inv(f[gh])))
            row.append(v)
        vals.append(row)
    return vals


def field_values(F, count, base):
    """Distinct nonzero field elements outside the prime field where possible."""
    out = []
    x = F.norm(base)
    cur = F.norm([1])
    for _ in range(count):
        out.append(cur)
        cur = F.mul(cur, x)
    return out


def write(path, group, F, elements, values):
    doc = {"group": group, "ell": F.ell, "poly": F.poly, "elements": elements, "values": values}
    with open(path, "w") as fh:
        json.dump(doc, fh, separators=(",", ":"))
        fh.write("\n")


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)

    # C2 x C2 = <x, y>, elements x^a y^b
    x = [2, 1, 3, 4]
    y = [1, 2, 4, 3]
    build = words({"x": x, "y": y}, ["x", "y"])
    coords = [(a, b) for a in range(2) for b in range(2)]
    elems = [build({"x": a, "y": b}) for a, b in coords]

    F3 = Field(3, [0, 1])
    write(os.path.join(out_dir, "C2xC2_F3.json"), "C2xC2", F3, elems, sign_cocycle(elems, coords, F3))

    F9 = Field(3, [1, 0, 1])
    f9 = field_values(F9, 4, [1, 1])
    write(os.path.join(out_dir, "C2xC2_F9.json"), "C2xC2", F9, elems, sign_cocycle(elems, coords, F9, f9))

    # D12 = <r, s>, elements r^i s^j; inflate the sign cocycle of D12 / <r^2> = C2 x C2
    r = [2, 3, 4, 5, 6, 1]
    s = [1, 6, 5, 4, 3, 2]
    build = words({"r": r, "s": s}, ["r", "s"])
    pairs = [(i, j) for i in range(6) for j in range(2)]
    elems = [build({"r": i, "s": j}) for i, j in pairs]
    assert len({tuple(e) for e in elems}) == 12
    coords = [(i % 2, j) for i, j in pairs]
    F25 = Field(5, [2, 0, 1])
    f25 = field_values(F25, 12, [1, 1])
    write(os.path.join(out_dir, "D12_F25.json"), "D12", F25, elems, sign_cocycle(elems, coords, F25, f25))


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "data", "cocycles"))
