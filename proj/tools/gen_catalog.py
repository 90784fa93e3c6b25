#!/usr/bin/env python3
"""Regenerate the shipped group catalog (catalog/*.json).

Every group of order <= 24 is built as a cyclic group, a dicyclic group, a
direct product or a semidirect product of smaller groups, deduplicated up to
isomorphism, and checked against the known number of isomorphism types per
order. Well-known groups are emitted with a small natural permutation
representation; the rest use the right regular representation.

Usage: gen_catalog.py OUTPUT_DIR
"""

import itertools
import json
import os
import sys

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5,
                19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15}


class Table:
    """Finite group as a Cayley table; element 0 is the identity."""

    def __init__(self, mul):
        self.mul = mul
        self.n = len(mul)
        assert all(mul[0][x] == x and mul[x][0] == x for x in range(self.n))
        self.inv = [next(y for y in range(self.n) if mul[x][y] == 0)
                    for x in range(self.n)]

    def order_of(self, x):
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def generating_set(self):
        elems = sorted(range(1, self.n), key=lambda x: -self.order_of(x))
        gens, span = [], {0}
        for x in elems:
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
                if len(span) == self.n:
                    break
        return gens

    def signature(self):
        orders = sorted(self.order_of(x) for x in range(self.n))
        centre = sum(1 for x in range(self.n)
                     if all(self.mul[x][y] == self.mul[y][x] for y in range(self.n)))
        comm = self.closure([self.mul[self.mul[self.inv[x]][self.inv[y]]][self.mul[x][y]]
                             for x in range(self.n) for y in range(self.n)])
        sq = len({self.mul[x][x] for x in range(self.n)})
        return (self.n, tuple(orders), centre, len(comm), sq)


def from_perms(perms):
    """Cayley table of the group generated by permutations (tuples)."""
    deg = len(perms[0])
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        for g in perms:
            h = tuple(g[elems[i][p]] for p in range(deg))
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
        i += 1
    n = len(elems)
    # left-to-right product: x*y = apply x then y
    mul = [[index[tuple(elems[y][elems[x][p]] for p in range(deg))] for y in range(n)]
           for x in range(n)]
    return Table(mul)


def cyclic(n):
    return Table([[(a + b) % n for b in range(n)] for a in range(n)])


def direct(a, b):
    n = a.n * b.n
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        x1, x2 = divmod(x, b.n)
        for y in range(n):
            y1, y2 = divmod(y, b.n)
            mul[x][y] = a.mul[x1][y1] * b.n + b.mul[x2][y2]
    return Table(mul)


def dicyclic(m):
    # <a, x | a^(2m), x^2 = a^m, x^-1 a x = a^-1>, elements a^i x^j
    n = 4 * m

    def enc(i, j):
        return j * 2 * m + (i % (2 * m))

    mul = [[0] * n for _ in range(n)]
    for u in range(n):
        j1, i1 = divmod(u, 2 * m)
        for v in range(n):
            j2, i2 = divmod(v, 2 * m)
            # a^i1 x^j1 a^i2 x^j2 = a^(i1 + (-1)^j1 i2) x^(j1+j2)
            i = i1 + (i2 if j1 == 0 else -i2)
            j = j1 + j2
            if j == 2:
                i += m
                j = 0
            mul[u][v] = enc(i, j)
    return Table(mul)


def automorphisms(t):
    gens = t.generating_set()
    autos = []
    cand = [[y for y in range(t.n) if t.order_of(y) == t.order_of(g)] for g in gens]
    for imgs in itertools.product(*cand):
        f = extend_hom(t, gens, t, list(imgs))
        if f is not None and len(set(f)) == t.n:
            autos.append(tuple(f))
    return autos


def extend_hom(a, gens, b, imgs):
    f = [None] * a.n
    f[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, im in zip(gens, imgs):
                y = a.mul[x][g]
                val = b.mul[f[x]][im]
                if f[y] is None:
                    f[y] = val
                    nxt.append(y)
                elif f[y] != val:
                    return None
        frontier = nxt
    for x in range(a.n):
        for y in range(a.n):
            if f[a.mul[x][y]] != b.mul[f[x]][f[y]]:
                return None
    return f


def isomorphic(a, b):
    if a.signature() != b.signature():
        return False
    gens = a.generating_set()
    cand = [[y for y in range(b.n) if b.order_of(y) == a.order_of(g)] for g in gens]
    for imgs in itertools.product(*cand):
        f = extend_hom(a, gens, b, list(imgs))
        if f is not None and len(set(f)) == a.n:
            return True
    return False


def semidirects(nn, hh):
    """All N x| H for homomorphisms H -> Aut(N) (left action)."""
    auts = automorphisms(nn)
    hgens = hh.generating_set()
    results = []
    for choice in itertools.product(range(len(auts)), repeat=len(hgens)):
        phi = [None] * hh.n
        phi[0] = tuple(range(nn.n))
        ok = True
        frontier = [0]
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, c in zip(hgens, choice):
                    y = hh.mul[x][g]
                    # phi(x g) = phi(x) o phi(g): apply phi(g) first
                    val = tuple(phi[x][auts[c][k]] for k in range(nn.n))
                    if phi[y] is None:
                        phi[y] = val
                        nxt.append(y)
                    elif phi[y] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok:
            continue
        n = nn.n * hh.n
        mul = [[0] * n for _ in range(n)]
        for x in range(n):
            h1, n1 = divmod(x, nn.n)
            for y in range(n):
                h2, n2 = divmod(y, nn.n)
                mul[x][y] = hh.mul[h1][h2] * nn.n + nn.mul[n1][phi[h1][n2]]
        t = Table(mul)
        results.append(t)
    return results


def cycles_to_perm(deg, cycles):
    p = list(range(deg))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            p[a - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(p)


def perm_to_cycles(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


# Well-known groups with small natural permutation representations.
NAMED = [
    ("S3", 3, [[(1, 2, 3)], [(1, 2)]]),
    ("V4", 4, [[(1, 2), (3, 4)], [(1, 3), (2, 4)]]),
    ("D8", 4, [[(1, 2, 3, 4)], [(1, 3)]]),
    ("Q8", 8, [[(1, 2, 3, 4), (5, 6, 7, 8)], [(1, 5, 3, 7), (2, 8, 4, 6)]]),
    ("D10", 5, [[(1, 2, 3, 4, 5)], [(2, 5), (3, 4)]]),
    ("A4", 4, [[(1, 2, 3)], [(1, 2), (3, 4)]]),
    ("D12", 6, [[(1, 2, 3, 4, 5, 6)], [(2, 6), (3, 5)]]),
    ("D14", 7, [[(1, 2, 3, 4, 5, 6, 7)], [(2, 7), (3, 6), (4, 5)]]),
    ("D16", 8, [[(1, 2, 3, 4, 5, 6, 7, 8)], [(2, 8), (3, 7), (4, 6)]]),
    ("D8xC2", 6, [[(1, 2, 3, 4)], [(1, 3)], [(5, 6)]]),
    ("S3xC3", 6, [[(1, 2, 3)], [(1, 2)], [(4, 5, 6)]]),
    ("D18", 9, [[(1, 2, 3, 4, 5, 6, 7, 8, 9)], [(2, 9), (3, 8), (4, 7), (5, 6)]]),
    ("F20", 5, [[(1, 2, 3, 4, 5)], [(2, 3, 5, 4)]]),
    ("D20", 10, [[(1, 2, 3, 4, 5, 6, 7, 8, 9, 10)], [(2, 10), (3, 9), (4, 8), (5, 7)]]),
    ("F21", 7, [[(1, 2, 3, 4, 5, 6, 7)], [(2, 3, 5), (4, 7, 6)]]),
    ("D22", 11, [[(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)], [(2, 11), (3, 10), (4, 9), (5, 8), (6, 7)]]),
    ("S4", 4, [[(1, 2, 3, 4)], [(1, 2)]]),
    ("SL23", 8, [[(1, 2, 3, 4), (5, 6, 7, 8)], [(1, 5, 3, 7), (2, 8, 4, 6)],
                 [(2, 5, 6), (4, 7, 8)]]),
    ("A4xC2", 6, [[(1, 2, 3)], [(1, 2), (3, 4)], [(5, 6)]]),
    ("D24", 12, [[(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12)],
                 [(2, 12), (3, 11), (4, 10), (5, 9), (6, 8)]]),
]

# Ambient groups of the worked examples that exceed order 24.
# Primes recorded in the spec files of groups used by the worked examples.
DEFAULT_PRIMES = {"A4": 2, "D8xC2": 2}

EXTRA = [
    ("A4xA4", 8, [[(1, 2, 3)], [(1, 2), (3, 4)], [(5, 6, 7)], [(5, 6), (7, 8)]], 2),
    ("S3xS3", 6, [[(1, 2, 3)], [(1, 2)], [(4, 5, 6)], [(4, 5)]], 3),
    ("E9:S3", 9, None, 3),
]


def affine_e9_s3():
    # points of F_3^2 as 3*x + y; translations by a=(1,0), b=(0,1);
    # phi: a -> a+b, b -> b ; psi: a -> a, b -> -b (row vectors, right action)
    def pt(x, y):
        return 3 * (x % 3) + (y % 3)

    def perm(f):
        return [f(x, y) for x in range(3) for y in range(3)]

    ta = perm(lambda x, y: pt(x + 1, y))
    tb = perm(lambda x, y: pt(x, y + 1))
    phi = perm(lambda x, y: pt(x, x + y))
    psi = perm(lambda x, y: pt(x, -y))
    return [tuple(g) for g in (ta, tb, phi, psi)]


def main():
    out = sys.argv[1]
    os.makedirs(out, exist_ok=True)
    by_order = {n: [] for n in KNOWN_COUNTS}

    def add(name, table, perms):
        if table.n not in by_order:
            return
        for _, t, _ in by_order[table.n]:
            if isomorphic(t, table):
                return
        by_order[table.n].append((name, table, perms))

    for name, deg, gens in NAMED:
        perms = [cycles_to_perm(deg, g) for g in gens]
        add(name, from_perms(perms), perms)

    base = {}
    for n in range(1, 25):
        add("C%d" % n, cyclic(n), None)
    for m in range(2, 7):
        add("Dic%d" % m, dicyclic(m), None)

    def reps(n):
        return [(nm, t) for nm, t, _ in by_order[n]]

    for n in range(2, 25):
        for d in range(2, n):
            if n % d:
                continue
            e = n // d
            if e < 2:
                continue
            for (na, ta) in reps(d):
                for (nb, tb) in reps(e):
                    if d <= e:
                        add("%sx%s" % (na, nb), direct(ta, tb), None)
                    k = 0
                    for t in semidirects(ta, tb):
                        before = len(by_order[n])
                        add("%s:%s" % (na, nb) + ("" if k == 0 else "#%d" % k), t, None)
                        if len(by_order[n]) > before:
                            k += 1
    bad = {n: len(v) for n, v in by_order.items() if len(v) != KNOWN_COUNTS[n]}
    if bad:
        sys.exit("isomorphism type counts disagree: %r" % bad)

    index = []
    for n in sorted(by_order):
        for k, (name, t, perms) in enumerate(by_order[n]):
            if perms is None:
                gens = t.generating_set()
                perms = [tuple(t.mul[x][g] for x in range(t.n)) for g in gens] or [tuple(range(max(n, 1)))]
            deg = len(perms[0])
            entry = {"name": name, "degree": deg,
                     "generators": [perm_to_cycles(p) for p in perms]}
            if name in DEFAULT_PRIMES:
                entry["prime"] = DEFAULT_PRIMES[name]
            fname = "%s.json" % safe(name)
            with open(os.path.join(out, fname), "w") as fh:
                json.dump(entry, fh, indent=2)
                fh.write("\n")
            index.append({"name": name, "order": n, "file": fname})
    for name, deg, gens, prime in EXTRA:
        perms = affine_e9_s3() if gens is None else [cycles_to_perm(deg, g) for g in gens]
        entry = {"name": name, "degree": deg,
                 "generators": [perm_to_cycles(p) for p in perms], "prime": prime}
        fname = "%s.json" % safe(name)
        with open(os.path.join(out, fname), "w") as fh:
            json.dump(entry, fh, indent=2)
            fh.write("\n")
        index.append({"name": name, "order": from_perms(perms).n, "file": fname})
    with open(os.path.join(out, "index.json"), "w") as fh:
        json.dump({"groups": index}, fh, indent=2)
        fh.write("\n")
    print("wrote %d groups" % len(index))


def safe(name):
    return name.replace(":", "_").replace("#", "_").lower()


if __name__ == "__main__":
    main()
