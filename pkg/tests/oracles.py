"""Independent reference computations used by the tests.

Nothing here calls the arithmetic under test: representability is plain
dynamic programming, glued monoids are modelled as explicit equivalence
classes of pairs, and decompositions are found by exhaustive search.
"""

from itertools import combinations


def representable(n, gens):
    """Is ``n`` a non-negative integer combination of ``gens``?"""
    ok = [True] + [False] * n
    for k in range(1, n + 1):
        ok[k] = any(g <= k and ok[k - g] for g in gens)
    return ok[n]


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def free_gluing_classes(a, b, bound):
    """Classes of N + N modulo (b, 0) ~ (0, a), restricted to a*x1 + b*x2 <= bound.

    The congruence generated by one relation is the closure of its
    translates; translates preserve the weighted degree, so closing inside
    the degree box is exact.
    """
    uf = UnionFind()
    pts = [(x1, x2) for x1 in range(bound // a + 1) for x2 in range(bound // b + 1)
           if a * x1 + b * x2 <= bound]
    for p in pts:
        uf.find(p)
        q = (p[0] + b, p[1] - a)
        if q[1] >= 0:
            uf.union(p, q)
    classes = {}
    for p in pts:
        classes.setdefault(uf.find(p), []).append(p)
    return list(classes.values())


def numerical_closed_interval(lam, gens):
    """Elements of [0, lam] in the numerical semigroup generated by ``gens``."""
    return [m for m in range(lam + 1) if representable(m, gens) and representable(lam - m, gens)]


def brute_free_decompositions(a, b, raw, bound):
    """All (l, x1, x2) with l*rho + x1 + x2 equal to the class of ``raw``.

    For the gluing of N and N along (b, 0) ~ (0, a), with rho the common
    class. Equality is tested against the explicit equivalence classes.
    """
    cls = next(c for c in free_gluing_classes(a, b, bound) if raw in c)
    members = set(cls)
    out = []
    for ell in range(bound // (a * b) + 1):
        for x1 in range(bound // a + 1):
            for x2 in range(bound // b + 1):
                if (x1 + ell * b, x2) in members:
                    out.append((ell, x1, x2))
    return sorted(out)


def chains_of(elements, less):
    """Non-empty chains of a finite poset, by brute force over subsets."""
    out = []
    for k in range(1, len(elements) + 1):
        for sub in combinations(elements, k):
            if all(less(sub[i], sub[i + 1]) for i in range(k - 1)):
                out.append(sub)
    return out


def ordered_partitions(n, parts, min_len=2):
    """Ordered partitions of the integer ``n`` into the given part sizes."""
    out = []

    def rec(rest, acc):
        if rest == 0:
            if len(acc) >= min_len:
                out.append(tuple(acc))
            return
        for p in parts:
            if p <= rest:
                rec(rest - p, acc + [p])

    rec(n, [])
    return out
