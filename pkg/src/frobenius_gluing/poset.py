"""Finite posets, order complexes and composition posets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import ResourceLimitError
from .homology import MAX_SIMPLICES, SimplicialComplex

# default cap on the number of compositions enumerated for C(lambda)
MAX_COMPOSITIONS = 50_000


class FinitePoset:
    """A finite poset on indexed elements.

    ``relations`` lists strict pairs ``(i, j)`` meaning ``elements[i] <
    elements[j]``; the transitive closure is computed on construction and
    a cycle raises ``ValueError``.
    """

    def __init__(self, elements: Sequence[Hashable], relations: Iterable[tuple[int, int]] = ()):
        self.elements = tuple(elements)
        n = len(self.elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != n:
            raise ValueError("duplicate poset elements")
        succ: list[set[int]] = [set() for _ in range(n)]
        for i, j in relations:
            if i == j:
                raise ValueError(f"relation {i} < {i} is not irreflexive")
            succ[i].add(j)
        self._up = self._closure(succ)
        down: list[set[int]] = [set() for _ in range(n)]
        for i, ups in enumerate(self._up):
            for j in ups:
                down[j].add(i)
        self._down = [frozenset(d) for d in down]

    @staticmethod
    def _closure(succ: list[set[int]]) -> list[frozenset[int]]:
        n = len(succ)
        up: list[frozenset[int] | None] = [None] * n
        state = [0] * n  # 0 new, 1 on stack, 2 done
        for root in range(n):
            if state[root]:
                continue
            stack = [(root, iter(succ[root]))]
            state[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    acc = set(succ[node])
                    for j in succ[node]:
                        acc |= up[j]
                    up[node] = frozenset(acc)
                    state[node] = 2
                    stack.pop()
                elif state[nxt] == 1:
                    raise ValueError("relation contains a cycle; not a partial order")
                elif state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
        return up

    @classmethod
    def from_leq(cls, elements: Sequence[Hashable],
                 leq: Callable[[Hashable, Hashable], bool]) -> "FinitePoset":
        """Build from a comparison predicate evaluated on all ordered pairs."""
        els = list(elements)
        rel = [(i, j) for i, a in enumerate(els) for j, b in enumerate(els)
               if i != j and leq(a, b)]
        return cls(els, rel)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<FinitePoset |P|={len(self)} relations={sum(map(len, self._up))}>"

    def less(self, i: int, j: int) -> bool:
        return j in self._up[i]

    def leq(self, i: int, j: int) -> bool:
        return i == j or j in self._up[i]

    def up(self, i: int) -> frozenset[int]:
        """Indices strictly above ``i``."""
        return self._up[i]

    def down(self, i: int) -> frozenset[int]:
        """Indices strictly below ``i``."""
        return self._down[i]

    def relations(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i in range(len(self)) for j in self._up[i])

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
        out = []
        for i in range(len(self)):
            ups = self._up[i]
            for j in ups:
                if not any(j in self._up[k] for k in ups):
                    out.append((i, j))
        return sorted(out)

    def linear_extension(self) -> list[int]:
        """Indices ordered so that every element precedes those above it."""
        return sorted(range(len(self)), key=lambda i: (len(self._down[i]), i))

    def to_json(self, encode: Callable[[Hashable], object] = lambda x: x) -> dict:
        return {"elements": [encode(x) for x in self.elements],
                "covers": [list(c) for c in self.covers()]}

    def chain_counts(self) -> list[int]:
        """Number of chains with ``k + 1`` elements, for ``k = 0, 1, ...``.

        This is the f-vector of the order complex, computed without listing
        the chains.
        """
        ending: list[dict[int, int]] = [dict() for _ in range(len(self))]
        for i in self.linear_extension():
            counts = {0: 1}
            for j in self._down[i]:
                for k, c in ending[j].items():
                    counts[k + 1] = counts.get(k + 1, 0) + c
            ending[i] = counts
        total: dict[int, int] = {}
        for counts in ending:
            for k, c in counts.items():
                total[k] = total.get(k, 0) + c
        return [total[k] for k in range(len(total))]


def bounded_extension(P: FinitePoset) -> tuple[FinitePoset, int, int]:
    """Adjoin a new bottom and top; returns the poset and their indices."""
    n = len(P)
    bottom, top = ("bottom", object()), ("top", object())
    rel = list(P.relations())
    rel += [(n, i) for i in range(n)] + [(i, n + 1) for i in range(n)] + [(n, n + 1)]
    return FinitePoset(list(P.elements) + [bottom, top], rel), n, n + 1


def order_complex(P: FinitePoset, *, max_simplices: int = MAX_SIMPLICES) -> SimplicialComplex:
    """Simplicial complex of all non-empty chains of ``P``."""
    total = sum(P.chain_counts())
    if total > max_simplices:
        raise ResourceLimitError(
            f"order complex would have {total} simplices (cap {max_simplices})")

    def chains() -> Iterator[tuple[int, ...]]:
        stack = [(i,) for i in range(len(P))]
        while stack:
            c = stack.pop()
            yield c
            stack.extend(c + (j,) for j in P.up(c[-1]))

    return SimplicialComplex(P.elements, chains(), check=False, max_simplices=max_simplices)


def face_poset(K: SimplicialComplex) -> FinitePoset:
    """Non-empty simplices of ``K`` ordered by inclusion."""
    faces = list(K.simplices())
    index = {s: i for i, s in enumerate(faces)}
    rel = []
    for s in faces:
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            if face:
                rel.append((index[face], index[s]))
    return FinitePoset(faces, rel)


@dataclass(frozen=True)
class Composition:
    """Ordered partition ``[x1|...|xk]`` of a monoid element into nonzero parts."""

    parts: tuple

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return "[" + "|".join(map(repr, self.parts)) + "]"


def _compositions(M, lam, limit) -> list[tuple]:
    """All compositions of ``lam`` with at least one part (parts nonzero)."""
    memo: dict = {}
    zero = M.zero()

    def rec(x):
        if x in memo:
            return memo[x]
        out = [(x,)]
        for mu in M.elements_up_to(M.degree(x) - 1):
            if mu == zero:
                continue
            rest = M.subtract(x, mu)
            if rest is None or rest == zero:
                continue
            out.extend((mu,) + tail for tail in rec(rest))
            if len(out) > limit:
                raise ResourceLimitError(f"more than {limit} compositions of {lam!r}")
        memo[x] = out
        return out

    return rec(lam)


def count_compositions(M, lam) -> int:
    """|C(lam)|: ordered partitions of ``lam`` into at least two nonzero parts.

    Counted by recursion on the first part; nothing is enumerated.
    """
    zero = M.zero()
    memo = {zero: 1}

    def rec(x):
        if x in memo:
            return memo[x]
        total = 0
        for mu in M.elements_up_to(M.degree(x)):
            if mu == zero:
                continue
            rest = M.subtract(x, mu)
            if rest is not None:
                total += rec(rest)
        memo[x] = total
        return total

    return rec(lam) - 1 if lam != zero else 0


def composition_poset(M, lam, *, max_parts: int | None = None,
                      max_elements: int = MAX_COMPOSITIONS) -> FinitePoset:
    """The poset C(lam) of compositions with at least two parts.

    A composition lies below each of its one-step refinements; the order is
    the transitive closure of merging two adjacent parts. Exceeding
    ``max_parts`` or ``max_elements`` raises ``ResourceLimitError``.
    """
    if lam == M.zero():
        raise ValueError("composition poset needs a nonzero element")
    if max_parts is not None and _has_composition_longer_than(M, lam, max_parts):
        raise ResourceLimitError(f"compositions of {lam!r} exceed {max_parts} parts")
    total = count_compositions(M, lam)
    if total > max_elements:
        raise ResourceLimitError(
            f"{lam!r} has {total} compositions (cap {max_elements})")
    comps = [Composition(c) for c in _compositions(M, lam, max_elements + 1) if len(c) >= 2]
    comps.sort(key=lambda c: (len(c), [M.sort_key(p) for p in c.parts]))
    index = {c: i for i, c in enumerate(comps)}
    rel = []
    for c in comps:
        if len(c) < 3:
            continue
        for i in range(len(c) - 1):
            merged = c.parts[:i] + (M.add(c.parts[i], c.parts[i + 1]),) + c.parts[i + 2:]
            rel.append((index[Composition(merged)], index[c]))
    return FinitePoset(comps, rel)


def _has_composition_longer_than(M, lam, k) -> bool:
    # the longest composition of lam uses atoms only; its length is found by
    # dynamic programming on the divisibility order
    zero = M.zero()
    memo = {zero: 0}

    def longest(x):
        if x in memo:
            return memo[x]
        best = 1
        for g in M.generators:
            rest = M.subtract(x, g)
            if rest is not None and rest != zero:
                best = max(best, 1 + longest(rest))
        memo[x] = best
        return best

    return longest(lam) > k


def phi(M, lam, c: Composition) -> tuple:
    """Partial sums ``x1 < x1+x2 < ... < x1+...+x_{k-1}`` of a composition."""
    out = []
    acc = M.zero()
    for part in c.parts[:-1]:
        acc = M.add(acc, part)
        out.append(acc)
    if M.add(acc, c.parts[-1]) != lam:
        raise ValueError(f"{c!r} is not a composition of {lam!r}")
    return tuple(out)


def phi_inverse(M, lam, chain: Sequence) -> Composition:
    """Consecutive differences of ``0 < mu_1 < ... < mu_k < lam``."""
    parts = []
    prev = M.zero()
    for mu in list(chain) + [lam]:
        diff = M.subtract(mu, prev)
        if diff is None or diff == M.zero():
            raise ValueError(f"{list(chain)!r} is not a chain of the open interval below {lam!r}")
        parts.append(diff)
        prev = mu
    return Composition(tuple(parts))
