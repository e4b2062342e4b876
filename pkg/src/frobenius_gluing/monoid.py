"""Affine monoids with canonical-form elements.

Three presentations are supported:

* ``Free(d)`` -- N^d, elements are exponent vectors;
* ``Submonoid(d, generators)`` -- the submonoid of N^d generated by finitely
  many nonzero vectors, elements are ambient vectors;
* ``Glued(left, right, rho1, rho2)`` -- the quotient of ``left + right`` by
  the smallest additive congruence identifying two reducible elements.
  Elements are triples ``(n, hat1, hat2)`` with ``hat1`` not above ``rho1``
  and ``hat2`` not above ``rho2``; such a triple stands for
  ``n * rho + hat1 + hat2`` and is unique.

Every monoid carries a grading: the coordinate sum for vector monoids, and
``deg2(rho2) * deg1(x1) + deg1(rho1) * deg2(x2)`` for a gluing, which agrees
on ``rho1`` and ``rho2`` and so passes to the quotient.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .errors import DescriptorError
from .poset import FinitePoset


class Monoid:
    """Operations shared by all presentations.

    Subclasses provide ``generators``, ``zero``, ``add``, ``degree`` and
    ``validate``; divisibility falls back to a memoised search that adds
    generators until the degree budget runs out.
    """

    generators: tuple

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def degree(self, x) -> int:
        raise NotImplementedError

    def validate(self, x):
        raise NotImplementedError

    def sort_key(self, x) -> tuple:
        return (self.degree(x), _flatten(x))

    def multiple(self, k: int, x):
        out = self.zero()
        for _ in range(k):
            out = self.add(out, x)
        return out

    def subtract(self, b, a):
        """The unique ``mu`` with ``a + mu == b``, or ``None``."""
        memo = self._memo.setdefault("subtract", {})
        key = (a, b)
        if key in memo:
            return memo[key]
        if a == b:
            res = self.zero()
        else:
            res = None
            db = self.degree(b)
            if self.degree(a) < db:
                for g in self.generators:
                    c = self.add(a, g)
                    if self.degree(c) <= db:
                        rest = self.subtract(b, c)
                        if rest is not None:
                            res = self.add(g, rest)
                            break
        memo[key] = res
        return res

    def divides(self, a, b) -> bool:
        """Frobenius order: ``a <= b`` iff ``b - a`` lies in the monoid."""
        return self.subtract(b, a) is not None

    def max_multiple(self, x, rho) -> tuple[int, object]:
        """Largest ``l`` with ``l * rho <= x``, and the remainder ``x - l * rho``."""
        if rho == self.zero():
            raise ValueError("max_multiple needs a nonzero element")
        ell, rest = 0, x
        while True:
            nxt = self.subtract(rest, rho)
            if nxt is None:
                return ell, rest
            ell, rest = ell + 1, nxt

    def elements_up_to(self, bound: int) -> list:
        """All elements of degree at most ``bound``, sorted by ``sort_key``."""
        memo = self._memo
        have = memo.get("elements_bound", -1)
        if bound > have:
            zero = self.zero()
            seen = {zero}
            queue = deque([zero])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = self.add(x, g)
                    if y not in seen and self.degree(y) <= bound:
                        seen.add(y)
                        queue.append(y)
            memo["elements"] = sorted(seen, key=self.sort_key)
            memo["elements_bound"] = have = bound
        if bound == have:
            return list(memo["elements"])
        return [x for x in memo["elements"] if self.degree(x) <= bound]

    def is_reducible(self, rho) -> bool:
        """True iff ``rho`` is a sum of two nonzero elements."""
        if rho == self.zero():
            return False
        return any(g != rho and self.divides(g, rho) for g in self.generators)

    def open_interval(self, lam) -> FinitePoset:
        """The open interval ``(0, lam)`` under the Frobenius order."""
        zero = self.zero()
        if lam == zero:
            raise ValueError("open interval (0, 0) is undefined")
        inside = [mu for mu in self.elements_up_to(self.degree(lam) - 1)
                  if mu != zero and self.divides(mu, lam)]
        return FinitePoset.from_leq(inside, self.divides)

    def closed_interval(self, lam) -> FinitePoset:
        """``[0, lam]`` as a poset; element 0 has index 0 and ``lam`` the last index."""
        inside = [mu for mu in self.elements_up_to(self.degree(lam))
                  if self.divides(mu, lam)]
        return self._generator_poset(inside)

    def divisibility_poset(self, bound: int) -> FinitePoset:
        """All elements of degree ``<= bound`` under the Frobenius order.

        Built from the generator steps ``x -> x + g``; the transitive
        closure of those steps is the divisibility order.
        """
        return self._generator_poset(self.elements_up_to(bound))

    def _generator_poset(self, elements) -> FinitePoset:
        index = {x: i for i, x in enumerate(elements)}
        rel = []
        for i, x in enumerate(elements):
            for g in self.generators:
                j = index.get(self.add(x, g))
                if j is not None:
                    rel.append((i, j))
        return FinitePoset(elements, rel)

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_memo"] = {}
        return state


def _flatten(x) -> tuple:
    if isinstance(x, GluedElement):
        return (x.n,) + _flatten(x.hat1) + _flatten(x.hat2)
    return tuple(x)


def _vector(x, d: int, what: str) -> tuple[int, ...]:
    try:
        v = tuple(x)
    except TypeError:
        raise DescriptorError(f"{what} must be a vector of length {d}, got {x!r}") from None
    if len(v) != d or any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in v):
        raise DescriptorError(f"{what} must be a vector of {d} natural numbers, got {x!r}")
    return v


@dataclass(frozen=True, eq=True)
class Free(Monoid):
    """N^rank with the coordinate-sum grading."""

    rank: int
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DescriptorError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def generators(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def zero(self):
        return (0,) * self.rank

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def degree(self, x) -> int:
        return sum(x)

    def validate(self, x):
        return _vector(x, self.rank, "element")

    def subtract(self, b, a):
        diff = tuple(x - y for x, y in zip(b, a))
        return diff if all(c >= 0 for c in diff) else None

    def max_multiple(self, x, rho):
        if not any(rho):
            raise ValueError("max_multiple needs a nonzero element")
        ell = min(xi // ri for xi, ri in zip(x, rho) if ri)
        return ell, tuple(xi - ell * ri for xi, ri in zip(x, rho))


@dataclass(frozen=True, eq=True)
class Submonoid(Monoid):
    """Submonoid of N^ambient_rank generated by nonzero vectors.

    Elements are ambient vectors; the grading is the coordinate sum.
    """

    ambient_rank: int
    generators: tuple
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        d = self.ambient_rank
        if not isinstance(d, int) or d < 1:
            raise DescriptorError(f"ambient_rank must be a positive integer, got {d!r}")
        gens = []
        for k, g in enumerate(self.generators):
            v = _vector(g, d, f"generator {k}")
            if not any(v):
                raise DescriptorError(f"generator {k} is the zero vector")
            gens.append(v)
        object.__setattr__(self, "generators", tuple(gens))

    def zero(self):
        return (0,) * self.ambient_rank

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def degree(self, x) -> int:
        return sum(x)

    def contains(self, v) -> bool:
        memo = self._memo.setdefault("member", {})
        if v in memo:
            return memo[v]
        if not any(v):
            res = True
        else:
            res = False
            for g in self.generators:
                rest = tuple(x - y for x, y in zip(v, g))
                if all(c >= 0 for c in rest) and self.contains(rest):
                    res = True
                    break
        memo[v] = res
        return res

    def validate(self, x):
        v = _vector(x, self.ambient_rank, "element")
        if not self.contains(v):
            raise DescriptorError(f"{list(v)} is not in the submonoid")
        return v

    def subtract(self, b, a):
        diff = tuple(x - y for x, y in zip(b, a))
        if all(c >= 0 for c in diff) and self.contains(diff):
            return diff
        return None


@dataclass(frozen=True, slots=True)
class GluedElement:
    """Canonical element ``n * rho + hat1 + hat2`` of a glued monoid."""

    n: int
    hat1: Hashable
    hat2: Hashable

    def __repr__(self) -> str:
        return f"<{self.n}; {self.hat1!r}; {self.hat2!r}>"


@dataclass(frozen=True, eq=True)
class Glued(Monoid):
    """Gluing of two monoids along reducible elements ``rho1`` and ``rho2``."""

    left: Monoid
    right: Monoid
    rho1: Hashable
    rho2: Hashable
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name, m in (("left", self.left), ("right", self.right)):
            if not isinstance(m, Monoid):
                raise DescriptorError(f"{name} must be a monoid descriptor")
        r1 = self.left.validate(self.rho1)
        r2 = self.right.validate(self.rho2)
        object.__setattr__(self, "rho1", r1)
        object.__setattr__(self, "rho2", r2)
        if not self.left.is_reducible(r1):
            raise DescriptorError(f"rho1 = {r1!r} is not reducible in the left factor")
        if not self.right.is_reducible(r2):
            raise DescriptorError(f"rho2 = {r2!r} is not reducible in the right factor")

    @property
    def weights(self) -> tuple[int, int]:
        """Multipliers applied to the left and right factor degrees."""
        return self.right.degree(self.rho2), self.left.degree(self.rho1)

    @property
    def rho(self) -> GluedElement:
        return GluedElement(1, self.left.zero(), self.right.zero())

    @property
    def generators(self) -> tuple:
        memo = self._memo
        if "generators" not in memo:
            gens = [self.normalize(g, self.right.zero()) for g in self.left.generators]
            gens += [self.normalize(self.left.zero(), g) for g in self.right.generators]
            memo["generators"] = tuple(dict.fromkeys(gens))
        return memo["generators"]

    def zero(self):
        return GluedElement(0, self.left.zero(), self.right.zero())

    def normalize(self, x1, x2, n: int = 0) -> GluedElement:
        """Canonical form of ``n * rho + x1 + x2`` for raw factor elements."""
        l1, h1 = self.left.max_multiple(x1, self.rho1)
        l2, h2 = self.right.max_multiple(x2, self.rho2)
        return GluedElement(n + l1 + l2, h1, h2)

    def expand(self, x: GluedElement) -> tuple:
        """A raw representative ``(n * rho1 + hat1, hat2)`` in the direct sum."""
        return self.left.add(self.left.multiple(x.n, self.rho1), x.hat1), x.hat2

    def add(self, a: GluedElement, b: GluedElement) -> GluedElement:
        return self.normalize(self.left.add(a.hat1, b.hat1), self.right.add(a.hat2, b.hat2),
                              a.n + b.n)

    def degree(self, x: GluedElement) -> int:
        w1, w2 = self.weights
        return x.n * w1 * w2 + w1 * self.left.degree(x.hat1) + w2 * self.right.degree(x.hat2)

    def validate(self, x) -> GluedElement:
        if not isinstance(x, GluedElement):
            raise DescriptorError(f"expected a glued element triple, got {x!r}")
        if not isinstance(x.n, int) or isinstance(x.n, bool) or x.n < 0:
            raise DescriptorError(f"n must be a natural number, got {x.n!r}")
        h1 = self.left.validate(x.hat1)
        h2 = self.right.validate(x.hat2)
        if self.left.divides(self.rho1, h1):
            raise DescriptorError(f"hat1 = {h1!r} is not reduced: it lies above rho1")
        if self.right.divides(self.rho2, h2):
            raise DescriptorError(f"hat2 = {h2!r} is not reduced: it lies above rho2")
        return GluedElement(x.n, h1, h2)


def adjoin_root(M: Monoid, rho, r: int) -> Glued:
    """Adjoin a formal r-th part of ``rho``: glue ``M`` to N along ``rho ~ r``."""
    if not isinstance(r, int) or r < 2:
        raise DescriptorError(f"r must be an integer >= 2, got {r!r}")
    return Glued(M, Free(1), rho, (r,))


# Functional spellings of the monoid operations.

def zero(M: Monoid):
    return M.zero()


def add(M: Monoid, a, b):
    return M.add(a, b)


def max_multiple(M: Monoid, x, rho):
    return M.max_multiple(x, rho)


def divides(M: Monoid, a, b) -> bool:
    return M.divides(a, b)


def subtract(M: Monoid, b, a):
    return M.subtract(b, a)


def elements_up_to(M: Monoid, bound: int) -> list:
    return M.elements_up_to(bound)


def open_interval(M: Monoid, lam) -> FinitePoset:
    return M.open_interval(lam)


def is_reducible(M: Monoid, rho) -> bool:
    return M.is_reducible(rho)


def numerical_semigroup(*gens: int) -> Submonoid:
    """The submonoid of N generated by the given positive integers."""
    return Submonoid(1, tuple((g,) for g in gens))


def direct_sum(*monoids: Iterable[Monoid]) -> Submonoid:
    """Direct sum of vector monoids, modelled inside the concatenated ambient space."""
    blocks = []
    for M in monoids:
        if isinstance(M, Free):
            blocks.append((M.rank, M.generators))
        elif isinstance(M, Submonoid):
            blocks.append((M.ambient_rank, M.generators))
        else:
            raise TypeError("direct_sum supports Free and Submonoid summands only")
    total = sum(d for d, _ in blocks)
    gens = []
    offset = 0
    for d, gs in blocks:
        for g in gs:
            gens.append((0,) * offset + tuple(g) + (0,) * (total - offset - d))
        offset += d
    return Submonoid(total, tuple(gens))


def element_to_json(x):
    """JSON form: an array for vectors, ``{"n", "hat1", "hat2"}`` for glued elements."""
    if isinstance(x, GluedElement):
        return {"n": x.n, "hat1": element_to_json(x.hat1), "hat2": element_to_json(x.hat2)}
    return list(x)


def element_label(x) -> str:
    """Compact text label: ``6``, ``1 2`` or ``<1;2;0>``."""
    if isinstance(x, GluedElement):
        return f"<{x.n};{element_label(x.hat1)};{element_label(x.hat2)}>"
    return " ".join(map(str, x))
