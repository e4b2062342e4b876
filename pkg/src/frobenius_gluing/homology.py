"""Simplicial complexes, reduced homology over exact fields, joins.

Betti vectors use the Tor grading throughout the package: entry ``i``
holds the reduced Betti number in homological degree ``i - 2``. So the
empty complex (the (-1)-sphere) is ``delta(1)`` and the formal symbol
S^{-2} is ``delta(0)``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import ResourceLimitError
from .linalg import QQ, FieldChoice, rank

MAX_SIMPLICES = 1_000_000


class BettiVector:
    """Finitely supported vector of non-negative integers, indexed from 0."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int] | Mapping[int, int] = ()):
        if isinstance(values, Mapping):
            size = max((i + 1 for i, b in values.items() if b), default=0)
            dense = [0] * size
            for i, b in values.items():
                if i < 0:
                    raise ValueError(f"negative index {i}")
                if b:
                    dense[i] = int(b)
        else:
            dense = [int(b) for b in values]
        if any(b < 0 for b in dense):
            raise ValueError(f"Betti numbers must be non-negative: {dense}")
        while dense and dense[-1] == 0:
            dense.pop()
        self._values = tuple(dense)

    @classmethod
    def delta(cls, i: int) -> "BettiVector":
        return cls({i: 1})

    def __getitem__(self, i: int) -> int:
        return self._values[i] if 0 <= i < len(self._values) else 0

    def __len__(self) -> int:
        return len(self._values)

    def __bool__(self) -> bool:
        return bool(self._values)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiVector) and self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __add__(self, other: "BettiVector") -> "BettiVector":
        n = max(len(self), len(other))
        return BettiVector(self[i] + other[i] for i in range(n))

    def __repr__(self) -> str:
        return f"BettiVector({self.to_dict()})"

    def items(self) -> Iterator[tuple[int, int]]:
        """Nonzero ``(i, b_i)`` pairs in increasing ``i``."""
        return ((i, b) for i, b in enumerate(self._values) if b)

    def to_dict(self) -> dict[int, int]:
        return dict(self.items())

    def as_tuple(self) -> tuple[int, ...]:
        return self._values

    def alternating_sum(self) -> int:
        return sum((-1) ** i * b for i, b in self.items())


ZERO = BettiVector()


def convolve(b1: BettiVector, b2: BettiVector) -> BettiVector:
    """Betti vector of the suspended join of two spaces (Tor grading)."""
    out: dict[int, int] = {}
    for j, x in b1.items():
        for k, y in b2.items():
            out[j + k] = out.get(j + k, 0) + x * y
    return BettiVector(out)


def shift(b: BettiVector, amount: int) -> BettiVector:
    """Shift by an even Tor degree; same as convolving with S^{amount-2}."""
    if amount < 0 or amount % 2:
        raise ValueError(f"shift amount must be a non-negative even integer, got {amount}")
    return BettiVector({i + amount: x for i, x in b.items()})


class SimplicialComplex:
    """Finite abstract simplicial complex on labelled vertices.

    Simplices are sorted tuples of vertex indices. The empty complex (no
    vertices, no simplices) plays the role of the (-1)-sphere.
    """

    def __init__(self, vertices: Sequence[Hashable], simplices: Iterable[Iterable[int]],
                 *, check: bool = True, max_simplices: int = MAX_SIMPLICES):
        self.vertices = tuple(vertices)
        faces: dict[int, set[tuple[int, ...]]] = {}
        count = 0
        for s in simplices:
            t = tuple(sorted(s))
            if not t:
                continue
            bucket = faces.setdefault(len(t) - 1, set())
            if t not in bucket:
                bucket.add(t)
                count += 1
                if count > max_simplices:
                    raise ResourceLimitError(
                        f"simplicial complex exceeds {max_simplices} simplices")
        self._faces = {k: sorted(v) for k, v in sorted(faces.items())}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}
        if check:
            self._check()

    def _check(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex labels")
        if sorted(self._faces.get(0, [])) != [(i,) for i in range(n)]:
            raise ValueError("every vertex must be a 0-simplex and vice versa")
        for k, fs in self._faces.items():
            if k == 0:
                continue
            lower = set(self._faces.get(k - 1, ()))
            for s in fs:
                if len(set(s)) != len(s):
                    raise ValueError(f"repeated vertex in simplex {s}")
                for face in combinations(s, k):
                    if face not in lower:
                        raise ValueError(f"face {face} of {s} missing")

    @classmethod
    def from_facets(cls, vertices: Sequence[Hashable], facets: Iterable[Iterable[int]],
                    *, max_simplices: int = MAX_SIMPLICES) -> "SimplicialComplex":
        """Downward closure of the given facets."""
        def gen():
            seen = set()
            for f in facets:
                f = tuple(sorted(set(f)))
                for k in range(1, len(f) + 1):
                    for face in combinations(f, k):
                        if face not in seen:
                            seen.add(face)
                            if len(seen) > max_simplices:
                                raise ResourceLimitError(
                                    f"simplicial complex exceeds {max_simplices} simplices")
                            yield face
        return cls(vertices, gen(), max_simplices=max_simplices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex) and self.vertices == other.vertices
                and self._faces == other._faces)

    def __repr__(self) -> str:
        return f"<SimplicialComplex dim={self.dimension} f={self.f_vector()}>"

    @property
    def is_empty(self) -> bool:
        return not self._faces

    @property
    def dimension(self) -> int:
        return max(self._faces, default=-1)

    def faces(self, k: int) -> list[tuple[int, ...]]:
        return self._faces.get(k, [])

    def simplices(self) -> Iterator[tuple[int, ...]]:
        for k in self._faces:
            yield from self._faces[k]

    def f_vector(self) -> list[int]:
        """Face counts ``f_0, ..., f_dim`` (the empty face is not included)."""
        return [len(self.faces(k)) for k in range(self.dimension + 1)]

    def num_simplices(self) -> int:
        return sum(self.f_vector())

    def reduced_euler_characteristic(self) -> int:
        return -1 + sum((-1) ** k * f for k, f in enumerate(self.f_vector()))

    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for k, fs in self._faces.items():
            higher = self._faces.get(k + 1, ())
            covered = {face for s in higher for face in combinations(s, k + 1)}
            out.extend(s for s in fs if s not in covered)
        return sorted(out, key=lambda s: (len(s), s))

    def _face_index(self, k: int) -> dict[tuple[int, ...], int]:
        idx = self._index.get(k)
        if idx is None:
            idx = {s: i for i, s in enumerate(self.faces(k))}
            self._index[k] = idx
        return idx

    def boundary_columns(self, k: int) -> list[dict[int, int]]:
        """Columns of the augmented boundary map C_k -> C_{k-1}.

        For ``k == 0`` the target is the one-dimensional space spanned by
        the empty simplex, so every vertex maps to row 0.
        """
        if k == 0:
            return [{0: 1} for _ in self.faces(0)]
        rows = self._face_index(k - 1)
        cols = []
        for s in self.faces(k):
            col = {}
            for j in range(k + 1):
                col[rows[s[:j] + s[j + 1:]]] = -1 if j % 2 else 1
            cols.append(col)
        return cols

    def chain_dimension(self, k: int) -> int:
        """Dimension of the augmented chain group C_k (C_{-1} is 1-dimensional)."""
        return 1 if k == -1 else len(self.faces(k))

    def to_json(self, encode: Callable[[Hashable], object] = lambda v: v) -> dict:
        return {"vertices": [encode(v) for v in self.vertices],
                "facets": [list(f) for f in self.facets()]}

    @classmethod
    def from_json(cls, obj: Mapping, decode: Callable[[object], Hashable] = None,
                  *, max_simplices: int = MAX_SIMPLICES) -> "SimplicialComplex":
        def hashable(v):
            return tuple(hashable(x) for x in v) if isinstance(v, list) else v
        decode = decode or hashable
        vertices = [decode(v) for v in obj["vertices"]]
        facets = [tuple(f) for f in obj["facets"]]
        for f in facets:
            if any(not 0 <= i < len(vertices) for i in f):
                raise ValueError(f"facet {list(f)} refers to an unknown vertex")
        return cls.from_facets(vertices, facets, max_simplices=max_simplices)

    def face_list(self, label: Callable[[Hashable], str] = str) -> str:
        """Plain-text export: one simplex per line, vertex labels separated by spaces."""
        lines = [" ".join(label(self.vertices[i]) for i in s) for s in self.simplices()]
        return "\n".join(lines) + ("\n" if lines else "")


EMPTY = SimplicialComplex((), ())


def reduced_betti(K: SimplicialComplex, field: FieldChoice = QQ) -> BettiVector:
    """Reduced Betti numbers of ``K`` in Tor grading (b_i = dim H~_{i-2})."""
    top = K.dimension
    ranks = {k: rank(K.boundary_columns(k), K.chain_dimension(k - 1), field)
             for k in range(0, top + 1)}
    out = {}
    for k in range(-1, top + 1):
        b = K.chain_dimension(k) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if b:
            out[k + 2] = b
    return BettiVector(out)


def boundary_squares_to_zero(K: SimplicialComplex) -> bool:
    """Check that every composite of consecutive boundary maps vanishes."""
    for k in range(1, K.dimension + 1):
        upper = K.boundary_columns(k)
        lower = K.boundary_columns(k - 1)
        for col in upper:
            acc: dict[int, int] = {}
            for row, c in col.items():
                for r2, c2 in lower[row].items():
                    acc[r2] = acc.get(r2, 0) + c * c2
            if any(acc.values()):
                return False
    return True


def join(K: SimplicialComplex, L: SimplicialComplex,
         *, max_simplices: int = MAX_SIMPLICES) -> SimplicialComplex:
    """Join of two complexes; vertices are relabelled ``(0, v)`` and ``(1, w)``.

    The empty complex is a two-sided identity and is returned unchanged.
    """
    if K.is_empty:
        return L
    if L.is_empty:
        return K
    nk = len(K.vertices)
    total = (K.num_simplices() + 1) * (L.num_simplices() + 1) - 1
    if total > max_simplices:
        raise ResourceLimitError(f"join would have {total} simplices (cap {max_simplices})")
    vertices = [(0, v) for v in K.vertices] + [(1, w) for w in L.vertices]
    left = [()] + list(K.simplices())
    right = [()] + [tuple(i + nk for i in t) for t in L.simplices()]
    simplices = (s + t for s in left for t in right if s or t)
    return SimplicialComplex(vertices, simplices, check=False, max_simplices=max_simplices)


S0 = SimplicialComplex(("north", "south"), [(0,), (1,)])


def suspension(K: SimplicialComplex, *, max_simplices: int = MAX_SIMPLICES) -> SimplicialComplex:
    return join(K, S0, max_simplices=max_simplices)


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    return SimplicialComplex.from_facets(range(n + 1), [range(n + 1)])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere."""
    if n == 0:
        return EMPTY
    return SimplicialComplex.from_facets(range(n + 1), combinations(range(n + 1), n))
