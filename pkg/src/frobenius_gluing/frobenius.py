"""Frobenius complexes, Betti vectors and truncated Poincare series."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .homology import MAX_SIMPLICES, BettiVector, convolve, reduced_betti
from .errors import ResourceLimitError
from .linalg import QQ, FieldChoice
from .monoid import Free, Monoid, Submonoid, direct_sum, element_label, element_to_json
from .poset import MAX_COMPOSITIONS, FinitePoset, composition_poset, order_complex
from .resolution import CHAIN_LIMIT, interval_bettis, order_complex_betti

METHODS = ("auto", "chains", "resolution")


class FormalS2:
    """The formal symbol S^{-2} standing in for the Frobenius complex of 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "S^-2"

    def __reduce__(self):
        return (FormalS2, ())


FORMAL_S2 = FormalS2()


def frobenius_complex(M: Monoid, lam, *, max_simplices: int = MAX_SIMPLICES):
    """``FORMAL_S2`` for ``lam == 0``, else the order complex of ``(0, lam)``."""
    if lam == M.zero():
        return FORMAL_S2
    return order_complex(M.open_interval(lam), max_simplices=max_simplices)


def face_counts(M: Monoid, lam) -> list[int]:
    """f-vector of the Frobenius complex (empty face excluded), by chain counting."""
    if lam == M.zero():
        return []
    return M.open_interval(lam).chain_counts()


def _check_method(method: str):
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def betti_vector(M: Monoid, lam, field: FieldChoice = QQ, *, method: str = "auto",
                 chain_limit: int = CHAIN_LIMIT,
                 max_simplices: int = MAX_SIMPLICES) -> BettiVector:
    """Betti numbers ``b_i(lam)`` in Tor grading.

    ``"chains"`` ranks the boundary maps of the Frobenius complex;
    ``"resolution"`` reads them off a minimal resolution over the closed
    interval ``[0, lam]``; ``"auto"`` uses chains while the complex has at
    most ``chain_limit`` simplices.
    """
    _check_method(method)
    if lam == M.zero():
        return BettiVector.delta(0)
    if method == "auto":
        method = "chains" if sum(face_counts(M, lam)) <= chain_limit else "resolution"
    if method == "chains":
        return reduced_betti(frobenius_complex(M, lam, max_simplices=max_simplices), field)
    P = M.closed_interval(lam)
    return interval_bettis(P, 0, field, targets={len(P) - 1})[len(P) - 1]


@dataclass
class PoincareTable:
    """Truncation of the Poincare series: nonzero Betti vectors keyed by element."""

    monoid: Monoid
    degree_bound: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {lam: b for lam, b in self.entries.items() if b}
        for lam in self.entries:
            if self.monoid.degree(lam) > self.degree_bound:
                raise ValueError(f"{lam!r} lies beyond the degree bound {self.degree_bound}")

    def __getitem__(self, lam) -> BettiVector:
        return self.entries.get(lam, BettiVector())

    def __len__(self) -> int:
        return len(self.entries)

    def rows(self) -> list[tuple[object, BettiVector]]:
        """Entries ordered by degree, then canonical form."""
        return sorted(self.entries.items(), key=lambda kv: self.monoid.sort_key(kv[0]))

    def diff(self, other: "PoincareTable") -> list:
        keys = set(self.entries) | set(other.entries)
        return sorted((k for k in keys if self[k] != other[k]), key=self.monoid.sort_key)

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "entries": [{"element": element_to_json(lam), "degree": self.monoid.degree(lam),
                         "betti": {str(i): b for i, b in bv.items()}}
                        for lam, bv in self.rows()],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "element", "i", "beta_i"])
        for lam, bv in self.rows():
            for i, b in bv.items():
                w.writerow([self.monoid.degree(lam), element_label(lam), i, b])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"Poincare table up to degree {self.degree_bound}"]
        for lam, bv in self.rows():
            terms = " + ".join(f"{b}t^{i}" if b != 1 else f"t^{i}" for i, b in bv.items())
            lines.append(f"  deg {self.monoid.degree(lam):>3}  {element_label(lam):<16} {terms}")
        return "\n".join(lines) + "\n"


def _subinterval(D: FinitePoset, top: int, zero: int) -> FinitePoset:
    inside = sorted(D.down(top) - {zero})
    pos = {j: k for k, j in enumerate(inside)}
    rel = [(pos[a], pos[b]) for a in inside for b in D.up(a) if b in pos]
    return FinitePoset([D.elements[j] for j in inside], rel)


def _chains_betti(args):
    P, field, max_simplices = args
    try:
        return reduced_betti(order_complex(P, max_simplices=max_simplices), field)
    except ResourceLimitError as exc:
        return exc


def direct_bettis(M: Monoid, degree_bound: int, field: FieldChoice = QQ, *,
                  method: str = "auto", chain_limit: int = CHAIN_LIMIT,
                  max_simplices: int = MAX_SIMPLICES, jobs: int = 1) -> dict:
    """Betti vector (or the ``ResourceLimitError`` raised) for each element.

    Uses one divisibility poset for the whole range. Explicit chain
    computations are independent per element and spread over ``jobs``
    worker processes; the result does not depend on ``jobs``.
    """
    _check_method(method)
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    D = M.divisibility_poset(degree_bound)
    zero = D.index[M.zero()]
    out: dict = {M.zero(): BettiVector.delta(0)}
    chain_tasks: list[tuple[object, FinitePoset]] = []
    need_resolution = []
    for idx, lam in enumerate(D.elements):
        if idx == zero:
            continue
        use = "resolution"
        if method != "resolution":
            P = _subinterval(D, idx, zero)
            if method == "chains" or sum(P.chain_counts()) <= chain_limit:
                use = "chains"
                chain_tasks.append((lam, P))
        if use == "resolution":
            need_resolution.append(idx)
    if need_resolution:
        res = interval_bettis(D, zero, field, targets=set(need_resolution))
        for idx in need_resolution:
            out[D.elements[idx]] = res[idx]
    args = [(P, field, max_simplices) for _, P in chain_tasks]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_chains_betti, args))
    else:
        results = [_chains_betti(a) for a in args]
    for (lam, _), bv in zip(chain_tasks, results):
        out[lam] = bv
    return {lam: out[lam] for lam in D.elements}


def poincare_table(M: Monoid, degree_bound: int, field: FieldChoice = QQ, *,
                   method: str = "auto", chain_limit: int = CHAIN_LIMIT,
                   max_simplices: int = MAX_SIMPLICES, jobs: int = 1) -> PoincareTable:
    """Betti vectors of every element of degree at most ``degree_bound``.

    Raises the first ``ResourceLimitError`` met; no partial table is returned.
    """
    found = direct_bettis(M, degree_bound, field, method=method, chain_limit=chain_limit,
                          max_simplices=max_simplices, jobs=jobs)
    for bv in found.values():
        if isinstance(bv, ResourceLimitError):
            raise bv
    return PoincareTable(M, degree_bound, found)


def dirsum_predicted_table(T1: PoincareTable, T2: PoincareTable) -> PoincareTable:
    """Table of the direct sum predicted by multiplying the two series.

    Both monoids must be vector monoids; the sum is modelled inside the
    concatenated ambient space and truncated at the smaller bound.
    """
    for T in (T1, T2):
        if not isinstance(T.monoid, (Free, Submonoid)):
            raise TypeError("direct sums are modelled for Free and Submonoid tables only")
    bound = min(T1.degree_bound, T2.degree_bound)
    M1, M2 = T1.monoid, T2.monoid
    entries: dict = {}
    for lam1, b1 in T1.entries.items():
        d1 = M1.degree(lam1)
        for lam2, b2 in T2.entries.items():
            if d1 + M2.degree(lam2) <= bound:
                entries[tuple(lam1) + tuple(lam2)] = convolve(b1, b2)
    return PoincareTable(direct_sum(M1, M2), bound, entries)


@dataclass
class CompositionCheck:
    """Comparison of the composition poset C(lam) with the Frobenius complex."""

    element: object
    compositions: int
    simplices: int
    composition_betti: BettiVector
    frobenius_betti: BettiVector

    @property
    def ok(self) -> bool:
        return (self.compositions == self.simplices
                and self.composition_betti == self.frobenius_betti)


def composition_check(M: Monoid, lam, field: FieldChoice = QQ, *, method: str = "auto",
                      max_parts: int | None = None, max_elements: int | None = None,
                      chain_limit: int = CHAIN_LIMIT) -> CompositionCheck:
    """Betti numbers of the order complex of C(lam) against those of F(lam)."""
    C = composition_poset(M, lam, max_parts=max_parts,
                          max_elements=max_elements or MAX_COMPOSITIONS)
    return CompositionCheck(
        element=lam,
        compositions=len(C),
        simplices=sum(face_counts(M, lam)),
        composition_betti=order_complex_betti(C, field, method=method, chain_limit=chain_limit),
        frobenius_betti=betti_vector(M, lam, field, method=method, chain_limit=chain_limit),
    )

