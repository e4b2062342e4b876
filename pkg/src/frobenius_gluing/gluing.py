"""Betti numbers of glued monoids: prediction from the factors and verification.

For ``G = Glued(L, R, rho1, rho2)`` the Frobenius complex of ``lam`` is a
wedge, over all ``l * rho + lam1 + lam2 == lam``, of suspended joins of
S^{2l-2} with the Frobenius complexes of ``lam1`` in ``L`` and ``lam2``
in ``R``. Reduced homology is additive over wedges, so

    b(lam) = sum of shift(convolve(b_L(lam1), b_R(lam2)), 2 l)

and the series satisfies P_G = P_L * P_R / (1 - t^2 z^rho).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ResourceLimitError
from .frobenius import CHAIN_LIMIT, PoincareTable, betti_vector, direct_bettis, poincare_table
from .homology import MAX_SIMPLICES, BettiVector, convolve, shift
from .linalg import QQ, FieldChoice
from .monoid import Glued, GluedElement, element_label, element_to_json


class Decomposition(NamedTuple):
    ell: int
    lam1: object
    lam2: object


def enumerate_decompositions(G: Glued, lam: GluedElement) -> list[Decomposition]:
    """All ``(l, lam1, lam2)`` with ``l * rho + lam1 + lam2 == lam``.

    With ``lam = n * rho + hat1 + hat2`` canonical, these are exactly
    ``(l, l1 * rho1 + hat1, l2 * rho2 + hat2)`` for ``l + l1 + l2 == n``.
    """
    L, R = G.left, G.right
    out = []
    for ell in range(lam.n + 1):
        for l1 in range(lam.n - ell + 1):
            l2 = lam.n - ell - l1
            out.append(Decomposition(ell, L.add(L.multiple(l1, G.rho1), lam.hat1),
                                     R.add(R.multiple(l2, G.rho2), lam.hat2)))
    return out


class _FactorBettis:
    """Memoised direct Betti vectors of factor elements."""

    def __init__(self, G: Glued, field: FieldChoice, method: str, chain_limit: int):
        self.G, self.field, self.method, self.chain_limit = G, field, method, chain_limit
        self._cache: dict = {}

    def __call__(self, side: int, x) -> BettiVector:
        key = (side, x)
        if key not in self._cache:
            M = self.G.left if side == 0 else self.G.right
            self._cache[key] = betti_vector(M, x, self.field, method=self.method,
                                            chain_limit=self.chain_limit)
        return self._cache[key]


def predicted_betti(G: Glued, lam: GluedElement, field: FieldChoice = QQ, *,
                    method: str = "auto", chain_limit: int = CHAIN_LIMIT,
                    _factors: _FactorBettis | None = None) -> BettiVector:
    """Betti vector of ``lam`` assembled from direct factor computations."""
    factors = _factors or _FactorBettis(G, field, method, chain_limit)
    total = BettiVector()
    for d in enumerate_decompositions(G, lam):
        total = total + shift(convolve(factors(0, d.lam1), factors(1, d.lam2)), 2 * d.ell)
    return total


def predicted_poincare_table(G: Glued, degree_bound: int, field: FieldChoice = QQ, *,
                             how: str = "series", method: str = "auto",
                             chain_limit: int = CHAIN_LIMIT) -> PoincareTable:
    """Predicted table of ``G`` up to ``degree_bound``.

    ``how="series"`` multiplies the truncated factor tables with the
    geometric series in ``t^2 z^rho``; ``how="pointwise"`` evaluates
    ``predicted_betti`` at every element.
    """
    if how == "pointwise":
        factors = _FactorBettis(G, field, method, chain_limit)
        entries = {lam: predicted_betti(G, lam, field, _factors=factors)
                   for lam in G.elements_up_to(degree_bound)}
        return PoincareTable(G, degree_bound, entries)
    if how != "series":
        raise ValueError(f"how must be 'series' or 'pointwise', got {how!r}")
    w1, w2 = G.weights
    T1 = poincare_table(G.left, degree_bound // w1, field, method=method, chain_limit=chain_limit)
    T2 = poincare_table(G.right, degree_bound // w2, field, method=method, chain_limit=chain_limit)
    rho_degree = w1 * w2
    entries: dict = {}
    for lam1, b1 in T1.entries.items():
        d1 = w1 * G.left.degree(lam1)
        for lam2, b2 in T2.entries.items():
            d = d1 + w2 * G.right.degree(lam2)
            base = convolve(b1, b2)
            ell = 0
            while d + ell * rho_degree <= degree_bound:
                key = G.normalize(lam1, lam2, ell)
                entries[key] = entries.get(key, BettiVector()) + shift(base, 2 * ell)
                ell += 1
    return PoincareTable(G, degree_bound, entries)


@dataclass
class ElementCheck:
    element: object
    degree: int
    direct: BettiVector | None
    predicted: BettiVector | None
    error: str | None = None

    @property
    def match(self) -> bool:
        return self.error is None and self.direct == self.predicted


@dataclass
class VerificationReport:
    """Direct against predicted Betti vectors for every element up to a bound."""

    monoid: Glued
    degree_bound: int
    field: FieldChoice
    checks: list[ElementCheck] = field(default_factory=list)

    @property
    def mismatches(self) -> list[ElementCheck]:
        return [c for c in self.checks if c.error is None and not c.match]

    @property
    def errors(self) -> list[ElementCheck]:
        return [c for c in self.checks if c.error is not None]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.errors

    @property
    def exit_code(self) -> int:
        if self.mismatches:
            return 1
        return 2 if self.errors else 0

    def summary(self) -> dict:
        return {"checked": len(self.checks),
                "matched": sum(c.match for c in self.checks),
                "mismatched": len(self.mismatches),
                "errors": len(self.errors)}

    def first_failure(self) -> dict | None:
        """The smallest mismatching element with its interval poset and both vectors."""
        if not self.mismatches:
            return None
        c = self.mismatches[0]
        P = self.monoid.open_interval(c.element) if c.degree else None
        return {"element": element_to_json(c.element),
                "interval": P.to_json(element_to_json) if P is not None else None,
                "direct": c.direct.to_dict(), "predicted": c.predicted.to_dict()}

    def to_json(self) -> dict:
        def vec(b):
            return None if b is None else {str(i): x for i, x in b.items()}
        return {
            "degree_bound": self.degree_bound,
            "field": str(self.field),
            "summary": self.summary(),
            "elements": [{"element": element_to_json(c.element), "degree": c.degree,
                          "direct": vec(c.direct), "predicted": vec(c.predicted),
                          "match": c.match, "error": c.error} for c in self.checks],
            "first_failure": self.first_failure(),
        }

    def to_text(self) -> str:
        s = self.summary()
        status = {0: "OK", 1: "MISMATCH", 2: "INCOMPLETE"}[self.exit_code]
        lines = [f"gluing verification over {self.field}, degree <= {self.degree_bound}: {status}",
                 f"  checked {s['checked']}, matched {s['matched']}, "
                 f"mismatched {s['mismatched']}, errors {s['errors']}"]
        for c in self.mismatches:
            lines.append(f"  mismatch at {element_label(c.element)} (deg {c.degree}): "
                         f"direct {c.direct.to_dict()} predicted {c.predicted.to_dict()}")
        for c in self.errors:
            lines.append(f"  error at {element_label(c.element)} (deg {c.degree}): {c.error}")
        return "\n".join(lines) + "\n"


def verify_gluing(G: Glued, degree_bound: int, field: FieldChoice = QQ, *,
                  method: str = "auto", chain_limit: int = CHAIN_LIMIT,
                  max_simplices: int = MAX_SIMPLICES, jobs: int = 1) -> VerificationReport:
    """Compare direct and predicted Betti vectors for all elements up to the bound.

    Resource errors are recorded for the element concerned; the rest of
    the run continues.
    """
    direct = direct_bettis(G, degree_bound, field, method=method, chain_limit=chain_limit,
                           max_simplices=max_simplices, jobs=jobs)
    factors = _FactorBettis(G, field, method, chain_limit)
    report = VerificationReport(G, degree_bound, field)
    for lam, got in direct.items():
        check = ElementCheck(lam, G.degree(lam), None, None)
        if isinstance(got, ResourceLimitError):
            check.error = str(got)
        else:
            check.direct = got
            try:
                check.predicted = predicted_betti(G, lam, field, _factors=factors)
            except ResourceLimitError as exc:
                check.error = str(exc)
        report.checks.append(check)
    return report
