"""Reduced homology of poset intervals without listing chains.

For a finite poset P and an element ``a``, the reduced homology of the
order complexes of all open intervals ``(a, y)`` is read off a minimal
projective resolution of the simple module at ``a`` over the incidence
algebra of P:

    dim Tor_i(S_a, S_y) = dim H~_{i-2}((a, y)),   y > a.

The resolution is built one element at a time along a linear extension.
The degree-``y`` part of the i-th free module has one basis vector per
generator sitting at or below ``y``, and the differential in that degree
is the restriction of the generator images. At each ``y`` the new
generators of F_{i+1} are chosen to span a complement of the image inside
the kernel of F_i -> F_{i-1}. Their count is the Betti number.

For a monoid, taking ``a = 0`` in the divisibility poset gives the
multigraded Betti numbers of the residue field of the monoid algebra in
one pass.
"""

from __future__ import annotations

from .homology import BettiVector, reduced_betti
from .linalg import QQ, Echelon, FieldChoice, kernel_basis
from .poset import FinitePoset, bounded_extension, order_complex


def interval_bettis(P: FinitePoset, bottom: int, field: FieldChoice = QQ,
                    targets: set[int] | None = None) -> dict[int, BettiVector]:
    """Tor-graded Betti vectors of ``(bottom, y)`` for every ``y >= bottom``.

    The entry at ``bottom`` itself is ``delta(0)``, matching the formal
    S^{-2} convention. ``targets`` restricts the returned entries (all
    elements above ``bottom`` are still processed).
    """
    above = P.up(bottom)
    order = [y for y in P.linear_extension() if y in above]
    # gens[i] holds (position, image) with image a dict over gens[i-1] indices;
    # at[i] maps a position to the indices of the generators sitting there
    gens: list[list[tuple[int, dict]]] = [[(bottom, {})]]
    at: list[dict[int, list[int]]] = [{bottom: [0]}]
    result = {bottom: BettiVector.delta(0)}
    for y in order:
        below = P.down(y)
        counts = {}
        kernel: list[dict] = [{0: 1}]
        i = 0
        while kernel:
            if len(gens) == i + 1:
                gens.append([])
                at.append({})
            level, where = gens[i + 1], at[i + 1]
            lower = sorted(k for pos in below.intersection(where) for k in where[pos])
            ech = Echelon(field)
            for k in lower:
                ech.add(level[k][1])
            fresh = [v for v in kernel if ech.add(v)]
            if fresh:
                counts[i + 1] = len(fresh)
                where[y] = list(range(len(level), len(level) + len(fresh)))
                level.extend((y, v) for v in fresh)
            idx = lower + where.get(y, [])
            cols = [level[k][1] for k in idx]
            kernel = [{idx[c]: coef for c, coef in vec.items()}
                      for vec in kernel_basis(cols, field)]
            i += 1
        if targets is None or y in targets:
            result[y] = BettiVector(counts)
    return result


def poset_betti(P: FinitePoset, field: FieldChoice = QQ) -> BettiVector:
    """Reduced Betti vector (Tor grading) of the order complex of ``P``."""
    Q, bottom, top = bounded_extension(P)
    return interval_bettis(Q, bottom, field, targets={top})[top]


# chain count above which "auto" switches from explicit chains to the resolution
CHAIN_LIMIT = 5_000


def order_complex_betti(P: FinitePoset, field: FieldChoice = QQ, *, method: str = "auto",
                        chain_limit: int = CHAIN_LIMIT) -> BettiVector:
    """Reduced Betti vector of the order complex of ``P``.

    ``method`` is ``"chains"`` (build the complex, rank the boundary maps),
    ``"resolution"`` (see ``poset_betti``) or ``"auto"``, which picks chains
    when the complex has at most ``chain_limit`` simplices.
    """
    if method == "auto":
        method = "chains" if sum(P.chain_counts()) <= chain_limit else "resolution"
    if method == "chains":
        return reduced_betti(order_complex(P), field)
    if method == "resolution":
        return poset_betti(P, field)
    raise ValueError(f"unknown method {method!r}")
