"""JSON documents for monoid descriptors, element literals and Betti vectors.

Descriptor grammar::

    {"type": "free", "rank": d}
    {"type": "submonoid", "ambient_rank": d, "generators": [[...], ...]}
    {"type": "glued", "left": M, "right": M, "rho1": ELEM, "rho2": ELEM}
    {"type": "adjoin_root", "base": M, "rho": ELEM, "r": k}

``ELEM`` is an array for vector monoids and ``{"n", "hat1", "hat2"}`` for
glued ones. Element literals for glued monoids may also be a raw pair
``[ELEM1, ELEM2]`` of factor elements, which is normalised.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import DescriptorError
from .homology import BettiVector
from .monoid import Free, Glued, GluedElement, Monoid, Submonoid, adjoin_root


def _require(obj, key: str, path: str):
    if not isinstance(obj, dict):
        raise DescriptorError(f"expected an object, got {type(obj).__name__}", path)
    if key not in obj:
        raise DescriptorError(f"missing key {key!r}", path)
    return obj[key]


def _natural(x, path: str, *, positive: bool = False) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < (1 if positive else 0):
        kind = "positive integer" if positive else "natural number"
        raise DescriptorError(f"expected a {kind}, got {x!r}", path)
    return x


def _vector_literal(obj, d: int, path: str) -> tuple[int, ...]:
    if not isinstance(obj, list):
        raise DescriptorError(f"expected an array of {d} natural numbers", path)
    if len(obj) != d:
        raise DescriptorError(f"expected {d} entries, got {len(obj)}", path)
    return tuple(_natural(c, f"{path}[{k}]") for k, c in enumerate(obj))


def parse_monoid(obj, path: str = "$") -> Monoid:
    kind = _require(obj, "type", path)
    try:
        if kind == "free":
            return Free(_natural(_require(obj, "rank", path), f"{path}.rank", positive=True))
        if kind == "submonoid":
            d = _natural(_require(obj, "ambient_rank", path), f"{path}.ambient_rank",
                         positive=True)
            gens = _require(obj, "generators", path)
            if not isinstance(gens, list):
                raise DescriptorError("expected an array of generators", f"{path}.generators")
            vecs = []
            for k, g in enumerate(gens):
                v = _vector_literal(g, d, f"{path}.generators[{k}]")
                if not any(v):
                    raise DescriptorError("generator is the zero vector",
                                          f"{path}.generators[{k}]")
                vecs.append(v)
            return Submonoid(d, tuple(vecs))
        if kind == "glued":
            left = parse_monoid(_require(obj, "left", path), f"{path}.left")
            right = parse_monoid(_require(obj, "right", path), f"{path}.right")
            rho1 = parse_element(left, _require(obj, "rho1", path), f"{path}.rho1")
            rho2 = parse_element(right, _require(obj, "rho2", path), f"{path}.rho2")
            return Glued(left, right, rho1, rho2)
        if kind == "adjoin_root":
            base = parse_monoid(_require(obj, "base", path), f"{path}.base")
            rho = parse_element(base, _require(obj, "rho", path), f"{path}.rho")
            return adjoin_root(base, rho, _require(obj, "r", path))
    except DescriptorError as exc:
        if exc.path == "$" and path != "$":
            raise DescriptorError(exc.reason, path) from None
        raise
    raise DescriptorError(f"unknown monoid type {kind!r}", f"{path}.type")


def load_monoid(source) -> Monoid:
    """Read a descriptor from a path or an open text file."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from None
    return parse_monoid(obj)


def parse_element(M: Monoid, obj, path: str = "$"):
    """Canonical element of ``M`` from its JSON literal."""
    if isinstance(M, Glued):
        if isinstance(obj, dict):
            n = _natural(_require(obj, "n", path), f"{path}.n")
            h1 = parse_element(M.left, _require(obj, "hat1", path), f"{path}.hat1")
            h2 = parse_element(M.right, _require(obj, "hat2", path), f"{path}.hat2")
            try:
                return M.validate(GluedElement(n, h1, h2))
            except DescriptorError as exc:
                raise DescriptorError(exc.reason, path) from None
        if isinstance(obj, list) and len(obj) == 2:
            x1 = parse_element(M.left, obj[0], f"{path}[0]")
            x2 = parse_element(M.right, obj[1], f"{path}[1]")
            return M.normalize(x1, x2)
        raise DescriptorError("expected {n, hat1, hat2} or a raw pair [x1, x2]", path)
    d = M.rank if isinstance(M, Free) else M.ambient_rank
    v = _vector_literal(obj, d, path)
    try:
        return M.validate(v)
    except DescriptorError as exc:
        raise DescriptorError(exc.reason, path) from None


def monoid_to_json(M: Monoid) -> dict:
    from .monoid import element_to_json

    if isinstance(M, Free):
        return {"type": "free", "rank": M.rank}
    if isinstance(M, Submonoid):
        return {"type": "submonoid", "ambient_rank": M.ambient_rank,
                "generators": [list(g) for g in M.generators]}
    return {"type": "glued", "left": monoid_to_json(M.left), "right": monoid_to_json(M.right),
            "rho1": element_to_json(M.rho1), "rho2": element_to_json(M.rho2)}


def betti_to_json(b: BettiVector) -> dict:
    return {str(i): x for i, x in b.items()}


def betti_from_json(obj) -> BettiVector:
    return BettiVector({int(i): int(x) for i, x in obj.items()})


def betti_csv_rows(label: str, b: BettiVector) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for i, x in b.items():
        w.writerow([label, i, x])
    return buf.getvalue()
