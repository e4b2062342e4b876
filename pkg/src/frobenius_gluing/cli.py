"""Command-line front end.

    frobenius-gluing betti --monoid m23.json --element "[6]"
    frobenius-gluing poincare --monoid free1.json --bound 3
    frobenius-gluing verify-gluing --monoid gm.json --bound 40 --field 2

Exit status: 0 on success or full match, 1 on a verification mismatch,
2 on descriptor/element parse errors and resource-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import DescriptorError, ResourceLimitError
from .frobenius import (FORMAL_S2, METHODS, betti_vector, composition_check,
                        dirsum_predicted_table, frobenius_complex, poincare_table)
from .gluing import verify_gluing
from .homology import EMPTY, MAX_SIMPLICES
from .linalg import QQ, FieldChoice
from .monoid import Glued, direct_sum, element_label, element_to_json
from .serialization import betti_csv_rows, betti_to_json, load_monoid, monoid_to_json, parse_element

COMMANDS = ("show", "interval", "export-complex", "betti", "poincare",
            "verify-gluing", "verify-dirsum", "verify-comp")
NEEDS_ELEMENT = {"interval", "export-complex", "betti"}
NEEDS_BOUND = {"poincare", "verify-gluing", "verify-dirsum", "verify-comp"}
DEFAULT_FORMAT = {"show": "json", "interval": "json", "export-complex": "json",
                  "betti": "csv", "poincare": "csv", "verify-gluing": "text",
                  "verify-dirsum": "text", "verify-comp": "text"}


@dataclass
class RunConfig:
    command: str
    monoid_file: Path
    element: str | None = None
    degree_bound: int | None = None
    field: FieldChoice = QQ
    output: Path | None = None
    format: str | None = None
    jobs: int = 1
    method: str = "auto"
    other_file: Path | None = None
    max_parts: int | None = None
    max_simplices: int = MAX_SIMPLICES

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command in NEEDS_ELEMENT and self.element is None:
            raise ValueError(f"{self.command} requires --element")
        if self.command in NEEDS_BOUND and self.degree_bound is None:
            raise ValueError(f"{self.command} requires --bound")
        if self.command == "verify-dirsum" and self.other_file is None:
            raise ValueError("verify-dirsum requires --other")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ValueError("--bound must be non-negative")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        self.format = self.format or DEFAULT_FORMAT[self.command]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _element(M, literal: str):
    try:
        obj = json.loads(literal)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"element literal is not valid JSON: {exc.msg}", "$element") from None
    return parse_element(M, obj, "$element")


def _show(cfg, M) -> tuple[str, int]:
    gens = [element_to_json(g) for g in M.generators]
    if cfg.format == "json":
        info = {"descriptor": monoid_to_json(M), "generators": gens}
        if isinstance(M, Glued):
            info["rho"] = element_to_json(M.rho)
            info["weights"] = list(M.weights)
        return _dump(info), 0
    lines = [f"{type(M).__name__} monoid", "generators: "
             + ", ".join(element_label(g) for g in M.generators)]
    if isinstance(M, Glued):
        lines.append(f"rho = {element_label(M.rho)}, degree weights {M.weights}")
    return "\n".join(lines) + "\n", 0


def _interval(cfg, M, lam) -> tuple[str, int]:
    P = M.open_interval(lam)
    if cfg.format == "json":
        return _dump(P.to_json(element_to_json)), 0
    lines = [f"open interval (0, {element_label(lam)}): {len(P)} elements"]
    lines += [f"  {element_label(P.elements[i])} < {element_label(P.elements[j])}"
              for i, j in P.covers()]
    return "\n".join(lines) + "\n", 0


def _export_complex(cfg, M, lam) -> tuple[str, int]:
    K = frobenius_complex(M, lam, max_simplices=cfg.max_simplices)
    if K is FORMAL_S2:
        if cfg.format == "json":
            return _dump({"formal": str(FORMAL_S2)}), 0
        return f"{FORMAL_S2}\n", 0
    if cfg.format == "json":
        return _dump(K.to_json(element_to_json)), 0
    return K.face_list(element_label) if K != EMPTY else "", 0


def _betti(cfg, M, lam) -> tuple[str, int]:
    b = betti_vector(M, lam, cfg.field, method=cfg.method, max_simplices=cfg.max_simplices)
    label = element_label(lam)
    if cfg.format == "json":
        return _dump({"element": element_to_json(lam), "degree": M.degree(lam),
                      "field": str(cfg.field), "betti": betti_to_json(b)}), 0
    if cfg.format == "csv":
        return "element,i,beta_i\n" + betti_csv_rows(label, b), 0
    terms = ", ".join(f"beta_{i} = {x}" for i, x in b.items())
    return f"{label}: {terms or 'all zero'}\n", 0


def _render_table(cfg, T) -> str:
    if cfg.format == "json":
        return _dump({"field": str(cfg.field), **T.to_json()})
    return T.to_csv() if cfg.format == "csv" else T.to_text()


def _poincare(cfg, M) -> tuple[str, int]:
    T = poincare_table(M, cfg.degree_bound, cfg.field, method=cfg.method, jobs=cfg.jobs,
                       max_simplices=cfg.max_simplices)
    return _render_table(cfg, T), 0


def _verify_gluing(cfg, M) -> tuple[str, int]:
    if not isinstance(M, Glued):
        raise DescriptorError("verify-gluing needs a glued or adjoin_root descriptor", "$.type")
    report = verify_gluing(M, cfg.degree_bound, cfg.field, method=cfg.method, jobs=cfg.jobs,
                           max_simplices=cfg.max_simplices)
    text = _dump(report.to_json()) if cfg.format == "json" else report.to_text()
    return text, report.exit_code


def _verify_dirsum(cfg, M) -> tuple[str, int]:
    other = load_monoid(cfg.other_file)
    kw = dict(method=cfg.method, jobs=cfg.jobs, max_simplices=cfg.max_simplices)
    T1 = poincare_table(M, cfg.degree_bound, cfg.field, **kw)
    T2 = poincare_table(other, cfg.degree_bound, cfg.field, **kw)
    predicted = dirsum_predicted_table(T1, T2)
    direct = poincare_table(direct_sum(M, other), cfg.degree_bound, cfg.field, **kw)
    bad = direct.diff(predicted)
    if cfg.format == "json":
        return _dump({
            "degree_bound": cfg.degree_bound, "field": str(cfg.field),
            "entries": len(direct), "ok": not bad,
            "mismatches": [{"element": element_to_json(x),
                            "direct": betti_to_json(direct[x]),
                            "predicted": betti_to_json(predicted[x])} for x in bad],
        }), int(bool(bad))
    lines = [f"direct-sum verification over {cfg.field}, degree <= {cfg.degree_bound}: "
             f"{'MISMATCH' if bad else 'OK'}",
             f"  {len(direct)} nonzero entries, {len(bad)} mismatched"]
    lines += [f"  mismatch at {element_label(x)}: direct {direct[x].to_dict()} "
              f"predicted {predicted[x].to_dict()}" for x in bad]
    return "\n".join(lines) + "\n", int(bool(bad))


def _verify_comp(cfg, M) -> tuple[str, int]:
    rows = []
    for lam in M.elements_up_to(cfg.degree_bound):
        if lam == M.zero():
            continue
        try:
            c = composition_check(M, lam, cfg.field, method=cfg.method, max_parts=cfg.max_parts)
            rows.append((lam, c, None))
        except ResourceLimitError as exc:
            rows.append((lam, None, str(exc)))
    bad = [r for r in rows if r[1] is not None and not r[1].ok]
    errors = [r for r in rows if r[2] is not None]
    code = 1 if bad else (2 if errors else 0)
    if cfg.format == "json":
        return _dump({
            "degree_bound": cfg.degree_bound, "field": str(cfg.field),
            "elements": [{"element": element_to_json(lam), "degree": M.degree(lam),
                          "compositions": c.compositions if c else None,
                          "simplices": c.simplices if c else None,
                          "composition_betti": betti_to_json(c.composition_betti) if c else None,
                          "frobenius_betti": betti_to_json(c.frobenius_betti) if c else None,
                          "ok": c.ok if c else None, "error": err}
                         for lam, c, err in rows],
        }), code
    status = {0: "OK", 1: "MISMATCH", 2: "INCOMPLETE"}[code]
    lines = [f"composition poset check over {cfg.field}, degree <= {cfg.degree_bound}: {status}",
             f"  checked {len(rows)}, mismatched {len(bad)}, errors {len(errors)}"]
    for lam, c, _ in bad:
        lines.append(f"  mismatch at {element_label(lam)}: |C| = {c.compositions}, "
                     f"simplices {c.simplices}, C {c.composition_betti.to_dict()} "
                     f"F {c.frobenius_betti.to_dict()}")
    for lam, _, err in errors:
        lines.append(f"  error at {element_label(lam)}: {err}")
    return "\n".join(lines) + "\n", code


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one command; returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        M = load_monoid(cfg.monoid_file)
        lam = _element(M, cfg.element) if cfg.element is not None else None
        if cfg.command == "show":
            text, code = _show(cfg, M)
        elif cfg.command == "interval":
            text, code = _interval(cfg, M, lam)
        elif cfg.command == "export-complex":
            text, code = _export_complex(cfg, M, lam)
        elif cfg.command == "betti":
            text, code = _betti(cfg, M, lam)
        elif cfg.command == "poincare":
            text, code = _poincare(cfg, M)
        elif cfg.command == "verify-gluing":
            text, code = _verify_gluing(cfg, M)
        elif cfg.command == "verify-dirsum":
            text, code = _verify_dirsum(cfg, M)
        else:
            text, code = _verify_comp(cfg, M)
    except DescriptorError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=stderr)
        return 2
    except (OSError, TypeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if cfg.output is not None:
        Path(cfg.output).write_text(text)
    else:
        stdout.write(text)
    return code


def _field(text: str) -> FieldChoice:
    if text.upper() in ("QQ", "Q", "0"):
        return QQ
    try:
        return FieldChoice.prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frobenius-gluing",
                                description="Frobenius complexes and Betti numbers of affine monoids.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--monoid", required=True, type=Path, help="monoid descriptor (JSON)")
    p.add_argument("--element", help='element literal, e.g. "[6]" or \'{"n":1,"hat1":[0],"hat2":[0]}\'')
    p.add_argument("--bound", type=int, help="degree bound for tables and verification")
    p.add_argument("--field", type=_field, default=QQ,
                   help="prime p for GF(p); rationals when omitted")
    p.add_argument("--output", type=Path, help="write here instead of standard output")
    p.add_argument("--format", choices=("json", "csv", "text"))
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--other", type=Path, help="second descriptor for verify-dirsum")
    p.add_argument("--max-parts", type=int, help="part-count cap for verify-comp")
    p.add_argument("--max-simplices", type=int, default=MAX_SIMPLICES,
                   help="simplex cap for explicit order complexes")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, monoid_file=args.monoid, element=args.element,
                        degree_bound=args.bound, field=args.field, output=args.output,
                        format=args.format, jobs=args.jobs, method=args.method,
                        other_file=args.other, max_parts=args.max_parts,
                        max_simplices=args.max_simplices)
    except ValueError as exc:
        parser.error(str(exc))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
