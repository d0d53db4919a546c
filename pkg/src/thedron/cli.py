"""``thedron`` command-line frontend.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .activity import dual_h_vector, externally_passive_count, h_vector_via_activity
from .ep import ep_decompose
from .matroid import (
    Presentation,
    PresentationError,
    canonical_form,
    enumerate_bases,
    parse_presentation,
    type_sequence,
)
from .polytope import (
    basis_degree,
    cells,
    ep_of_basis,
    good_lattice_points,
    h_description,
    order_ideal,
    render_rank2_svg,
)
from .verify import random_presentations, thread_count, tree_lemma_suite, verify_many

COMMANDS = ("validate", "bases", "cells", "hvector", "order-ideal", "verify", "plot")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None
    fmt: str
    dual: bool
    random: int | None
    seed: int
    max_n: int
    max_r: int
    out: Path | None
    corrupt_ep: bool


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="thedron",
        description="Transversal matroids, their transversalhedra and cotransversal h-vectors.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", type=Path, help="presentation file (JSON or plain text)")
    p.add_argument("--dual", action="store_true", help="hvector: report the dual h-vector")
    p.add_argument("--format", dest="fmt", choices=("table", "json", "csv"), default="table")
    p.add_argument("--random", type=int, metavar="N", help="verify: N seeded random presentations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-r", type=int, default=4)
    p.add_argument("--out", type=Path, help="output file (required for plot)")
    # negative control for the verifier: shifts ep of the first basis by one
    p.add_argument("--corrupt-ep", action="store_true", help=argparse.SUPPRESS)
    return p


def _load(cfg: RunConfig) -> Presentation:
    if cfg.input is None:
        raise InputError("--input is required")
    try:
        data = cfg.input.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from None
    try:
        return parse_presentation(data)
    except PresentationError as exc:
        raise InputError(str(exc)) from None


def _label(B, n: int) -> str:
    return ("" if n < 10 else ",").join(map(str, B))


def _tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def _set(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _cmd_validate(cfg: RunConfig) -> tuple[str, int]:
    P = _load(cfg)
    _, T = canonical_form(P)
    types = " ".join(_set(I) for I in T.types)
    return f"ok: n={P.n} r={P.r} m={T.m} types {types} l={_tuple(T.multiplicities)}\n", EXIT_OK


def _cmd_bases(cfg: RunConfig) -> tuple[str, int]:
    Q, T = canonical_form(_load(cfg))
    rows = []
    for B in enumerate_bases(Q):
        rows.append((B, type_sequence(T, B), externally_passive_count(Q, B).ep, basis_degree(T, B).total))
    if cfg.fmt == "json":
        return _dump({
            "h": list(h_vector_via_activity(Q)),
            "dual_h": list(dual_h_vector(Q)),
            "bases": [
                {"elements": list(B), "type_seq": list(a), "ep": ep, "d": d} for B, a, ep, d in rows
            ],
        }), EXIT_OK
    if cfg.fmt == "csv":
        return _csv([("basis", "type_seq", "ep", "d")] + [
            (" ".join(map(str, B)), " ".join(map(str, a)), ep, d) for B, a, ep, d in rows
        ]), EXIT_OK
    lines = ["B | type sequence | ep | d"]
    lines += [f"{_label(B, Q.n)} | {_tuple(a)} | {ep} | {d}" for B, a, ep, d in rows]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_cells(cfg: RunConfig) -> tuple[str, int]:
    Q, T = canonical_form(_load(cfg))
    cs = cells(T)
    min_ep = {}
    for B in enumerate_bases(Q):
        a = type_sequence(T, B)
        min_ep.setdefault(a, ep_decompose(T, B).base_part)
    if cfg.fmt == "json":
        X = order_ideal(T)
        doc = {
            "cells": [dict(c.to_json(), min_ep=min_ep.get(c.a)) for c in cs],
            "good_points": [list(p) for p in good_lattice_points(h_description(T))],
            "order_ideal": {"degree_sequence": list(X.degree_sequence), "pure": X.pure},
        }
        return _dump(doc), EXIT_OK
    if cfg.fmt == "csv":
        return _csv([("a", "ep_set", "zero_pattern", "gf")] + [
            (" ".join(map(str, c.a)), " ".join(map(str, sorted(c.ep_set))),
             " ".join(map(str, sorted(c.zero_pattern))), " ".join(map(str, c.gf)))
            for c in cs
        ]), EXIT_OK
    lines = ["a | EP | zero pattern | gf"]
    lines += [f"{_tuple(c.a)} | {_set(c.ep_set)} | {_set(c.zero_pattern)} | {list(c.gf)}" for c in cs]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_hvector(cfg: RunConfig) -> tuple[str, int]:
    Q, _ = canonical_form(_load(cfg))
    key = "dual_h" if cfg.dual else "h"
    h = dual_h_vector(Q) if cfg.dual else h_vector_via_activity(Q)
    if cfg.fmt == "json":
        return _dump({key: list(h)}), EXIT_OK
    if cfg.fmt == "csv":
        return _csv([[key] + list(h)]), EXIT_OK
    return _tuple(h) + "\n", EXIT_OK


def _cmd_order_ideal(cfg: RunConfig) -> tuple[str, int]:
    _, T = canonical_form(_load(cfg))
    X = order_ideal(T)
    maximal = X.maximal_monomials()
    if cfg.fmt == "json":
        return _dump({
            "degree_sequence": list(X.degree_sequence),
            "pure": X.pure,
            "top_degree": X.top_degree,
            "maximal_monomials": [list(x) for x in maximal],
        }), EXIT_OK
    if cfg.fmt == "csv":
        return _csv([("exponents", "degree")] + [
            (" ".join(map(str, x)), sum(x)) for x in sorted(X.monomials)
        ]), EXIT_OK
    return (
        f"degree sequence {_tuple(X.degree_sequence)}\n"
        f"pure {X.pure}, top degree {X.top_degree}, {len(maximal)} maximal monomials\n"
    ), EXIT_OK


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.random is not None:
        if cfg.random < 0:
            raise InputError("--random must be non-negative")
        instances = random_presentations(cfg.random, cfg.seed, cfg.max_n, cfg.max_r)
        suites = tree_lemma_suite(1000, cfg.seed)
    else:
        instances = [_load(cfg)]
        suites = ()

    def corrupted_ep(P, B):
        ep = ep_of_basis(P, B)
        return ep + 1 if tuple(B) == enumerate_bases(P)[0] else ep

    ep_fn = corrupted_ep if cfg.corrupt_ep else ep_of_basis

    reports = verify_many(instances, ep_fn, thread_count())
    failures = [(i, r.first_failure()) for i, r in enumerate(reports) if not r.passed]
    failures += [("trees", c) for c in suites if not c.passed]
    ok = not failures

    if cfg.fmt == "json":
        doc = {
            "passed": ok,
            "instances": [
                {
                    "presentation": P.to_json(),
                    "checks": [
                        {"name": c.name, "passed": c.passed, "counterexample": c.counterexample}
                        for c in r.checks
                    ],
                }
                for P, r in zip(instances, reports)
            ],
            "tree_suites": [{"name": c.name, "passed": c.passed} for c in suites],
        }
        return _dump(doc), EXIT_OK if ok else EXIT_FAIL
    if cfg.fmt == "csv":
        rows = [("instance", "check", "passed", "counterexample")]
        for i, r in enumerate(reports):
            rows += [(i, c.name, c.passed, c.counterexample or "") for c in r.checks]
        rows += [("trees", c.name, c.passed, c.counterexample or "") for c in suites]
        return _csv(rows), EXIT_OK if ok else EXIT_FAIL

    n_checks = sum(len(r.checks) for r in reports)
    lines = [f"{len(instances)} instance(s), {n_checks} checks"]
    lines += [f"{'PASS' if c.passed else 'FAIL'} {c.name}" for c in suites]
    if ok:
        lines.append("all checks passed")
    else:
        where, check = failures[0]
        lines.append(f"FAIL [{where}] {check.name}: {check.counterexample}")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


def _cmd_plot(cfg: RunConfig) -> tuple[str, int]:
    if cfg.out is None:
        raise InputError("plot needs --out FILE")
    _, T = canonical_form(_load(cfg))
    try:
        render_rank2_svg(T, cfg.out)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return f"wrote {cfg.out}\n", EXIT_OK


HANDLERS = {
    "validate": _cmd_validate,
    "bases": _cmd_bases,
    "cells": _cmd_cells,
    "hvector": _cmd_hvector,
    "order-ideal": _cmd_order_ideal,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    cfg = RunConfig(
        args.command, args.input, args.fmt, args.dual, args.random, args.seed,
        args.max_n, args.max_r, args.out, args.corrupt_ep,
    )
    try:
        text, code = HANDLERS[cfg.command](cfg)
    except InputError as exc:
        print(f"thedron: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.out is not None and cfg.command != "plot":
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
