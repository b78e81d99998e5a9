"""Command-line entry point: ``glueyard <verb> ...``; every report is JSON."""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from .complex import SimplicialComplex
from .errors import DomainError, ResourceLimitError
from .glue import coloring_complex, glue, glue_star, hybrid, pip_check, pip_padding
from .homology import RATIONALS, Field, betti_reduced, reduced_euler_characteristic
from .hypergraph import Clutter, Hypergraph, independence_complex
from .jsonio import (
    SCHEMA_VERSION,
    InputError,
    attach_spec_from_json,
    clutter_from_json,
    complex_from_json,
    dumps,
    hybrid_spec_from_json,
    hypergraph_from_json,
    load_json,
)
from .report import ALL_CHECKS, analyze
from .verify import FAMILIES, run_family

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT = 0, 1, 2


def _fields(text: Optional[str]) -> list[Field]:
    if not text:
        return [RATIONALS]
    return [Field.parse(t) for t in text.split(",") if t.strip()]


def _checks(text: str) -> list[str]:
    checks = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in checks if c not in ALL_CHECKS]
    if bad:
        raise InputError(f"unknown check {bad[0]!r}; choose from {', '.join(ALL_CHECKS)}")
    return checks


def _complex_or_hypergraph(obj, covering: bool) -> SimplicialComplex:
    """Complex documents carry ``facets``; hypergraphs are read as their independence complex."""
    if isinstance(obj, dict) and "facets" in obj:
        return complex_from_json(obj)
    if isinstance(obj, dict) and "edges" in obj:
        return independence_complex(hypergraph_from_json(obj, covering))
    raise InputError("input must be a complex (with 'facets') or a hypergraph (with 'edges')")


def _hypergraph_doc(h: Hypergraph) -> dict:
    doc = h.to_json()
    doc["kind"] = "clutter" if isinstance(h, Clutter) else "hypergraph"
    return doc


def _emit(args, lines: list[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _wrap(kind: str, body: dict) -> str:
    return dumps({"schema_version": SCHEMA_VERSION, "kind": kind, **body})


def cmd_analyze(args) -> int:
    cx = _complex_or_hypergraph(load_json(args.inp), args.covering)
    rep = analyze(cx, _checks(args.check), _fields(args.field), args.shell_budget)
    _emit(args, [_wrap("property-report", {"complex": cx.to_json(), "report": rep.to_json()})])
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = load_json(args.spec)
    if args.what == "hybrid":
        central, triples, rest = hybrid_spec_from_json(spec, args.covering)
        out = _hypergraph_doc(hybrid(central, triples, rest))
    elif args.what in ("glue", "glue-star"):
        central, attach = attach_spec_from_json(spec, args.covering)
        out = _hypergraph_doc((glue if args.what == "glue" else glue_star)(central, attach))
    elif args.what == "coloring":
        if not isinstance(spec, dict) or "complex" not in spec or "parts" not in spec:
            raise InputError("coloring spec needs 'complex' and 'parts'")
        out = coloring_complex(complex_from_json(spec["complex"]), spec["parts"]).to_json()
        out["kind"] = "complex"
    else:
        if not isinstance(spec, dict) or "clutter" not in spec or "d" not in spec:
            raise InputError("pip-padding spec needs 'clutter' and 'd'")
        c = clutter_from_json(spec["clutter"], args.covering)
        out = _hypergraph_doc(pip_padding(c, int(spec["d"]), spec.get("exclude", []), spec.get("alpha")))
    out["schema_version"] = SCHEMA_VERSION
    _emit(args, [dumps(out)])
    return EXIT_OK


def cmd_verify(args) -> int:
    fields = _fields(args.field) if args.field else None
    kwargs = {"fields": fields} if fields else {}
    records = run_family(args.theorem, args.count, args.seed, args.max_vertices,
                         shell_budget=args.shell_budget, jobs=args.jobs, **kwargs)
    _emit(args, [dumps({"schema_version": SCHEMA_VERSION, **r}) for r in records])
    return EXIT_DISAGREE if any(r["status"] == "disagree" for r in records) else EXIT_OK


def cmd_pip_check(args) -> int:
    spec = load_json(args.spec)
    if not isinstance(spec, dict) or not {"alpha", "D", "hypergraph"} <= spec.keys():
        raise InputError("pip-check spec needs 'alpha', 'D' and 'hypergraph'")
    rep = pip_check(int(spec["alpha"]), [int(x) for x in spec["D"]],
                    hypergraph_from_json(spec["hypergraph"], args.covering))
    _emit(args, [_wrap("pip-report", rep.to_json())])
    return EXIT_OK


def cmd_homology(args) -> int:
    cx = _complex_or_hypergraph(load_json(args.inp), args.covering)
    if cx.is_void:
        raise DomainError("reduced homology of the void complex is undefined")
    betti = {str(k): betti_reduced(cx, k).to_json() for k in _fields(args.field)}
    _emit(args, [_wrap("homology", {"complex": cx.to_json(), "betti": betti,
                                    "reduced_euler_characteristic": reduced_euler_characteristic(cx)})])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glueyard", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, needs_in=False, needs_spec=False):
        if needs_in:
            sp.add_argument("--in", dest="inp", required=True, help="input JSON file, or - for stdin")
        if needs_spec:
            sp.add_argument("--spec", required=True, help="construction spec JSON file, or -")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--covering-clutter", dest="covering", action="store_true",
                        help="require every ground vertex of a clutter to lie in a circuit")

    a = sub.add_parser("analyze", help="property report for a complex or a hypergraph")
    common(a, needs_in=True)
    a.add_argument("--check", default="vd,shell,cm,scm")
    a.add_argument("--field", help="comma-separated fields, e.g. q,gf:2 (default q)")
    a.add_argument("--shell-budget", type=int)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a glued hypergraph or complex")
    c.add_argument("what", choices=["hybrid", "glue", "glue-star", "coloring", "pip-padding"])
    common(c, needs_spec=True)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a theorem family on seeded random instances")
    v.add_argument("--theorem", choices=FAMILIES, required=True)
    v.add_argument("--count", type=int, default=25)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-vertices", type=int, default=12)
    v.add_argument("--field", help="comma-separated fields (default q,gf:2)")
    v.add_argument("--shell-budget", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    pc = sub.add_parser("pip-check", help="check the proper independence property")
    common(pc, needs_spec=True)
    pc.set_defaults(func=cmd_pip_check)

    h = sub.add_parser("homology", help="reduced Betti numbers")
    common(h, needs_in=True)
    h.add_argument("--field", help="comma-separated fields (default q)")
    h.set_defaults(func=cmd_homology)
    return p


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (DomainError, ResourceLimitError) as exc:
        sys.stderr.write(dumps({"schema_version": SCHEMA_VERSION, "error": type(exc).__name__,
                                "message": str(exc)}) + "\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
