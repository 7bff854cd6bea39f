"""Command-line interface.

Exit codes: 0 every check holds, 1 a check failed, 2 bad input or usage,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, files, search
from .dualtriangular import check_cclybe, induce_bracket
from .errors import InconsistencyError, LeibnizForgeError
from .nijenhuis import (
    build_n,
    build_s,
    check_nijenhuis_cooperator,
    check_nijenhuis_operator,
    pipeline_theorem_310,
    pipeline_theorem_315,
)
from .structures import (
    BilinearForm,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    LinearOperator,
    check_cosymplectic,
    check_symplectic,
)
from .tensor import Tensor
from .yangbaxter import check_bialgebra, check_theorem26, check_ybe_variant, induce_coproduct

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class UsageError(LeibnizForgeError):
    pass


# --------------------------------------------------------------------------
# loading


def _load(**paths):
    """Load several structure files into one shared ring, checking kinds and bases."""
    wanted = {
        "algebra": (LeibnizAlgebra,),
        "coalgebra": (LeibnizCoalgebra,),
        "r": (Tensor, BilinearForm),
        "omega": (BilinearForm, Tensor),
        "op": (LinearOperator,),
    }
    docs = {k: files.read_doc(p) for k, p in paths.items() if p is not None}
    if not docs:
        return {}
    bases = {d.basis for d in docs.values()}
    if len(bases) > 1:
        raise UsageError("input files declare different bases: " + " vs ".join(str(list(b)) for b in bases))
    ring = files.merge_scalars(*docs.values())
    out = {}
    for key, doc in docs.items():
        obj = files.build(doc, ring)
        if not isinstance(obj, wanted[key]):
            raise UsageError(f"{doc.source}: expected {key} data, found kind {doc.kind}")
        if key == "r" and isinstance(obj, BilinearForm):
            obj = obj.matrix
        if key == "omega" and isinstance(obj, Tensor):
            obj = BilinearForm(obj)
        out[key] = obj
    return out


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join('--' + m.replace('_', '-') for m in missing)}")


# --------------------------------------------------------------------------
# output


def _emit(args, report, holds: bool) -> int:
    data = report.to_dict() if hasattr(report, "to_dict") else report
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    out = getattr(args, "output", None)
    if out and getattr(args, "writes_report", True):
        Path(out).write_text(text, encoding="utf-8")
    if not args.quiet:
        sys.stdout.write(text if args.json else str(report) + "\n")
    return EXIT_OK if holds else EXIT_FAIL


def _write_structure(args, obj, basis) -> int:
    if not args.output:
        raise UsageError("-o OUT is required")
    path = files.write(obj, args.output, basis)
    if not args.quiet:
        if args.json:
            sys.stdout.write(files.dumps(files.to_doc(obj, basis)))
        else:
            sys.stdout.write(f"wrote {path}\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    what = args.what
    if what == "algebra":
        alg = files.build(files.read_doc(args.file))
        if not isinstance(alg, LeibnizAlgebra):
            raise UsageError(f"{args.file}: not a leibniz-algebra file")
        rep = alg.validation
        return _emit(args, rep, rep.holds)
    if what == "coalgebra":
        co = files.build(files.read_doc(args.file))
        if not isinstance(co, LeibnizCoalgebra):
            raise UsageError(f"{args.file}: not a leibniz-coalgebra file")
        rep = co.validation
        return _emit(args, rep, rep.holds)
    if what == "clybe":
        _require(args, "algebra", "r")
        s = _load(algebra=args.algebra, r=args.r)
        rep = check_ybe_variant(s["algebra"], s["r"], args.variant, warn=False)
        return _emit(args, rep, rep.holds)
    if what == "thm26":
        _require(args, "algebra", "r")
        s = _load(algebra=args.algebra, r=args.r)
        b = check_theorem26(s["algebra"], s["r"])
        return _emit(args, b, b.holds)
    if what == "bialgebra":
        _require(args, "algebra", "coalgebra")
        s = _load(algebra=args.algebra, coalgebra=args.coalgebra)
        b = check_bialgebra(s["algebra"], s["coalgebra"])
        return _emit(args, b, b.holds)
    if what == "symplectic":
        _require(args, "algebra", "omega")
        s = _load(algebra=args.algebra, omega=args.omega)
        rep = check_symplectic(s["algebra"], s["omega"])
        return _emit(args, rep, rep.holds)
    if what == "cosymplectic":
        _require(args, "coalgebra", "r")
        s = _load(coalgebra=args.coalgebra, r=args.r)
        rep = check_cosymplectic(s["coalgebra"], s["r"])
        return _emit(args, rep, rep.holds)
    if what == "cclybe":
        _require(args, "coalgebra", "omega")
        s = _load(coalgebra=args.coalgebra, omega=args.omega)
        rep = check_cclybe(s["coalgebra"], s["omega"])
        return _emit(args, rep, rep.holds)
    raise UsageError(f"unknown verify target {what!r}")


def cmd_induce(args) -> int:
    if args.what == "coproduct":
        _require(args, "algebra", "r")
        s = _load(algebra=args.algebra, r=args.r)
        s["algebra"].require_valid()
        co = induce_coproduct(s["algebra"], s["r"])
        return _write_structure(args, co, co.basis)
    _require(args, "coalgebra", "omega")
    s = _load(coalgebra=args.coalgebra, omega=args.omega)
    br = induce_bracket(s["coalgebra"], s["omega"])
    return _write_structure(args, br, br.basis)


def cmd_nijenhuis(args) -> int:
    if args.action == "build":
        _require(args, "omega", "r")
        s = _load(omega=args.omega, r=args.r)
        basis = files.read_doc(args.r).basis
        op = build_n(s["omega"], s["r"]) if args.mode == "N" else build_s(s["r"], s["omega"])
        return _write_structure(args, op, basis)
    _require(args, "op")
    if (args.algebra is None) == (args.coalgebra is None):
        raise UsageError("give exactly one of --algebra or --coalgebra")
    if args.algebra is not None:
        s = _load(algebra=args.algebra, op=args.op)
        rep = check_nijenhuis_operator(s["algebra"], s["op"])
    else:
        s = _load(coalgebra=args.coalgebra, op=args.op)
        rep = check_nijenhuis_cooperator(s["coalgebra"], s["op"], literal=args.literal_25)
    return _emit(args, rep, rep.holds)


def cmd_pipeline(args) -> int:
    if args.theorem == "thm310":
        _require(args, "algebra", "r", "omega")
        s = _load(algebra=args.algebra, r=args.r, omega=args.omega)
        res = pipeline_theorem_310(s["algebra"], s["r"], s["omega"])
    else:
        _require(args, "coalgebra", "omega", "r")
        s = _load(coalgebra=args.coalgebra, omega=args.omega, r=args.r)
        res = pipeline_theorem_315(s["coalgebra"], s["omega"], s["r"])
    data = res.bundle.to_dict()
    if res.operator is not None:
        data["operator"] = files.to_doc(res.operator, (s.get("algebra") or s.get("coalgebra")).basis)
    if args.json or args.quiet:
        return _emit(args, data, res.holds)
    code = _emit(args, res.bundle, res.holds)
    if res.operator is not None:
        basis = (s.get("algebra") or s.get("coalgebra")).basis
        sys.stdout.write(_describe_operator(res.operator, basis) + "\n")
    return code


def _describe_operator(op: LinearOperator, basis) -> str:
    lines = []
    for j, b in enumerate(basis):
        col = op.image(j)
        terms = [f"({v})*{basis[i]}" for i, v in enumerate(col.entries) if v]
        lines.append(f"  {b} -> {' + '.join(terms) if terms else '0'}")
    return "operator:\n" + "\n".join(lines)


# --------------------------------------------------------------------------
# catalog


def cmd_catalog(args) -> int:
    if args.action == "list":
        ids = catalog.list_entries()
        if not args.quiet:
            if args.json:
                sys.stdout.write(json.dumps(ids, indent=2) + "\n")
            else:
                sys.stdout.write("\n".join(ids) + "\n")
        return EXIT_OK
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an entry id")
        return _emit(args, _show(catalog.get_entry(args.id)), True)
    if args.action == "verify":
        if args.all == bool(args.id):
            raise UsageError("give an entry id or --all")
        if args.all:
            summary = catalog.verify_all()
            return _emit(args, summary, summary.passed)
        rep = catalog.verify_entry(args.id)
        return _emit(args, rep, rep.passed)
    if args.action == "export":
        if not args.id or not args.output:
            raise UsageError("catalog export needs an entry id and -o DIR")
        written = catalog.export_entry(args.id, args.output)
        if not args.quiet:
            if args.json:
                sys.stdout.write(json.dumps([str(p) for p in written], indent=2) + "\n")
            else:
                sys.stdout.write("\n".join(f"wrote {p}" for p in written) + "\n")
        return EXIT_OK
    raise UsageError(f"unknown catalog action {args.action!r}")


class _Shown(dict):
    def to_dict(self):
        return dict(self)

    def __str__(self):
        lines = [f"{self['id']} ({self['kind']})", f"  scalars: {json.dumps(self['scalars'], ensure_ascii=False)}"]
        for c in self["constraints"]:
            lines.append(f"  constraint: {c}")
        for name, doc in self["structures"].items():
            lines.append(f"  {name} ({doc['kind']}):")
            for item in doc["payload"]:
                lines.append(f"    {_payload_text(item)}")
        for e in self["errata"]:
            lines.append(f"  erratum [{e['entry']} {e['field']}]: {e['note']}")
        return "\n".join(lines)


def _payload_text(item) -> str:
    if "coeff" in item:
        return f"{item['left']}(x){item['right']}: {item['coeff']}"
    if "left" in item:
        return f"[{item['left']}, {item['right']}] = " + " + ".join(f"({v})*{k}" for k, v in item["value"].items())
    if isinstance(item["value"], list):
        return f"delta({item['of']}) = " + " + ".join(
            f"({t['coeff']})*{t['left']}(x){t['right']}" for t in item["value"]
        )
    return f"{item['of']} -> " + " + ".join(f"({v})*{k}" for k, v in item["value"].items())


def _show(entry) -> _Shown:
    basis = entry.basis
    structures = {}
    for name, obj in (
        ("algebra", entry.algebra),
        ("coalgebra", entry.coalgebra),
        ("r", entry.r),
        ("expected_coproduct", entry.expected_coproduct),
        ("omega", entry.omega),
        ("expected_bracket", entry.expected_bracket),
    ):
        if obj is not None:
            structures[name] = files.to_doc(obj, basis)
    for case in entry.cases:
        for name, obj in (("r", case.r), ("omega", case.omega), ("operator", case.operator)):
            if obj is not None:
                structures[f"{case.label}:{name}"] = files.to_doc(obj, basis)
    return _Shown(
        id=entry.id,
        kind=entry.kind,
        scalars=entry.ring.to_dict(),
        constraints=list(entry.constraints) + [c for case in entry.cases for c in case.constraints],
        structures=structures,
        errata=[e.to_dict() for e in entry.errata],
    )


# --------------------------------------------------------------------------
# search


class _SearchOut(dict):
    def to_dict(self):
        return dict(self)

    def __str__(self):
        lines = [
            f"{self['count']} solutions among {self['examined']} candidates "
            f"(F_{self['field']}, indices {self['range'][0]}..{self['range'][1] - 1})"
        ]
        for s in self["solutions"]:
            lines.append("  " + "; ".join(" ".join(row) for row in s))
        return "\n".join(lines)


def cmd_search(args) -> int:
    if args.action == "cross-check":
        if not args.id:
            raise UsageError("search cross-check needs an entry id")
        rep = search.cross_check(args.id, args.field)
        return _emit(args, rep, rep.holds)
    if args.action == "closure":
        _require(args, "theorem")
        if args.theorem == "thm310":
            _require(args, "algebra")
            target = files.build(files.read_doc(args.algebra))
        else:
            _require(args, "coalgebra")
            target = files.build(files.read_doc(args.coalgebra))
        rep = search.closure_sweep(target, args.theorem, args.field)
        return _emit(args, rep, rep.holds)
    if args.action is not None:
        raise UsageError(f"unknown search action {args.action!r}")
    if (args.algebra is None) == (args.coalgebra is None):
        raise UsageError("give exactly one of --algebra or --coalgebra")
    target = files.build(files.read_doc(args.algebra or args.coalgebra))
    predicate = args.predicate or ("clybe" if args.algebra else "cclybe")
    space = search.SearchSpace(target, args.field, args.symmetric, predicate)
    if args.shards > 1 and args.shard is None:
        result = search.enumerate_sharded(space, args.shards)
    else:
        result = search.enumerate_solutions(space, args.shards, args.shard or 0)
    out = _SearchOut(result.to_dict())
    out["check"] = f"search-{predicate}"
    out["holds"] = True
    if args.output:
        d = Path(args.output)
        d.mkdir(parents=True, exist_ok=True)
        width = len(str(max(result.count - 1, 0)))
        for i, sol in enumerate(result.solutions):
            obj = BilinearForm(sol) if predicate == "cclybe" else sol
            files.write(obj, d / f"solution-{i:0{width}d}.json", target.basis)
        (d / "summary.json").write_text(json.dumps(out.to_dict(), indent=2) + "\n", encoding="utf-8")
    args.writes_report = False
    return _emit(args, out, True)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no output, exit code only")
    common.add_argument("-o", "--output", default=argparse.SUPPRESS, help="output file or directory")

    p = argparse.ArgumentParser(prog="leibniz-forge", description="Exact checks for Leibniz bialgebra structures.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--quiet", action="store_true", help="no output, exit code only")
    p.add_argument("-o", "--output", default=None, help="output file or directory")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check an identity")
    v.add_argument(
        "what",
        choices=["algebra", "coalgebra", "clybe", "thm26", "bialgebra", "symplectic", "cosymplectic", "cclybe"],
    )
    v.add_argument("file", nargs="?", help="structure file (verify algebra|coalgebra)")
    for name in ("algebra", "coalgebra", "r", "omega"):
        v.add_argument(f"--{name}")
    v.add_argument("--variant", choices=["eq11", "eq12", "eq13"], default="eq11")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("induce", parents=[common], help="build a coproduct or bracket")
    i.add_argument("what", choices=["coproduct", "bracket"])
    for name in ("algebra", "coalgebra", "r", "omega"):
        i.add_argument(f"--{name}")
    i.set_defaults(func=cmd_induce)

    n = sub.add_parser("nijenhuis", parents=[common], help="build or check Nijenhuis operators")
    n.add_argument("action", choices=["build", "check"])
    n.add_argument("--mode", choices=["N", "S"], default="N")
    for name in ("algebra", "coalgebra", "r", "omega", "op"):
        n.add_argument(f"--{name}")
    n.add_argument("--literal-25", action="store_true", help="use the literal co-Nijenhuis reading")
    n.set_defaults(func=cmd_nijenhuis)

    pl = sub.add_parser("pipeline", parents=[common], help="run a Nijenhuis construction end to end")
    pl.add_argument("theorem", choices=["thm310", "thm315"])
    for name in ("algebra", "coalgebra", "r", "omega"):
        pl.add_argument(f"--{name}")
    pl.set_defaults(func=cmd_pipeline)

    c = sub.add_parser("catalog", parents=[common], help="list, show, verify or export catalog entries")
    c.add_argument("action", choices=["list", "show", "verify", "export"])
    c.add_argument("id", nargs="?")
    c.add_argument("--all", action="store_true")
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", parents=[common], help="brute-force solutions over a small field")
    s.add_argument("action", nargs="?", choices=["cross-check", "closure"])
    s.add_argument("id", nargs="?")
    s.add_argument("--algebra")
    s.add_argument("--coalgebra")
    s.add_argument("--field", type=int, default=3)
    s.add_argument("--predicate", choices=list(search.PREDICATES))
    s.add_argument("--symmetric", action="store_true", help="only symmetric candidates")
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--shard", type=int)
    s.add_argument("--theorem", choices=["thm310", "thm315"])
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_BUG
    except LeibnizForgeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
