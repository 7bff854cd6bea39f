"""The catalog of low-dimensional Leibniz algebras, their symmetric r-matrix
families, and worked Nijenhuis examples, plus the engine that verifies them.

Family ids look like ``dim2-b/r1`` or ``dim3-7/r2``; example ids like
``ex-3.11/1``. Entries are built once from the static tables in
:mod:`.dim2`, :mod:`.dim3` and :mod:`.examples` and are immutable.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path
from typing import Iterable, Mapping

from .. import files
from ..dualtriangular import check_cclybe, check_form_characterization, induce_bracket
from ..errors import ShapeError, UnknownEntryError
from ..nijenhuis import pipeline_theorem_310, pipeline_theorem_315
from ..scalar import ScalarRing
from ..structures import (
    BilinearForm,
    CheckReport,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    LinearOperator,
    make_report,
    tensor_report,
)
from ..tensor import Tensor
from ..yangbaxter import check_bialgebra, check_eq5_literal, check_ybe_variant, induce_coproduct, triangular_report
from . import dim2, dim3, examples

__all__ = [
    "DISPLAY",
    "CatalogEntry",
    "ExampleCase",
    "Erratum",
    "EntryReport",
    "CatalogSummary",
    "list_entries",
    "get_entry",
    "catalog_algebras",
    "catalog_coalgebras",
    "verify_entry",
    "verify_all",
    "variant_fixture",
    "export_entry",
]

DISPLAY = {"lambda": "λ", "gamma": "γ", "nu": "ν", "kappa": "κ", "alpha": "α"}


# --------------------------------------------------------------------------
# entry types


@dataclass(frozen=True)
class Erratum:
    """Printed data that contradicts its own claims, with the value used instead."""

    entry: str
    field: str
    printed: str
    reconstructed: str
    note: str

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "field": self.field,
            "printed": self.printed,
            "reconstructed": self.reconstructed,
            "note": self.note,
        }


@dataclass(frozen=True)
class ExampleCase:
    label: str
    ring: ScalarRing
    algebra: LeibnizAlgebra | None
    coalgebra: LeibnizCoalgebra | None
    r: Tensor | None = None
    omega: BilinearForm | None = None
    operator: LinearOperator | None = None
    pipeline: str | None = None
    checks: tuple[str, ...] = ()
    expect_failures: tuple[str, ...] = ()
    printed: Mapping[str, Tensor] = field(default_factory=dict)
    constraints: tuple[str, ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str  # "family" or "example"
    ring: ScalarRing
    algebra: LeibnizAlgebra | None = None
    coalgebra: LeibnizCoalgebra | None = None
    r: Tensor | None = None
    expected_coproduct: LeibnizCoalgebra | None = None
    omega: BilinearForm | None = None
    expected_bracket: LeibnizAlgebra | None = None
    cases: tuple[ExampleCase, ...] = ()
    errata: tuple[Erratum, ...] = ()
    constraints: tuple[str, ...] = ()
    source: str = ""

    @property
    def erratum_flag(self) -> bool:
        return bool(self.errata)

    @property
    def basis(self) -> tuple[str, ...]:
        s = self.algebra or self.coalgebra
        return s.basis

    @property
    def dim(self) -> int:
        return len(self.basis)


# --------------------------------------------------------------------------
# building entries from the tables


def _pin(text: str, fixed: Mapping[str, str]) -> str:
    for name, value in fixed.items():
        text = re.sub(rf"\b{re.escape(name)}\b", f"({value})", text)
    return text


def _tensor2(ring, basis, terms, fixed=None) -> Tensor:
    pos = {b: i for i, b in enumerate(basis)}
    items = [((pos[a], pos[b]), ring(_pin(c, fixed or {}))) for c, a, b in terms]
    return Tensor.from_sparse(ring, len(basis), 2, items)


def _algebra(ring, basis, table, fixed=None) -> LeibnizAlgebra:
    fixed = fixed or {}
    return LeibnizAlgebra.from_table(
        ring, basis, {k: {z: _pin(c, fixed) for z, c in v.items()} for k, v in table.items()}
    )


def _coalgebra(ring, basis, cop) -> LeibnizCoalgebra:
    return LeibnizCoalgebra.from_table(ring, basis, {x: _cop_row(terms) for x, terms in cop.items()})


def _cop_row(terms) -> dict:
    row: dict = {}
    for c, a, b in terms:
        row[(a, b)] = c if (a, b) not in row else f"({row[(a, b)]}) + ({c})"
    return row


def _operator(ring, basis, images) -> LinearOperator:
    return LinearOperator.from_images(ring, basis, images)


def _merge(*specs: Mapping) -> ScalarRing:
    params: list[str] = []
    inv: set[str] = set()
    rels: list[str] = []
    for s in specs:
        for p in s.get("parameters", ()):
            if p not in params:
                params.append(p)
        inv.update(s.get("invertible", ()))
        rels.extend(s.get("relations", ()))
    return ScalarRing(params, inv, rels)


def _algebra_ring(spec: Mapping) -> ScalarRing:
    return _merge(spec)


def _family(data: Mapping, algebras: Mapping) -> CatalogEntry:
    alg_spec = algebras[data["algebra"]]
    fixed = data.get("fixed", {})
    inherited = {
        "parameters": [p for p in alg_spec.get("parameters", ()) if p not in fixed],
        "invertible": [p for p in alg_spec.get("invertible", ()) if p not in fixed],
    }
    ring = _merge(data, inherited)
    basis = alg_spec["basis"]
    alg = _algebra(ring, basis, alg_spec["bracket"], fixed)
    r = _tensor2(ring, basis, data["r"])
    if not r.is_symmetric():
        raise ShapeError(f"catalog data error: r of {data['id']} is not symmetric")
    expected = _coalgebra(ring, basis, data["coproduct"])
    constraints = tuple(alg_spec.get("constraints", ())) + tuple(data.get("constraints", ()))
    constraints += tuple(f"{k} = {v}" for k, v in fixed.items() if f"{k} = {v}" not in constraints)
    return CatalogEntry(
        id=data["id"],
        kind="family",
        ring=ring,
        algebra=alg,
        r=r,
        expected_coproduct=expected,
        constraints=constraints,
        source=f"algebra {data['algebra']}",
    )


def _render(t: Tensor, basis) -> str:
    terms = [f"({v})*{basis[a]}(x){basis[b]}" for (a, b), v in t.nonzero_items()]
    return " + ".join(terms) if terms else "0"


def _example(data: Mapping) -> CatalogEntry:
    eid = data["id"]
    if "algebra" in data:
        base_spec = dim2.ALGEBRAS[data["algebra"]]
        basis = base_spec["basis"]
    else:
        base_spec = examples.COALGEBRAS[data["coalgebra"]]
        basis = base_spec["basis"]
    ring = _merge(base_spec, data)

    def base(rg):
        if "algebra" in data:
            return _algebra(rg, basis, base_spec["bracket"]), None
        return None, _coalgebra(rg, basis, base_spec["coproduct"])

    alg, coalg = base(ring)
    r = _tensor2(ring, basis, data["r"]) if "r" in data else None
    omega = BilinearForm(_tensor2(ring, basis, data["omega"])) if "omega" in data else None
    expected_cop = _coalgebra(ring, basis, data["coproduct"]) if "coproduct" in data else None
    expected_br = _algebra(ring, basis, data["bracket"]) if "bracket" in data else None
    cases = []
    errata = []
    for cd in data.get("cases", ()):
        crg = _merge(base_spec, data, cd)
        calg, ccoalg = base(crg)
        rterms = cd.get("r", data.get("r"))
        wterms = cd.get("omega", data.get("omega"))
        printed = {}
        for key in ("r", "omega"):
            if f"printed_{key}" in cd:
                printed[key] = _tensor2(crg, basis, cd[f"printed_{key}"])
                errata.append(
                    Erratum(
                        entry=f"{eid}:{cd['label']}",
                        field=key,
                        printed=_render(printed[key], basis),
                        reconstructed=_render(_tensor2(crg, basis, cd[key]), basis),
                        note=cd["erratum"],
                    )
                )
        cases.append(
            ExampleCase(
                label=cd["label"],
                ring=crg,
                algebra=calg,
                coalgebra=ccoalg,
                r=_tensor2(crg, basis, rterms) if rterms is not None else None,
                omega=BilinearForm(_tensor2(crg, basis, wterms)) if wterms is not None else None,
                operator=_operator(crg, basis, cd["operator"]) if "operator" in cd else None,
                pipeline=cd.get("pipeline"),
                checks=tuple(cd.get("checks", ())),
                expect_failures=tuple(cd.get("expect_failures", ())),
                printed=printed,
                constraints=tuple(cd.get("constraints", ())),
            )
        )
    return CatalogEntry(
        id=eid,
        kind="example",
        ring=ring,
        algebra=alg,
        coalgebra=coalg,
        r=r,
        expected_coproduct=expected_cop,
        omega=omega,
        expected_bracket=expected_br,
        cases=tuple(cases),
        errata=tuple(errata),
        source=f"algebra {data['algebra']}" if "algebra" in data else "coalgebra q2",
    )


@cache
def _entries() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}
    for module in (dim2, dim3):
        for data in module.FAMILIES:
            if data["id"] in out:
                raise ShapeError(f"catalog data error: duplicate id {data['id']}")
            out[data["id"]] = _family(data, module.ALGEBRAS)
    for data in examples.EXAMPLES:
        if data["id"] in out:
            raise ShapeError(f"catalog data error: duplicate id {data['id']}")
        out[data["id"]] = _example(data)
    return out


def list_entries(kind: str | None = None) -> list[str]:
    """Entry ids in catalog order (two-dimensional families, three-dimensional families, examples)."""
    return [k for k, e in _entries().items() if kind is None or e.kind == kind]


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _entries()[entry_id]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {entry_id!r}") from None


@cache
def catalog_algebras() -> dict[str, LeibnizAlgebra]:
    """Every catalog algebra over its own ring, keyed ``dim2-a`` ... ``dim3-13``."""
    out = {}
    for dim, module in ((2, dim2), (3, dim3)):
        for name, spec in module.ALGEBRAS.items():
            out[f"dim{dim}-{name}"] = _algebra(_algebra_ring(spec), spec["basis"], spec["bracket"])
    return out


@cache
def catalog_coalgebras() -> dict[str, LeibnizCoalgebra]:
    return {name: _coalgebra(_algebra_ring(s), s["basis"], s["coproduct"]) for name, s in examples.COALGEBRAS.items()}


# --------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class EntryReport:
    """Per-check verdicts for one entry; ``passed`` ignores ``informational``."""

    id: str
    kind: str
    checks: tuple[CheckReport, ...]
    informational: tuple[CheckReport, ...] = ()
    errata: tuple[Erratum, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.holds]

    def __getitem__(self, name: str) -> CheckReport:
        for c in self.checks + self.informational:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks + self.informational)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "informational": [c.to_dict() for c in self.informational],
            "errata": [e.to_dict() for e in self.errata],
            "notes": list(self.notes),
        }

    def __str__(self):
        lines = [f"{self.id}: {'pass' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.extend("  " + ln for ln in str(c).splitlines())
        for c in self.informational:
            body = str(c).splitlines()
            lines.append("  (info) " + body[0])
            lines.extend("  " + ln for ln in body[1:])
        for e in self.errata:
            lines.append(f"  erratum [{e.entry} {e.field}]: {e.note}")
            lines.append(f"    printed:       {e.printed}")
            lines.append(f"    reconstructed: {e.reconstructed}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _prefixed(report: CheckReport, prefix: str) -> CheckReport:
    return report.renamed(f"{prefix}{report.name}")


def _triangular_checks(alg, r, expected, prefix=""):
    """The authoritative triangular checks plus a comparison against the printed coproduct."""
    bundle = triangular_report(alg, r)
    checks = [_prefixed(c, prefix) for c in bundle.reports]
    info = []
    notes = []
    if alg.is_valid:
        delta = induce_coproduct(alg, r)
        if expected is not None:
            match = tensor_report(f"{prefix}delta-matches-printed", alg.basis, delta.d - expected.d)
            checks.insert(3, match)
            info.append(_prefixed(expected.validation, f"{prefix}printed-"))
        eq5 = check_eq5_literal(alg, delta)
        info.append(_prefixed(eq5, prefix))
        for variant in ("eq12", "eq13"):
            info.append(_prefixed(check_ybe_variant(alg, r, variant, warn=False, strict=False), prefix))
        if not eq5.holds and bundle.holds:
            notes.append(
                f"erratum: {prefix}eq5-literal fails on a triangular instance "
                f"({len(eq5.residuals)} nonzero residuals); the verdict uses the eq4 route"
            )
    return checks, info, notes


def _hypothesis_control(name: str, failed: list[str], expected: tuple[str, ...], hypotheses) -> CheckReport:
    items = []
    for h in hypotheses:
        should_fail = h in expected
        if (h in failed) != should_fail:
            items.append(((h,), "holds unexpectedly" if should_fail else "fails unexpectedly"))
    return CheckReport(name, tuple(items))


def _run_pipeline(case: ExampleCase, r: Tensor, omega) -> object:
    if case.pipeline == "thm310":
        return pipeline_theorem_310(case.algebra, r, omega)
    return pipeline_theorem_315(case.coalgebra, omega, r)


def _case_structures(entry: CatalogEntry, case: ExampleCase):
    """The algebra/coalgebra pair a case works in."""
    if case.algebra is not None:
        alg = case.algebra
        coalg = induce_coproduct(alg, case.r) if case.r is not None and entry.r is not None else None
        return alg, coalg
    return None, case.coalgebra


def _verify_case(entry: CatalogEntry, case: ExampleCase):
    p = f"{case.label}:"
    checks: list[CheckReport] = []
    info: list[CheckReport] = []
    notes: list[str] = []
    alg, coalg = _case_structures(entry, case)
    if "cclybe" in case.checks:
        checks.append(_prefixed(check_cclybe(coalg, case.omega), p))
    if "dual-triangular" in case.checks:
        br = induce_bracket(coalg, case.omega)
        bundle = check_bialgebra(br, coalg)
        checks.extend(_prefixed(c, f"{p}induced-") for c in bundle.reports)
        info.extend(_prefixed(c, f"{p}induced-") for c in bundle.informational)
        info.extend(_prefixed(c, p) for c in check_form_characterization(coalg, case.omega).reports)
    if case.pipeline:
        result = _run_pipeline(case, case.r, case.omega)
        if case.expect_failures:
            info.extend(_prefixed(c, p) for c in result.bundle.reports)
            checks.append(
                _hypothesis_control(
                    f"{p}expected-failures", result.failed_hypotheses, case.expect_failures, result.hypotheses
                )
            )
        else:
            checks.extend(_prefixed(c, p) for c in result.bundle.reports)
            info.extend(_prefixed(c, p) for c in result.bundle.informational)
            notes.extend(f"{p}{n}" for n in result.bundle.notes)
            if case.operator is not None and result.operator is not None:
                diff = result.operator.matrix - case.operator.matrix
                # index (output, input): coefficient of output label in op(input)
                checks.append(tensor_report(f"{p}operator-matches-printed", entry.basis, diff))
        for key, printed in case.printed.items():
            r = printed if key == "r" else case.r
            w = printed if key == "omega" else case.omega
            pr = _run_pipeline(case, r, w)
            failed = pr.failed_hypotheses
            info.append(
                CheckReport(f"{p}printed-{key}-hypotheses", tuple(((h,), "fails") for h in failed))
            )
            notes.append(f"{p}printed {key} fails: {', '.join(failed) or 'nothing'}")
    return checks, info, notes


def verify_entry(entry_id: str) -> EntryReport:
    """Run every check for one entry. Failures are report content, never exceptions."""
    entry = get_entry(entry_id)
    if entry.kind == "family":
        checks, info, notes = _triangular_checks(entry.algebra, entry.r, entry.expected_coproduct)
        return EntryReport(entry.id, entry.kind, tuple(checks), tuple(info), (), tuple(notes))
    checks: list[CheckReport] = []
    info: list[CheckReport] = []
    notes: list[str] = []
    if entry.algebra is not None:
        checks.append(entry.algebra.validation)
        if entry.r is not None:
            c, i, n = _triangular_checks(entry.algebra, entry.r, entry.expected_coproduct)
            checks.extend(c[1:])
            info.extend(i)
            notes.extend(n)
    else:
        checks.append(entry.coalgebra.validation)
        if entry.omega is not None:
            checks.append(check_cclybe(entry.coalgebra, entry.omega))
            br = induce_bracket(entry.coalgebra, entry.omega)
            checks.append(br.validation.renamed("induced-eq1"))
            if entry.expected_bracket is not None:
                checks.append(tensor_report("bracket-matches-printed", entry.basis, br.c - entry.expected_bracket.c))
    for case in entry.cases:
        c, i, n = _verify_case(entry, case)
        checks.extend(c)
        info.extend(i)
        notes.extend(n)
    return EntryReport(entry.id, entry.kind, tuple(checks), tuple(info), entry.errata, tuple(notes))


def variant_fixture(entry_id: str) -> dict[str, bool]:
    """Which of the three Yang-Baxter type equations a family's r satisfies."""
    entry = get_entry(entry_id)
    if entry.r is None or entry.algebra is None:
        raise ShapeError(f"{entry_id} has no r-matrix over an algebra")
    return {
        v: check_ybe_variant(entry.algebra, entry.r, v, warn=False, strict=False).holds
        for v in ("eq11", "eq12", "eq13")
    }


@dataclass(frozen=True)
class CatalogSummary:
    reports: tuple[EntryReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def counts(self) -> dict:
        fam = [r for r in self.reports if r.kind == "family"]
        ex = [r for r in self.reports if r.kind == "example"]
        return {
            "entries": len(self.reports),
            "passed": sum(r.passed for r in self.reports),
            "failed": sum(not r.passed for r in self.reports),
            "families": len(fam),
            "families_passed": sum(r.passed for r in fam),
            "examples": len(ex),
            "examples_passed": sum(r.passed for r in ex),
            "errata": sum(bool(r.errata) or any("erratum" in n for n in r.notes) for r in self.reports),
        }

    def eq5_literal_flagged(self) -> list[str]:
        return [r.id for r in self.reports if "eq5-literal" in r and not r["eq5-literal"].holds]

    def to_dict(self) -> dict:
        return {
            "check": "catalog",
            "holds": self.passed,
            "counts": self.counts(),
            "failed": [r.id for r in self.reports if not r.passed],
            "eq5_literal_flagged": self.eq5_literal_flagged(),
            "entries": [r.to_dict() for r in self.reports],
        }

    def __str__(self):
        c = self.counts()
        lines = [f"{r.id:<14} {'pass' if r.passed else 'FAIL  ' + ', '.join(r.failed)}" for r in self.reports]
        lines.append(
            f"{c['passed']}/{c['entries']} entries pass "
            f"({c['families_passed']}/{c['families']} families, {c['examples_passed']}/{c['examples']} examples); "
            f"{c['errata']} with errata"
        )
        return "\n".join(lines)


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("LEIBNIZ_FORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return 1
    return 1


def verify_all(ids: Iterable[str] | None = None, workers: int | None = None) -> CatalogSummary:
    """Verify ``ids`` (default: every entry) and merge in catalog order."""
    ids = list_entries() if ids is None else list(ids)
    for i in ids:
        get_entry(i)
    n = _workers(workers)
    if n > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=min(n, len(ids))) as pool:
            reports = list(pool.map(verify_entry, ids))
    else:
        reports = [verify_entry(i) for i in ids]
    return CatalogSummary(tuple(reports))


# --------------------------------------------------------------------------
# export


def export_entry(entry_id: str, directory: str | Path) -> list[Path]:
    """Write an entry's structures as structure files under ``directory``."""
    entry = get_entry(entry_id)
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    basis = entry.basis

    def put(obj, name, where=out):
        where.mkdir(parents=True, exist_ok=True)
        written.append(files.write(obj, where / name, basis))

    if entry.algebra is not None:
        put(entry.algebra, "algebra.json")
    if entry.coalgebra is not None:
        put(entry.coalgebra, "coalgebra.json")
    if entry.r is not None:
        put(entry.r, "r.json")
    if entry.expected_coproduct is not None:
        put(entry.expected_coproduct, "coproduct.json")
    if entry.omega is not None:
        put(entry.omega, "omega.json")
    if entry.expected_bracket is not None:
        put(entry.expected_bracket, "bracket.json")
    for case in entry.cases:
        where = out / f"case-{case.label}"
        if case.algebra is not None:
            put(case.algebra, "algebra.json", where)
        if case.coalgebra is not None:
            put(case.coalgebra, "coalgebra.json", where)
        if case.r is not None:
            put(case.r, "r.json", where)
        if case.omega is not None:
            put(case.omega, "omega.json", where)
        if case.operator is not None:
            put(case.operator, "operator.json", where)
        for key, t in case.printed.items():
            put(BilinearForm(t) if key == "omega" else t, f"printed-{key}.json", where)
    return written
