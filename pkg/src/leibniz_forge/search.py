"""Brute-force enumeration of r-matrices and bilinear forms over small fields.

Candidates are indexed ``0 .. |domain|^k - 1`` where ``k`` is the number of
free entries (upper triangle for symmetric candidates, all entries
otherwise), read in row-major order with the first entry as the most
significant digit. Index order is therefore lexicographic order on entry
tuples, and a shard is a contiguous index range, so concatenating shards in
order reproduces the unsharded list exactly.

The Yang-Baxter predicates run on plain integers (or Fractions for rational
grids) without going through the tensor layer, which keeps the oracle
independent of the symbolic checks it is used to validate.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import PreconditionError, ShapeError
from .scalar import QQ, Residue, ScalarRing, evaluate, prime_field
from .structures import BilinearForm, LeibnizAlgebra, LeibnizCoalgebra
from .tensor import Tensor
from .yangbaxter import check_theorem26

__all__ = [
    "FIELDS",
    "MAX_CANDIDATES",
    "SearchSpace",
    "SearchResult",
    "specialize",
    "enumerate_solutions",
    "enumerate_sharded",
    "cross_check",
    "CrossCheckReport",
    "SweepReport",
    "closure_sweep",
]

FIELDS = (2, 3, 5, 7)
MAX_CANDIDATES = 10**8
PREDICATES = ("clybe", "cclybe", "thm26-all")


def _coerce_value(v, ring: ScalarRing):
    if isinstance(v, Residue):
        if v.ring != ring:
            raise PreconditionError("target lives in a different field")
        return v
    if not v.is_constant():
        raise PreconditionError(f"target has a non-constant structure constant {v}; specialize it first")
    return ring.const(v.constant_value())


def specialize(obj, ring: ScalarRing, assignment=None):
    """Copy a structure or tensor into ``ring`` (a prime field or QQ).

    With ``assignment`` the parameters are substituted first; the assignment
    must satisfy the source ring's relations and invertibles.
    """
    if isinstance(obj, LeibnizAlgebra):
        return LeibnizAlgebra(specialize(obj.c, ring, assignment), obj.basis)
    if isinstance(obj, LeibnizCoalgebra):
        return LeibnizCoalgebra(specialize(obj.d, ring, assignment), obj.basis)
    if isinstance(obj, BilinearForm):
        return BilinearForm(specialize(obj.matrix, ring, assignment))
    if not isinstance(obj, Tensor):
        raise ShapeError(f"cannot specialize {type(obj).__name__}")
    out = []
    for v in obj.entries:
        if assignment is not None and not isinstance(v, Residue):
            x = evaluate(v, assignment)
            out.append(x if isinstance(x, Residue) else ring.const(x))
        else:
            out.append(_coerce_value(v, ring))
    return Tensor(ring, obj.dim, obj.order, tuple(out))


# --------------------------------------------------------------------------
# integer kernels


def _nonzero3(t: Tensor, conv) -> list[tuple[int, int, int, object]]:
    n = t.dim
    return [(i, j, k, conv(v)) for (i, j, k), v in t.items() if v]


def _clybe_kernel(cs, n: int, r, mod):
    """True iff ``r12 r23 + r13 r23 - r12^s r13 - r13 r12^s`` vanishes."""
    for a in range(n):
        for b in range(n):
            for d in range(n):
                s = 0
                for x, y, k, c in cs:
                    if k == b:
                        s += c * r[a][x] * r[y][d]
                    if k == d:
                        s += c * r[a][x] * r[b][y]
                    if k == a:
                        s -= c * (r[b][x] * r[y][d] + r[x][d] * r[b][y])
                if (s % mod if mod else s) != 0:
                    return False
    return True


def _cclybe_kernel(ds, n: int, w, mod):
    """True iff ``w(x,y1)w(y2,z) + w(x,z1)w(y,z2) - w(y,x1)w(x2,z) - w(x1,z)w(y,x2)`` vanishes."""
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = 0
                for x, a, b, c in ds:
                    if x == j:
                        s += c * w[i][a] * w[b][k]
                    if x == k:
                        s += c * w[i][a] * w[j][b]
                    if x == i:
                        s -= c * (w[j][a] * w[b][k] + w[a][k] * w[j][b])
                if (s % mod if mod else s) != 0:
                    return False
    return True


# --------------------------------------------------------------------------
# search spaces


@dataclass(frozen=True)
class SearchSpace:
    """What to enumerate.

    ``target`` is a constant-coefficient algebra (predicates ``clybe``,
    ``thm26-all``) or coalgebra (``cclybe``). ``field`` selects F_p; a
    ``grid`` of rationals selects a rational search instead. ``predicate`` may
    also be a callable ``(target, candidate_tensor) -> bool``.
    """

    target: object
    field: int | None = 3
    symmetric: bool = True
    predicate: str | Callable = "clybe"
    grid: tuple | None = None

    def __post_init__(self):
        if self.grid is not None:
            vals = tuple(Fraction(v) for v in self.grid)
            if not vals or len(set(vals)) != len(vals):
                raise PreconditionError("grid must be a non-empty list of distinct rationals")
            object.__setattr__(self, "grid", vals)
            object.__setattr__(self, "field", None)
        elif self.field not in FIELDS:
            raise PreconditionError(f"field must be one of {FIELDS}, got {self.field}")
        if isinstance(self.predicate, str):
            if self.predicate not in PREDICATES:
                raise PreconditionError(f"unknown predicate {self.predicate!r}; expected one of {PREDICATES}")
            want = LeibnizCoalgebra if self.predicate == "cclybe" else LeibnizAlgebra
            if not isinstance(self.target, want):
                raise PreconditionError(f"predicate {self.predicate} needs a {want.__name__} target")
        elif not callable(self.predicate):
            raise PreconditionError("predicate must be a name or a callable")
        if not isinstance(self.target, (LeibnizAlgebra, LeibnizCoalgebra)):
            raise PreconditionError("target must be a Leibniz algebra or coalgebra")

    @property
    def ring(self) -> ScalarRing:
        return QQ if self.grid is not None else prime_field(self.field)

    @property
    def domain(self) -> tuple:
        if self.grid is not None:
            return self.grid
        return tuple(range(self.field))

    @property
    def dim(self) -> int:
        return self.target.dim

    @property
    def positions(self) -> list[tuple[int, int]]:
        n = self.dim
        if self.symmetric:
            return [(i, j) for i in range(n) for j in range(i, n)]
        return [(i, j) for i in range(n) for j in range(n)]

    @property
    def candidate_count(self) -> int:
        return len(self.domain) ** len(self.positions)

    def candidate(self, index: int) -> list[list]:
        """The candidate matrix (plain numbers) with the given index."""
        q = len(self.domain)
        pos = self.positions
        digits = [0] * len(pos)
        for slot in range(len(pos) - 1, -1, -1):
            index, digits[slot] = divmod(index, q)
        return self._matrix(digits)

    def _matrix(self, digits) -> list[list]:
        n = self.dim
        dom = self.domain
        m = [[0] * n for _ in range(n)]
        for (i, j), dgt in zip(self.positions, digits):
            m[i][j] = dom[dgt]
            if self.symmetric:
                m[j][i] = dom[dgt]
        return m

    def to_tensor(self, m) -> Tensor:
        ring = self.ring
        n = self.dim
        return Tensor(ring, n, 2, tuple(ring.const(m[i][j]) for i in range(n) for j in range(n)))


@dataclass(frozen=True)
class SearchResult:
    solutions: tuple[Tensor, ...]
    examined: int
    start: int
    stop: int
    field: int | None

    @property
    def count(self) -> int:
        return len(self.solutions)

    def keys(self) -> list[tuple]:
        """Solutions as tuples of plain numbers, in order."""
        return [tuple(_plain(v) for v in s.entries) for s in self.solutions]

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "range": [self.start, self.stop],
            "examined": self.examined,
            "count": self.count,
            "solutions": [[[str(v) for v in row] for row in s.to_nested()] for s in self.solutions],
        }


def _plain(v):
    return int(v) if isinstance(v, Residue) else v.constant_value()


def _prepare(space: SearchSpace):
    ring = space.ring
    target = specialize(space.target, ring)
    target.require_valid()
    return target


def _make_test(space: SearchSpace, target):
    mod = space.field
    conv = int if mod else (lambda v: v.constant_value())
    n = space.dim
    pred = space.predicate
    if pred == "clybe":
        cs = _nonzero3(target.c, conv)
        return lambda m: _clybe_kernel(cs, n, m, mod)
    if pred == "cclybe":
        ds = _nonzero3(target.d, conv)
        return lambda m: _cclybe_kernel(ds, n, m, mod)
    if pred == "thm26-all":
        return lambda m: check_theorem26(target, space.to_tensor(m)).holds
    return lambda m: bool(pred(target, space.to_tensor(m)))


def _scan(space: SearchSpace, start: int, stop: int) -> tuple[list[list[list]], int]:
    target = _prepare(space)
    test = _make_test(space, target)
    q = len(space.domain)
    k = len(space.positions)
    # decode the first index, then count up like an odometer
    digits = [0] * k
    idx = start
    for slot in range(k - 1, -1, -1):
        idx, digits[slot] = divmod(idx, q)
    found = []
    for _ in range(stop - start):
        m = space._matrix(digits)
        if test(m):
            found.append(m)
        for slot in range(k - 1, -1, -1):
            digits[slot] += 1
            if digits[slot] < q:
                break
            digits[slot] = 0
    return found, stop - start


def _bounds(total: int, shards: int, shard: int) -> tuple[int, int]:
    return total * shard // shards, total * (shard + 1) // shards


def enumerate_solutions(space: SearchSpace, shards: int = 1, shard: int = 0) -> SearchResult:
    """Solutions with index in shard ``shard`` of ``shards`` contiguous ranges, in index order.

    The zero candidate is index 0 and satisfies every homogeneous predicate,
    so an unsharded run always lists it first.
    """
    if shards < 1 or not 0 <= shard < shards:
        raise PreconditionError(f"shard {shard} out of range for {shards} shards")
    total = space.candidate_count
    if total > MAX_CANDIDATES:
        raise PreconditionError(f"search space has {total} candidates, more than the limit {MAX_CANDIDATES}")
    start, stop = _bounds(total, shards, shard)
    found, examined = _scan(space, start, stop)
    return SearchResult(tuple(space.to_tensor(m) for m in found), examined, start, stop, space.field)


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("LEIBNIZ_FORGE_THREADS", "1")))
    except ValueError:
        return 1


def _scan_job(args):
    space, start, stop = args
    return _scan(space, start, stop)


def enumerate_sharded(space: SearchSpace, shards: int = 1, workers: int | None = None) -> SearchResult:
    """Run every shard and concatenate in index order; identical to an unsharded run."""
    total = space.candidate_count
    if total > MAX_CANDIDATES:
        raise PreconditionError(f"search space has {total} candidates, more than the limit {MAX_CANDIDATES}")
    jobs = [(space, *_bounds(total, shards, s)) for s in range(shards)]
    n = _workers(workers)
    if n > 1 and shards > 1 and isinstance(space.predicate, str):
        with ProcessPoolExecutor(max_workers=min(n, shards)) as pool:
            parts = list(pool.map(_scan_job, jobs))
    else:
        parts = [_scan_job(j) for j in jobs]
    found = [m for part, _ in parts for m in part]
    examined = sum(e for _, e in parts)
    return SearchResult(tuple(space.to_tensor(m) for m in found), examined, 0, total, space.field)


# --------------------------------------------------------------------------
# catalog cross-check


@dataclass(frozen=True)
class CrossCheckReport:
    entry: str
    field: int
    skipped: bool = False
    specializations: int = 0
    missing: tuple = ()
    extra: tuple = ()
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.missing

    def to_dict(self) -> dict:
        return {
            "check": "cross-check",
            "entry": self.entry,
            "field": self.field,
            "holds": self.holds,
            "skipped": self.skipped,
            "specializations": self.specializations,
            "missing": [_fmt_key(k) for k in self.missing],
            "extra": [_fmt_key(k) for k in self.extra],
            "notes": list(self.notes),
        }

    def __str__(self):
        if self.skipped:
            return f"cross-check {self.entry} over F_{self.field}: skipped ({'; '.join(self.notes)})"
        lines = [
            f"cross-check {self.entry} over F_{self.field}: "
            f"{'holds' if self.holds else 'FAILS'} ({self.specializations} distinct specializations, "
            f"{len(self.missing)} missing, {len(self.extra)} enumerated solutions outside the catalog families)"
        ]
        lines.extend(f"  missing: {_fmt_key(k)}" for k in self.missing)
        lines.extend(f"  extra: {_fmt_key(k)}" for k in self.extra)
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def _fmt_key(key) -> str:
    if len(key) == 2 and isinstance(key[0], tuple):
        fixed, entries = key
        prefix = ", ".join(f"{p}={v}" for p, v in fixed)
        return f"[{prefix}] {list(entries)}" if prefix else str(list(entries))
    return str(list(key))


def _specializations(entry, field: int):
    """Yield ``(algebra_assignment, algebra, r)`` for every admissible parameter assignment."""
    F = prime_field(field)
    ring = entry.ring
    alg_params = set()
    for v in entry.algebra.c.entries:
        alg_params |= v.parameters_used()
    params = ring.parameters
    for values in itertools.product(range(field), repeat=len(params)):
        assignment = {p: F.const(v) for p, v in zip(params, values)}
        try:
            r = specialize(entry.r, F, assignment)
            alg = specialize(entry.algebra, F, assignment)
        except PreconditionError:
            continue
        key = tuple(sorted((p, int(assignment[p])) for p in alg_params))
        yield key, alg, r


def cross_check(entry_id: str, field: int = 3) -> CrossCheckReport:
    """Every specialization of a family over F_p must be an enumerated cLYBe solution.

    Also lists enumerated solutions that no family on the same algebra
    produces, as observational data.
    """
    from . import catalog

    if field not in FIELDS:
        raise PreconditionError(f"field must be one of {FIELDS}, got {field}")
    entry = catalog.get_entry(entry_id)
    if entry.kind != "family":
        return CrossCheckReport(entry_id, field, skipped=True, notes=("only r-matrix families can be cross-checked",))
    own: dict = {}
    for key, alg, r in _specializations(entry, field):
        own.setdefault(key, (alg, set()))[1].add(tuple(int(v) for v in r.entries))
    if not own:
        return CrossCheckReport(
            entry_id, field, skipped=True, notes=(f"no admissible parameter assignment over F_{field}",)
        )
    siblings = [
        catalog.get_entry(i)
        for i in catalog.list_entries("family")
        if catalog.get_entry(i).source == entry.source
    ]
    covered: dict = {}
    for sib in siblings:
        for key, _, r in _specializations(sib, field):
            covered.setdefault(key, set()).add(tuple(int(v) for v in r.entries))
    missing = []
    extra = []
    total = 0
    notes = []
    if field == 2:
        notes.append("characteristic 2: identities with coefficient 2 degenerate here")
    for key in sorted(own):
        alg, rs = own[key]
        total += len(rs)
        try:
            sols = enumerate_solutions(SearchSpace(alg, field, True, "clybe"))
        except PreconditionError as exc:
            notes.append(f"[{key}] specialized algebra rejected: {exc}")
            continue
        found = set(sols.keys())
        missing.extend((key, m) for m in sorted(rs - found))
        extra.extend((key, s) for s in sorted(found - covered.get(key, set())))
    return CrossCheckReport(entry_id, field, False, total, tuple(missing), tuple(extra), tuple(notes))


# --------------------------------------------------------------------------
# theorem closure sweeps


@dataclass(frozen=True)
class SweepReport:
    theorem: str
    field: int
    instances: int
    hypotheses_passed: int
    conclusions_passed: int

    @property
    def holds(self) -> bool:
        return self.hypotheses_passed == self.conclusions_passed

    def to_dict(self) -> dict:
        return {
            "check": f"closure-{self.theorem}",
            "holds": self.holds,
            "field": self.field,
            "instances": self.instances,
            "hypotheses_passed": self.hypotheses_passed,
            "conclusions_passed": self.conclusions_passed,
        }

    def __str__(self):
        return (
            f"closure sweep {self.theorem} over F_{self.field}: {self.instances} instances, "
            f"{self.hypotheses_passed} pass every hypothesis, {self.conclusions_passed} of those pass the conclusion"
        )


def closure_sweep(target, theorem: str, field: int = 3) -> SweepReport:
    """Run a Nijenhuis pipeline on every (r, omega) pair of matrices over F_p.

    ``theorem`` is ``thm310`` (target: algebra) or ``thm315`` (target:
    coalgebra). A pair whose hypotheses all hold but whose conclusion fails
    raises :class:`InconsistencyError` from the pipeline itself.
    """
    from .nijenhuis import pipeline_theorem_310, pipeline_theorem_315

    if field not in FIELDS:
        raise PreconditionError(f"field must be one of {FIELDS}, got {field}")
    want = {"thm310": LeibnizAlgebra, "thm315": LeibnizCoalgebra}
    if theorem not in want:
        raise PreconditionError(f"unknown theorem {theorem!r}; expected thm310 or thm315")
    if not isinstance(target, want[theorem]):
        raise PreconditionError(f"{theorem} needs a {want[theorem].__name__}")
    F = prime_field(field)
    target = specialize(target, F)
    target.require_valid()
    n = target.dim
    if field ** (2 * n * n) > MAX_CANDIDATES:
        raise PreconditionError("sweep too large")
    mats = [
        Tensor(F, n, 2, tuple(F.const(v) for v in vals))
        for vals in itertools.product(range(field), repeat=n * n)
    ]
    passed = concluded = 0
    for r in mats:
        for w in mats:
            if theorem == "thm310":
                res = pipeline_theorem_310(target, r, w, stop_early=True)
            else:
                res = pipeline_theorem_315(target, w, r, stop_early=True)
            if res.hypotheses_hold:
                passed += 1
                concluded += res.holds
    return SweepReport(theorem, field, len(mats) ** 2, passed, concluded)
