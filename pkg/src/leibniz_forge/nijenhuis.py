"""Nijenhuis operators built from an r-matrix and a bilinear form, and the two construction pipelines.

``build_n(w, r)``: ``N(x) = w(x, r1) r2``.
``build_s(r, w)``: ``S(x) = r1 w(r2, x)``.

Each pipeline evaluates every hypothesis (unless ``stop_early``), then an
intermediate identity, then the Nijenhuis verdict. If all hypotheses hold and
either of the last two fails, :class:`InconsistencyError` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dualtriangular import check_cclybe, induce_bracket
from .errors import InconsistencyError, ShapeError
from .structures import (
    BilinearForm,
    Bundle,
    CheckReport,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    LinearOperator,
    check_cosymplectic,
    check_symplectic,
    make_report,
)
from .tensor import Tensor
from .yangbaxter import check_clybe, induce_coproduct

__all__ = [
    "build_n",
    "build_s",
    "check_nijenhuis_operator",
    "check_nijenhuis_cooperator",
    "check_eq23",
    "check_eq27",
    "PipelineResult",
    "pipeline_theorem_310",
    "pipeline_theorem_315",
    "HYPOTHESES_310",
    "HYPOTHESES_315",
]

HYPOTHESES_310 = ("r-symmetric", "eq11", "eq2", "omega-symmetric", "eq17", "eq21")
HYPOTHESES_315 = ("omega-symmetric", "eq17", "eq1", "r-symmetric", "eq11", "eq24")


def _mat(x) -> Tensor:
    m = getattr(x, "matrix", x)
    if not isinstance(m, Tensor) or m.order != 2:
        raise ShapeError("expected an n x n matrix")
    return m


def _same(a: Tensor, b: Tensor):
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.ring != b.ring:
        raise ShapeError("ring mismatch")


def build_n(omega, r) -> LinearOperator:
    """``N[k][i] = sum_j w[i][j] r[j][k]``."""
    w, rr = _mat(omega), _mat(r)
    _same(w, rr)
    return LinearOperator(w.matmul(rr).flip())


def build_s(r, omega) -> LinearOperator:
    """``S[k][i] = sum_j r[k][j] w[j][i]``."""
    rr, w = _mat(r), _mat(omega)
    _same(w, rr)
    return LinearOperator(rr.matmul(w))


def _op(x) -> LinearOperator:
    return x if isinstance(x, LinearOperator) else LinearOperator(_mat(x))


def check_nijenhuis_operator(alg: LeibnizAlgebra, op, strict: bool = True) -> CheckReport:
    """``[Nx, Ny] + N^2[x, y] - N[Nx, y] - N[x, Ny]`` at basis pairs, indexed ``(x, y, k)``."""
    N = _op(op)
    _same(alg.c, N.matrix)
    if strict:
        alg.require_valid()
    n = alg.dim
    N2 = N.compose(N)
    images = [N.image(i) for i in range(n)]
    units = [_unit(alg.ring, n, i) for i in range(n)]
    items = []
    for i in range(n):
        for j in range(n):
            t = (
                alg.bracket(images[i], images[j])
                + N2(alg.bracket(units[i], units[j]))
                - N(alg.bracket(images[i], units[j]))
                - N(alg.bracket(units[i], images[j]))
            )
            items.extend(((i, j, k), v) for (k,), v in t.items())
    return make_report("nijenhuis", alg.basis, items)


def _unit(ring, n: int, i: int) -> Tensor:
    return Tensor.build(ring, n, 1, lambda k: ring.one if k == i else ring.zero)


def _delta(coalg: LeibnizCoalgebra, vec: Tensor) -> Tensor:
    """``delta`` of a vector as a 2-tensor."""
    n = coalg.dim
    out = Tensor.zeros(coalg.ring, n, 2)
    for i in range(n):
        if vec.entries[i]:
            out = out + coalg.coproduct(i).scale(vec.entries[i])
    return out


def check_nijenhuis_cooperator(coalg: LeibnizCoalgebra, op, literal: bool = False, strict: bool = True) -> CheckReport:
    """Co-Nijenhuis residual per basis ``x``, indexed ``(x, a, b)``.

    Default: ``(S (x) S) delta(x) + delta(S^2 x) - (S (x) id) delta(Sx) - (id (x) S) delta(Sx)``,
    the transpose of the operator condition. With ``literal`` the second term
    is ``(S^2 (x) S^2) delta(x)`` instead.
    """
    S = _op(op)
    _same(coalg.d, S.matrix)
    if strict:
        coalg.require_valid()
    n = coalg.dim
    S2 = S.compose(S)
    items = []
    for x in range(n):
        dx = coalg.coproduct(x)
        dsx = _delta(coalg, S.image(x))
        if literal:
            second = dx.act_on_leg(S2.matrix, 1).act_on_leg(S2.matrix, 2)
        else:
            second = _delta(coalg, S2.image(x))
        t = (
            dx.act_on_leg(S.matrix, 1).act_on_leg(S.matrix, 2)
            + second
            - dsx.act_on_leg(S.matrix, 1)
            - dsx.act_on_leg(S.matrix, 2)
        )
        items.extend(((x,) + idx, v) for idx, v in t.items())
    return make_report("eq25-literal" if literal else "eq25", coalg.basis, items)


def check_eq23(alg: LeibnizAlgebra, r, omega) -> CheckReport:
    """``w(z,r1) w([x,y],r2) + w(y,r1) w([x,z],r2) - w(x,r1) w([y,z],r2) - w(x,r1) w([z,y],r2)``."""
    rr, w = _mat(r), _mat(omega)
    _same(alg.c, rr)
    _same(rr, w)
    n = alg.dim
    # P[x][y] = w(e_x, r1) w(e_y, r2)
    P = w.matmul(rr).matmul(w.flip())
    c = alg.c.entries
    zero = alg.ring.zero

    def pb(z, x, y):  # w(e_z, r1) w([e_x, e_y], r2)
        acc = zero
        for m in range(n):
            s = c[(x * n + y) * n + m]
            if s:
                acc = acc + s * P[z, m]
        return acc

    items = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                items.append(((i, j, k), pb(k, i, j) + pb(j, i, k) - pb(i, j, k) - pb(i, k, j)))
    return make_report("eq23", alg.basis, items)


def check_eq27(coalg: LeibnizCoalgebra, r, omega) -> CheckReport:
    """Four-term 3-tensor built from ``delta``, ``r`` and ``w``, indexed ``(a, b, c)``.

    ``- r1 (x) rb1(1) (x) rb1(2) w(r2, rb2) + r1(1) (x) r1(2) (x) rb2 w(rb1, r2)
      - r1 (x) rb1(2) (x) rb1(1) w(r2, rb2) + r1(1) (x) rb1 (x) r1(2) w(rb2, r2)``
    """
    rr, w = _mat(r), _mat(omega)
    _same(coalg.d, rr)
    _same(rr, w)
    n = coalg.dim
    d = coalg.d.entries
    zero = coalg.ring.zero
    # A[a][q] = w(r2, rb2) weight of r1 = e_a, rb1 = e_q
    # B[q][c] = w(rb1, r2) weight of r1 = e_q, rb2 = e_c
    # C[q][b] = w(rb2, r2) weight of r1 = e_q, rb1 = e_b
    A = rr.matmul(w).matmul(rr.flip())
    B = rr.matmul(w.flip()).matmul(rr)
    C = rr.matmul(w.flip()).matmul(rr.flip())
    items = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                acc = zero
                for q in range(n):
                    acc = acc - A[a, q] * (d[(q * n + b) * n + c] + d[(q * n + c) * n + b])
                    acc = acc + B[q, c] * d[(q * n + a) * n + b]
                    acc = acc + C[q, b] * d[(q * n + a) * n + c]
                items.append(((a, b, c), acc))
    return make_report("eq27", coalg.basis, items)


def _symmetry_report(name: str, basis, m: Tensor) -> CheckReport:
    n = m.dim
    return make_report(name, basis, (((i, j), m[i, j] - m[j, i]) for i in range(n) for j in range(i + 1, n)))


@dataclass(frozen=True)
class PipelineResult:
    operator: LinearOperator | None
    bundle: Bundle
    hypotheses: tuple[str, ...]

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.bundle[h].holds for h in self.hypotheses if h in self.bundle) and all(
            h in self.bundle for h in self.hypotheses
        )

    @property
    def failed_hypotheses(self) -> list[str]:
        return [h for h in self.hypotheses if h in self.bundle and not self.bundle[h].holds]

    @property
    def holds(self) -> bool:
        return self.bundle.holds

    def __iter__(self):
        return iter((self.operator, self.bundle))


def _finish(name, reports, hypotheses, op, conclusion_names, notes=(), informational=()):
    bundle = Bundle(name, tuple(reports), tuple(notes), tuple(informational))
    result = PipelineResult(op, bundle, hypotheses)
    if result.hypotheses_hold:
        broken = [c for c in conclusion_names if c in bundle and not bundle[c].holds]
        if broken:
            raise InconsistencyError(
                f"{name}: every hypothesis holds but {', '.join(broken)} fails"
            )
    return result


def pipeline_theorem_310(alg: LeibnizAlgebra, r, omega, stop_early: bool = False) -> PipelineResult:
    """Symmetric cLYBe solution + symmetric co-Yang-Baxter form for ``delta_r`` + symplectic form
    give the Nijenhuis operator ``N(x) = w(x, r1) r2``."""
    rr, w = _mat(r), _mat(omega)
    _same(alg.c, rr)
    _same(rr, w)
    alg.require_valid()
    basis = alg.basis
    reports = []
    name = "thm310"
    coalg = induce_coproduct(alg, rr)
    steps = (
        lambda: _symmetry_report("r-symmetric", basis, rr),
        lambda: check_clybe(alg, rr, warn=False),
        lambda: coalg.validation,
        lambda: _symmetry_report("omega-symmetric", basis, w),
        lambda: check_cclybe(coalg, w, strict=False),
        lambda: check_symplectic(alg, w, strict=False),
    )
    for step in steps:
        rep = step()
        reports.append(rep)
        if stop_early and not rep.holds:
            return PipelineResult(None, Bundle(name, tuple(reports), ("stopped at first failed hypothesis",)), HYPOTHESES_310)
    reports.append(check_eq23(alg, rr, w))
    N = build_n(w, rr)
    reports.append(check_nijenhuis_operator(alg, N))
    return _finish(name, reports, HYPOTHESES_310, N, ("eq23", "nijenhuis"))


def pipeline_theorem_315(coalg: LeibnizCoalgebra, omega, r, stop_early: bool = False) -> PipelineResult:
    """Symmetric co-Yang-Baxter form + symmetric cLYBe solution for the induced bracket +
    cosymplectic ``r`` give the co-Nijenhuis operator ``S(x) = r1 w(r2, x)``."""
    rr, w = _mat(r), _mat(omega)
    _same(coalg.d, rr)
    _same(rr, w)
    coalg.require_valid()
    basis = coalg.basis
    reports = []
    name = "thm315"
    bracket = induce_bracket(coalg, w)
    steps = (
        lambda: _symmetry_report("omega-symmetric", basis, w),
        lambda: check_cclybe(coalg, w),
        lambda: bracket.validation,
        lambda: _symmetry_report("r-symmetric", basis, rr),
        lambda: check_clybe(bracket, rr, warn=False, strict=False),
        lambda: check_cosymplectic(coalg, rr, strict=False),
    )
    for step in steps:
        rep = step()
        reports.append(rep)
        if stop_early and not rep.holds:
            return PipelineResult(None, Bundle(name, tuple(reports), ("stopped at first failed hypothesis",)), HYPOTHESES_315)
    reports.append(check_eq27(coalg, rr, w))
    S = build_s(rr, w)
    co = check_nijenhuis_cooperator(coalg, S)
    literal = check_nijenhuis_cooperator(coalg, S, literal=True)
    reports.append(co)
    notes = ()
    if literal.holds != co.holds:
        notes = (
            "erratum: the typeset co-Nijenhuis condition (second term S^2(x1) (x) S^2(x2)) "
            f"{'holds' if literal.holds else 'fails'} while the transpose reading "
            f"{'holds' if co.holds else 'fails'}",
        )
    return _finish(name, reports, HYPOTHESES_315, S, ("eq27", "eq25"), notes, (literal,))
