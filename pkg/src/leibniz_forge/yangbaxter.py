"""r-matrix calculus on a Leibniz algebra.

Placed products combine two 2-tensors ``u = r`` and ``v = rbar`` into a
3-tensor by bracketing one leg of each::

    p12_23: r1 (x) [r2, rb1] (x) rb2        p13_23: r1 (x) rb1 (x) [r2, rb2]
    p23_12: r1 (x) [rb1, r2] (x) rb2        p23_13: r1 (x) rb1 (x) [rb2, r2]
    p12_13: [r1, rb1] (x) r2 (x) rb2        p13_12: [r1, rb1] (x) rb2 (x) r2

A flip flag transposes the corresponding factor before the product is taken.
Products are written as strings such as ``"r12 r23^s"``; in ``"r23 r12"`` and
``"r23 r13"`` the first-named factor is ``v``.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import PreconditionError, ShapeError
from .structures import (
    Bundle,
    CheckReport,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    LinearOperator,
    check_coleibniz,
    dualize_coalgebra,
    left_mult,
    make_report,
    right_mult,
)
from .tensor import Tensor

__all__ = [
    "PlacedProductKind",
    "PlacedProduct",
    "placed_product",
    "product_expression",
    "CLYBE",
    "EQ12",
    "EQ13",
    "EQ9_GROUP2_PRINTED",
    "check_clybe",
    "check_ybe_variant",
    "induce_coproduct",
    "check_theorem26",
    "check_coboundary_characterization",
    "r_sharp",
    "check_r_sharp_homomorphism",
    "check_bialgebra",
    "check_compatibility",
    "is_triangular",
    "triangular_report",
]


class PlacedProductKind(Enum):
    p12_23 = "12 23"
    p13_23 = "13 23"
    p23_12 = "23 12"
    p23_13 = "23 13"
    p12_13 = "12 13"
    p13_12 = "13 12"


@dataclass(frozen=True)
class PlacedProduct:
    kind: PlacedProductKind
    flip_u: bool = False
    flip_v: bool = False


def _check_pair(alg: LeibnizAlgebra, u: Tensor, v: Tensor):
    n = alg.dim
    for t in (u, v):
        if t.order != 2 or t.dim != n:
            raise ShapeError(f"expected {n} x {n} tensors")
        if t.ring != alg.ring:
            raise ShapeError("ring mismatch between tensor and algebra")


def placed_product(alg: LeibnizAlgebra, kind, u: Tensor, v: Tensor, flip_u: bool = False, flip_v: bool = False) -> Tensor:
    """Bilinear placed product of ``u`` and ``v`` (see module docstring)."""
    if isinstance(kind, PlacedProduct):
        kind, flip_u, flip_v = kind.kind, kind.flip_u ^ flip_u, kind.flip_v ^ flip_v
    kind = PlacedProductKind(kind) if not isinstance(kind, PlacedProductKind) else kind
    _check_pair(alg, u, v)
    if flip_u:
        u = u.flip()
    if flip_v:
        v = v.flip()
    ring = alg.ring
    out = _placed_flat(alg, kind, u.entries, v.entries)
    if ring.characteristic:
        out = [ring.residue(x) for x in out]
    return Tensor(ring, alg.dim, 3, tuple(out))


def _placed_flat(alg: LeibnizAlgebra, kind: PlacedProductKind, U, V) -> list:
    """Flat entries of a placed product; plain ints over F_p (unreduced)."""
    n = alg.dim
    p = alg.ring.characteristic
    rows = _sparse_rows(alg.c)
    if p:
        U = [x.v for x in U]
        V = [x.v for x in V]
    unz = [(i, w) for i, w in enumerate(U) if w]
    vnz = [(i, w) for i, w in enumerate(V) if w]
    table = _layout_table(kind, n)
    nn = n * n
    out = [0 if p else alg.ring.zero] * n**3
    for iu, uw in unz:
        base_u = iu * nn
        for iv, vw in vnz:
            key, base, step = table[base_u + iv]
            row = rows[key]
            if not row:
                continue
            w = uw * vw
            for m, s in row:
                pos = base + m * step
                out[pos] = out[pos] + w * s
    return out


@lru_cache(maxsize=256)
def _sparse_rows(c: Tensor) -> list:
    """``x * n + y -> [(m, c[x][y][m]), ...]`` over the nonzero constants (ints over F_p)."""
    n = c.dim
    p = c.ring.characteristic
    return [
        [(m, s.v if p else s) for m in range(n) if (s := c.entries[xy * n + m])]
        for xy in range(n * n)
    ]


@lru_cache(maxsize=None)
def _layout_table(kind: PlacedProductKind, n: int) -> list:
    """For each ``(a, b, c, d)``: bracket index, output offset and the stride of the bracket result."""
    key, place = _LAYOUT[kind]
    table = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        x, y = key(a, b, c, d)
        i0, j0, k0 = place(a, b, c, d, 0)
        i1, j1, k1 = place(a, b, c, d, 1 if n > 1 else 0)
        base = (i0 * n + j0) * n + k0
        step = ((i1 * n + j1) * n + k1) - base
        table.append((x * n + y, base, step))
    return table


# bracketed pair of r-legs and the output placement, per kind
_LAYOUT = {
    PlacedProductKind.p12_23: (lambda a, b, c, d: (b, c), lambda a, b, c, d, m: (a, m, d)),
    PlacedProductKind.p13_23: (lambda a, b, c, d: (b, d), lambda a, b, c, d, m: (a, c, m)),
    PlacedProductKind.p23_12: (lambda a, b, c, d: (c, b), lambda a, b, c, d, m: (a, m, d)),
    PlacedProductKind.p23_13: (lambda a, b, c, d: (d, b), lambda a, b, c, d, m: (a, c, m)),
    PlacedProductKind.p12_13: (lambda a, b, c, d: (a, c), lambda a, b, c, d, m: (m, b, d)),
    PlacedProductKind.p13_12: (lambda a, b, c, d: (a, c), lambda a, b, c, d, m: (m, d, b)),
}


_FACTOR = re.compile(r"r(12|13|23)(\^(?:s|sigma|σ))?")
_TERM = re.compile(r"\s*([+-])?\s*(r\d\d(?:\^(?:s|sigma|σ))?)\s*(r\d\d(?:\^(?:s|sigma|σ))?)")


@lru_cache(maxsize=None)
def parse_product(text: str) -> PlacedProduct:
    """``"r13^s r12"`` -> PlacedProduct(p13_12, flip_u=True, flip_v=False)."""
    factors = _FACTOR.findall(text)
    if len(factors) != 2 or _FACTOR.sub("", text).strip():
        raise ValueError(f"cannot read placed product {text!r}")
    (n1, s1), (n2, s2) = factors
    kind = PlacedProductKind(f"{n1} {n2}")
    if kind in (PlacedProductKind.p23_12, PlacedProductKind.p23_13):
        return PlacedProduct(kind, flip_u=bool(s2), flip_v=bool(s1))
    return PlacedProduct(kind, flip_u=bool(s1), flip_v=bool(s2))


def product_expression(alg: LeibnizAlgebra, expr: str, r: Tensor, rbar: Tensor | None = None, memo=None) -> Tensor:
    """Evaluate a signed sum like ``"r12 r23 + r13 r23 - r12^s r13 - r13 r12^s"``.

    ``memo`` (a dict) lets several expressions in the same ``r`` share products.
    """
    rbar = r if rbar is None else rbar
    memo = {} if memo is None else memo
    _check_pair(alg, r, rbar)
    ring = alg.ring
    p = ring.characteristic
    total = [0 if p else ring.zero] * alg.dim**3
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if m is None:
            raise ValueError(f"cannot read product expression {expr!r} at {pos}")
        prod = parse_product(f"{m.group(2)} {m.group(3)}")
        if prod not in memo:
            u = _flipped(r, memo) if prod.flip_u else r
            v = _flipped(rbar, memo) if prod.flip_v else rbar
            memo[prod] = _placed_flat(alg, prod.kind, u.entries, v.entries)
        t = memo[prod]
        if m.group(1) == "-":
            total = [x - y for x, y in zip(total, t)]
        else:
            total = [x + y for x, y in zip(total, t)]
        pos = m.end()
        while pos < len(expr) and expr[pos] == " ":
            pos += 1
    if p:
        total = [ring.residue(x) for x in total]
    return Tensor(ring, alg.dim, 3, tuple(total))


def _flipped(t: Tensor, memo: dict) -> Tensor:
    key = ("flip", id(t))
    if key not in memo:
        memo[key] = (t, t.flip())
    return memo[key][1]


CLYBE = "r12 r23 + r13 r23 - r12^s r13 - r13 r12^s"
EQ12 = "r12 r23^s + r13 r23^s - r12 r13^s - r13^s r12"
EQ13 = "r23 r13^s + r12^s r13^s - r23^s r12^s - r12^s r23^s"
# second group of the coLeibniz criterion exactly as typeset; the derivation
# of that criterion yields CLYBE instead (last term r13 r12^s)
EQ9_GROUP2_PRINTED = "r12 r23 + r13 r23 - r12^s r13 - r13^s r12"

_VARIANTS = {"eq11": CLYBE, "eq12": EQ12, "eq13": EQ13}


def _check_r(alg: LeibnizAlgebra, r: Tensor):
    if r.order != 2 or r.dim != alg.dim:
        raise ShapeError(f"r must be a {alg.dim} x {alg.dim} tensor")
    if r.ring != alg.ring:
        raise ShapeError("ring mismatch between r and the algebra")


def check_ybe_variant(
    alg: LeibnizAlgebra, r: Tensor, variant: str = "eq11", warn: bool = True, strict: bool = True
) -> CheckReport:
    """Residual of one of the three Yang-Baxter type equations, indexed by 3-tensor slot."""
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(_VARIANTS)}")
    _check_r(alg, r)
    if strict:
        alg.require_valid()
    notes = ()
    if not r.is_symmetric():
        msg = "r is not symmetric; equation evaluated literally"
        notes = (msg,)
        if warn:
            warnings.warn(msg, stacklevel=2)
    res = product_expression(alg, _VARIANTS[variant], r)
    return make_report(variant, alg.basis, res.items(), notes)


def check_clybe(alg: LeibnizAlgebra, r: Tensor, warn: bool = True, strict: bool = True) -> CheckReport:
    """Classical Leibniz Yang-Baxter residual ``r12r23 + r13r23 - r12^s r13 - r13 r12^s``."""
    return check_ybe_variant(alg, r, "eq11", warn, strict)


def induce_coproduct(alg: LeibnizAlgebra, r: Tensor) -> LeibnizCoalgebra:
    """Coboundary coproduct ``delta_r(x) = -r1 (x) [r2, x] + ...``; not validated."""
    _check_r(alg, r)
    n = alg.dim
    C = alg.c.entries
    R = r.entries
    zero = alg.ring.zero

    def entry(i, a, b):
        acc = zero
        for c in range(n):
            u = R[a * n + c]
            if u:
                s = C[(c * n + i) * n + b]
                if s:
                    acc = acc - u * s
            u = R[b * n + c]
            if u:
                s = C[(c * n + i) * n + a] + C[(i * n + c) * n + a]
                if s:
                    acc = acc + u * s
        return acc

    return LeibnizCoalgebra(Tensor.build(alg.ring, n, 3, entry), alg.basis)


def _act(t: Tensor, op: LinearOperator, leg: int) -> Tensor:
    return t.act_on_leg(op.matrix, leg)


@lru_cache(maxsize=256)
def _mult_rows(c: Tensor) -> tuple:
    """Nonzero constants grouped by left factor and by right factor."""
    n = c.dim
    by_left = [[] for _ in range(n)]
    by_right = [[] for _ in range(n)]
    for (i, j, k), s in c.items():
        if s:
            by_left[i].append((j, k, s))
            by_right[j].append((i, k, s))
    return by_left, by_right


def _mult_all(alg: LeibnizAlgebra, t, leg: int, side: str) -> list[list]:
    """``[op_z (x) id](t)`` (leg 1) or ``[id (x) op_z](t)`` (leg 2) for every basis z at once.

    ``side`` "R" is right multiplication ``v -> [v, z]``, "L" is ``v -> [z, v]``.
    ``t`` is a flat n x n entry list; the result is indexed ``[z][a * n + b]``.
    """
    n = alg.dim
    by_left, by_right = _mult_rows(alg.c)
    out = [[alg.ring.zero] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            v = t[a * n + b]
            if not v:
                continue
            moved = b if leg == 2 else a
            if side == "R":  # [moved, z] = sum_k c[moved][z][k] e_k
                terms = by_left[moved]
            else:  # [z, moved] = sum_k c[z][moved][k] e_k
                terms = by_right[moved]
            for z, k, s in terms:
                pos = a * n + k if leg == 2 else k * n + b
                row = out[z]
                row[pos] = row[pos] + v * s
    return out


_OPERATORS: dict = {}


def _mult_operators(alg: LeibnizAlgebra):
    """``(L_x, R_x, L_x + R_x)`` for every basis x, cached per structure tensor."""
    ops = _OPERATORS.get(alg.c)
    if ops is None:
        n = alg.dim
        L = [left_mult(alg, i) for i in range(n)]
        R = [right_mult(alg, i) for i in range(n)]
        ops = (L, R, [LinearOperator(L[i].matrix + R[i].matrix) for i in range(n)])
        if len(_OPERATORS) > 256:
            _OPERATORS.clear()
        _OPERATORS[alg.c] = ops
    return ops


def check_theorem26(alg: LeibnizAlgebra, r: Tensor) -> Bundle:
    """The three conditions characterizing when ``delta_r`` makes a bialgebra.

    ``eq7``:  ``(R_x (x) R_y)(r - r^s)``, indexed ``(x, y, a, b)``.
    ``eq8``:  ``(L_x (x) R_y + L_y (x) L_x + R_y (x) L_x)(r - r^s)``.
    ``eq9``:  coLeibniz criterion for ``delta_r``, indexed ``(x, a, b, c)``;
    the typeset variant of its second group is attached as the
    informational ``eq9-literal`` report.
    """
    _check_r(alg, r)
    alg.require_valid()
    n = alg.dim
    basis = alg.basis
    anti = r - r.flip()
    L, Rm, LR = _mult_operators(alg)

    by_r = _mult_all(alg, anti.entries, 1, "R")
    by_l = _mult_all(alg, anti.entries, 1, "L")
    r_of_r = [_mult_all(alg, by_r[x], 2, "R") for x in range(n)]
    r_of_l = [_mult_all(alg, by_l[x], 2, "R") for x in range(n)]
    l_of_l = [_mult_all(alg, by_l[y], 2, "L") for y in range(n)]
    l_of_r = [_mult_all(alg, by_r[y], 2, "L") for y in range(n)]
    pairs = [(a, b) for a in range(n) for b in range(n)]
    eq7, eq8 = [], []
    for x in range(n):
        for y in range(n):
            t7 = r_of_r[x][y]
            eq7.extend(((x, y, a, b), t7[k]) for k, (a, b) in enumerate(pairs))
            t8 = [u + v + w for u, v, w in zip(r_of_l[x][y], l_of_l[y][x], l_of_r[y][x])]
            eq8.extend(((x, y, a, b), t8[k]) for k, (a, b) in enumerate(pairs))

    memo = {}
    g1 = product_expression(alg, EQ12, r, memo=memo)
    g2 = product_expression(alg, CLYBE, r, memo=memo)
    g2_printed = product_expression(alg, EQ9_GROUP2_PRINTED, r, memo=memo)
    g3 = product_expression(alg, EQ13, r, memo=memo)
    eq9, eq9_lit = [], []
    for x in range(n):
        lr = LR[x]
        head = _act(g1, lr, 2) - _act(g3, lr, 1)
        t9 = head - _act(g2, Rm[x], 3)
        t9l = head - _act(g2_printed, Rm[x], 3)
        eq9.extend(((x,) + idx, v) for idx, v in t9.items())
        eq9_lit.extend(((x,) + idx, v) for idx, v in t9l.items())

    lit = make_report("eq9-literal", basis, eq9_lit)
    r9 = make_report("eq9", basis, eq9)
    notes = ()
    if lit.holds != r9.holds:
        notes = (
            "erratum: the typeset second group (last term r13^s r12) disagrees with the "
            "derived criterion (last term r13 r12^s); verdict uses the derived form",
        )
    return Bundle(
        "thm26",
        (make_report("eq7", basis, eq7), make_report("eq8", basis, eq8), r9),
        notes,
        informational=(lit,),
    )


def check_coboundary_characterization(alg: LeibnizAlgebra, r: Tensor) -> Bundle:
    """``(delta_r (x) id)(r) = r13 r23`` and ``(id (x) delta_r)(r) = r12 r13`` for symmetric r."""
    _check_r(alg, r)
    if not r.is_symmetric():
        raise PreconditionError("the coboundary characterization needs a symmetric r")
    alg.require_valid()
    n = alg.dim
    d = induce_coproduct(alg, r).d.entries
    R = r.entries
    zero = alg.ring.zero
    r13r23 = placed_product(alg, PlacedProductKind.p13_23, r, r)
    r12r13 = placed_product(alg, PlacedProductKind.p12_13, r, r)
    eq14, eq15 = [], []
    for i in range(n):
        for j in range(n):
            for b in range(n):
                lhs14 = zero
                lhs15 = zero
                for k in range(n):
                    u = R[k * n + b]
                    if u:
                        lhs14 = lhs14 + u * d[(k * n + i) * n + j]
                    u = R[i * n + k]
                    if u:
                        lhs15 = lhs15 + u * d[(k * n + j) * n + b]
                eq14.append(((i, j, b), lhs14 - r13r23[i, j, b]))
                eq15.append(((i, j, b), lhs15 - r12r13[i, j, b]))
    return Bundle("prop29", (make_report("eq14", alg.basis, eq14), make_report("eq15", alg.basis, eq15)))


def r_sharp(r: Tensor) -> LinearOperator:
    """``r#(xi) = <xi, r1> r2``: sends the dual basis vector ``e_a*`` to ``sum_b r[a][b] e_b``."""
    if r.order != 2:
        raise ShapeError("r must be an order-2 tensor")
    return LinearOperator(r.flip())


def check_r_sharp_homomorphism(alg: LeibnizAlgebra, r: Tensor, strict: bool = True) -> CheckReport:
    """Whether ``r#`` maps the dual bracket (transpose of ``delta_r``) to the bracket.

    With ``strict`` the dual bracket must come from a valid coalgebra;
    otherwise the transpose bracket is used as is and a note is attached.
    """
    _check_r(alg, r)
    alg.require_valid()
    coalg = induce_coproduct(alg, r)
    notes = ()
    if not coalg.is_valid:
        if strict:
            raise PreconditionError("delta_r is not a Leibniz coalgebra; the dual bracket is undefined")
        notes = ("delta_r is not a Leibniz coalgebra; transpose bracket used without validation",)
    dual = dualize_coalgebra(coalg, validate=False)
    phi = r_sharp(r)
    n = alg.dim
    images = [phi.image(i) for i in range(n)]
    items = []
    for i in range(n):
        for j in range(n):
            lhs = phi(dual.bracket(_unit(alg, i), _unit(alg, j)))
            rhs = alg.bracket(images[i], images[j])
            items.extend(((i, j, b), v) for (b,), v in (lhs - rhs).items())
    return make_report("r-sharp", alg.basis, items, notes)


def _unit(alg: LeibnizAlgebra, i: int) -> Tensor:
    ring = alg.ring
    return Tensor.build(ring, alg.dim, 1, lambda k: ring.one if k == i else ring.zero)


def check_compatibility(alg: LeibnizAlgebra, coalg: LeibnizCoalgebra) -> CheckReport:
    """``x(2) (x) [x(1), y] - [y(1), x] (x) y(2)`` at basis pairs, indexed ``(x, y, p, q)``."""
    _check_same(alg, coalg)
    n = alg.dim
    C = alg.c.entries
    D = coalg.d.entries
    zero = alg.ring.zero
    items = []
    for i in range(n):
        for j in range(n):
            for p in range(n):
                for q in range(n):
                    acc = zero
                    for a in range(n):
                        u = D[(i * n + a) * n + p]
                        if u:
                            s = C[(a * n + j) * n + q]
                            if s:
                                acc = acc + u * s
                        u = D[(j * n + a) * n + q]
                        if u:
                            s = C[(a * n + i) * n + p]
                            if s:
                                acc = acc - u * s
                    items.append(((i, j, p, q), acc))
    return make_report("eq4", alg.basis, items)


def check_eq5_literal(alg: LeibnizAlgebra, coalg: LeibnizCoalgebra) -> CheckReport:
    """``delta([x,y])`` minus the eight typeset terms, indexed ``(x, y, p, q)``."""
    _check_same(alg, coalg)
    n = alg.dim
    rng = range(n)

    def c(i, j, k):
        return alg.c.entries[(i * n + j) * n + k]

    def d(i, j, k):
        return coalg.d.entries[(i * n + j) * n + k]

    zero = alg.ring.zero
    items = []
    for i in rng:
        for j in rng:
            for p in rng:
                for q in rng:
                    acc = zero
                    for m in rng:
                        acc = acc + c(i, j, m) * d(m, p, q)
                        acc = acc - d(i, p, m) * c(m, j, q)  # x1 (x) [x2, y]
                        acc = acc + d(i, m, q) * c(j, m, p)  # [y, x1] (x) x2
                        acc = acc + d(i, m, q) * c(m, j, p)  # [x1, y] (x) x2
                        acc = acc - d(i, m, p) * c(m, j, q)  # x2 (x) [x1, y]
                        acc = acc + d(i, q, m) * c(j, m, p)  # [y, x2] (x) x1
                        acc = acc + d(i, q, m) * c(m, j, p)  # [x2, y] (x) x1
                        acc = acc - d(j, m, q) * c(i, m, p)  # [x, y1] (x) y2
                        acc = acc - d(j, p, m) * c(i, m, q)  # y1 (x) [x, y2]
                    items.append(((i, j, p, q), acc))
    return make_report("eq5-literal", alg.basis, items)


def _check_same(alg: LeibnizAlgebra, coalg: LeibnizCoalgebra):
    if alg.dim != coalg.dim:
        raise ShapeError("algebra and coalgebra dimensions differ")
    if alg.ring != coalg.ring:
        raise ShapeError("algebra and coalgebra rings differ")


def check_bialgebra(alg: LeibnizAlgebra, coalg: LeibnizCoalgebra) -> Bundle:
    """Defining identities of both structures plus the compatibility condition.

    The typeset second compatibility condition is evaluated verbatim and
    reported as the informational ``eq5-literal`` entry; it does not enter
    the verdict.
    """
    _check_same(alg, coalg)
    eq1 = alg.validation
    eq2 = coalg.validation
    eq4 = check_compatibility(alg, coalg)
    eq5 = check_eq5_literal(alg, coalg)
    notes = ()
    if not eq5.holds and eq1.holds and eq2.holds and eq4.holds:
        notes = ("erratum: eq5-literal fails while eq1, eq2 and eq4 hold; verdict does not use eq5-literal",)
    return Bundle("bialgebra", (eq1, eq2, eq4), notes, informational=(eq5,))


def triangular_report(alg: LeibnizAlgebra, r: Tensor) -> Bundle:
    """The triangular predicate: symmetric r, cLYBe, coLeibniz for delta_r, and eq4."""
    _check_r(alg, r)
    eq1 = alg.validation
    sym = make_report(
        "r-symmetric",
        alg.basis,
        (((i, j), r[i, j] - r[j, i]) for i in range(alg.dim) for j in range(i + 1, alg.dim)),
    )
    if not eq1.holds:
        return Bundle("triangular", (eq1, sym))
    coalg = induce_coproduct(alg, r)
    return Bundle(
        "triangular",
        (eq1, sym, check_clybe(alg, r, warn=False), coalg.validation, check_compatibility(alg, coalg)),
    )


def is_triangular(alg: LeibnizAlgebra, r: Tensor) -> bool:
    return triangular_report(alg, r).holds
