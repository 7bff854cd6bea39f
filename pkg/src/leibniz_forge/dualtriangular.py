"""Bilinear forms on a Leibniz coalgebra: the co-Yang-Baxter equation and the induced bracket."""

from __future__ import annotations

from .errors import InconsistencyError, PreconditionError, ShapeError
from .structures import (
    BilinearForm,
    Bundle,
    CheckReport,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    check_symplectic,
    make_report,
)
from .tensor import Tensor

__all__ = ["check_cclybe", "induce_bracket", "check_form_characterization", "check_prop39"]


def _form(coalg: LeibnizCoalgebra, omega) -> Tensor:
    w = omega.matrix if isinstance(omega, BilinearForm) else omega
    if not isinstance(w, Tensor) or w.order != 2 or w.dim != coalg.dim:
        raise ShapeError(f"form must be a {coalg.dim} x {coalg.dim} matrix")
    if w.ring != coalg.ring:
        raise ShapeError("ring mismatch between form and coalgebra")
    return w


def check_cclybe(coalg: LeibnizCoalgebra, omega, strict: bool = True) -> CheckReport:
    """Residual at ``(x, y, z)`` of
    ``w(x, y1) w(y2, z) + w(x, z1) w(y, z2) - w(y, x1) w(x2, z) - w(x1, z) w(y, x2)``.

    The pairing order is kept exactly as written; ``omega`` need not be symmetric.
    """
    w = _form(coalg, omega).entries
    if strict:
        coalg.require_valid()
    n = coalg.dim
    d = coalg.d.entries
    zero = coalg.ring.zero

    def W(i, j):
        return w[i * n + j]

    items = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = zero
                for a in range(n):
                    for b in range(n):
                        t = d[(j * n + a) * n + b]
                        if t:
                            acc = acc + t * W(i, a) * W(b, k)
                        t = d[(k * n + a) * n + b]
                        if t:
                            acc = acc + t * W(i, a) * W(j, b)
                        t = d[(i * n + a) * n + b]
                        if t:
                            acc = acc - t * (W(j, a) * W(b, k) + W(a, k) * W(j, b))
                items.append(((i, j, k), acc))
    return make_report("eq17", coalg.basis, items)


def induce_bracket(coalg: LeibnizCoalgebra, omega, strict: bool = True) -> LeibnizAlgebra:
    """``[x, y]_w = -w(x, y1) y2 + w(y, x1) x2 + x1 w(y, x2)``; not validated."""
    w = _form(coalg, omega).entries
    if strict:
        coalg.require_valid()
    n = coalg.dim
    d = coalg.d.entries
    zero = coalg.ring.zero

    def entry(i, j, k):
        acc = zero
        for a in range(n):
            u = w[i * n + a]
            if u:
                acc = acc - u * d[(j * n + a) * n + k]
            u = w[j * n + a]
            if u:
                acc = acc + u * (d[(i * n + a) * n + k] + d[(i * n + k) * n + a])
        return acc

    return LeibnizAlgebra(Tensor.build(coalg.ring, n, 3, entry), coalg.basis)


def check_form_characterization(coalg: LeibnizCoalgebra, omega) -> Bundle:
    """``w([x,y]_w, z) = w(x, z1) w(y, z2)`` (eq19) and ``w(x, [y,z]_w) = w(x1, y) w(x2, z)`` (eq20)."""
    w = _form(coalg, omega)
    if not w.is_symmetric():
        raise PreconditionError("the form characterization needs a symmetric form")
    br = induce_bracket(coalg, w)
    n = coalg.dim
    W = w.entries
    c = br.c.entries
    d = coalg.d.entries
    zero = coalg.ring.zero
    eq19, eq20 = [], []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs19 = zero
                lhs20 = zero
                for m in range(n):
                    lhs19 = lhs19 + c[(i * n + j) * n + m] * W[m * n + k]
                    lhs20 = lhs20 + W[i * n + m] * c[(j * n + k) * n + m]
                rhs19 = zero
                rhs20 = zero
                for a in range(n):
                    for b in range(n):
                        t = d[(k * n + a) * n + b]
                        if t:
                            rhs19 = rhs19 + t * W[i * n + a] * W[j * n + b]
                        t = d[(i * n + a) * n + b]
                        if t:
                            rhs20 = rhs20 + t * W[a * n + j] * W[b * n + k]
                eq19.append(((i, j, k), lhs19 - rhs19))
                eq20.append(((i, j, k), lhs20 - rhs20))
    return Bundle("prop35", (make_report("eq19", coalg.basis, eq19), make_report("eq20", coalg.basis, eq20)))


def check_prop39(coalg: LeibnizCoalgebra, omega) -> CheckReport:
    """Recompute the induced bracket and its symplectic residual for a symmetric co-Yang-Baxter form."""
    w = _form(coalg, omega)
    if not w.is_symmetric():
        raise PreconditionError("needs a symmetric form")
    if not check_cclybe(coalg, w).holds:
        raise PreconditionError("the form does not solve the co-Yang-Baxter equation")
    br = induce_bracket(coalg, w)
    if not br.is_valid:
        raise InconsistencyError("a symmetric co-Yang-Baxter solution induced a bracket violating the Leibniz identity")
    return check_symplectic(br, w).renamed("prop39")
