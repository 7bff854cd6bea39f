"""Leibniz algebras and coalgebras, bilinear forms, operators, and their identity checks.

Conventions:

* ``c[i][j][k]``: ``[e_i, e_j] = sum_k c[i][j][k] e_k``; a printed table row is the left argument.
* ``d[i][j][k]``: ``delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k``.
* operator matrices are column-per-basis-vector: ``op(e_j) = sum_i m[i][j] e_i``.
* ``omega[i][j] = omega(e_i, e_j)``.

Structures are validated lazily: construction only checks shapes, and
operations that need the defining identity call ``require_valid``, which
caches its verdict on the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InconsistencyError, PreconditionError, ShapeError
from .scalar import ScalarRing
from .tensor import Tensor, identity_matrix

__all__ = [
    "CheckReport",
    "Bundle",
    "LeibnizAlgebra",
    "LeibnizCoalgebra",
    "BilinearForm",
    "LinearOperator",
    "check_leibniz",
    "check_coleibniz",
    "dualize_algebra",
    "dualize_coalgebra",
    "check_symplectic",
    "check_cosymplectic",
    "left_mult",
    "right_mult",
    "as_vector",
    "dual_label",
]


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one identity check.

    ``residuals`` holds ``(labels, value)`` pairs for every nonzero residual,
    ordered by basis position. ``parts`` holds sub-checks that are reported
    alongside but do not affect ``holds``.
    """

    name: str
    residuals: tuple = ()
    notes: tuple[str, ...] = ()
    parts: tuple["CheckReport", ...] = ()

    @property
    def holds(self) -> bool:
        return not self.residuals

    def with_notes(self, *notes: str) -> "CheckReport":
        return CheckReport(self.name, self.residuals, self.notes + tuple(notes), self.parts)

    def renamed(self, name: str) -> "CheckReport":
        return CheckReport(name, self.residuals, self.notes, self.parts)

    def to_dict(self) -> dict:
        d = {
            "check": self.name,
            "holds": self.holds,
            "residuals": [{"index": list(idx), "value": str(v)} for idx, v in self.residuals],
            "notes": list(self.notes),
        }
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d

    def __str__(self):
        head = f"{self.name}: {'holds' if self.holds else 'FAILS'}"
        lines = [head]
        for idx, v in self.residuals:
            lines.append(f"  [{', '.join(idx)}] {v}")
        for p in self.parts:
            lines.extend("  " + line for line in str(p).splitlines())
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Bundle:
    """An ordered group of reports; holds iff every member of ``reports`` holds.

    ``informational`` reports are shown but never enter the verdict.
    """

    name: str
    reports: tuple[CheckReport, ...]
    notes: tuple[str, ...] = ()
    informational: tuple[CheckReport, ...] = ()

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.reports)

    def __getitem__(self, name: str) -> CheckReport:
        for r in self.reports + self.informational:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.reports + self.informational)

    def names(self) -> list[str]:
        return [r.name for r in self.reports]

    def failed(self) -> list[str]:
        return [r.name for r in self.reports if not r.holds]

    def to_dict(self) -> dict:
        d = {
            "check": self.name,
            "holds": self.holds,
            "parts": [r.to_dict() for r in self.reports],
            "notes": list(self.notes),
        }
        if self.informational:
            d["informational"] = [r.to_dict() for r in self.informational]
        return d

    def __str__(self):
        lines = [f"{self.name}: {'holds' if self.holds else 'FAILS'}"]
        for r in self.reports:
            lines.extend("  " + line for line in str(r).splitlines())
        for r in self.informational:
            lines.extend("  (info) " + line for line in str(r).splitlines()[:1])
            lines.extend("  " + line for line in str(r).splitlines()[1:])
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def make_report(name: str, basis: Sequence[str], items: Iterable, notes: Iterable[str] = (), parts=()) -> CheckReport:
    """Collect nonzero ``(int_index, value)`` pairs into a sorted report."""
    res = sorted((idx, v) for idx, v in items if v)
    return CheckReport(
        name,
        tuple((tuple(basis[i] for i in idx), v) for idx, v in res),
        tuple(notes),
        tuple(parts),
    )


def tensor_report(name: str, basis: Sequence[str], t: Tensor, prefix: tuple = (), notes=()) -> CheckReport:
    return make_report(name, basis, ((prefix + idx, v) for idx, v in t.items()), notes)


# --------------------------------------------------------------------------
# structure types


def _check_basis(basis: Sequence[str], dim: int) -> tuple[str, ...]:
    basis = tuple(basis)
    if len(basis) != dim:
        raise ShapeError(f"{len(basis)} basis labels for dimension {dim}")
    if len(set(basis)) != dim:
        raise ShapeError(f"basis labels not unique: {basis}")
    return basis


def _default_basis(dim: int) -> tuple[str, ...]:
    if dim <= 3:
        return ("e", "f", "g")[:dim]
    return tuple(f"e{i + 1}" for i in range(dim))


def dual_label(label: str) -> str:
    """``e`` <-> ``e*``."""
    return label[:-1] if label.endswith("*") else label + "*"


@dataclass(frozen=True, eq=False)
class LeibnizAlgebra:
    c: Tensor
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        if self.c.order != 3:
            raise ShapeError("structure tensor must have order 3")
        object.__setattr__(self, "basis", _check_basis(self.basis or _default_basis(self.c.dim), self.c.dim))

    @property
    def dim(self) -> int:
        return self.c.dim

    @property
    def ring(self) -> ScalarRing:
        return self.c.ring

    @classmethod
    def from_table(cls, ring: ScalarRing, basis: Sequence[str], table) -> "LeibnizAlgebra":
        """``table`` maps ``(left, right)`` label pairs to ``{label: coeff}``."""
        basis = tuple(basis)
        pos = {b: i for i, b in enumerate(basis)}
        items = []
        for (x, y), value in table.items():
            for z, coef in value.items():
                items.append(((pos[x], pos[y], pos[z]), coef))
        return cls(Tensor.from_sparse(ring, len(basis), 3, items), basis)

    def bracket(self, x: Tensor, y: Tensor) -> Tensor:
        n = self.dim
        c = self.c.entries
        zero = self.ring.zero
        out = []
        for k in range(n):
            acc = zero
            for i in range(n):
                if not x.entries[i]:
                    continue
                for j in range(n):
                    coef = c[(i * n + j) * n + k]
                    if coef and y.entries[j]:
                        acc = acc + x.entries[i] * y.entries[j] * coef
            out.append(acc)
        return Tensor(self.ring, n, 1, tuple(out))

    @cached_property
    def validation(self) -> CheckReport:
        return check_leibniz(self)

    @property
    def is_valid(self) -> bool:
        return self.validation.holds

    def require_valid(self):
        if not self.is_valid:
            raise PreconditionError("structure tensor does not satisfy the Leibniz identity")
        return self

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.basis == other.basis and self.c == other.c

    def __hash__(self):
        return hash((self.basis, self.c))


@dataclass(frozen=True, eq=False)
class LeibnizCoalgebra:
    d: Tensor
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        if self.d.order != 3:
            raise ShapeError("coproduct tensor must have order 3")
        object.__setattr__(self, "basis", _check_basis(self.basis or _default_basis(self.d.dim), self.d.dim))

    @property
    def dim(self) -> int:
        return self.d.dim

    @property
    def ring(self) -> ScalarRing:
        return self.d.ring

    @classmethod
    def from_table(cls, ring: ScalarRing, basis: Sequence[str], table) -> "LeibnizCoalgebra":
        """``table`` maps a label to ``{(left, right): coeff}``."""
        basis = tuple(basis)
        pos = {b: i for i, b in enumerate(basis)}
        items = []
        for x, value in table.items():
            for (a, b), coef in value.items():
                items.append(((pos[x], pos[a], pos[b]), coef))
        return cls(Tensor.from_sparse(ring, len(basis), 3, items), basis)

    def coproduct(self, i: int) -> Tensor:
        n = self.dim
        return Tensor(self.ring, n, 2, self.d.entries[i * n * n:(i + 1) * n * n])

    @cached_property
    def validation(self) -> CheckReport:
        return check_coleibniz(self)

    @property
    def is_valid(self) -> bool:
        return self.validation.holds

    def require_valid(self):
        if not self.is_valid:
            raise PreconditionError("coproduct tensor does not satisfy the coLeibniz identity")
        return self

    def __eq__(self, other):
        if not isinstance(other, LeibnizCoalgebra):
            return NotImplemented
        return self.basis == other.basis and self.d == other.d

    def __hash__(self):
        return hash((self.basis, self.d))


@dataclass(frozen=True)
class BilinearForm:
    matrix: Tensor

    def __post_init__(self):
        if self.matrix.order != 2:
            raise ShapeError("a bilinear form needs an n x n matrix")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def ring(self) -> ScalarRing:
        return self.matrix.ring

    @cached_property
    def symmetric(self) -> bool:
        return self.matrix.is_symmetric()

    def __call__(self, i: int, j: int):
        return self.matrix[i, j]


@dataclass(frozen=True)
class LinearOperator:
    """``matrix[i][j]`` is the ``e_i`` coefficient of the image of ``e_j``."""

    matrix: Tensor

    def __post_init__(self):
        if self.matrix.order != 2:
            raise ShapeError("an operator needs an n x n matrix")

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def ring(self) -> ScalarRing:
        return self.matrix.ring

    @classmethod
    def identity(cls, ring: ScalarRing, dim: int) -> "LinearOperator":
        return cls(identity_matrix(ring, dim))

    @classmethod
    def zero(cls, ring: ScalarRing, dim: int) -> "LinearOperator":
        return cls(Tensor.zeros(ring, dim, 2))

    @classmethod
    def from_images(cls, ring: ScalarRing, basis: Sequence[str], images) -> "LinearOperator":
        """``images`` maps a label to ``{label: coeff}``, the image of that basis vector."""
        pos = {b: i for i, b in enumerate(basis)}
        items = []
        for x, value in images.items():
            for y, coef in value.items():
                items.append(((pos[y], pos[x]), coef))
        return cls(Tensor.from_sparse(ring, len(basis), 2, items))

    def image(self, j: int) -> Tensor:
        n = self.dim
        return Tensor(self.ring, n, 1, tuple(self.matrix.entries[i * n + j] for i in range(n)))

    def __call__(self, vec: Tensor) -> Tensor:
        return self.matrix.apply(vec)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """``self o other``."""
        return LinearOperator(self.matrix.matmul(other.matrix))

    def transpose(self) -> "LinearOperator":
        return LinearOperator(self.matrix.flip())

    def power(self, k: int) -> "LinearOperator":
        out = LinearOperator.identity(self.ring, self.dim)
        for _ in range(k):
            out = out.compose(self)
        return out


def as_vector(x, ring: ScalarRing, basis: Sequence[str]) -> Tensor:
    """Coerce a label, an index, a coefficient sequence or a vector tensor."""
    n = len(basis)
    if isinstance(x, Tensor):
        if x.order != 1 or x.dim != n:
            raise ShapeError(f"expected a vector of length {n}")
        return x
    if isinstance(x, str):
        if x not in basis:
            raise ShapeError(f"unknown basis label {x!r}")
        x = list(basis).index(x)
    if isinstance(x, int):
        if not 0 <= x < n:
            raise ShapeError(f"basis index {x} out of range")
        return Tensor.build(ring, n, 1, lambda i: ring.one if i == x else ring.zero)
    x = list(x)
    if len(x) != n:
        raise ShapeError(f"vector of length {len(x)} for dimension {n}")
    return Tensor(ring, n, 1, tuple(ring(v) for v in x))


# --------------------------------------------------------------------------
# defining identities


def check_leibniz(alg: LeibnizAlgebra) -> CheckReport:
    """Left Leibniz identity ``[x,[y,z]] = [[x,y],z] + [y,[x,z]]`` on basis triples.

    When it holds, the consequence ``[[x,y],z] + [[y,x],z] = 0`` is recomputed
    as a sub-check; a failure there raises :class:`InconsistencyError`.
    """
    n = alg.dim
    c = alg.c.entries
    zero = alg.ring.zero

    def C(i, j, k):
        return c[(i * n + j) * n + k]

    items = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for p in range(n):
                    acc = zero
                    for m in range(n):
                        a = C(j, k, m)
                        if a:
                            b = C(i, m, p)
                            if b:
                                acc = acc + a * b
                        a = C(i, j, m)
                        if a:
                            b = C(m, k, p)
                            if b:
                                acc = acc - a * b
                        a = C(i, k, m)
                        if a:
                            b = C(j, m, p)
                            if b:
                                acc = acc - a * b
                    items.append(((i, j, k, p), acc))
    report = make_report("eq1", alg.basis, items)
    if not report.holds:
        return report
    sub = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for p in range(n):
                    acc = zero
                    for m in range(n):
                        s = C(i, j, m) + C(j, i, m)
                        if s:
                            b = C(m, k, p)
                            if b:
                                acc = acc + s * b
                    sub.append(((i, j, k, p), acc))
    sub_report = make_report("eq10", alg.basis, sub)
    if not sub_report.holds:
        raise InconsistencyError("Leibniz identity holds but [[x,y],z] + [[y,x],z] does not vanish")
    return CheckReport("eq1", (), (), (sub_report,))


def check_coleibniz(coalg: LeibnizCoalgebra) -> CheckReport:
    """coLeibniz identity, residual indexed by ``(x; a, b, c)``.

    When it holds, the symmetrized sum ``x(1)(1) (x) x(1)(2) (x) x(2)`` plus its
    swap of the first two legs is recomputed as a sub-check.
    """
    n = coalg.dim
    d = coalg.d.entries
    zero = coalg.ring.zero

    def D(i, j, k):
        return d[(i * n + j) * n + k]

    nz = [[(j, k, v) for j in range(n) for k in range(n) if (v := d[(i * n + j) * n + k])] for i in range(n)]
    triples = list(itertools.product(range(n), repeat=3))
    items = []
    for x in range(n):
        acc = [zero] * n**3  # indexed (a, b, c)
        for a, m, u in nz[x]:  # x(1)(1) (x) x(1)(2) (x) x(2) side: D(x,a,m) D(m,b,c)
            for b, cc, v in nz[m]:
                pos = (a * n + b) * n + cc
                acc[pos] = acc[pos] + u * v
        for m, cc, u in nz[x]:  # D(x,m,c) D(m,a,b)
            for a, b, v in nz[m]:
                pos = (a * n + b) * n + cc
                acc[pos] = acc[pos] - u * v
        for b, m, u in nz[x]:  # D(x,b,m) D(m,a,c)
            for a, cc, v in nz[m]:
                pos = (a * n + b) * n + cc
                acc[pos] = acc[pos] - u * v
        items.extend(((x, a, b, cc), acc[(a * n + b) * n + cc]) for a, b, cc in triples)
    report = make_report("eq2", coalg.basis, items)
    if not report.holds:
        return report
    sub = []
    for x in range(n):
        for a in range(n):
            for b in range(n):
                for cc in range(n):
                    acc = zero
                    for m in range(n):
                        u = D(x, m, cc)
                        if u:
                            s = D(m, a, b) + D(m, b, a)
                            if s:
                                acc = acc + u * s
                    sub.append(((x, a, b, cc), acc))
    sub_report = make_report("eq3", coalg.basis, sub)
    if not sub_report.holds:
        raise InconsistencyError("coLeibniz identity holds but the symmetrized sum does not vanish")
    return CheckReport("eq2", (), (), (sub_report,))


def dualize_algebra(alg: LeibnizAlgebra, validate: bool = True) -> LeibnizCoalgebra:
    """Transpose coproduct on the dual basis: ``d[k][i][j] = c[i][j][k]``."""
    if validate:
        alg.require_valid()
    n = alg.dim
    c = alg.c
    d = Tensor.build(alg.ring, n, 3, lambda k, i, j: c[i, j, k])
    return LeibnizCoalgebra(d, tuple(dual_label(b) for b in alg.basis))


def dualize_coalgebra(coalg: LeibnizCoalgebra, validate: bool = True) -> LeibnizAlgebra:
    """Transpose bracket on the dual basis: ``c[i][j][k] = d[k][i][j]``."""
    if validate:
        coalg.require_valid()
    n = coalg.dim
    d = coalg.d
    c = Tensor.build(coalg.ring, n, 3, lambda i, j, k: d[k, i, j])
    return LeibnizAlgebra(c, tuple(dual_label(b) for b in coalg.basis))


def _form_matrix(omega) -> Tensor:
    return omega.matrix if isinstance(omega, BilinearForm) else omega


def check_symplectic(alg: LeibnizAlgebra, omega: BilinearForm, strict: bool = True) -> CheckReport:
    """``w([x,y],z) + w([x,z],y) - w([y,z],x) - w([z,y],x)`` at ``(i, j, k)``.

    ``strict=False`` skips the symmetry and validity preconditions and just
    evaluates the residual.
    """
    w = _form_matrix(omega)
    if w.order != 2 or w.dim != alg.dim:
        raise ShapeError("form dimension does not match the algebra")
    if strict:
        if not w.is_symmetric():
            raise PreconditionError("the symplectic condition needs a symmetric bilinear form")
        alg.require_valid()
    n = alg.dim
    c = alg.c.entries
    W = w.entries
    zero = alg.ring.zero

    def wb(i, j, k):  # w([e_i, e_j], e_k)
        acc = zero
        for m in range(n):
            a = c[(i * n + j) * n + m]
            if a and W[m * n + k]:
                acc = acc + a * W[m * n + k]
        return acc

    items = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                items.append(((i, j, k), wb(i, j, k) + wb(i, k, j) - wb(j, k, i) - wb(k, j, i)))
    return make_report("eq21", alg.basis, items)


def check_cosymplectic(coalg: LeibnizCoalgebra, r: Tensor, strict: bool = True) -> CheckReport:
    """Four-term arrangement of ``(delta (x) id)(r)`` at ``(a, b, c)``."""
    if r.order != 2 or r.dim != coalg.dim:
        raise ShapeError("r dimension does not match the coalgebra")
    if strict:
        if not r.is_symmetric():
            raise PreconditionError("the cosymplectic condition needs a symmetric tensor")
        coalg.require_valid()
    n = coalg.dim
    d = coalg.d.entries
    R = r.entries
    zero = coalg.ring.zero
    T = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                acc = zero
                for k in range(n):
                    u = R[k * n + c]
                    if u:
                        v = d[(k * n + a) * n + b]
                        if v:
                            acc = acc + u * v
                T[a, b, c] = acc
    items = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                items.append(((a, b, c), T[a, b, c] + T[a, c, b] - T[b, c, a] - T[c, b, a]))
    return make_report("eq24", coalg.basis, items)


def left_mult(alg: LeibnizAlgebra, x) -> LinearOperator:
    """``L_x(y) = [x, y]``."""
    v = as_vector(x, alg.ring, alg.basis)
    n = alg.dim
    c = alg.c
    zero = alg.ring.zero

    def entry(k, j):
        acc = zero
        for i in range(n):
            if v.entries[i]:
                acc = acc + v.entries[i] * c[i, j, k]
        return acc

    return LinearOperator(Tensor.build(alg.ring, n, 2, entry))


def right_mult(alg: LeibnizAlgebra, x) -> LinearOperator:
    """``R_x(y) = [y, x]``."""
    v = as_vector(x, alg.ring, alg.basis)
    n = alg.dim
    c = alg.c
    zero = alg.ring.zero

    def entry(k, j):
        acc = zero
        for i in range(n):
            if v.entries[i]:
                acc = acc + v.entries[i] * c[j, i, k]
        return acc

    return LinearOperator(Tensor.build(alg.ring, n, 2, entry))
