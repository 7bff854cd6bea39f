"""Dense tensors of order 1, 2 or 3 over a scalar ring.

Legs are numbered from 1 in the public API. ``permute(t, perm)`` sends leg
``a`` to position ``perm[a-1]``, so permutations compose as a left action:
``permute(t, compose(p, q)) == permute(permute(t, q), p)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ShapeError
from .scalar import ScalarRing

__all__ = ["Tensor", "compose", "invert_perm", "identity_matrix", "zero_tensor"]


def _index_iter(dim: int, order: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(dim), repeat=order)


@dataclass(frozen=True, eq=False)
class Tensor:
    ring: ScalarRing
    dim: int
    order: int
    entries: tuple  # flat, row-major

    def __post_init__(self):
        if self.order not in (1, 2, 3):
            raise ShapeError(f"tensor order must be 1, 2 or 3, got {self.order}")
        if self.dim < 1:
            raise ShapeError(f"dimension must be positive, got {self.dim}")
        if len(self.entries) != self.dim**self.order:
            raise ShapeError(
                f"expected {self.dim**self.order} entries for order {self.order}, dim {self.dim}"
            )

    # -- construction -----------------------------------------------------
    @classmethod
    def zeros(cls, ring: ScalarRing, dim: int, order: int) -> "Tensor":
        return cls(ring, dim, order, (ring.zero,) * dim**order)

    @classmethod
    def from_nested(cls, ring: ScalarRing, data) -> "Tensor":
        """Build from nested lists; leaves may be scalars, ints, Fractions or strings."""
        order = 0
        probe = data
        while isinstance(probe, (list, tuple)):
            if not probe:
                raise ShapeError("empty tensor data")
            order += 1
            probe = probe[0]
        dim = len(data)
        flat = []

        def walk(node, depth):
            if depth == order:
                flat.append(ring(node))
                return
            if not isinstance(node, (list, tuple)) or len(node) != dim:
                raise ShapeError("ragged tensor data")
            for child in node:
                walk(child, depth + 1)

        walk(data, 0)
        return cls(ring, dim, order, tuple(flat))

    @classmethod
    def from_sparse(cls, ring: ScalarRing, dim: int, order: int, items: Mapping | Iterable) -> "Tensor":
        """Build from ``{index_tuple: value}``; repeated indices accumulate."""
        flat = [ring.zero] * dim**order
        pairs = items.items() if isinstance(items, Mapping) else items
        for idx, value in pairs:
            if isinstance(idx, int):
                idx = (idx,)
            if len(idx) != order or any(not 0 <= i < dim for i in idx):
                raise ShapeError(f"index {idx} out of range for order {order}, dim {dim}")
            pos = cls._flat_pos(idx, dim)
            flat[pos] = flat[pos] + ring(value)
        return cls(ring, dim, order, tuple(flat))

    @classmethod
    def build(cls, ring: ScalarRing, dim: int, order: int, fn) -> "Tensor":
        """Tensor whose entry at each index tuple is ``fn(*index)``."""
        return cls(ring, dim, order, tuple(fn(*idx) for idx in _index_iter(dim, order)))

    @staticmethod
    def _flat_pos(idx: Sequence[int], dim: int) -> int:
        pos = 0
        for i in idx:
            pos = pos * dim + i
        return pos

    # -- access -----------------------------------------------------------
    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        return self.entries[self._flat_pos(idx, self.dim)]

    def indices(self) -> Iterator[tuple[int, ...]]:
        return _index_iter(self.dim, self.order)

    def items(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return zip(self.indices(), self.entries)

    def nonzero_items(self) -> list[tuple[tuple[int, ...], object]]:
        return [(idx, v) for idx, v in self.items() if v]

    def to_nested(self):
        if self.order == 1:
            return list(self.entries)
        n = self.dim
        if self.order == 2:
            return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]
        return [[list(self.entries[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n)] for i in range(n)]

    # -- shape checks -----------------------------------------------------
    def _same_shape(self, other: "Tensor"):
        if not isinstance(other, Tensor):
            raise ShapeError(f"expected a Tensor, got {type(other).__name__}")
        if (self.order, self.dim) != (other.order, other.dim):
            raise ShapeError(
                f"shape mismatch: order {self.order} dim {self.dim} vs order {other.order} dim {other.dim}"
            )
        if self.ring != other.ring:
            raise ShapeError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    # -- linear structure -------------------------------------------------
    def add(self, other: "Tensor") -> "Tensor":
        self._same_shape(other)
        return Tensor(self.ring, self.dim, self.order, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "Tensor") -> "Tensor":
        self._same_shape(other)
        return Tensor(self.ring, self.dim, self.order, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, s) -> "Tensor":
        s = self.ring(s)
        return Tensor(self.ring, self.dim, self.order, tuple(s * a for a in self.entries))

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return Tensor(self.ring, self.dim, self.order, tuple(-a for a in self.entries))

    def __rmul__(self, s):
        return self.scale(s)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (
            self.order == other.order
            and self.dim == other.dim
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.order, self.dim, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    # -- leg operations ---------------------------------------------------
    def permute(self, perm: Sequence[int]) -> "Tensor":
        """Move leg ``a`` to position ``perm[a-1]`` (both 1-based)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.order + 1)):
            raise ShapeError(f"{perm} is not a permutation of the {self.order} legs")
        out = [None] * len(self.entries)
        for idx, v in self.items():
            new = [0] * self.order
            for a, target in enumerate(perm):
                new[target - 1] = idx[a]
            out[self._flat_pos(new, self.dim)] = v
        return Tensor(self.ring, self.dim, self.order, tuple(out))

    def flip(self) -> "Tensor":
        """The swap of the two legs of a 2-tensor."""
        if self.order != 2:
            raise ShapeError("flip needs an order-2 tensor")
        return self.permute((2, 1))

    def act_on_leg(self, m, leg: int) -> "Tensor":
        """Apply matrix ``m`` (an order-2 tensor or operator) to leg ``leg`` (1-based).

        ``result[.., i, ..] = sum_j m[i][j] * t[.., j, ..]``.
        """
        mat = getattr(m, "matrix", m)
        if not isinstance(mat, Tensor) or mat.order != 2:
            raise ShapeError("operator must be an n x n matrix")
        if mat.dim != self.dim:
            raise ShapeError(f"operator dimension {mat.dim} does not match tensor dimension {self.dim}")
        if mat.ring != self.ring:
            raise ShapeError("ring mismatch between operator and tensor")
        if not 1 <= leg <= self.order:
            raise ShapeError(f"leg {leg} out of range for order {self.order}")
        n = self.dim
        ring = self.ring
        p = ring.characteristic
        stride = n ** (self.order - leg)
        if p:  # plain ints over F_p, wrapped once at the end
            rows = [[(j, v.v) for j in range(n) if (v := mat.entries[i * n + j])] for i in range(n)]
            src = [x.v for x in self.entries]
            zero = 0
        else:
            rows = [[(j, v) for j in range(n) if (v := mat.entries[i * n + j])] for i in range(n)]
            src = self.entries
            zero = ring.zero
        out = []
        for pos in range(len(src)):
            i = (pos // stride) % n
            base = pos - i * stride
            acc = zero
            for j, mij in rows[i]:
                t = src[base + j * stride]
                if t:
                    acc = acc + mij * t
            out.append(acc)
        if p:
            out = [ring.residue(x) for x in out]
        return Tensor(ring, n, self.order, tuple(out))

    # -- matrix helpers (order 2) -----------------------------------------
    def matmul(self, other: "Tensor") -> "Tensor":
        self._same_shape(other)
        if self.order != 2:
            raise ShapeError("matmul needs order-2 tensors")
        n = self.dim
        zero = self.ring.zero

        def entry(i, k):
            acc = zero
            for j in range(n):
                a = self.entries[i * n + j]
                if a:
                    b = other.entries[j * n + k]
                    if b:
                        acc = acc + a * b
            return acc

        return Tensor.build(self.ring, n, 2, entry)

    def apply(self, vec: "Tensor") -> "Tensor":
        """Matrix times vector."""
        if self.order != 2 or vec.order != 1:
            raise ShapeError("apply needs a matrix and a vector")
        self._same_ring_dim(vec)
        n = self.dim
        zero = self.ring.zero
        out = []
        for i in range(n):
            acc = zero
            for j in range(n):
                a = self.entries[i * n + j]
                if a and vec.entries[j]:
                    acc = acc + a * vec.entries[j]
            out.append(acc)
        return Tensor(self.ring, n, 1, tuple(out))

    def _same_ring_dim(self, other: "Tensor"):
        if self.dim != other.dim:
            raise ShapeError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.ring != other.ring:
            raise ShapeError("ring mismatch")

    def is_symmetric(self) -> bool:
        if self.order != 2:
            raise ShapeError("symmetry is defined for order-2 tensors")
        n = self.dim
        return all(self.entries[i * n + j] == self.entries[j * n + i] for i in range(n) for j in range(i + 1, n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p o q`` for 1-based leg permutations (apply ``q`` first)."""
    if len(p) != len(q):
        raise ShapeError("permutations of different arity")
    return tuple(p[q[a] - 1] for a in range(len(q)))


def invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for a, target in enumerate(p):
        out[target - 1] = a + 1
    return tuple(out)


def identity_matrix(ring: ScalarRing, dim: int) -> Tensor:
    return Tensor.build(ring, dim, 2, lambda i, j: ring.one if i == j else ring.zero)


def zero_tensor(ring: ScalarRing, dim: int, order: int) -> Tensor:
    return Tensor.zeros(ring, dim, order)
