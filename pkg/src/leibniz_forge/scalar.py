"""Exact scalar rings.

Two kinds of rings are supported:

* characteristic zero: polynomials with rational coefficients in named
  parameters, localized at monomials in the *invertible* parameters and taken
  modulo monic quadratic relations ``theta^2 + b*theta + c = 0`` (one relation
  per designated parameter ``theta``; ``b`` and ``c`` free of every designated
  parameter);
* prime fields ``F_p`` (no parameters), used by the brute-force search.

Values are immutable and kept in a canonical form, so ``==`` is structural
equality and values are hashable.

Canonical form of a characteristic-zero value ``N / D``:

* ``D`` is a monomial in invertible, non-designated parameters;
* every designated parameter has exponent < 2 in ``N``;
* ``N`` and ``D`` share no parameter factor.

Monomials are ordered lexicographically by declaration order of the
parameters.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ParseError, PreconditionError

Exp = tuple[int, ...]
Poly = dict  # Exp -> Fraction, no zero coefficients

__all__ = [
    "ScalarRing",
    "Scalar",
    "Residue",
    "Relation",
    "QQ",
    "prime_field",
    "parse_scalar",
    "reduce_modulo",
    "evaluate",
]


# --------------------------------------------------------------------------
# raw polynomial helpers (dicts Exp -> Fraction)


def _padd(a: Poly, b: Poly, scale=1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _pscale_mono(a: Poly, mono: Exp, coef=1) -> Poly:
    return {tuple(x + y for x, y in zip(m, mono)): c * coef for m, c in a.items()}


def _pdiv_mono(a: Poly, mono: Exp) -> Poly:
    return {tuple(x - y for x, y in zip(m, mono)): c for m, c in a.items()}


# --------------------------------------------------------------------------


class Relation:
    """Monic quadratic relation ``param^2 = -linear*param - constant``.

    ``linear`` and ``constant`` are raw polynomials free of ``param``.
    """

    __slots__ = ("param", "index", "linear", "constant")

    def __init__(self, param: str, index: int, linear: Poly, constant: Poly):
        self.param = param
        self.index = index
        self.linear = linear
        self.constant = constant


_INTERN_LIMIT = 1 << 12


class ScalarRing:
    """Declared scalar ring: parameters, invertible subset, relations, characteristic."""

    def __init__(
        self,
        parameters: Iterable[str] = (),
        invertible: Iterable[str] = (),
        relations: Iterable[str] = (),
        characteristic: int = 0,
    ):
        self.parameters: tuple[str, ...] = tuple(parameters)
        self.characteristic = int(characteristic)
        if len(set(self.parameters)) != len(self.parameters):
            raise PreconditionError(f"duplicate parameter names in {self.parameters}")
        for p in self.parameters:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", p):
                raise PreconditionError(f"invalid parameter name {p!r}")
        inv = frozenset(invertible)
        if not inv <= set(self.parameters):
            raise PreconditionError(f"invertible parameters {sorted(inv - set(self.parameters))} not declared")
        self.invertible = inv
        self._index = {p: i for i, p in enumerate(self.parameters)}
        self._inv_mask = tuple(p in inv for p in self.parameters)
        self.nvars = len(self.parameters)
        self._zero_exp: Exp = (0,) * self.nvars
        if self.characteristic:
            if self.parameters:
                raise PreconditionError("prime fields admit no parameters")
            if not _is_prime(self.characteristic) or self.characteristic > 2**31:
                raise PreconditionError(f"characteristic {self.characteristic} is not a prime <= 2^31")
        self.relations: tuple[Relation, ...] = ()
        self._relation_texts: tuple[str, ...] = ()
        rel_list = list(relations)
        if rel_list:
            if self.characteristic:
                raise PreconditionError("prime fields admit no relations")
            base = ScalarRing(self.parameters, self.invertible)
            rels = []
            for text in rel_list:
                rels.append(_parse_relation(base, text))
            designated = [r.param for r in rels]
            if len(set(designated)) != len(designated):
                raise PreconditionError("two relations share a designated parameter")
            dmask = set(r.index for r in rels)
            for r in rels:
                for poly in (r.linear, r.constant):
                    for m in poly:
                        if any(m[i] for i in dmask):
                            raise PreconditionError(
                                f"relation for {r.param} involves a designated parameter on its right-hand side"
                            )
                if r.param in self.invertible:
                    # param^-1 = -(param + linear)/constant needs a unit constant
                    if len(r.constant) != 1:
                        raise PreconditionError(
                            f"invertible designated parameter {r.param} needs a monomial constant term"
                        )
                    (m,) = r.constant
                    if any(m[i] and not self._inv_mask[i] for i in range(self.nvars)):
                        raise PreconditionError(
                            f"constant term of relation for {r.param} is not a unit"
                        )
            self.relations = tuple(rels)
            self._relation_texts = tuple(self._relation_text(r) for r in rels)
        self._designated = frozenset(r.index for r in self.relations)
        self._key = (self.parameters, tuple(sorted(self.invertible)), self._relation_texts, self.characteristic)
        self._hash = hash(self._key)
        self._residues = None
        if self.characteristic:
            if self.characteristic <= _INTERN_LIMIT:
                self._residues = tuple(Residue(self, i) for i in range(self.characteristic))
            self.zero = self.residue(0)
            self.one = self.residue(1)
        else:
            self.zero = Scalar._raw(self, (), self._zero_exp)
            self.one = Scalar._raw(self, ((self._zero_exp, Fraction(1)),), self._zero_exp)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, ScalarRing) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.characteristic:
            return f"ScalarRing(F_{self.characteristic})"
        parts = [f"parameters={list(self.parameters)}"]
        if self.invertible:
            parts.append(f"invertible={sorted(self.invertible, key=self._index.get)}")
        if self._relation_texts:
            parts.append(f"relations={list(self._relation_texts)}")
        return f"ScalarRing({', '.join(parts)})"

    def residue(self, v: int) -> "Residue":
        """The element ``v mod p`` of a prime field; small fields share instances."""
        if self._residues is not None:
            return self._residues[v % self.characteristic]
        return Residue(self, v)

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def to_dict(self) -> dict:
        d: dict = {
            "parameters": list(self.parameters),
            "invertible": [p for p in self.parameters if p in self.invertible],
            "relations": list(self._relation_texts),
        }
        if self.characteristic:
            d["characteristic"] = self.characteristic
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "ScalarRing":
        return cls(
            d.get("parameters", ()),
            d.get("invertible", ()),
            d.get("relations", ()),
            d.get("characteristic", 0),
        )

    def relation_polynomials(self) -> list["Scalar"]:
        """Each relation as the scalar ``param^2 + linear*param + constant`` (zero in this ring)."""
        base = ScalarRing(self.parameters, self.invertible)
        out = []
        for r in self.relations:
            e = [0] * self.nvars
            e[r.index] = 2
            sq: Poly = {tuple(e): Fraction(1)}
            e[r.index] = 1
            lin = _pscale_mono(r.linear, tuple(e))
            out.append(base._make(_padd(_padd(sq, lin), r.constant), base._zero_exp))
        return out

    def _relation_text(self, r: Relation) -> str:
        base = ScalarRing(self.parameters, self.invertible)
        e = [0] * self.nvars
        e[r.index] = 1
        rhs = _padd(
            {m: -c for m, c in _pscale_mono(r.linear, tuple(e)).items()},
            {m: -c for m, c in r.constant.items()},
        )
        return f"{r.param}^2 = {base._make(rhs, base._zero_exp)}"

    # -- constructors -----------------------------------------------------
    def __call__(self, value) -> "ScalarValue":
        """Coerce an int, Fraction, string or scalar of this ring."""
        if isinstance(value, (Scalar, Residue)):
            if value.ring != self:
                if value.ring.is_prime_field or self.is_prime_field:
                    raise PreconditionError(f"cannot coerce {value!r} into {self!r}")
                return self.parse(str(value))
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return self.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into a scalar")

    def const(self, q) -> "ScalarValue":
        q = Fraction(q)
        if self.characteristic:
            p = self.characteristic
            if q.denominator % p == 0:
                raise PreconditionError(f"{q} has no image in F_{p}")
            return Residue(self, q.numerator * pow(q.denominator, -1, p))
        if not q:
            return self.zero
        return Scalar._raw(self, ((self._zero_exp, q),), self._zero_exp)

    def param(self, name: str) -> "Scalar":
        if name not in self._index:
            raise PreconditionError(f"undeclared parameter {name!r}")
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return self._make({tuple(e): Fraction(1)}, self._zero_exp)

    def parse(self, text: str) -> "ScalarValue":
        return _Parser(self, text).parse()

    # -- canonicalization -------------------------------------------------
    def _make(self, num: Poly, den: Exp) -> "Scalar":
        if not num:
            return self.zero
        if self._designated and any(den[i] for i in self._designated):
            num, den = self._clear_designated(num, den)
        if self.relations:
            num = self._reduce(num)
            if not num:
                return self.zero
        if any(den):
            g = list(den)
            for m in num:
                for i in range(self.nvars):
                    if g[i] and m[i] < g[i]:
                        g[i] = m[i]
            if any(g):
                g = tuple(g)
                num = _pdiv_mono(num, g)
                den = tuple(x - y for x, y in zip(den, g))
        items = tuple(sorted(num.items(), reverse=True))
        return Scalar._raw(self, items, den)

    def _clear_designated(self, num: Poly, den: Exp) -> tuple[Poly, Exp]:
        den = list(den)
        for r in self.relations:
            k = den[r.index]
            if not k:
                continue
            # param^-1 = -(param + linear) / constant
            e = [0] * self.nvars
            e[r.index] = 1
            factor = _padd({tuple(e): Fraction(-1)}, {m: -c for m, c in r.linear.items()})
            ((cm, cc),) = r.constant.items()
            for _ in range(k):
                num = _pmul(num, factor)
            num = {m: c / cc**k for m, c in num.items()}
            den[r.index] = 0
            for i in range(self.nvars):
                den[i] += cm[i] * k
        return num, tuple(den)

    def _reduce(self, num: Poly) -> Poly:
        for r in self.relations:
            i = r.index
            while True:
                high = {m: c for m, c in num.items() if m[i] >= 2}
                if not high:
                    break
                rest = {m: c for m, c in num.items() if m[i] < 2}
                # t*param^e -> t*param^(e-2) * (-linear*param - constant)
                lowered = {}
                for m, c in high.items():
                    mm = list(m)
                    mm[i] -= 2
                    lowered[tuple(mm)] = c
                e = [0] * self.nvars
                e[i] = 1
                repl = _padd(
                    {m: -c for m, c in _pscale_mono(r.linear, tuple(e)).items()},
                    {m: -c for m, c in r.constant.items()},
                )
                num = _padd(rest, _pmul(lowered, repl))
        return num

    def monomial_text(self, m: Exp) -> str:
        parts = []
        for p, k in zip(self.parameters, m):
            if k == 1:
                parts.append(p)
            elif k:
                parts.append(f"{p}^{k}")
        return "*".join(parts)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _parse_relation(base: ScalarRing, text: str) -> Relation:
    if "=" in text:
        lhs_text, rhs_text = text.split("=", 1)
        lhs = base.parse(lhs_text)
        rhs = base.parse(rhs_text)
        expr = lhs - rhs
        lhs_num = dict(lhs.num)
        cands = [
            i for i in range(base.nvars)
            if any(m[i] == 2 for m in lhs_num)
        ]
    else:
        expr = base.parse(text)
        cands = list(range(base.nvars))
    if expr.den != base._zero_exp:
        raise ParseError(f"relation {text!r} must be polynomial")
    num = dict(expr.num)
    for i in cands:
        if max((m[i] for m in num), default=0) != 2:
            continue
        lead = {m: c for m, c in num.items() if m[i] == 2}
        if len(lead) != 1:
            continue
        ((lm, lc),) = lead.items()
        if any(lm[j] for j in range(base.nvars) if j != i):
            continue
        linear: Poly = {}
        constant: Poly = {}
        for m, c in num.items():
            if m[i] == 2:
                continue
            mm = list(m)
            k = mm[i]
            mm[i] = 0
            target = linear if k == 1 else constant
            target[tuple(mm)] = c / lc
        return Relation(base.parameters[i], i, linear, constant)
    raise ParseError(
        f"relation {text!r} is not monic-quadratic in a single designated parameter"
    )


class Scalar:
    """Element of a characteristic-zero :class:`ScalarRing`."""

    __slots__ = ("ring", "num", "den", "_hash")

    @classmethod
    def _raw(cls, ring: ScalarRing, num: tuple, den: Exp) -> "Scalar":
        s = object.__new__(cls)
        s.ring = ring
        s.num = num
        s.den = den
        s._hash = None
        return s

    def __init__(self, *args, **kwargs):  # pragma: no cover - guard
        raise TypeError("use ScalarRing.parse/const/param to build scalars")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return not any(self.den) and all(not any(m) for m, _ in self.num)

    def constant_value(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if not self.is_constant():
            raise PreconditionError(f"{self} is not a constant")
        return self.num[0][1]

    def is_unit(self) -> bool:
        if len(self.num) != 1:
            return False
        ((m, _),) = self.num
        return all(not k or self.ring._inv_mask[i] for i, k in enumerate(m))

    def parameters_used(self) -> set[str]:
        used = set()
        for m, _ in self.num:
            used.update(p for p, k in zip(self.ring.parameters, m) if k)
        used.update(p for p, k in zip(self.ring.parameters, self.den) if k)
        return used

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise PreconditionError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return self.ring._make(_padd(dict(self.num), dict(o.num)), self.den)
        den = tuple(max(a, b) for a, b in zip(self.den, o.den))
        a = _pscale_mono(dict(self.num), tuple(x - y for x, y in zip(den, self.den)))
        b = _pscale_mono(dict(o.num), tuple(x - y for x, y in zip(den, o.den)))
        return self.ring._make(_padd(a, b), den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.ring, tuple((m, -c) for m, c in self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return self.ring.zero
        den = tuple(a + b for a, b in zip(self.den, o.den))
        return self.ring._make(_pmul(dict(self.num), dict(o.num)), den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.is_unit():
            raise PreconditionError(f"{self} is not invertible in {self.ring!r}")
        ((m, c),) = self.num
        # (c*m / D)^-1 = D / (c*m)
        ring = self.ring
        return ring._make({self.den: 1 / c}, m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise PreconditionError("division by zero")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other if self.num else other == 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant() or not self.num:
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- printing ---------------------------------------------------------
    def __str__(self):
        ring = self.ring
        if not self.num:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.num):
            mono = ring.monomial_text(m)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{_qtext(a)}*{mono}"
            else:
                body = _qtext(a)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        text = "".join(pieces)
        if any(self.den):
            d = ring.monomial_text(self.den)
            if "*" in d:
                d = f"({d})"
            if len(self.num) > 1:
                text = f"({text})"
            text = f"{text}/{d}"
        return text

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _qtext(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Residue:
    """Element of a prime field ``F_p``."""

    __slots__ = ("ring", "v")

    def __init__(self, ring: ScalarRing, v: int):
        self.ring = ring
        self.v = v % ring.characteristic

    def is_zero(self) -> bool:
        return self.v == 0

    def __bool__(self):
        return self.v != 0

    def is_constant(self) -> bool:
        return True

    def is_unit(self) -> bool:
        return self.v != 0

    def parameters_used(self) -> set[str]:
        return set()

    def _c(self, other) -> "int | None":
        if isinstance(other, Residue):
            if other.ring.characteristic != self.ring.characteristic:
                raise PreconditionError("field mismatch")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            return self.ring.const(other).v
        return None

    def __add__(self, other):
        if other.__class__ is Residue and other.ring is self.ring:
            return self.ring.residue(self.v + other.v)
        o = self._c(other)
        return NotImplemented if o is None else Residue(self.ring, self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        if other.__class__ is Residue and other.ring is self.ring:
            return self.ring.residue(self.v - other.v)
        o = self._c(other)
        return NotImplemented if o is None else Residue(self.ring, self.v - o)

    def __rsub__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else Residue(self.ring, o - self.v)

    def __mul__(self, other):
        if other.__class__ is Residue and other.ring is self.ring:
            return self.ring.residue(self.v * other.v)
        o = self._c(other)
        return NotImplemented if o is None else Residue(self.ring, self.v * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.ring, -self.v)

    def __pos__(self):
        return self

    def inverse(self) -> "Residue":
        if not self.v:
            raise PreconditionError("division by zero")
        return Residue(self.ring, pow(self.v, -1, self.ring.characteristic))

    def __truediv__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return self * Residue(self.ring, o).inverse()

    def __rtruediv__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return Residue(self.ring, o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(self.ring, pow(self.v, k, self.ring.characteristic))

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.ring.characteristic == other.ring.characteristic and self.v == other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return (other - self.v) % self.ring.characteristic == 0
        return NotImplemented

    def __hash__(self):
        return hash(("F", self.ring.characteristic, self.v))

    def __int__(self):
        return self.v

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"Residue({self.v} mod {self.ring.characteristic})"


ScalarValue = Union[Scalar, Residue]

QQ = ScalarRing()
_FIELDS: dict[int, ScalarRing] = {}


def prime_field(p: int) -> ScalarRing:
    if p not in _FIELDS:
        _FIELDS[p] = ScalarRing(characteristic=p)
    return _FIELDS[p]


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    """Recursive-descent parser for the coefficient grammar.

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("-")? base ("^" uint)?
    base   := uint ("/" uint)? | ident | "(" expr ")"
    """

    def __init__(self, ring: ScalarRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("ident", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def error(self, message: str, pos: int | None = None):
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(message, self.text, pos)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            self.error("empty expression", 0)
        value = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] in "+-":
            self.take()
            rhs = self.term()
            value = value + rhs if tok[1] == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] in "*/":
            self.take()
            start = self.peek()
            rhs = self.factor()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs:
                    self.error("division by zero", start[2] if start else None)
                if not rhs.is_unit():
                    self.error(
                        f"division by {rhs}, which is not a nonzero constant or invertible monomial",
                        start[2] if start else None,
                    )
                value = value / rhs
        return value

    def factor(self):
        neg = False
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "-":
            self.take()
            neg = True
        value = self.base()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok is None or exp_tok[0] != "int":
                self.error("expected unsigned integer exponent", exp_tok[2] if exp_tok else None)
            value = value ** int(exp_tok[1])
        return -value if neg else value

    def base(self):
        tok = self.take()
        if tok is None:
            self.error("unexpected end of expression")
        kind, text, pos = tok
        if kind == "int":
            q = Fraction(int(text))
            nxt = self.peek()
            after = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
            if nxt is not None and nxt[:2] == ("op", "/") and after is not None and after[0] == "int":
                self.take()
                self.take()
                if int(after[1]) == 0:
                    self.error("division by zero", after[2])
                q = q / int(after[1])
            try:
                return self.ring.const(q)
            except PreconditionError as exc:
                self.error(str(exc), pos)
        if kind == "ident":
            if text not in self.ring._index:
                self.error(f"undeclared identifier {text!r}", pos)
            return self.ring.param(text)
        if text == "(":
            value = self.expr()
            close = self.take()
            if close is None or close[:2] != ("op", ")"):
                self.error("expected ')'", close[2] if close else None)
            return value
        self.error(f"unexpected token {text!r}", pos)


# --------------------------------------------------------------------------
# module-level operations


def parse_scalar(text: str, ring: ScalarRing) -> ScalarValue:
    """Parse ``text`` into the canonical scalar of ``ring``."""
    return ring.parse(text)


def reduce_modulo(value: ScalarValue) -> ScalarValue:
    """Normal form modulo the ring's relations.

    Values are always stored reduced; this re-runs canonicalization and is
    therefore idempotent.
    """
    if isinstance(value, Residue):
        return value
    return value.ring._make(dict(value.num), value.den)


def evaluate(value: ScalarValue, assignment: Mapping[str, object]):
    """Substitute parameter values (rationals, or field elements for ``F_p`` targets).

    The assignment must satisfy every relation of the ring exactly and must
    not send an invertible parameter to zero.
    """
    if isinstance(value, Residue):
        return value
    ring = value.ring
    used = value.parameters_used()
    missing = sorted(used - set(assignment), key=ring._index.get)
    if missing:
        raise PreconditionError(f"missing parameter(s): {', '.join(missing)}")
    vals = {}
    for p in ring.parameters:
        if p in assignment:
            vals[p] = _as_number(assignment[p])
    for p in ring.invertible:
        if p in vals and vals[p] == 0:
            raise PreconditionError(f"invertible parameter {p} assigned zero")
    for rel, poly in zip(ring.relations, ring.relation_polynomials()):
        needed = poly.parameters_used()
        if needed <= set(vals):
            if _eval_raw(ring, dict(poly.num), poly.den, vals) != 0:
                raise PreconditionError(f"assignment violates relation {ring._relation_text(rel)}")
        elif rel.param in used:
            raise PreconditionError(f"relation for {rel.param} cannot be checked: assignment incomplete")
    return _eval_raw(ring, dict(value.num), value.den, vals)


def _as_number(x):
    if isinstance(x, Residue):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"cannot evaluate with {x!r}")


def _eval_raw(ring: ScalarRing, num: Poly, den: Exp, vals: Mapping[str, object]):
    field = next((v for v in vals.values() if isinstance(v, Residue)), None)

    def conv(v):
        if field is not None and not isinstance(v, Residue):
            return field.ring.const(v)
        return v

    total = conv(Fraction(0))
    for m, c in num.items():
        term = conv(c)
        for p, k in zip(ring.parameters, m):
            if k:
                term = term * conv(vals[p]) ** k
        total = total + term
    d = conv(Fraction(1))
    for p, k in zip(ring.parameters, den):
        if k:
            d = d * conv(vals[p]) ** k
    return total / d
