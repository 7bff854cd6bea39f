import sys
import random
import re

import pytest
import sympy

from leibniz_forge import QQ, LeibnizAlgebra, LeibnizCoalgebra, Tensor, prime_field

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def to_sympy(value):
    """Independent reading of a canonical scalar string as a sympy expression."""
    text = _IDENT.sub(lambda m: f"p_{m.group(0)}", str(value)).replace("^", "**")
    return sympy.sympify(text)


def sym(name):
    return sympy.Symbol(f"p_{name}")


def algebra(ring, basis, table):
    return LeibnizAlgebra.from_table(ring, basis, table)


def coalgebra(ring, basis, table):
    return LeibnizCoalgebra.from_table(ring, basis, table)


def table_a(ring=QQ):
    return algebra(ring, "ef", {("f", "f"): {"e": 1}})


def table_b(ring=QQ):
    return algebra(ring, "ef", {("f", "e"): {"e": 1}, ("f", "f"): {"e": 1}})


def q2(ring=QQ):
    return coalgebra(ring, "ef", {"e": {("f", "e"): 1, ("f", "f"): 1}})


def matrix(ring, rows):
    return Tensor.from_nested(ring, rows)


def random_tensor(rng, ring, dim, order, p):
    return Tensor(ring, dim, order, tuple(ring.const(rng.randrange(p)) for _ in range(dim**order)))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def F5():
    return prime_field(5)


@pytest.fixture
def F3():
    return prime_field(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance")
    for n in sorted(mod.VERDICTS):
        terminalreporter.write_line(mod.VERDICTS[n])
