import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from leibniz_forge import (
    QQ,
    BilinearForm,
    LeibnizAlgebra,
    LeibnizCoalgebra,
    ScalarRing,
    Tensor,
    check_coleibniz,
    check_leibniz,
    dualize_algebra,
    dualize_coalgebra,
    prime_field,
)
from leibniz_forge.catalog import catalog_algebras
from leibniz_forge.errors import PreconditionError, ShapeError
from leibniz_forge.structures import check_cosymplectic, check_symplectic, left_mult, right_mult

from conftest import algebra, coalgebra, matrix, q2, random_tensor, table_a, table_b

F5 = prime_field(5)


def leibniz_oracle(c, n):
    """Plain triple loop over [x,[y,z]] - [[x,y],z] - [y,[x,z]]."""
    out = {}
    for i, j, k, p in itertools.product(range(n), repeat=4):
        v = 0
        for m in range(n):
            v += c[j][k][m] * c[i][m][p] - c[i][j][m] * c[m][k][p] - c[i][k][m] * c[j][m][p]
        if v:
            out[(i, j, k, p)] = v
    return out


def plain(alg):
    return [[[int(x) if alg.ring.is_prime_field else x for x in row] for row in mat] for mat in alg.c.to_nested()]


def test_table_b_and_zero_bracket_are_leibniz():
    assert check_leibniz(table_b()).holds
    zero = LeibnizAlgebra(Tensor.zeros(QQ, 2, 3))
    assert check_leibniz(zero).holds


def test_failing_bracket_residual_matches_oracle():
    alg = algebra(QQ, "ef", {("e", "f"): {"f": 1}, ("f", "f"): {"f": 1}})
    rep = check_leibniz(alg)
    assert not rep.holds
    want = leibniz_oracle(plain(alg), 2)
    got = {tuple("ef".index(x) for x in idx): v for idx, v in rep.residuals}
    assert got == {k: QQ(v) for k, v in want.items()}
    assert any(idx[:3] == ("f", "f", "f") for idx, _ in rep.residuals)


def test_residuals_are_sorted():
    alg = algebra(QQ, "ef", {("e", "f"): {"f": 1}, ("f", "f"): {"f": 1}})
    idx = [tuple("ef".index(x) for x in i) for i, _ in check_leibniz(alg).residuals]
    assert idx == sorted(idx)


def test_coleibniz_examples():
    assert check_coleibniz(q2()).holds
    assert check_coleibniz(LeibnizCoalgebra(Tensor.zeros(QQ, 2, 3))).holds
    bad = coalgebra(QQ, "ef", {"e": {("e", "e"): 1}})
    rep = check_coleibniz(bad)
    assert dict(rep.residuals)[("e", "e", "e", "e")] == QQ(-1)


def test_sub_identities_reported():
    rep = check_leibniz(table_b())
    assert [p.name for p in rep.parts] == ["eq10"] and rep.parts[0].holds
    rep = check_coleibniz(q2())
    assert [p.name for p in rep.parts] == ["eq3"] and rep.parts[0].holds


def test_dualize_examples():
    d = dualize_algebra(table_a())
    assert d.basis == ("e*", "f*")
    assert d.d.nonzero_items() == [((0, 1, 1), QQ(1))]
    assert dualize_coalgebra(q2()) == algebra(QQ, ("e*", "f*"), {("f*", "e*"): {"e*": 1}, ("f*", "f*"): {"e*": 1}})
    zero = LeibnizAlgebra(Tensor.zeros(QQ, 2, 3))
    assert dualize_algebra(zero).d.is_zero()


@pytest.mark.parametrize("name", list(catalog_algebras()))
def test_catalog_algebras_double_dual(name):
    alg = catalog_algebras()[name]
    assert check_leibniz(alg).holds
    assert dualize_coalgebra(dualize_algebra(alg)) == alg


def test_dualize_rejects_invalid_input():
    bad = algebra(QQ, "ef", {("e", "f"): {"f": 1}, ("f", "f"): {"f": 1}})
    with pytest.raises(PreconditionError):
        dualize_algebra(bad)


def _transport(alg, P, Pinv):
    """Structure constants of alg in the basis given by the columns of P."""
    n = alg.dim
    c = alg.c

    def entry(i, j, k):
        acc = F5.zero
        for a in range(n):
            for b in range(n):
                for m in range(n):
                    acc = acc + P[a, i] * P[b, j] * c[a, b, m] * Pinv[k, m]
        return acc

    return LeibnizAlgebra(Tensor.build(F5, n, 3, entry))


def _random_invertible(rnd):
    from leibniz_forge.tensor import identity_matrix

    while True:
        P = Tensor(F5, 3, 2, tuple(F5.const(rnd.randrange(5)) for _ in range(9)))
        # Gauss-Jordan inverse over F5
        rows = [[P[i, j] for j in range(3)] + [F5.one if i == k else F5.zero for k in range(3)] for i in range(3)]
        ok = True
        for col in range(3):
            piv = next((r for r in range(col, 3) if rows[r][col]), None)
            if piv is None:
                ok = False
                break
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = F5.one / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(3):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        if ok:
            Pinv = Tensor(F5, 3, 2, tuple(rows[i][3 + j] for i in range(3) for j in range(3)))
            assert P.matmul(Pinv) == identity_matrix(F5, 3)
            return P, Pinv


def _random_valid_coalgebras(count, seed):
    """Valid coalgebras from catalog algebras over F5 in random bases, then dualized."""
    from leibniz_forge.search import specialize

    rnd = random.Random(seed)
    bases = []
    for name, alg in catalog_algebras().items():
        if alg.dim == 3:
            assign = {p: 2 for p in alg.ring.parameters}
            bases.append(specialize(alg, F5, assign))
    found = []
    while len(found) < count:
        P, Pinv = _random_invertible(rnd)
        alg = _transport(rnd.choice(bases), P, Pinv)
        assert alg.is_valid
        found.append(LeibnizCoalgebra(alg.c.permute((2, 3, 1))))
    return found


def test_coalgebra_round_trip_on_random_f5():
    cos = _random_valid_coalgebras(100, 3)
    assert sum(not c.d.is_zero() for c in cos) > 50
    for co in cos:
        assert dualize_algebra(dualize_coalgebra(co)) == co


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_transpose_equivalence(seed):
    rnd = random.Random(seed)
    t = Tensor(F5, 2, 3, tuple(F5.const(rnd.choice((0, 0, 1, 4))) for _ in range(8)))
    alg = LeibnizAlgebra(t)
    assert check_leibniz(alg).holds == check_coleibniz(dualize_algebra(alg, validate=False)).holds


def test_leibniz_implies_eq10_on_every_catalog_algebra():
    for alg in catalog_algebras().values():
        n = alg.dim
        c = alg.c
        for i, j, k, p in itertools.product(range(n), repeat=4):
            s = sum(((c[i, j, m] + c[j, i, m]) * c[m, k, p] for m in range(n)), alg.ring.zero)
            assert s.is_zero()


def test_relabeling_equivariance():
    alg = algebra(QQ, "ef", {("e", "f"): {"f": 1}, ("f", "f"): {"f": 1}})
    swapped = algebra(QQ, "fe", {("e", "f"): {"f": 1}, ("f", "f"): {"f": 1}})
    a, b = check_leibniz(alg), check_leibniz(swapped)
    assert a.holds == b.holds
    assert sorted(a.residuals) == sorted(b.residuals)


def test_symplectic():
    R = ScalarRing(["kappa"])
    b = table_b(R)
    assert check_symplectic(b, BilinearForm(Tensor.zeros(R, 2, 2))).holds
    assert check_symplectic(b, BilinearForm(matrix(R, [[0, 0], [0, "kappa"]]))).holds
    rep = check_symplectic(table_b(), BilinearForm(matrix(QQ, [[1, 0], [0, 0]])))
    assert dict(rep.residuals)[("f", "e", "e")] == QQ(2)
    with pytest.raises(PreconditionError):
        check_symplectic(table_b(), BilinearForm(matrix(QQ, [[0, 1], [0, 0]])))


def test_cosymplectic():
    R = ScalarRing(["nu", "kappa"])
    co = q2(R)
    assert check_cosymplectic(co, Tensor.zeros(R, 2, 2)).holds
    assert check_cosymplectic(co, matrix(R, [[0, "nu"], ["nu", "kappa"]])).holds
    assert not check_cosymplectic(co, matrix(R, [["nu", 0], [0, 0]])).holds
    with pytest.raises(PreconditionError):
        check_cosymplectic(co, matrix(R, [[0, 1], [0, 0]]))


def test_left_right_multiplication():
    b = table_b()
    Lf = left_mult(b, "f")
    assert Lf.matrix == matrix(QQ, [[1, 1], [0, 0]])
    Re = right_mult(b, "e")
    assert Re.matrix == matrix(QQ, [[0, 1], [0, 0]])
    zero = LeibnizAlgebra(Tensor.zeros(QQ, 2, 3))
    assert left_mult(zero, [3, 4]).matrix.is_zero()
    with pytest.raises(ShapeError):
        left_mult(b, [1, 2, 3])


def test_left_mult_is_additive(rng):
    alg = catalog_algebras()["dim3-4"]
    from leibniz_forge.search import specialize

    alg = specialize(alg, F5)
    for _ in range(20):
        x = [rng.randrange(5) for _ in range(3)]
        y = [rng.randrange(5) for _ in range(3)]
        s = [(a + b) % 5 for a, b in zip(x, y)]
        assert left_mult(alg, s).matrix == left_mult(alg, x).matrix + left_mult(alg, y).matrix


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        LeibnizAlgebra(Tensor.zeros(QQ, 2, 2))
    with pytest.raises(ShapeError):
        LeibnizAlgebra(Tensor.zeros(QQ, 2, 3), ("e", "e"))
