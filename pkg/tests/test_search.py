import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from leibniz_forge import QQ, prime_field
from leibniz_forge.catalog import catalog_algebras, catalog_coalgebras
from leibniz_forge.errors import PreconditionError
from leibniz_forge.search import (
    MAX_CANDIDATES,
    SearchSpace,
    cross_check,
    enumerate_sharded,
    enumerate_solutions,
    specialize,
)
from leibniz_forge.structures import LeibnizAlgebra
from leibniz_forge.tensor import Tensor
from leibniz_forge.yangbaxter import (
    check_clybe,
    check_coboundary_characterization,
    check_r_sharp_homomorphism,
    check_theorem26,
)
from leibniz_forge.dualtriangular import check_prop39, induce_bracket
from leibniz_forge.structures import check_leibniz
from leibniz_forge.yangbaxter import check_compatibility

ALG_A = catalog_algebras()["dim2-a"]
ALG_B = catalog_algebras()["dim2-b"]
Q2 = catalog_coalgebras()["q2"]


def test_table_a_over_f3():
    res = enumerate_solutions(SearchSpace(ALG_A, 3))
    assert res.count == 9
    keys = res.keys()
    assert all(k[3] == 0 for k in keys)  # the f (x) f entry
    assert sorted(keys) == keys
    want = sorted((a, b, b, 0) for a in range(3) for b in range(3))
    assert keys == want
    assert (0, 0, 0, 0) in keys


def test_table_a_over_f5():
    assert enumerate_solutions(SearchSpace(ALG_A, 5)).count == 25


@pytest.mark.parametrize("shards", [2, 3, 4, 7])
def test_sharding_is_invisible(shards):
    space = SearchSpace(ALG_B, 3)
    whole = enumerate_solutions(space)
    parts = [enumerate_solutions(space, shards, i) for i in range(shards)]
    merged = [k for p in parts for k in p.keys()]
    assert merged == whole.keys()
    assert sum(p.examined for p in parts) == whole.examined == 27
    assert json.dumps(enumerate_sharded(space, shards).to_dict()) == json.dumps(whole.to_dict())


@pytest.mark.parametrize("field", [2, 3, 5, 7])
def test_zero_always_found(field):
    for target, pred in ((ALG_A, "clybe"), (ALG_B, "thm26-all"), (Q2, "cclybe")):
        res = enumerate_solutions(SearchSpace(target, field, True, pred))
        assert (0,) * 4 in res.keys()


def test_kernel_agrees_with_symbolic_checks():
    for field in (3, 5):
        F = prime_field(field)
        alg = specialize(ALG_B, F)
        found = set(enumerate_solutions(SearchSpace(ALG_B, field)).keys())
        for a, b, c in itertools.product(range(field), repeat=3):
            r = Tensor.from_nested(F, [[a, b], [b, c]])
            assert ((a, b, b, c) in found) == check_clybe(alg, r).holds


def test_general_candidates_and_thm26():
    F = prime_field(3)
    alg = specialize(ALG_B, F)
    found = set(enumerate_solutions(SearchSpace(ALG_B, 3, False, "thm26-all")).keys())
    for vals in itertools.product(range(3), repeat=4):
        r = Tensor.from_nested(F, [list(vals[:2]), list(vals[2:])])
        assert (vals in found) == check_theorem26(alg, r).holds


def test_rational_grid():
    res = enumerate_solutions(SearchSpace(ALG_A, grid=(-1, 0, "1/2", 1)))
    assert res.count == 16
    assert all(k[3] == 0 for k in res.keys())


def test_guard_and_validation():
    big = LeibnizAlgebra(Tensor.zeros(QQ, 6, 3))
    space = SearchSpace(big, 7, False)
    assert space.candidate_count > MAX_CANDIDATES
    with pytest.raises(PreconditionError):
        enumerate_solutions(space)
    with pytest.raises(PreconditionError):
        SearchSpace(ALG_A, 11)
    with pytest.raises(PreconditionError):
        SearchSpace(ALG_A, 3, True, "cclybe")
    with pytest.raises(PreconditionError):
        SearchSpace(ALG_A, 3, True, "nope")
    bad = LeibnizAlgebra(Tensor.from_sparse(QQ, 2, 3, {(0, 1, 1): 1, (1, 1, 1): 1}))
    with pytest.raises(PreconditionError):
        enumerate_solutions(SearchSpace(bad, 3))


def test_candidate_count():
    assert SearchSpace(ALG_A, 3).candidate_count == 27
    assert SearchSpace(ALG_A, 3, False).candidate_count == 81
    assert SearchSpace(catalog_algebras()["dim3-1"], 2).candidate_count == 2**6


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 26))
def test_candidate_index_round_trip(idx):
    space = SearchSpace(ALG_A, 3)
    m = space.candidate(idx)
    digits = [m[0][0], m[0][1], m[1][1]]
    assert digits[0] * 9 + digits[1] * 3 + digits[2] == idx


def test_cross_check_examples():
    rep = cross_check("dim2-a/r1", 3)
    assert rep.holds and not rep.skipped
    assert rep.specializations == 9 and rep.extra == ()
    for entry in ("dim2-b/r1", "dim2-b/r2"):
        assert cross_check(entry, 3).holds
    assert cross_check("dim3-7/r2", 2).skipped
    assert cross_check("ex-3.2", 3).skipped


@pytest.mark.parametrize("which", [ALG_A, ALG_B])
def test_clybe_solutions_satisfy_characterizations(which):
    F = prime_field(3)
    alg = specialize(which, F)
    for r in enumerate_solutions(SearchSpace(which, 3)).solutions:
        pair = check_coboundary_characterization(alg, r)
        assert pair.holds
        assert check_r_sharp_homomorphism(alg, r).holds


def test_cclybe_solutions_satisfy_bialgebra_and_symplectic():
    F = prime_field(3)
    co = specialize(Q2, F)
    sols = enumerate_solutions(SearchSpace(Q2, 3, True, "cclybe"))
    assert sols.count == 11
    for w in sols.solutions:
        br = induce_bracket(co, w)
        assert check_leibniz(br).holds and check_compatibility(br, co).holds
        assert check_prop39(co, w).holds
