import pytest
from hypothesis import given, strategies as st

from conftest import double_cm, kG
from oracles import double_product
from qtwogroup import (
    GF,
    QQ,
    FieldError,
    GradedCrossedModuleInput,
    NotCocommutativeError,
    PreconditionError,
    adjoint_crossed_module,
    check_hopf,
    cyclic,
    klein_four,
    graded_function_crossed_module,
    smash_product,
    symmetric,
    sweedler_h4,
)
from qtwogroup.braided import braided_from_hopf, check_braided_hopf
from qtwogroup.constructions import biproduct, characters, dual_group
from qtwogroup.groups import InvalidGroupError
from qtwogroup.hopf import ModuleAction, trivial_action
from qtwogroup.linalg import Matrix

GROUPS = {"Z2": 2, "Z3": 3, "S3": "S3"}


@pytest.mark.parametrize("key", ["Z2", "Z3", "S3"])
def test_double_product_matches_group_formula(key):
    cm = double_cm(GROUPS[key])
    D = smash_product(cm.A, cm.H, cm.action)
    G = symmetric(3) if key == "S3" else cyclic(GROUPS[key])
    n = G.order
    for a in range(n):
        for g in range(n):
            for b in range(n):
                for h in range(n):
                    want = double_product(G, a, g, b, h)
                    got = D.mul({a * n + g: 1}, {b * n + h: 1})
                    assert got == ({} if want is None else {want[0] * n + want[1]: 1})


@pytest.mark.parametrize("key", ["Z2", "Z3", "S3"])
def test_double_is_hopf(key):
    cm = double_cm(GROUPS[key])
    assert check_hopf(smash_product(cm.A, cm.H, cm.action)).passed


def test_double_over_prime_field():
    cm = double_cm("S3", GF(101))
    assert check_hopf(smash_product(cm.A, cm.H, cm.action)).passed


def test_smash_rejects_bad_action():
    H = kG(2)
    bogus = ModuleAction(H, 2, Matrix(2, 4, QQ, [{0: 1}, {1: 1}, {0: 1}, {0: 1}]))
    with pytest.raises(PreconditionError) as err:
        smash_product(H, H, bogus)
    assert not err.value.report.passed


def test_adjoint_needs_cocommutative():
    with pytest.raises(NotCocommutativeError):
        adjoint_crossed_module(sweedler_h4(QQ))


def test_trivial_action_smash_is_tensor_product():
    H = kG(3)
    M = smash_product(H, H, trivial_action(H, 3))
    assert check_hopf(M).passed
    x, y = {1 * 3 + 0: 1}, {0 * 3 + 2: 1}
    assert M.mul(x, y) == M.mul(y, x) == {1 * 3 + 2: 1}


@pytest.mark.parametrize("G", [cyclic(2), cyclic(4), klein_four()], ids=["Z2", "Z4", "V4"])
def test_characters_form_the_dual_group(G):
    Ghat, chars = dual_group(G)
    assert Ghat.order == G.order == len(characters(G))
    e = G.exponent()
    for c in chars:
        for a in G.elements():
            for b in G.elements():
                assert c[G.mul(a, b)] == (c[a] + c[b]) % e


def test_graded_construction_validates_input():
    S3 = symmetric(3)
    inp = GradedCrossedModuleInput(S3, cyclic(2), ((0, 1, 2, 3, 4, 5),) * 2, (0, S3.labels.index("(12)")))
    g = graded_function_crossed_module(inp, QQ)
    assert g.cm.A.dim == 6 and g.cm.H.dim == 2
    bad = GradedCrossedModuleInput(S3, cyclic(2), ((0, 1, 2, 3, 4, 5),) * 2, (1, 1))
    with pytest.raises(InvalidGroupError):
        graded_function_crossed_module(bad, QQ)


def test_graded_needs_roots_of_unity():
    inp = GradedCrossedModuleInput(cyclic(3), cyclic(3), ((0, 1, 2),) * 3, (0, 0, 0))
    with pytest.raises(FieldError):
        graded_function_crossed_module(inp, QQ)
    g = graded_function_crossed_module(inp, GF(7))
    assert g.cm.H.dim == 3


def test_biproduct_of_trivially_braided_is_tensor_product():
    H = kG(2)
    B = braided_from_hopf(kG(3), H)
    assert check_braided_hopf(B).passed
    M = biproduct(B)
    assert M.dim == 6 and check_hopf(M).passed


@given(st.integers(0, 15), st.integers(0, 15))
def test_sweedler_relations(a, b):
    H = sweedler_h4(QQ).materialized()
    g, x = {1: 1}, {2: 1}
    assert H.mul(g, g) == H.one
    assert H.mul(x, x) == {}
    assert H.mul(x, g) == {k: -v for k, v in H.mul(g, x).items()}
