from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qtwogroup import GF, QQ, FieldError, field_from_name

primes = st.sampled_from([2, 3, 5, 7, 101, 65537])


def test_parse_rationals():
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert QQ.parse("-4/2") == -2
    assert GF(7).parse("1/2") == 4


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5", ""])
def test_parse_rejects(bad):
    with pytest.raises(FieldError):
        QQ.parse(bad)


def test_zero_denominator_mod_p():
    with pytest.raises(FieldError):
        GF(5).parse("1/10")


def test_refuses_floats():
    with pytest.raises(FieldError):
        QQ(0.5)


def test_composite_modulus_rejected():
    with pytest.raises(FieldError):
        GF(9)


def test_names_round_trip():
    for f in (QQ, GF(101)):
        assert field_from_name(f.name) == f
    with pytest.raises(FieldError):
        field_from_name("R")


def test_roots_of_unity():
    assert QQ.primitive_root_of_unity(2) == -1
    with pytest.raises(FieldError):
        QQ.primitive_root_of_unity(3)
    z = GF(101).primitive_root_of_unity(5)
    assert pow(z, 5, 101) == 1 and z != 1
    with pytest.raises(FieldError):
        GF(101).primitive_root_of_unity(3)


@given(primes, st.integers(), st.integers().filter(bool))
def test_inverse_mod_p(p, a, b):
    F = GF(p)
    x = F(Fraction(a, b)) if b % p else None
    if x is not None and x:
        assert F.mul(x, F.inv(x)) == 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_q_is_a_field(a, b, c):
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    if a:
        assert QQ.mul(a, QQ.inv(a)) == 1
