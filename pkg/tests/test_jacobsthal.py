import pytest

from ordcalc.cnf import ONE, ZERO, nat
from ordcalc.harness import iterate_op
from ordcalc.jacobsthal import jac_mul, jac_pow
from ordcalc.natural import nat_add


@pytest.mark.parametrize("a, b, expected", [
    ("2", "w", "w"),
    ("w", "2", "w*2"),
    ("1", "w + 1", "w + 1"),
    ("1", "w", "w"),
    ("w + 1", "w", "w^2"),
    ("w + 1", "w + 2", "w^2 + w*2 + 2"),
    ("w^2 + w*3 + 1", "w^w + w + 3", "w^w + w^3 + w^2*3 + w*9 + 3"),
    ("w", "w", "w^2"),
    ("0", "w", "0"),
    ("w", "0", "0"),
])
def test_jac_mul(O, a, b, expected):
    assert jac_mul(O(a), O(b)) == O(expected)


def test_jac_mul_is_iterated_natural_sum(O):
    a = O("w^2 + w + 3")
    for n in range(10):
        assert jac_mul(a, nat(n)) == iterate_op("nat_add", a, n)


def test_jac_mul_noncommutative_and_naive_distrib_fails(O):
    # 1 x (1 + w) = 1 x w = w, but (1 x 1) (+) (1 x w) = w + 1
    assert jac_mul(ONE, O("1 + w")) == O("w")
    assert nat_add(jac_mul(ONE, ONE), jac_mul(ONE, O("w"))) == O("w + 1")


@pytest.mark.parametrize("a, b, expected", [
    ("w + 2", "2", "w^2 + w*2 + 4"),
    ("w", "w", "w^w"),
    ("2", "w", "w"),
    ("2", "w + 3", "w*8"),
    ("w + 1", "w", "w^w"),
    ("w + 1", "w + 1", "w^(w + 1) + w^w"),
    ("1", "w^w", "1"),
    ("0", "w", "0"),
    ("0", "0", "1"),
])
def test_jac_pow(O, a, b, expected):
    assert jac_pow(O(a), O(b)) == O(expected)


def test_jac_pow_finite_is_iterated_jac_mul(O):
    for text in ("w + 2", "w^2*2 + 1", "w^w + w"):
        a = O(text)
        for n in range(6):
            assert jac_pow(a, nat(n)) == iterate_op("jac_mul", a, n)


def test_zero_exponent():
    assert jac_pow(ZERO, ZERO) == ONE and jac_mul(ZERO, ZERO) == ZERO
