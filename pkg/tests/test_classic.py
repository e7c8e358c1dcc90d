import pytest

from ordcalc.classic import ord_add, ord_mul, ord_pow
from ordcalc.cnf import ONE, ZERO, nat
from ordcalc.harness import iterate_op


@pytest.mark.parametrize("a, b, expected", [
    ("1", "w", "w"),
    ("w", "1", "w + 1"),
    ("w*3 + 5", "w^2", "w^2"),
    ("w^2 + w*3", "w*2 + 7", "w^2 + w*5 + 7"),
    ("w^w + 3", "w^2", "w^w + w^2"),
    ("0", "w", "w"),
    ("w", "0", "w"),
])
def test_ord_add(O, a, b, expected):
    assert ord_add(O(a), O(b)) == O(expected)


@pytest.mark.parametrize("a, b, expected", [
    ("2", "w", "w"),
    ("w", "2", "w*2"),
    ("w + 1", "w + 1", "w^2 + w + 1"),
    ("w^2*3 + w + 5", "4", "w^2*12 + w + 5"),
    ("w^2*3 + 5", "w*2 + 3", "w^3*2 + w^2*9 + 5"),
    ("w^w", "w^w", "w^(w*2)"),
    ("0", "w", "0"),
    ("w", "0", "0"),
])
def test_ord_mul(O, a, b, expected):
    assert ord_mul(O(a), O(b)) == O(expected)


@pytest.mark.parametrize("a, b, expected", [
    ("2", "w", "w"),
    ("2", "w + 3", "w*8"),
    ("3", "w^2 + 1", "w^w*3"),
    ("w + 2", "2", "w^2 + w*2 + 2"),
    ("w", "w", "w^w"),
    ("w + 1", "w", "w^w"),
    ("w^2 + 1", "w + 2", "w^(w + 4) + w^(w + 2) + w^w"),
    ("0", "0", "1"),
    ("0", "w", "0"),
    ("1", "w^w", "1"),
    ("5", "3", "125"),
])
def test_ord_pow(O, a, b, expected):
    assert ord_pow(O(a), O(b)) == O(expected)


def test_finite_powers_match_repeated_products(O):
    for text in ("w + 3", "w^2*2 + w + 1", "w^w + 2"):
        a = O(text)
        for n in range(7):
            assert ord_pow(a, nat(n)) == iterate_op("ord_mul", a, n)
            assert ord_mul(a, nat(n)) == iterate_op("ord_add", a, n)


def test_units():
    for x in (ZERO, ONE, nat(9)):
        assert ord_add(x, ZERO) == x and ord_mul(x, ONE) == x and ord_pow(x, ONE) == x
