import pytest

from ordcalc.cnf import ONE, ZERO, nat
from ordcalc.harness import iterate_op
from ordcalc.natural import nat_mul
from ordcalc.superjac import BaseOutOfRangeError, sj_pow, sj_pow_finite_base


@pytest.mark.parametrize("a, b, expected", [
    ("w + 2", "2", "w^2 + w*4 + 4"),
    ("2", "w", "w"),
    ("2", "1 + w", "w"),
    ("3", "w + 2", "w*9"),
    ("2", "w^2 + 1", "w^w*2"),
    ("w", "w", "w^w"),
    ("w + 1", "w", "w^w"),
    ("w + 1", "w + 1", "w^(w + 1) + w^w"),
    ("w*2", "w + 1", "w^(w + 1)*2"),
    ("w^2 + 1", "w*2", "w^(w*2)"),
    ("0", "w", "0"),
    ("1", "w", "1"),
])
def test_sj_pow(O, a, b, expected):
    assert sj_pow(O(a), O(b)) == O(expected)


def test_naive_exponent_sum_fails(O):
    # 2^((x)(1 + w)) = w but 2^((x)1) (x) 2^((x)w) = w*2
    assert sj_pow(nat(2), O("1 + w")) == O("w")
    assert nat_mul(sj_pow(nat(2), ONE), sj_pow(nat(2), O("w"))) == O("w*2")


def test_finite_exponents_iterate_natural_product(O):
    for text in ("w + 2", "w^2 + w*3", "w^w + 1", "3"):
        a = O(text)
        for n in range(7):
            assert sj_pow(a, nat(n)) == iterate_op("nat_mul", a, n)


def test_finite_base(O):
    assert sj_pow_finite_base(2, nat(10)) == nat(1024)
    assert sj_pow_finite_base(5, O("w^3 + w + 2")) == O("w^(w^2 + 1)*25")
    assert sj_pow_finite_base(nat(3), O("w")) == O("w")
    for bad in (0, 1):
        with pytest.raises(BaseOutOfRangeError):
            sj_pow_finite_base(bad, O("w"))
    with pytest.raises(BaseOutOfRangeError):
        sj_pow_finite_base(O("w"), O("w"))


def test_zero_exponent():
    assert sj_pow(ZERO, ZERO) == ONE
