import pickle

import pytest

from ordcalc.cnf import (
    OMEGA,
    ONE,
    ZERO,
    NegativeCoefficientError,
    NotDivisibleError,
    NotLimitError,
    Ordering,
    Ordinal,
    OrdinalError,
    UndefinedDegreeError,
    cmp,
    deg,
    fund_seq,
    is_limit,
    is_successor,
    lub_strict,
    make_ordinal,
    minus_one_left,
    nat,
    omega_div,
    omega_power,
    one_plus,
    pred,
    split,
    succ,
)


def test_make_ordinal_canonicalizes():
    a = make_ordinal([(0, 3), (2, 1), (1, 0), (2, 4)])
    assert [(int(e), c) for e, c in a.terms] == [(2, 5), (0, 3)]
    assert make_ordinal([]) == ZERO
    with pytest.raises(NegativeCoefficientError):
        make_ordinal([(1, -1)])
    with pytest.raises(NegativeCoefficientError):
        nat(-3)


def test_finite_values_and_equality_with_int():
    assert nat(7) == 7
    assert int(nat(7)) == 7
    assert nat(0) is ZERO
    assert nat(10 ** 30).terms[0].coeff == 10 ** 30
    with pytest.raises(OrdinalError):
        int(OMEGA)


def test_immutable_and_hashable():
    a = make_ordinal([(OMEGA, 2), (0, 1)])
    with pytest.raises(AttributeError):
        a.terms = ()
    b = make_ordinal([(0, 1), (OMEGA, 2)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert pickle.loads(pickle.dumps(a)) == a


@pytest.mark.parametrize("small, big", [
    ("0", "1"),
    ("5", "w"),
    ("w*5 + 3", "w*5 + 4"),
    ("w*5 + 100", "w*6"),
    ("w^2", "w^2 + 1"),
    ("w^w", "w^(w + 1)"),
    ("w^(w^w)", "w^(w^w) + w"),
    ("w^(w^2) * 9", "w^(w^2 + 1)"),
])
def test_cmp(O, small, big):
    a, b = O(small), O(big)
    assert cmp(a, b) == -1 and cmp(b, a) == 1 and cmp(a, a) == 0
    assert a < b and b > a and a <= a and not a < a


def test_successor_limit_classification(O):
    assert not is_limit(ZERO) and not is_successor(ZERO)
    assert is_successor(O("w + 1")) and is_successor(ONE)
    assert is_limit(OMEGA) and is_limit(O("w^2 + w"))
    assert succ(O("w*2")) == O("w*2 + 1")
    assert succ(O("w + 4")) == O("w + 5")
    assert pred(O("w + 5")) == O("w + 4")
    assert split(O("w^3 + w + 4")) == (O("w^3 + w"), 4)
    assert split(OMEGA) == (OMEGA, 0)


def test_deg(O):
    assert deg(O("w^(w+1)*3 + w")) == O("w + 1")
    assert deg(nat(4)) == ZERO
    with pytest.raises(UndefinedDegreeError):
        deg(ZERO)


def test_one_plus_inverse(O):
    for e in ("0", "3", "w", "w^2 + 5"):
        x = O(e)
        assert minus_one_left(one_plus(x)) == x
    assert one_plus(OMEGA) == OMEGA


def test_omega_div(O):
    assert omega_div(O("w^2*3")) == O("w*3")
    assert omega_div(O("w^w + w*2")) == O("w^w + 2")
    assert omega_div(ZERO) == ZERO
    with pytest.raises(NotDivisibleError):
        omega_div(O("w + 1"))


def test_lub_strict(O):
    assert lub_strict([]) == ZERO
    assert lub_strict([O("3"), O("w"), O("w*2")]) == O("w*2 + 1")


@pytest.mark.parametrize("a, n, expected", [
    ("w", 3, "3"),
    ("w*2", 4, "w + 4"),
    ("w^2", 3, "w*3"),
    ("w^w", 2, "w^2"),
    ("w^(w+1)", 2, "w^w*2"),
    ("w^(w^w)", 1, "w^w"),
    ("w^3*2 + w^2", 0, "w^3*2"),
])
def test_fund_seq(O, a, n, expected):
    assert fund_seq(O(a), n) == O(expected)


def test_fund_seq_increasing_and_cofinal(O):
    a = O("w^(w^2 + w) * 2 + w^3")
    seq = [fund_seq(a, n) for n in range(12)]
    assert all(x < y for x, y in zip(seq, seq[1:]))
    assert all(x < a for x in seq)
    with pytest.raises(NotLimitError):
        fund_seq(O("w + 1"), 0)


def test_operator_sugar():
    assert OMEGA + 1 == make_ordinal([(1, 1), (0, 1)])
    assert 1 + OMEGA == OMEGA
    assert 2 * OMEGA == OMEGA
    assert OMEGA * 2 == omega_power(1, 2)
    assert 2 ** OMEGA == OMEGA
    assert OMEGA ** 2 == omega_power(2)


def test_repr_and_str():
    a = make_ordinal([(OMEGA, 1), (0, 2)])
    assert str(a) == "w^w + 2"
    assert eval(repr(a), {"Ordinal": lambda s: s}) == "w^w + 2"
    assert isinstance(a, Ordinal)


def test_cmp_examples(O):
    assert cmp(ZERO, OMEGA) is Ordering.LT
    assert cmp(O("w^w"), O("w*5")) is Ordering.GT
    assert cmp(O("w*2 + 1"), O("w*2 + 1")) is Ordering.EQ
