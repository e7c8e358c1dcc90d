import itertools

import pytest

from ordcalc.cnf import ONE, ZERO, cmp, lub_strict, nat
from ordcalc.natural import (
    PreconditionError,
    conway_f,
    conway_witness_check,
    nat_add,
    nat_mul,
    nat_ominus,
    nat_power,
    nat_prod,
    nat_sum,
    predecessor_sample,
    scale,
)


@pytest.mark.parametrize("a, b, expected", [
    ("1", "w", "w + 1"),
    ("w + 5", "w^2 + 1", "w^2 + w + 6"),
    ("w^w*2 + w", "w^3 + w*4", "w^w*2 + w^3 + w*5"),
    ("0", "w", "w"),
])
def test_nat_add(O, a, b, expected):
    assert nat_add(O(a), O(b)) == O(expected) == nat_add(O(b), O(a))


@pytest.mark.parametrize("a, b, expected", [
    ("2", "w", "w*2"),
    ("w + 2", "w + 2", "w^2 + w*4 + 4"),
    ("w + 1", "w + 1", "w^2 + w*2 + 1"),
    ("w^w + 1", "w", "w^(w + 1) + w"),
    ("w^2 + w", "w^w + 3", "w^(w + 2) + w^(w + 1) + w^2*3 + w*3"),
    ("0", "w^w", "0"),
])
def test_nat_mul(O, a, b, expected):
    assert nat_mul(O(a), O(b)) == O(expected) == nat_mul(O(b), O(a))


def test_nat_power_and_scale(O):
    a = O("w^2 + w + 3")
    acc = ONE
    for n in range(40):
        assert nat_power(a, n) == acc
        acc = nat_mul(acc, a)
    assert scale(a, 3) == nat_sum([a, a, a])
    assert scale(a, 0) == ZERO
    assert nat_prod([a, a]) == nat_power(a, 2)


@pytest.mark.parametrize("a, b, expected", [
    ("w*2 + 1", "w + 5", "w"),
    ("w + 5", "w*2 + 1", "0"),
    ("w^2 + 3", "w + 7", "w^2"),
    ("w^2*2 + w*3 + 1", "w^2 + w*5 + 4", "w^2"),
    ("w^2*2 + w*3 + 1", "w^2*2 + w + 4", "w*2"),
    ("w^2*2 + w*3 + 1", "w^2*2 + w*3", "1"),
    ("w^w + 1", "0", "w^w + 1"),
])
def test_nat_ominus(O, a, b, expected):
    g = nat_ominus(O(a), O(b))
    assert g == O(expected)
    assert cmp(nat_add(O(b), g), O(a)) >= 0


def test_conway_f_small_values(O):
    # f_{2,2}(1,1) = 2*1 (+) 1*2 (-) 1 = 3
    assert conway_f(nat(2), nat(2), ONE, ONE) == nat(3)
    assert conway_f(O("w"), O("w"), ONE, ONE) == O("w*2")
    with pytest.raises(PreconditionError):
        conway_f(nat(2), nat(2), nat(2), ONE)


def _f_values(a, b, depth):
    pa = predecessor_sample(a, depth)
    pb = predecessor_sample(b, depth)
    return [conway_f(a, b, x, y) for x, y in itertools.product(pa, pb)]


@pytest.mark.parametrize("a, b", [(2, 2), (3, 2), (4, 3), (1, 5), (5, 5)])
def test_conway_characterization_exact_on_finite_pairs(a, b):
    # finite operands: the predecessor sample is complete, so search the least
    # natural number above every f value
    values = _f_values(nat(a), nat(b), 0)
    least = next(g for g in range(100) if all(cmp(nat(g), v) > 0 for v in values))
    assert least == a * b


def test_conway_bound_from_samples(O):
    # a limit factor is only approximated: the bound grows with the sample
    # depth and stays at or below the true product
    for a, b in [("w", "2"), ("w", "w"), ("w^2", "w + 3")]:
        a, b = O(a), O(b)
        bounds = [lub_strict(_f_values(a, b, d)) for d in (2, 4, 8)]
        assert all(x < y for x, y in zip(bounds, bounds[1:]))
        assert bounds[-1] <= nat_mul(a, b)
    # successor factors: the top predecessors l + i are sampled, which is enough
    assert lub_strict(_f_values(O("w + 1"), nat(2), 2)) == O("w*2 + 2")
    a, b = O("w^2 + 1"), O("w + 3")
    assert lub_strict(_f_values(a, b, 2)) == nat_mul(a, b)


def test_predecessor_sample(O):
    assert predecessor_sample(nat(3), 5) == [ZERO, ONE, nat(2)]
    s = predecessor_sample(O("w*2 + 2"), 2)
    assert O("w*2") in s and O("w*2 + 1") in s and O("w + 2") in s
    assert all(x < O("w*2 + 2") for x in s)
    assert all(x < y for x, y in zip(s, s[1:]))


def test_conway_witness_check(O):
    a, b = O("w + 1"), O("w*2")
    assert conway_witness_check(a, b, nat_mul(a, b), 4)
    assert not conway_witness_check(a, b, O("w^2"), 4)
