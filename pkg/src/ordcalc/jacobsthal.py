"""Jacobsthal multiplication (iterated natural sum) and Jacobsthal exponentiation."""

from __future__ import annotations

from functools import lru_cache

from .classic import _finite_power, ord_mul
from .cnf import ONE, ZERO, Ordinal, Term, nat, omega_div, split
from .natural import scale


@lru_cache(maxsize=1 << 15)
def jac_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """``a x b``: ``w^deg(a) * b' + a scaled by n`` where ``b = b' + n``."""
    if not a.terms or not b.terms:
        return ZERO
    limit_part, n = split(b)
    tail = scale(a, n)
    if not limit_part.terms:
        return tail
    a0 = a.terms[0].exponent
    head = ord_mul(Ordinal((Term(a0, 1),)), limit_part)
    return Ordinal(head.terms + tail.terms)


def jac_pow(a: Ordinal, b: Ordinal) -> Ordinal:
    """``a^(x b)``, the transfinite iterate of ``x``.

    Writing ``b = b' + n``: a finite base ``k >= 2`` gives ``w^(b'/w) * k^n``;
    an infinite base gives the ordinary product ``w^(deg(a) * b') * a^(x n)``.
    """
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a == ONE:
        return ONE
    limit_part, n = split(b)
    if a.is_finite:
        k = a.terms[0].coeff
        if not limit_part.terms:
            return nat(k ** n)
        return Ordinal((Term(omega_div(limit_part), k ** n),))
    tail = _finite_power(a, n, jac_mul)
    if not limit_part.terms:
        return tail
    head = Ordinal((Term(ord_mul(a.terms[0].exponent, limit_part), 1),))
    return ord_mul(head, tail)
