"""Super-Jacobsthal exponentiation: the transfinite iterate of the natural product."""

from __future__ import annotations

from .cnf import ONE, ZERO, Ordinal, OrdinalError, Term, nat, omega_div, split
from .jacobsthal import jac_mul
from .natural import nat_mul, nat_power


class BaseOutOfRangeError(OrdinalError, ValueError):
    pass


def sj_pow_finite_base(a: int, b: Ordinal) -> Ordinal:
    """``a^(⊗b) = w^(b'/w) * a^n`` for finite ``a >= 2`` and ``b = b' + n``."""
    if isinstance(a, Ordinal):
        if not a.is_finite:
            raise BaseOutOfRangeError("base must be finite")
        a = int(a)
    if a < 2:
        raise BaseOutOfRangeError(f"finite base must be >= 2, got {a}")
    limit_part, n = split(b)
    if not limit_part.terms:
        return nat(a ** n)
    return Ordinal((Term(omega_div(limit_part), a ** n),))


def sj_pow(a: Ordinal, b: Ordinal) -> Ordinal:
    """``a^(⊗b)``.

    For infinite ``a`` with ``b = b' + n`` this is
    ``w^(deg(a) x b') ⊗ a^(⊗n)``, the Jacobsthal product appearing in the
    exponent.
    """
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a == ONE:
        return ONE
    if a.is_finite:
        return sj_pow_finite_base(int(a), b)
    limit_part, n = split(b)
    tail = nat_power(a, n)
    if not limit_part.terms:
        return tail
    head = Ordinal((Term(jac_mul(a.terms[0].exponent, limit_part), 1),))
    return nat_mul(head, tail)
