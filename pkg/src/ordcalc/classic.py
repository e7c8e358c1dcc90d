"""Ordinary ordinal addition, multiplication and exponentiation on CNF."""

from __future__ import annotations

from .cnf import ONE, ZERO, Ordinal, Term, cmp, nat, omega_div, split


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    e, b0 = b.terms[0]
    head = []
    for term in a.terms:
        c = cmp(term.exponent, e)
        if c > 0:
            head.append(term)
        else:
            if c == 0:
                return Ordinal(tuple(head) + (Term(e, term.coeff + b0),) + b.terms[1:])
            break
    return Ordinal(tuple(head) + b.terms)


def ord_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    a0 = a.terms[0].exponent
    out = []
    for e, c in b.terms:
        if e.terms:
            out.append(Term(ord_add(a0, e), c))
        else:
            out.append(Term(a0, a.terms[0].coeff * c))
            out.extend(a.terms[1:])
    return Ordinal(tuple(out))


def _finite_power(a: Ordinal, n: int, mul) -> Ordinal:
    # square-and-multiply; valid for any associative `mul`
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def ord_pow(a: Ordinal, b: Ordinal) -> Ordinal:
    """``a ** b``.  ``0 ** 0 == 1``.

    Closed forms: a finite base ``k >= 2`` gives ``w^(b'/w) * k^n`` and an
    infinite base gives ``w^(deg(a) * b') * a^n`` where ``b = b' + n``.
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
    head = ONE
    if limit_part.terms:
        head = Ordinal((Term(ord_mul(a.terms[0].exponent, limit_part), 1),))
    return ord_mul(head, _finite_power(a, n, ord_mul))
