"""Cantor normal form ordinals below epsilon_0.

An :class:`Ordinal` is an immutable, canonical tuple of :class:`Term` values
with strictly decreasing exponents.  Exponents are themselves ordinals, so the
nesting depth is finite and every value is below epsilon_0.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, NamedTuple, Union


class OrdinalError(ArithmeticError):
    """Base class for domain errors raised by ordinal operations."""


class NegativeCoefficientError(OrdinalError, ValueError):
    pass


class UndefinedDegreeError(OrdinalError):
    pass


class NotDivisibleError(OrdinalError):
    pass


class NotLimitError(OrdinalError):
    pass


class Term(NamedTuple):
    exponent: "Ordinal"
    coeff: int


def make_term(exponent: "Ordinal", coeff: int) -> Term:
    # skips the NamedTuple argument handling; hot path for the natural product
    return _tuple_new(Term, (exponent, coeff))


_tuple_new = tuple.__new__


class Ordinal:
    """A canonical CNF value.  Build through :func:`make_ordinal` or :func:`ordinal`."""

    __slots__ = ("terms", "key", "_hash")

    def __init__(self, terms: tuple = ()):
        # trusted constructor: `terms` must already be canonical.
        # `key` is a nested tuple whose native ordering is the ordinal ordering
        key = tuple([(e.key, c) for e, c in terms])
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("Ordinal is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.key == other.key)

    def __lt__(self, other):
        return self.key < _coerce(other).key

    def __le__(self, other):
        return self.key <= _coerce(other).key

    def __gt__(self, other):
        return self.key > _coerce(other).key

    def __ge__(self, other):
        return self.key >= _coerce(other).key

    def __bool__(self):
        return bool(self.terms)

    def __reduce__(self):
        return (Ordinal, (self.terms,))

    # ordinary arithmetic as operators; the natural and Jacobsthal families
    # are only available as functions
    def __add__(self, other):
        from .classic import ord_add
        return ord_add(self, _coerce(other))

    def __radd__(self, other):
        from .classic import ord_add
        return ord_add(_coerce(other), self)

    def __mul__(self, other):
        from .classic import ord_mul
        return ord_mul(self, _coerce(other))

    def __rmul__(self, other):
        from .classic import ord_mul
        return ord_mul(_coerce(other), self)

    def __pow__(self, other):
        from .classic import ord_pow
        return ord_pow(self, _coerce(other))

    def __rpow__(self, other):
        from .classic import ord_pow
        return ord_pow(_coerce(other), self)

    def __repr__(self):
        from .expr import print_text
        return f"Ordinal({print_text(self)!r})"

    def __str__(self):
        from .expr import print_text
        return print_text(self)

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0].exponent.terms)

    def __int__(self):
        if not self.is_finite:
            raise OrdinalError("infinite ordinal has no integer value")
        return self.terms[0].coeff if self.terms else 0

    @property
    def leading_coeff(self) -> int:
        return self.terms[0].coeff if self.terms else 0


OrdinalLike = Union[Ordinal, int]

ZERO = Ordinal(())
_SMALL = [ZERO] + [Ordinal((Term(ZERO, n),)) for n in range(1, 65)]
ONE = _SMALL[1]
OMEGA = Ordinal((Term(ONE, 1),))


def nat(n: int) -> Ordinal:
    """The finite ordinal ``n``."""
    if n < 0:
        raise NegativeCoefficientError(f"negative natural number {n}")
    if n < len(_SMALL):
        return _SMALL[n]
    return Ordinal((Term(ZERO, n),))


def _coerce(x) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return nat(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


ordinal = _coerce


def omega_power(exponent: OrdinalLike, coeff: int = 1) -> Ordinal:
    """The single-term ordinal ``w^exponent * coeff``."""
    if coeff < 0:
        raise NegativeCoefficientError(f"negative coefficient {coeff}")
    if coeff == 0:
        return ZERO
    return Ordinal((Term(_coerce(exponent), coeff),))


def make_ordinal(terms: Iterable[tuple]) -> Ordinal:
    """Canonicalize a sequence of ``(exponent, coeff)`` pairs read as a natural sum.

    Equal exponents are merged, zero coefficients dropped and the result sorted
    by decreasing exponent.
    """
    merged: dict = {}
    for exponent, coeff in terms:
        coeff = int(coeff)
        if coeff < 0:
            raise NegativeCoefficientError(f"negative coefficient {coeff}")
        if coeff == 0:
            continue
        e = _coerce(exponent)
        merged[e] = merged.get(e, 0) + coeff
    return _from_dict(merged)


def _from_dict(merged: dict) -> Ordinal:
    if not merged:
        return ZERO
    if len(merged) == 1:
        ((e, c),) = merged.items()
        if not e.terms and c < len(_SMALL):
            return _SMALL[c]
        return Ordinal((Term(e, c),))
    keys = sorted(merged, key=_key, reverse=True)
    return Ordinal(tuple([Term(e, merged[e]) for e in keys]))


def _key(o: Ordinal) -> tuple:
    return o.key


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


_ORDERINGS = (Ordering.LT, Ordering.EQ, Ordering.GT)


def cmp(a: Ordinal, b: Ordinal) -> Ordering:
    """Three-way comparison, an :class:`Ordering` (an int: -1, 0 or 1).

    Terms are compared lexicographically by (exponent, coefficient); of two
    sequences agreeing on a prefix the longer one is larger.  That is exactly
    tuple ordering on ``key``.
    """
    ka, kb = a.key, b.key
    return _ORDERINGS[(ka > kb) - (ka < kb) + 1]


def omax(a: Ordinal, b: Ordinal) -> Ordinal:
    return a if cmp(a, b) >= 0 else b


def is_zero(a: Ordinal) -> bool:
    return not a.terms


def is_successor(a: Ordinal) -> bool:
    return bool(a.terms) and not a.terms[-1].exponent.terms


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and bool(a.terms[-1].exponent.terms)


def succ(a: Ordinal) -> Ordinal:
    terms = a.terms
    if terms and not terms[-1].exponent.terms:
        return Ordinal(terms[:-1] + (Term(ZERO, terms[-1].coeff + 1),))
    if not terms:
        return ONE
    return Ordinal(terms + (Term(ZERO, 1),))


def pred(a: Ordinal) -> Ordinal:
    """Immediate predecessor of a successor ordinal."""
    if not is_successor(a):
        raise OrdinalError("only successor ordinals have a predecessor")
    *head, last = a.terms
    if last.coeff == 1:
        return Ordinal(tuple(head))
    return Ordinal(tuple(head) + (Term(ZERO, last.coeff - 1),))


class Decomposition(NamedTuple):
    limit_part: Ordinal
    finite_part: int


def split(a: Ordinal) -> Decomposition:
    """Split ``a`` as ``limit_part + finite_part`` with ``limit_part`` zero or a limit."""
    terms = a.terms
    if terms and not terms[-1].exponent.terms:
        return Decomposition(Ordinal(terms[:-1]), terms[-1].coeff)
    return Decomposition(a, 0)


def deg(a: Ordinal) -> Ordinal:
    """Largest exponent in the Cantor normal form of a nonzero ordinal."""
    if not a.terms:
        raise UndefinedDegreeError("deg(0) is undefined")
    return a.terms[0].exponent


def one_plus(e: Ordinal) -> Ordinal:
    """``1 + e`` under ordinary addition."""
    return succ(e) if e.is_finite else e


def minus_one_left(e: Ordinal) -> Ordinal:
    """The ``d`` with ``1 + d == e``, for ``e >= 1``."""
    if not e.terms:
        raise OrdinalError("0 has no left predecessor")
    return pred(e) if e.is_finite else e


def omega_div(a: Ordinal) -> Ordinal:
    """The unique ``b`` with ``w * b == a``, for ``a`` zero or a limit."""
    if is_successor(a):
        raise NotDivisibleError(f"{a} is a successor ordinal, not divisible by w")
    return Ordinal(tuple(Term(minus_one_left(e), c) for e, c in a.terms))


def lub_strict(s: Iterable[Ordinal]) -> Ordinal:
    """Least ordinal strictly greater than every element of a finite set."""
    best = None
    for x in s:
        if best is None or cmp(x, best) > 0:
            best = x
    return ZERO if best is None else succ(best)


def fund_seq(a: Ordinal, n: int) -> Ordinal:
    """The n-th element of the standard fundamental sequence of a limit ordinal."""
    if not is_limit(a):
        raise NotLimitError(f"{a} is not a limit ordinal")
    if n < 0:
        raise ValueError("index must be nonnegative")
    *head, (delta, c) = a.terms
    head = list(head)
    if c > 1:
        head.append(Term(delta, c - 1))
    if is_successor(delta):
        tail = [Term(pred(delta), n)] if n else []
    else:
        tail = [Term(fund_seq(delta, n), 1)]
    return Ordinal(tuple(head + tail))
