"""Exact arithmetic on ordinals below epsilon_0 in Cantor normal form.

Ordinary (``+``, ``*``, ``**`` on :class:`Ordinal`), natural
(:func:`nat_add`, :func:`nat_mul`), Jacobsthal (:func:`jac_mul`,
:func:`jac_pow`) and super-Jacobsthal (:func:`sj_pow`) operations.
"""

from .classic import ord_add, ord_mul, ord_pow
from .cnf import (
    OMEGA,
    ONE,
    ZERO,
    Decomposition,
    NotDivisibleError,
    NotLimitError,
    Ordering,
    Ordinal,
    OrdinalError,
    Term,
    UndefinedDegreeError,
    cmp,
    deg,
    fund_seq,
    is_limit,
    is_successor,
    lub_strict,
    make_ordinal,
    nat,
    omega_div,
    omega_power,
    ordinal,
    split,
    succ,
)
from .expr import evaluate, parse, print_json, print_latex, print_text
from .jacobsthal import jac_mul, jac_pow
from .natural import conway_f, conway_witness_check, nat_add, nat_mul, nat_ominus
from .superjac import sj_pow, sj_pow_finite_base

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "NotDivisibleError",
    "NotLimitError",
    "OMEGA",
    "ONE",
    "Ordering",
    "Ordinal",
    "OrdinalError",
    "Term",
    "UndefinedDegreeError",
    "ZERO",
    "cmp",
    "conway_f",
    "conway_witness_check",
    "deg",
    "evaluate",
    "fund_seq",
    "is_limit",
    "is_successor",
    "jac_mul",
    "jac_pow",
    "lub_strict",
    "make_ordinal",
    "nat",
    "nat_add",
    "nat_mul",
    "nat_ominus",
    "omega_div",
    "omega_power",
    "ord_add",
    "ord_mul",
    "ord_pow",
    "ordinal",
    "parse",
    "print_json",
    "print_latex",
    "print_text",
    "sj_pow",
    "sj_pow_finite_base",
    "split",
    "succ",
]
