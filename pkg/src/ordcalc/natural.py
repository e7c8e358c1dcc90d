"""Natural (Hessenberg) sum and product, natural monus, and Conway's characterization."""

from __future__ import annotations

from functools import cmp_to_key, lru_cache
from operator import add

from .cnf import (
    ONE,
    ZERO,
    Ordinal,
    OrdinalError,
    Term,
    make_term,
    cmp,
    fund_seq,
    nat,
    split,
    succ,
)


def nat_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    ta, tb = a.terms, b.terms
    na, nb = len(ta), len(tb)
    out = []
    i = j = 0
    while i < na and j < nb:
        ka, kb = ta[i].exponent.key, tb[j].exponent.key
        if ka > kb:
            out.append(ta[i])
            i += 1
        elif ka < kb:
            out.append(tb[j])
            j += 1
        else:
            out.append(Term(ta[i].exponent, ta[i].coeff + tb[j].coeff))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return Ordinal(tuple(out))


# The natural product is polynomial multiplication: an exponent
# w^f1*d1 + ... + w^fk*dk is the integer vector (d1, ..., dk) over the inner
# exponents f1 > ... > fk, natural sums of exponents are vector sums, and
# exponents compare as their vectors do lexicographically.


def _variables(*xs) -> list:
    seen = {}
    for x in xs:
        for e, _ in x.terms:
            for f, _ in e.terms:
                seen[f] = None
    return sorted(seen, key=_key, reverse=True)


def _to_poly(x: Ordinal, index: dict, k: int) -> list:
    poly = []
    for e, c in x.terms:
        vec = [0] * k
        for f, d in e.terms:
            vec[index[f]] = d
        poly.append((tuple(vec), c))
    return poly


def _poly_mul(pa, pb) -> dict:
    acc: dict = {}
    get = acc.get
    for va, ca in pa:
        for vb, cb in pb:
            v = tuple(map(add, va, vb))
            acc[v] = get(v, 0) + ca * cb
    return acc


def _from_poly(poly: dict, variables: list) -> Ordinal:
    terms = []
    for vec in sorted(poly, reverse=True):
        e = Ordinal(tuple([make_term(f, d) for f, d in zip(variables, vec) if d]))
        terms.append(make_term(e, poly[vec]))
    return Ordinal(tuple(terms))


def _key(o):
    return o.key


def scale(a: Ordinal, n: int) -> Ordinal:
    """``a`` natural-summed with itself ``n`` times: every coefficient times ``n``."""
    if n == 0 or not a.terms:
        return ZERO
    if n == 1:
        return a
    return Ordinal(tuple([Term(e, c * n) for e, c in a.terms]))


@lru_cache(maxsize=1 << 12)
def nat_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    if b.is_finite:
        return scale(a, b.terms[0].coeff)
    if a.is_finite:
        return scale(b, a.terms[0].coeff)
    variables = _variables(a, b)
    index = {f: i for i, f in enumerate(variables)}
    k = len(variables)
    return _from_poly(_poly_mul(_to_poly(a, index, k), _to_poly(b, index, k)), variables)


def nat_power(a: Ordinal, n: int) -> Ordinal:
    """``a (x) ... (x) a`` with ``n`` factors."""
    if n == 0:
        return ONE
    if not a.terms:
        return ZERO
    if a.is_finite:
        return nat(a.terms[0].coeff ** n)
    variables = _variables(a)
    k = len(variables)
    base = _to_poly(a, {f: i for i, f in enumerate(variables)}, k)
    result = [((0,) * k, 1)]
    if n <= 32:
        for _ in range(n):
            result = list(_poly_mul(result, base).items())
    else:
        while n:
            if n & 1:
                result = list(_poly_mul(result, base).items())
            n >>= 1
            if n:
                base = list(_poly_mul(base, base).items())
    return _from_poly(dict(result), variables)


def nat_sum(values) -> Ordinal:
    total = ZERO
    for v in values:
        total = nat_add(total, v)
    return total


def nat_prod(values) -> Ordinal:
    total = ONE
    for v in values:
        total = nat_mul(total, v)
    return total


def nat_ominus(a: Ordinal, b: Ordinal) -> Ordinal:
    """Least ``g`` such that ``b (+) g >= a``.

    Walk both term lists from the top.  At the first exponent where ``a`` has
    the larger coefficient, ``g`` must supply the difference there; everything
    below is handled recursively on the tails.
    """
    ta, tb = a.terms, b.terms
    i = j = 0
    while True:
        if i == len(ta):
            return ZERO  # b >= a
        if j == len(tb):
            return Ordinal(ta[i:])
        ea, ca = ta[i]
        eb, cb = tb[j]
        c = cmp(ea, eb)
        if c < 0:
            return ZERO  # b has a higher term, b > a
        if c > 0:
            d = ca
            j_next = j
        elif ca > cb:
            d = ca - cb
            j_next = j + 1
        elif ca < cb:
            return ZERO
        else:
            i += 1
            j += 1
            continue
        rest = nat_ominus(Ordinal(ta[i + 1:]), Ordinal(tb[j_next:]))
        return Ordinal((Term(ea, d),) + rest.terms)


class PreconditionError(OrdinalError, ValueError):
    pass


def conway_f(alpha: Ordinal, beta: Ordinal, alpha_p: Ordinal, beta_p: Ordinal) -> Ordinal:
    """``((alpha (x) beta') (+) (alpha' (x) beta)) (-) (alpha' (x) beta')``."""
    if not (cmp(alpha_p, alpha) < 0 and cmp(beta_p, beta) < 0):
        raise PreconditionError("conway_f requires alpha' < alpha and beta' < beta")
    return nat_ominus(
        nat_add(nat_mul(alpha, beta_p), nat_mul(alpha_p, beta)),
        nat_mul(alpha_p, beta_p),
    )


def predecessor_sample(a: Ordinal, depth: int) -> list:
    """A finite sample of ordinals below ``a``.

    Finite ``a``: every predecessor.  Otherwise, writing ``a = l + k``, the
    ordinals ``l + i`` for ``i < k`` together with ``l[n]`` and ``l[n] + 1``
    for ``n <= depth``.
    """
    if a.is_finite:
        return [nat(i) for i in range(int(a))]
    limit_part, k = split(a)
    out = {}
    for n in range(depth + 1):
        x = fund_seq(limit_part, n)
        out[x] = None
        out[succ(x)] = None
    x = limit_part
    for _ in range(k):
        out[x] = None
        x = succ(x)
    return sorted(out, key=cmp_to_key(cmp))


def conway_witness_check(alpha: Ordinal, beta: Ordinal, claimed: Ordinal, depth: int) -> bool:
    """Necessary condition for ``claimed == alpha (x) beta`` by sampled predecessors.

    Checks ``claimed (+) (a' (x) b') > (alpha (x) b') (+) (a' (x) beta)`` for
    every sampled pair; this cannot certify minimality.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    pa = predecessor_sample(alpha, depth)
    pb = predecessor_sample(beta, depth)
    for ap in pa:
        a_beta = nat_mul(ap, beta)
        for bp in pb:
            lhs = nat_add(claimed, nat_mul(ap, bp))
            rhs = nat_add(nat_mul(alpha, bp), a_beta)
            if cmp(lhs, rhs) <= 0:
                return False
    return True

