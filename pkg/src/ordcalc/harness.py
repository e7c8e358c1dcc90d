"""Seeded law verification.

Random ordinals come from :func:`gen_ordinal`; each trial derives its own seed
from ``(master seed, law id, trial index)`` so trials are order independent and
can run in worker processes.  Closed forms are checked against
:func:`iterate_op` (the literal successor clauses) and, at limit stages,
against :func:`limit_certificate`.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .classic import ord_add, ord_mul, ord_pow
from .cnf import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    cmp,
    deg,
    fund_seq,
    is_limit,
    make_ordinal,
    nat,
    succ,
)
from .expr import print_text
from .jacobsthal import jac_mul, jac_pow
from .natural import conway_f, conway_witness_check, nat_add, nat_mul, predecessor_sample
from .superjac import sj_pow, sj_pow_finite_base

HOLDS = "holds"
FAILS = "fails"


class UnknownLawError(KeyError):
    pass


@dataclass(frozen=True)
class GenParams:
    max_depth: int = 2
    max_terms: int = 3
    max_coeff: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.max_depth < 0 or self.max_terms < 1 or self.max_coeff < 1:
            raise ValueError(f"invalid generator bounds: {self}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def derive_seed(*parts) -> int:
    digest = hashlib.sha256(":".join(map(str, parts)).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def gen_ordinal(params: GenParams, stream_index: int) -> Ordinal:
    """Deterministic pseudo-random ordinal within the bounds of ``params``."""
    rng = random.Random(derive_seed(params.seed, "gen", stream_index))
    return _gen(rng, params.max_depth, params)


def _gen(rng: random.Random, depth: int, p: GenParams) -> Ordinal:
    if depth == 0:
        return nat(rng.randint(0, p.max_coeff))
    r = rng.random()
    if r < 0.08:
        return ZERO
    if r < 0.22:
        return nat(rng.randint(1, p.max_coeff))
    exps = {_gen_positive(rng, depth - 1, p) for _ in range(rng.randint(1, p.max_terms))}
    terms = [(e, rng.randint(1, p.max_coeff)) for e in exps]
    # successor shape keeps a finite part, limit shape does not
    if r >= 0.6 and len(terms) < p.max_terms + 1:
        terms.append((ZERO, rng.randint(1, p.max_coeff)))
    return make_ordinal(terms)


def _gen_positive(rng, depth, p) -> Ordinal:
    if depth == 0:
        return nat(rng.randint(1, p.max_coeff))
    x = _gen(rng, depth, p)
    return x if x.terms else ONE


ITERABLE_OPS = {
    "nat_add": (nat_add, ZERO),
    "ord_add": (ord_add, ZERO),
    "nat_mul": (nat_mul, ONE),
    "jac_mul": (jac_mul, ONE),
    "ord_mul": (ord_mul, ONE),
}


def iterate_op(op: str, base: Ordinal, n: int) -> Ordinal:
    """``n``-fold iterate ``(((unit op base) op base) ...)``, the successor clauses verbatim."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    fn, acc = ITERABLE_OPS[op]
    for _ in range(n):
        acc = fn(acc, base)
    return acc


@dataclass(frozen=True)
class CertResult:
    verdict: str  # "pass" or "fail"
    samples_checked: int
    witness: Optional[Ordinal] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def limit_certificate(claimed: Ordinal, sample: Callable[[Ordinal], Ordinal], beta: Ordinal,
                      m_depth: int = 8, n_depth: int = 8, search: int = 64) -> CertResult:
    """Check that ``claimed`` is the limit of ``sample`` along ``beta``'s fundamental sequence.

    The samples ``v_n = sample(beta[n])`` for ``n <= n_depth`` must be
    nondecreasing and stay at or below ``claimed``; since they are monotone and
    bounded, touching the claim means staying there.  A limit claim must be
    approached from below: each ``claimed[m]`` (``m <= m_depth``) has to be
    exceeded by some sample, looking up to ``search`` indices further along
    ``beta`` when the first ``n_depth`` samples lag behind.  A zero or successor
    claim must be reached by an eventually constant sequence.
    """
    if not is_limit(beta):
        raise ValueError(f"{print_text(beta)} is not a limit ordinal")
    vs = []

    def extend() -> Optional[CertResult]:
        n = len(vs)
        v = sample(fund_seq(beta, n))
        vs.append(v)
        if (n and cmp(vs[n - 1], v) > 0) or cmp(v, claimed) > 0:
            return CertResult("fail", len(vs), v)
        return None

    for _ in range(n_depth + 1):
        bad = extend()
        if bad:
            return bad
    if not is_limit(claimed):
        if any(cmp(v, claimed) for v in vs[(n_depth + 1) // 2:]):
            return CertResult("fail", len(vs), vs[-1])
        return CertResult("pass", len(vs))
    if cmp(vs[-1], claimed) == 0:
        return CertResult("pass", len(vs))
    for m in range(m_depth + 1):
        target = fund_seq(claimed, m)
        while cmp(vs[-1], target) <= 0:
            if len(vs) > n_depth + 1 + search:
                return CertResult("fail", len(vs), target)
            bad = extend()
            if bad:
                return bad
    return CertResult("pass", len(vs))


# ---------------------------------------------------------------- law catalog


@dataclass(frozen=True)
class Law:
    law_id: str
    title: str
    check: Callable  # inputs tuple -> (ok, lhs, rhs)
    generate: Callable  # (params, rng) -> inputs tuple
    polarity: str = HOLDS
    forced: tuple = ()  # input tuples run before the random trials


@dataclass
class LawReport:
    law_id: str
    trials: int
    failures: list
    seed: int
    expected_polarity: str
    title: str = ""
    first_failure_trial: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures if self.expected_polarity == HOLDS else bool(self.failures)

    def to_dict(self, max_failures: int = 10) -> dict:
        return {
            "law_id": self.law_id,
            "title": self.title,
            "expected_polarity": self.expected_polarity,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failure_count": len(self.failures),
            "first_failure_trial": self.first_failure_trial,
            "failures": [
                {"inputs": [render(x) for x in inputs], "lhs": render(lhs), "rhs": render(rhs)}
                for inputs, lhs, rhs in self.failures[:max_failures]
            ],
        }


def render(x) -> str:
    if isinstance(x, Ordinal):
        return print_text(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(render(v) for v in x) + "]"
    return str(x)


def _ords(k):
    def generate(params, rng):
        return tuple(_gen(rng, params.max_depth, params) for _ in range(k))
    return generate


def _eq(sides):
    def check(inputs):
        lhs, rhs = sides(*inputs)
        return lhs == rhs, lhs, rhs
    return check


def _le(sides):
    def check(inputs):
        lhs, rhs = sides(*inputs)
        return cmp(lhs, rhs) <= 0, lhs, rhs
    return check


def _gen_positive_rng(rng, params):
    x = _gen(rng, params.max_depth, params)
    return x if x.terms else ONE


def _gen_limit_rng(rng, params):
    x = _gen(rng, params.max_depth, params)
    if is_limit(x):
        return x
    limit_terms = [(t.exponent, t.coeff) for t in x.terms if t.exponent.terms]
    if limit_terms:
        return make_ordinal(limit_terms)
    return make_ordinal([(1, max(1, int(x)))])


def _gen_family(params, rng):
    alpha = _gen(rng, params.max_depth, params)
    k = rng.randint(0, 6)
    return (alpha, tuple(_gen(rng, params.max_depth, params) for _ in range(k + 1)))


def _check_family(inputs):
    alpha, betas = inputs
    total = ZERO
    rhs = ONE
    for b in betas:
        total = nat_add(total, b)
        rhs = nat_mul(rhs, sj_pow(alpha, b))
    lhs = sj_pow(alpha, total)
    return lhs == rhs, lhs, rhs


def _gen_oracle(max_n):
    def generate(params, rng):
        return (_gen(rng, params.max_depth, params), rng.randint(0, max_n))
    return generate


def _oracle(closed, op):
    def check(inputs):
        base, n = inputs
        lhs, rhs = closed(base, nat(n)), iterate_op(op, base, n)
        return lhs == rhs, lhs, rhs
    return check


def _gen_finite_base(params, rng):
    return (rng.choice((2, 3, 5)), rng.randint(0, 10))


def _check_finite_base(inputs):
    a, n = inputs
    lhs, rhs = sj_pow_finite_base(a, nat(n)), iterate_op("nat_mul", nat(a), n)
    return lhs == rhs, lhs, rhs


def _gen_succ_stage(max_k):
    def generate(params, rng):
        return (_gen(rng, params.max_depth, params), _gen(rng, params.max_depth, params),
                rng.randint(0, max_k))
    return generate


def _succ_stage(closed, step):
    """closed(a, S g) == step(closed(a, g), a) for the k stages above g."""
    def check(inputs):
        alpha, gamma, k = inputs
        g = gamma
        for _ in range(k + 1):
            nxt = succ(g)
            lhs, rhs = closed(alpha, nxt), step(closed(alpha, g), alpha)
            if lhs != rhs:
                return False, lhs, rhs
            g = nxt
        return True, lhs, rhs
    return check


def _gen_cert(nonzero_base):
    def generate(params, rng):
        base = _gen_positive_rng(rng, params) if nonzero_base else _gen(rng, params.max_depth, params)
        return (base, _gen_limit_rng(rng, params))
    return generate


def _cert(closed):
    def check(inputs):
        alpha, beta = inputs
        claimed = closed(alpha, beta)
        res = limit_certificate(claimed, lambda g: closed(alpha, g), beta, 8, 8)
        return res.passed, claimed, res.witness if res.witness is not None else claimed
    return check


def _gen_finite_cert(params, rng):
    return (nat(rng.choice((2, 3, 5))), _gen_limit_rng(rng, params))


def _gen_positive_pair(params, rng):
    return (_gen_positive_rng(rng, params), _gen_positive_rng(rng, params))


def _check_deg(inputs):
    a, b = inputs
    lhs, rhs = deg(nat_mul(a, b)), nat_add(deg(a), deg(b))
    return lhs == rhs, lhs, rhs


def _check_conway(inputs):
    a, b = inputs
    prod = nat_mul(a, b)
    ok = conway_witness_check(a, b, prod, 4)
    return ok, prod, prod


def _gen_monoton(params, rng):
    a = _gen_positive_rng(rng, params)
    b = _gen_positive_rng(rng, params)
    pa = predecessor_sample(a, 4)
    pb = predecessor_sample(b, 4)
    a1, a2 = sorted((rng.randrange(len(pa)), rng.randrange(len(pa))))
    b1, b2 = sorted((rng.randrange(len(pb)), rng.randrange(len(pb))))
    return (a, b, pa[a1], pa[a2], pb[b1], pb[b2])


def _check_monoton(inputs):
    a, b, a1, a2, b1, b2 = inputs
    lhs, rhs = conway_f(a, b, a1, b1), conway_f(a, b, a2, b2)
    return cmp(lhs, rhs) <= 0, lhs, rhs


def _gen_small_ints(params, rng):
    return (rng.randint(0, 12), rng.randint(0, 12))


def _check_finite_agree(inputs):
    a, b = inputs
    lhs = (ord_add(nat(a), nat(b)), ord_mul(nat(a), nat(b)), ord_pow(nat(a), nat(b)),
           nat_add(nat(a), nat(b)), nat_mul(nat(a), nat(b)), jac_mul(nat(a), nat(b)),
           jac_pow(nat(a), nat(b)), sj_pow(nat(a), nat(b)))
    rhs = tuple(nat(v) for v in (a + b, a * b, a ** b, a + b, a * b, a * b, a ** b, a ** b))
    return lhs == rhs, list(lhs), list(rhs)


W = OMEGA

_LAWS = [
    # successor-based column of the law table
    Law("ord-add-assoc", "a+(b+c) = (a+b)+c",
        _eq(lambda a, b, c: (ord_add(a, ord_add(b, c)), ord_add(ord_add(a, b), c))), _ords(3)),
    Law("ord-mul-ldistrib", "a(b+c) = ab+ac",
        _eq(lambda a, b, c: (ord_mul(a, ord_add(b, c)), ord_add(ord_mul(a, b), ord_mul(a, c)))),
        _ords(3)),
    Law("ord-mul-assoc", "a(bc) = (ab)c",
        _eq(lambda a, b, c: (ord_mul(a, ord_mul(b, c)), ord_mul(ord_mul(a, b), c))), _ords(3)),
    Law("ord-pow-add", "a^(b+c) = a^b a^c",
        _eq(lambda a, b, c: (ord_pow(a, ord_add(b, c)), ord_mul(ord_pow(a, b), ord_pow(a, c)))),
        _ords(3)),
    Law("ord-pow-mul", "a^(bc) = (a^b)^c",
        _eq(lambda a, b, c: (ord_pow(a, ord_mul(b, c)), ord_pow(ord_pow(a, b), c))), _ords(3)),
    # natural-sum-based column
    Law("nat-add-assoc", "a(+)(b(+)c) = (a(+)b)(+)c",
        _eq(lambda a, b, c: (nat_add(a, nat_add(b, c)), nat_add(nat_add(a, b), c))), _ords(3)),
    Law("jacthm", "a x (b(+)c) = (a x b)(+)(a x c)",
        _eq(lambda a, b, c: (jac_mul(a, nat_add(b, c)), nat_add(jac_mul(a, b), jac_mul(a, c)))),
        _ords(3)),
    Law("jaccor1", "a x (b x c) = (a x b) x c",
        _eq(lambda a, b, c: (jac_mul(a, jac_mul(b, c)), jac_mul(jac_mul(a, b), c))), _ords(3)),
    Law("jaccor2", "a^(x(b+c)) = a^(x b) x a^(x c)",
        _eq(lambda a, b, c: (jac_pow(a, ord_add(b, c)), jac_mul(jac_pow(a, b), jac_pow(a, c)))),
        _ords(3)),
    Law("jaccor3", "a^(x(bc)) = (a^(x b))^(x c)",
        _eq(lambda a, b, c: (jac_pow(a, ord_mul(b, c)), jac_pow(jac_pow(a, b), c))), _ords(3)),
    # natural-product-based column
    Law("nat-mul-ldistrib", "a(x)(b(+)c) = (a(x)b)(+)(a(x)c)",
        _eq(lambda a, b, c: (nat_mul(a, nat_add(b, c)), nat_add(nat_mul(a, b), nat_mul(a, c)))),
        _ords(3)),
    Law("nat-mul-assoc", "a(x)(b(x)c) = (a(x)b)(x)c",
        _eq(lambda a, b, c: (nat_mul(a, nat_mul(b, c)), nat_mul(nat_mul(a, b), c))), _ords(3)),
    Law("mainthm", "a^((x)(b(+)c)) = a^((x)b) (x) a^((x)c)",
        _eq(lambda a, b, c: (sj_pow(a, nat_add(b, c)), nat_mul(sj_pow(a, b), sj_pow(a, c)))),
        _ords(3)),
    Law("maincor", "a^((x)(b x c)) = (a^((x)b))^((x)c)",
        _eq(lambda a, b, c: (sj_pow(a, jac_mul(b, c)), sj_pow(sj_pow(a, b), c))), _ords(3)),
    Law("maincor-finite", "a^((x)(b0(+)...(+)bk)) = (x)_i a^((x)bi), k <= 6",
        _check_family, _gen_family),
    # commutativity and two-sided distributivity of the natural operations
    Law("nat-add-comm", "a(+)b = b(+)a",
        _eq(lambda a, b: (nat_add(a, b), nat_add(b, a))), _ords(2)),
    Law("nat-mul-comm", "a(x)b = b(x)a",
        _eq(lambda a, b: (nat_mul(a, b), nat_mul(b, a))), _ords(2)),
    Law("nat-mul-rdistrib", "(b(+)c)(x)a = (b(x)a)(+)(c(x)a)",
        _eq(lambda a, b, c: (nat_mul(nat_add(b, c), a), nat_add(nat_mul(b, a), nat_mul(c, a)))),
        _ords(3)),
    # comparison chain between the operation families
    Law("chain-add", "a+b <= a(+)b", _le(lambda a, b: (ord_add(a, b), nat_add(a, b))), _ords(2)),
    Law("chain-mul-ord-jac", "ab <= a x b",
        _le(lambda a, b: (ord_mul(a, b), jac_mul(a, b))), _ords(2)),
    Law("chain-mul-jac-nat", "a x b <= a(x)b",
        _le(lambda a, b: (jac_mul(a, b), nat_mul(a, b))), _ords(2)),
    Law("chain-pow-ord-jac", "a^b <= a^(x b)",
        _le(lambda a, b: (ord_pow(a, b), jac_pow(a, b))), _ords(2)),
    Law("chain-pow-jac-sj", "a^(x b) <= a^((x)b)",
        _le(lambda a, b: (jac_pow(a, b), sj_pow(a, b))), _ords(2)),
    # proof machinery
    Law("deg-hom", "deg(a(x)b) = deg a (+) deg b", _check_deg, _gen_positive_pair),
    Law("omega-jac", "w d = w x d", _eq(lambda d: (ord_mul(W, d), jac_mul(W, d))), _ords(1)),
    Law("monoton", "f_{a,b}(a',b') is increasing in a' and b'", _check_monoton, _gen_monoton),
    Law("conway", "a(x)b passes the sampled Conway witness check", _check_conway,
        _gen_positive_pair),
    Law("finite-agree", "all operations agree with integer arithmetic on finite inputs",
        _check_finite_agree, _gen_small_ints),
    # closed forms versus the defining recursions
    Law("oracle-ord-mul", "a n = n-fold ordinary sum", _oracle(ord_mul, "ord_add"),
        _gen_oracle(12)),
    Law("oracle-ord-pow", "a^n = n-fold ordinary product", _oracle(ord_pow, "ord_mul"),
        _gen_oracle(8)),
    Law("oracle-jac-mul", "a x n = n-fold natural sum", _oracle(jac_mul, "nat_add"),
        _gen_oracle(12)),
    Law("oracle-jac-pow", "a^(x n) = n-fold Jacobsthal product", _oracle(jac_pow, "jac_mul"),
        _gen_oracle(8)),
    Law("oracle-sj-pow", "a^((x)n) = n-fold natural product", _oracle(sj_pow, "nat_mul"),
        _gen_oracle(8)),
    Law("oracle-sj-finite", "finite-base closed form = n-fold natural product, a in {2,3,5}",
        _check_finite_base, _gen_finite_base),
    Law("succ-ord-mul", "a(Sg) = ag + a", _succ_stage(ord_mul, ord_add), _gen_succ_stage(12)),
    Law("succ-ord-pow", "a^(Sg) = a^g a", _succ_stage(ord_pow, ord_mul), _gen_succ_stage(8)),
    Law("succ-jac-mul", "a x (Sg) = (a x g)(+)a", _succ_stage(jac_mul, nat_add),
        _gen_succ_stage(12)),
    Law("succ-jac-pow", "a^(x Sg) = a^(x g) x a", _succ_stage(jac_pow, jac_mul),
        _gen_succ_stage(8)),
    Law("succ-sj-pow", "a^((x)Sg) = a^((x)g) (x) a", _succ_stage(sj_pow, nat_mul),
        _gen_succ_stage(8)),
    Law("cert-ord-add", "a+b is the limit along b", _cert(ord_add), _gen_cert(False)),
    Law("cert-ord-mul", "ab is the limit along b", _cert(ord_mul), _gen_cert(False)),
    Law("cert-ord-pow", "a^b is the limit along b", _cert(ord_pow), _gen_cert(True)),
    Law("cert-jac-mul", "a x b is the limit along b", _cert(jac_mul), _gen_cert(False)),
    Law("cert-jac-pow", "a^(x b) is the limit along b", _cert(jac_pow), _gen_cert(True)),
    Law("cert-sj-pow", "a^((x)b) is the limit along b", _cert(sj_pow), _gen_cert(True)),
    Law("cert-sj-finite", "finite-base closed form is the limit along b",
        _cert(lambda a, b: sj_pow_finite_base(int(a), b)), _gen_finite_cert),
    # false variants; the first trial is the known counterexample
    Law("naive-jac-distrib", "a x (b+c) = (a x b)(+)(a x c)  [false]",
        _eq(lambda a, b, c: (jac_mul(a, ord_add(b, c)), nat_add(jac_mul(a, b), jac_mul(a, c)))),
        _ords(3), FAILS, ((ONE, ONE, W),)),
    Law("naive-sj-add", "a^((x)(b+c)) = a^((x)b) (x) a^((x)c)  [false]",
        _eq(lambda a, b, c: (sj_pow(a, ord_add(b, c)), nat_mul(sj_pow(a, b), sj_pow(a, c)))),
        _ords(3), FAILS, ((nat(2), ONE, W),)),
    Law("ord-add-comm", "a+b = b+a  [false]",
        _eq(lambda a, b: (ord_add(a, b), ord_add(b, a))), _ords(2), FAILS, ((ONE, W),)),
    Law("ord-mul-comm", "ab = ba  [false]",
        _eq(lambda a, b: (ord_mul(a, b), ord_mul(b, a))), _ords(2), FAILS, ((nat(2), W),)),
    Law("ord-mul-rdistrib", "(a+b)c = ac+bc  [false]",
        _eq(lambda a, b, c: (ord_mul(ord_add(a, b), c), ord_add(ord_mul(a, c), ord_mul(b, c)))),
        _ords(3), FAILS, ((ONE, ONE, W),)),
    Law("jac-mul-comm", "a x b = b x a  [false]",
        _eq(lambda a, b: (jac_mul(a, b), jac_mul(b, a))), _ords(2), FAILS, ((nat(2), W),)),
    Law("jac-mul-rdistrib", "(a(+)b) x c = (a x c)(+)(b x c)  [false]",
        _eq(lambda a, b, c: (jac_mul(nat_add(a, b), c), nat_add(jac_mul(a, c), jac_mul(b, c)))),
        _ords(3), FAILS, ((ONE, ONE, W),)),
]

CATALOG = {law.law_id: law for law in _LAWS}

# rows of the law table, columns: successor-based, natural-sum-based, natural-product-based
LAW_TABLE = [
    ("associativity of addition", ("ord-add-assoc", "nat-add-assoc", None)),
    ("left distributivity", ("ord-mul-ldistrib", "jacthm", "nat-mul-ldistrib")),
    ("associativity of multiplication", ("ord-mul-assoc", "jaccor1", "nat-mul-assoc")),
    ("exponent of a sum", ("ord-pow-add", "jaccor2", "mainthm")),
    ("exponent of a product", ("ord-pow-mul", "jaccor3", "maincor")),
]


def law_ids() -> list:
    return list(CATALOG)


def trial_inputs(law: Law, params: GenParams, trial: int) -> tuple:
    if trial < len(law.forced):
        return law.forced[trial]
    rng = random.Random(derive_seed(params.seed, law.law_id, trial))
    return law.generate(params, rng)


def run_trial(law_id: str, params: GenParams, trial: int):
    """Returns ``None`` or the failing ``(inputs, lhs, rhs)``."""
    law = CATALOG[law_id]
    inputs = trial_inputs(law, params, trial)
    ok, lhs, rhs = law.check(inputs)
    return None if ok else (inputs, lhs, rhs)


def _run_chunk(args):
    law_id, params, start, stop = args
    return [(t, run_trial(law_id, params, t)) for t in range(start, stop)]


def check_law(law_id: str, params: GenParams = GenParams(), trials: int = 200,
              jobs: int = 1) -> LawReport:
    try:
        law = CATALOG[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None
    total = max(trials, len(law.forced))
    if jobs > 1 and total > 1:
        step = max(1, -(-total // (jobs * 4)))
        chunks = [(law_id, params, s, min(total, s + step)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]
    else:
        results = _run_chunk((law_id, params, 0, total))
    results.sort(key=lambda r: r[0])
    failures = [f for _, f in results if f is not None]
    first = next((t for t, f in results if f is not None), None)
    return LawReport(law_id, total, failures, params.seed, law.polarity, law.title, first)


def check_all(params: GenParams = GenParams(), trials: int = 200, jobs: int = 1,
              ids=None) -> list:
    return [check_law(i, params, trials, jobs) for i in (ids or law_ids())]


def conway_perturbation_rate(params: GenParams, pairs: int, depth: int = 4,
                             index: int = 2) -> tuple:
    """Replace a limit-valued product by ``product[index]`` and count rejections.

    Returns ``(rejected, limit_cases)``.
    """
    rejected = cases = 0
    for t in range(pairs):
        rng = random.Random(derive_seed(params.seed, "conway-perturb", t))
        a = _gen_positive_rng(rng, params)
        b = _gen_positive_rng(rng, params)
        prod = nat_mul(a, b)
        if not is_limit(prod):
            continue
        cases += 1
        if not conway_witness_check(a, b, fund_seq(prod, index), depth):
            rejected += 1
    return rejected, cases
