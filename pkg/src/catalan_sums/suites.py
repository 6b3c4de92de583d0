"""Verification suites: parameter grids turned into independent tasks.

A task is ``(kind, args)``; :func:`run_task` maps it to a list of
:class:`~catalan_sums.reports.Record`.  Tasks are pure, so they can be
farmed out to worker processes and merged back in submission order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from . import corollaries, modular, multiindex, powersums, qcatalan, theta
from .exact import binom
from .qpoly import IntPolynomial, cyclotomic, gaussian_binomial, ONE
from .reports import Record, record_from_check
from .results import IdentityCheckResult, render
from .triangle import catalan_entry, catalan_power_sum, shapiro_row_sum_check

REFERENCE_COPRIME_LIST = (
    39, 55, 93, 111, 119, 155, 161, 175, 253, 275, 279,
    305, 317, 333, 351, 363, 377, 403, 407, 413, 497,
)
PRIME_POWER_SAMPLE = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64)


def _rec(result: IdentityCheckResult, informational: bool = False) -> Record:
    return record_from_check(result, informational)


def _flag(rid: str, params: tuple, value, ok: bool, expected: str = "true", informational=False) -> Record:
    return Record(rid, params, render(value), expected, bool(ok), informational)


# -- task bodies --------------------------------------------------------------

def _t_shapiro(n):
    return [_rec(shapiro_row_sum_check(n))]


def _t_theta(m, n, r):
    return [_rec(theta.theta_check(m, n, r))]


def _t_bb(m, n, r):
    direct = Fraction(theta.bb_odd_power_direct(m, n, r))
    via = theta.bb_odd_power_via_theta(m, n, r)
    out = [_rec(IdentityCheckResult("bb-two-paths", (m, n, r), direct, via))]
    out.append(_rec(theta.bb_conversion_erratum(m, n, r), informational=True))
    return out


def _t_alpha_newton(m, n, r):
    via = theta.alpha_via_newton(m, n, r)
    out = []
    for k in range(m + 1):
        try:
            a = theta.alpha_coeff(k, m, n, r)
        except ZeroDivisionError:
            continue
        out.append(_rec(IdentityCheckResult("alpha-vs-newton", (k, m, n, r), a, via[k])))
    return out


def _t_theta_pointwise(m, n, r):
    return [_rec(theta.pointwise_expansion_check(m, n, r, l)) for l in range(1, n - r + 1)]


def _t_theta_relations(n, r):
    out = []
    for k in range(0, 2 * n + 1):
        out.append(_rec(theta.telescoped_sum_check(n, r, k)))
        for l in range(1, n - r + 1):
            out.append(_rec(theta.binomial_product_relation_check(n, r, l, k)))
    return out


def _t_first_values(n, r):
    out = [_rec(c) for c in theta.first_values_check(n, r, shift=2)]
    out += [_rec(c, informational=True) for c in theta.first_values_check(n, r, shift=0)]
    return out


def _t_newkr(n, r, exponents):
    return [_rec(c) for c in theta.newkr_family_check(n, r) if int(c.identity.split("-")[1]) in exponents]


def _t_cc13g(n):
    return [_rec(theta.cc13g_check(n))]


def _t_odd_power(n, r):
    v = powersums.odd_power_sum(n, r)
    return [
        _flag("odd-power-half-integer", (n, r), v.quotient, v.classification == "half_integer", "half_integer"),
        _flag("f-quotient-odd", (n, r), Fraction(powersums.f_sum(n, r), n * n * binom(2 * n, n)),
              powersums.odd_quotient_parity(n, r), "odd integer"),
    ]


def _t_odd_closed(n):
    return [_rec(c) for c in powersums.odd_power_closed_forms_check(n)]


def _t_f_family(n, r_max):
    out = []
    for r in range(1, r_max + 1):
        for k in range(1, min(r, n) + 1):
            out.append(_rec(powersums.f_recurrence_check(n, k, r)))
    for r in range(0, r_max + 1):
        d = powersums.f_divisor(n, r)
        for k in range(0, n + 1):
            f = powersums.f_nk(n, k, r)
            out.append(_flag("f-divisibility", (n, k, r), Fraction(f, d), f % d == 0, "integer"))
    return out


def _t_even(n, r):
    direct = Fraction(powersums.power_sum(n, 2 * r))
    return [_rec(IdentityCheckResult("even-two-paths", (n, r), direct, powersums.even_power_expansion(n, r)))]


def _t_even_closed(n):
    return [_rec(c) for c in powersums.even_power_closed_forms_check(n)]


def _t_square_expansion(n, r):
    return [_rec(powersums.square_expansion_check(n, r, l)) for l in range(1, n + 1)]


def _t_s_sum(comp, r):
    v = multiindex.s_sum(r, comp)
    out = [_flag("s-sum-class", (tuple(comp), r), v.quotient, v.at_most_half, "integer or half_integer")]
    out.append(_rec(IdentityCheckResult("s-rewriting", (tuple(comp), r), v.quotient,
                                        multiindex.s_via_rewriting(r, comp))))
    if len(comp) >= 3:
        out.append(_rec(multiindex.s_recurrence_check(r, comp)))
    for closure in ("zero", "cyclic"):
        value = multiindex.restated_value(r, comp, closure)
        out.append(_flag(f"restated[{closure}]", (tuple(comp), r), value, value.denominator == 1, "integer"))
    return out


def _t_pfaff(n1, n2, n3, k_max):
    return [_rec(multiindex.pfaff_check(n1, n2, n3, k)) for k in range(-k_max, k_max + 1)]


def _t_chains(comp):
    return [
        _rec(multiindex.lambda_sum_check(comp, 1)),
        _rec(multiindex.lambda_sum_check(comp, 3)),
        _rec(multiindex.gjz_alternating_check(comp)),
    ]


def _t_corollary(cid, params):
    return [
        _flag(f"corollary:{cid}", params, v.quotient, v.divides, f"integer mod {render(v.divisor)}")
        for v in corollaries.corollary_divisibility_report(cid, params)
    ]


def _t_lucas(p, a_lo, a_hi, b_max):
    bad = []
    for a in range(a_lo, a_hi):
        for b in range(0, min(a, b_max) + 1):
            if modular.lucas_binom_mod_p(a, b, p) != binom(a, b) % p:
                bad.append((a, b))
    return [_flag("lucas", (p, a_lo, a_hi), len(bad), not bad, "0 mismatches")]


def _t_coprime(n):
    via_lucas = modular.central_coprime_via_lucas(n)
    direct = math.gcd(binom(2 * n - 1, n), n) == 1
    out = [Record("coprime-lucas-vs-gcd", (n,), str(via_lucas), str(direct), via_lucas == direct)]
    if modular.is_prime_power(n):
        out.append(_flag("prime-power-coprime", (n,), direct, direct, "True"))
        out.append(_flag("congruence-1-mod-n", (n,), binom(2 * n - 1, n) % n,
                         modular.central_congruence_mod_n(n), "1", informational=True))
        out.append(_flag("congruence-1-mod-primes", (n,), modular.central_congruence_mod_primes(n),
                         modular.central_congruence_mod_primes(n), "True"))
    return out


def _t_coprime_list(limit):
    computed = modular.scan_coprime_non_prime_powers(limit)
    out = []
    if limit == 500:
        out.append(Record("coprime-list-vs-printed", (limit,), " ".join(map(str, computed)),
                          " ".join(map(str, REFERENCE_COPRIME_LIST)),
                          tuple(computed) == REFERENCE_COPRIME_LIST, True))
    via_gcd = [n for n in range(2, limit) if modular.is_prime_power(n) is None
               and math.gcd(binom(2 * n - 1, n), n) == 1]
    out.append(Record("coprime-list-two-paths", (limit,), " ".join(map(str, computed)),
                      " ".join(map(str, via_gcd)), computed == via_gcd))
    return out


def _t_prime_power(n, r_max, s_max):
    out = []
    for r in range(0, r_max + 1):
        for s in range(1, s_max + 1):
            if (r - s) % 2 == 0:
                continue
            if n == 6:
                total = catalan_power_sum(6, r, s)
                out.append(_flag("row6-divisible-by-462", (n, r, s), Fraction(total, 462), total % 462 == 0, "integer"))
            else:
                v = modular.theorem14_verdict(n, r, s)
                out.append(_flag("prime-power-class", (n, r, s), v.quotient, v.at_most_half, "integer or half_integer"))
    return out


def _t_q_shapiro(n):
    return [_rec(qcatalan.q_shapiro_check(n))]


def _t_q_factor(n):
    out = []
    for k in range(1, n + 1):
        out.append(_rec(qcatalan.factorization_check(n, k)))
        entry = qcatalan.q_catalan_entry(n, k)
        out.append(_flag("q-entry-at-1", (n, k), entry(1), entry(1) == catalan_entry(n, k),
                         str(catalan_entry(n, k))))
    return out


def _t_gauss(M):
    out = []
    for N in range(0, M + 1):
        g = gaussian_binomial(M, N)
        out.append(_flag("gauss-at-1", (M, N), g(1), g(1) == binom(M, N), str(binom(M, N))))
        if M >= 1 and 1 <= N:
            rhs = gaussian_binomial(M - 1, N - 1) + gaussian_binomial(M - 1, N).shift(N)
            out.append(_rec(IdentityCheckResult("q-pascal", (M, N), g, rhs)))
    return out


def _t_cyclotomic(n):
    p = ONE
    for d in range(1, n + 1):
        if n % d == 0:
            p = p * cyclotomic(d)
    return [_rec(IdentityCheckResult("cyclotomic-product", (n,), p, IntPolynomial.monomial(n) - ONE))]


TASKS = {
    "shapiro": _t_shapiro,
    "theta": _t_theta,
    "bb": _t_bb,
    "alpha-newton": _t_alpha_newton,
    "theta-pointwise": _t_theta_pointwise,
    "theta-relations": _t_theta_relations,
    "first-values": _t_first_values,
    "newkr": _t_newkr,
    "cc13g": _t_cc13g,
    "odd-power": _t_odd_power,
    "odd-closed": _t_odd_closed,
    "f-family": _t_f_family,
    "even": _t_even,
    "even-closed": _t_even_closed,
    "square-expansion": _t_square_expansion,
    "s-sum": _t_s_sum,
    "pfaff": _t_pfaff,
    "chains": _t_chains,
    "corollary": _t_corollary,
    "lucas": _t_lucas,
    "coprime": _t_coprime,
    "coprime-list": _t_coprime_list,
    "prime-power": _t_prime_power,
    "q-shapiro": _t_q_shapiro,
    "q-factor": _t_q_factor,
    "gauss": _t_gauss,
    "cyclotomic": _t_cyclotomic,
}


def run_task(task) -> list[Record]:
    kind, args = task
    return TASKS[kind](*args)


def _run_block(tasks) -> list[Record]:
    out = []
    for task in tasks:
        out.extend(run_task(task))
    return out


def run_tasks(tasks: list, workers: int = 1, chunk_size: int = 16) -> list[Record]:
    """Evaluate tasks and concatenate their records in task order."""
    blocks = [tasks[i : i + chunk_size] for i in range(0, len(tasks), chunk_size)]
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_block, blocks))
    else:
        results = [_run_block(b) for b in blocks]
    return [r for block in results for r in block]


# -- suites -------------------------------------------------------------------

@dataclass
class Ranges:
    n_max: int | None = None
    m_max: int | None = None
    r_max: int | None = None
    s_max: int | None = None
    comp: tuple[int, ...] | None = None

    def get(self, name: str, default: int) -> int:
        value = getattr(self, name)
        return default if value is None else value


def compositions(length_max: int, entry_max: int) -> Iterator[tuple[int, ...]]:
    for m in range(1, length_max + 1):
        yield from product(range(1, entry_max + 1), repeat=m)


def _shapiro(rg: Ranges):
    n_max = rg.get("n_max", 300)
    return {"n_max": n_max}, [("shapiro", (n,)) for n in range(1, n_max + 1)]


def _theta(rg: Ranges):
    n_max, m_max, r_max = rg.get("n_max", 40), rg.get("m_max", 6), rg.get("r_max", 10)
    tasks = [("theta", (m, n, r)) for m in range(m_max + 1) for n in range(1, n_max + 1) for r in range(r_max + 1)]
    bm, bn, br = min(m_max, 5), min(n_max, 25), min(r_max, 8)
    tasks += [("bb", (m, n, r)) for m in range(bm + 1) for n in range(1, bn + 1) for r in range(min(br, n - 1) + 1)]
    pm, pn, pr = min(m_max, 4), min(n_max, 12), min(r_max, 4)
    tasks += [("theta-pointwise", (m, n, r)) for m in range(pm + 1) for n in range(1, pn + 1) for r in range(pr + 1)]
    # nodes stay distinct while m < n
    tasks += [("alpha-newton", (m, n, r)) for n in range(1, pn + 1) for m in range(min(pm, n - 1) + 1) for r in range(pr + 1)]
    tasks += [("theta-relations", (n, r)) for n in range(1, pn + 1) for r in range(pr + 1)]
    tasks += [("first-values", (n, r)) for n in range(1, bn + 1) for r in range(0, min(br, n - 1) + 1)]
    tasks += [("newkr", (n, r, (3,))) for n in range(1, n_max + 1) for r in range(n)]
    tasks += [("newkr", (n, r, (5, 7))) for n in range(1, bn + 1) for r in range(n)]
    tasks += [("cc13g", (n,)) for n in range(3, max(3, min(n_max, 30)) + 1)]
    return {"n_max": n_max, "m_max": m_max, "r_max": r_max}, tasks


def _powersum(rg: Ranges):
    n_max, r_max = rg.get("n_max", 100), rg.get("r_max", 10)
    tasks = [("odd-power", (n, r)) for n in range(1, n_max + 1) for r in range(1, r_max + 1)]
    tasks += [("odd-closed", (n,)) for n in range(1, n_max + 1)]
    fn, fr = min(n_max, 60), min(r_max, 8)
    tasks += [("f-family", (n, fr)) for n in range(1, fn + 1)]
    er = min(r_max, 6)
    tasks += [("even", (n, r)) for n in range(1, fn + 1) for r in range(1, er + 1)]
    tasks += [("even-closed", (n,)) for n in range(1, fn + 1)]
    tasks += [("square-expansion", (n, r)) for n in range(1, min(n_max, 12) + 1) for r in range(1, min(r_max, 4) + 1)]
    return {"n_max": n_max, "r_max": r_max}, tasks


def _multiindex(rg: Ranges):
    length, entry, r_max = rg.get("m_max", 5), rg.get("n_max", 6), rg.get("r_max", 5)
    if rg.comp:
        comps = [tuple(rg.comp)]
    else:
        comps = list(compositions(length, entry))
    tasks = [("s-sum", (c, r)) for c in comps for r in range(r_max + 1)]
    pn = min(entry, 8)
    tasks += [("pfaff", (a, b, c, 8)) for a in range(1, pn + 1) for b in range(1, pn + 1) for c in range(1, pn + 1)]
    chain_comps = [c for c in (comps if rg.comp else compositions(min(length, 4), min(entry, 4))) if len(c) in (3, 4)]
    if rg.comp and len(rg.comp) >= 3:
        chain_comps = [tuple(rg.comp)]
    tasks += [("chains", (c,)) for c in chain_comps]
    params = {"m_max": length, "n_max": entry, "r_max": r_max}
    if rg.comp:
        params["comp"] = list(rg.comp)
    return params, tasks


def _corollary(cid: str):
    def build(rg: Ranges):
        cor = corollaries.get_corollary(cid)
        base, exp = rg.get("n_max", 4), rg.get("r_max", 3)
        a_max = rg.get("s_max", 3)
        grid = list(corollaries.corollary_grid(cor.id, base, exp, a_max))
        return {"corollary": cor.id, "n_max": base, "r_max": exp, "a_max": a_max}, [
            ("corollary", (cor.id, p)) for p in grid
        ]
    return build


def _all_corollaries(rg: Ranges):
    params, tasks = {}, []
    for cid in corollaries.COROLLARIES:
        p, t = _corollary(cid)(rg)
        tasks += t
        params = {k: v for k, v in p.items() if k != "corollary"}
    return params, tasks


def _modular(rg: Ranges):
    n_max = rg.get("n_max", 500)
    tasks = [("lucas", (p, lo, lo + 50, 300)) for p in (2, 3, 5, 7, 11, 13) for lo in range(0, 300, 50)]
    tasks += [("coprime", (n,)) for n in range(1, min(n_max, 512) + 1)]
    tasks += [("coprime-list", (n_max,))]
    r_max, s_max = rg.get("r_max", 4), rg.get("s_max", 4)
    tasks += [("prime-power", (n, r_max, s_max)) for n in PRIME_POWER_SAMPLE + (39, 55, 6)]
    return {"n_max": n_max, "r_max": r_max, "s_max": s_max}, tasks


def _q(rg: Ranges):
    n_max = rg.get("n_max", 30)
    tasks = [("q-shapiro", (n,)) for n in range(1, n_max + 1)]
    tasks += [("q-factor", (n,)) for n in range(1, n_max + 1)]
    tasks += [("gauss", (M,)) for M in range(0, 40 + 1)]
    tasks += [("cyclotomic", (n,)) for n in range(1, 200 + 1)]
    return {"n_max": n_max}, tasks


SUITES = {
    "shapiro": _shapiro,
    "theta": _theta,
    "powersum": _powersum,
    "multiindex": _multiindex,
    "corollary": _all_corollaries,
    "modular": _modular,
    "q": _q,
}


def build_suite(name: str, rg: Ranges) -> tuple[dict, list]:
    if name == "all":
        params, tasks = {}, []
        for sub, builder in SUITES.items():
            p, t = builder(Ranges())
            params[sub] = p
            tasks += t
        return params, tasks
    if name.startswith("corollary:"):
        cid = name.split(":", 1)[1]
        corollaries.get_corollary(cid)
        return _corollary(cid)(rg)
    try:
        builder = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}") from None
    return builder(rg)
