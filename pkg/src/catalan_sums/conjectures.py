"""Falsification harness for the open conjectures on Catalan-triangle power sums.

Each conjecture is a predicate over an integer parameter tuple.  A predicate
returns a :class:`Evaluation` with the computed residue and the residue the
conjecture predicts; tuples outside a conjecture's side conditions return
``None`` and are counted as skipped.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, product
from typing import Callable, Iterable, Sequence

from .exact import binom, bit_count, is_integer, p_adic_valuation
from .results import render
from .triangle import catalan_entry_or_zero as B


CONFIRMED = "confirmed_in_range"
FALSIFIED = "falsified"
AMBIGUOUS = "statement_ambiguous"


# -- integer families ---------------------------------------------------------

def is_2a_minus_2b(n: int, min_b: int = 0) -> tuple[int, int] | None:
    """``(a, b)`` with ``n = 2^a - 2^b`` and ``min_b <= b < a``, if any."""
    if n < 1:
        return None
    b = (n & -n).bit_length() - 1
    m = (n >> b) + 1  # n = 2^b (2^(a-b) - 1)
    if m & (m - 1) or b < min_b:
        return None
    return m.bit_length() - 1 + b, b


def is_2a_minus_1(n: int) -> int | None:
    if n >= 1 and (n + 1) & n == 0:
        return (n + 1).bit_length() - 1
    return None


def is_2a_plus_1(n: int) -> int | None:
    if n >= 2 and (n - 1) & (n - 2) == 0:
        return (n - 1).bit_length() - 1
    return None


def is_4s_minus_1_or_2a_plus_1(n: int, s: int) -> bool:
    return n == 4**s - 1 or is_2a_plus_1(n) is not None


def is_2a_times_22b1_plus_1_over_3(n: int) -> tuple[int, int] | None:
    """``(a, b)`` with ``3n = 2^a (2^(2b+1) + 1)``, if any."""
    if n < 1:
        return None
    a = (n & -n).bit_length() - 1
    odd = 3 * (n >> a) - 1
    if odd & (odd - 1):
        return None
    e = odd.bit_length() - 1
    if e % 2 == 0:
        return None
    return a, (e - 1) // 2


# -- predicates ---------------------------------------------------------------

@dataclass(frozen=True)
class Evaluation:
    holds: bool
    value: Fraction      # computed residue (or valuation)
    expected: str        # what the statement predicts, rendered
    alternate: bool | None = None  # second reading, where one is tracked


def _congruent(x, c, modulus) -> bool:
    return is_integer((Fraction(x) - Fraction(c)) / Fraction(modulus))


def _residue(x, modulus) -> Fraction:
    """Least nonnegative residue of a rational ``x`` modulo a rational ``modulus``."""
    x, modulus = Fraction(x), Fraction(modulus)
    return x - modulus * ((x / modulus).numerator // (x / modulus).denominator)


def _c71(n, r):
    if n < 1 or r < 1:
        return None
    total = sum(binom(2 * n, n - k) * k ** (2 * r) for k in range(1, n + 1))
    need = 2 * n - min(bit_count(n), bit_count(r)) - 1
    v = p_adic_valuation(total, 2)
    return Evaluation(v >= need, Fraction(v), f"v2 >= {need}")


def _c72(n, r):
    if n < 1 or r < 1:
        return None
    total = sum(B(n, k) ** (2 * r + 1) for k in range(1, n + 1))
    modulus = binom(2 * n, n)
    res = total % modulus
    in_family = is_2a_minus_2b(n) is not None
    return Evaluation(
        (res == binom(2 * n - 1, n)) == in_family,
        Fraction(res),
        ("== " if in_family else "!= ") + str(binom(2 * n - 1, n)),
    )


def _c73(n, r, s):
    if r < 0 or s < 1 or n < 4**s - 1:
        return None
    total = sum(k ** (2 * r + 1) * B(n, k) ** (2 * s) for k in range(1, n + 1))
    special = is_4s_minus_1_or_2a_plus_1(n, s)
    modulus = binom(2 * n, n) * 4 ** (s - 1)
    target = binom(2 * n - 1, n) * 4 ** (s - 1) if special else 0
    res = total % modulus
    # second reading: target C(2n,n) 4^(s-1) modulo C(2n,n) 2^(2s-1)
    alt_modulus = binom(2 * n, n) * 2 ** (2 * s - 1)
    alt_target = binom(2 * n, n) * 4 ** (s - 1) if special else 0
    return Evaluation(res == target, Fraction(res), str(target), total % alt_modulus == alt_target)


def _c74(n, r, s):
    if n < 1 or r < 1 or s < 1:
        return None
    total = sum(k ** (2 * r) * B(n, k) ** (2 * s + 1) for k in range(1, n + 1))
    target = binom(2 * n - 1, n) if is_2a_minus_1(n) is not None else 0
    res = total % binom(2 * n, n)
    return Evaluation(res == target, Fraction(res), str(target))


def _c75(m, n, r, s, t):
    if m < 1 or n < 1 or s < 1 or t < 1 or r < 0 or (r + s + t) % 2 == 0:
        return None
    total = sum(k**r * B(m, k) ** s * B(n, k) ** t for k in range(1, n + 1))
    # (2m)!(2n)!/(2 m! n! (m+n)!)
    divisor = Fraction(binom(2 * m, m) * binom(2 * n, n), 2 * binom(m + n, m))
    q = Fraction(total) / divisor
    return Evaluation(q.denominator == 1, _residue(total, divisor), f"0 mod {render(divisor)}")


def _c76(n, r, s):
    if n < 1 or r < 1 or s < 1 or (r - s) % 2 == 0:
        return None
    total = sum(B(n, k) ** r * B(2 * n, k) ** s for k in range(1, n + 1))
    e = min(2 * r, s)
    modulus = binom(4 * n, n) * Fraction(2) ** (e - 1)
    special = is_2a_times_22b1_plus_1_over_3(n) is not None
    target = binom(4 * n, n) * Fraction(2) ** (e - 2) if special else Fraction(0)
    return Evaluation(_congruent(total, target, modulus), _residue(total, modulus), render(target))


def _c77(n, r, s):
    if n < 1 or r < 1 or s < 1 or (r - s) % 2 == 0:
        return None
    total = sum(B(n, k) ** r * B(n + 1, k) ** s for k in range(1, n + 1))
    e = min(r, s)
    modulus = binom(2 * n, n) * 2**e
    special = (r < s and is_2a_minus_2b(n, min_b=1) is not None) or (
        r > s and is_2a_minus_1(n) is not None
    )
    target = binom(2 * n, n) * 2 ** (e - 1) if special else 0
    res = total % modulus
    return Evaluation(res == target, Fraction(res), str(target))


def _c78(n, r, s, t):
    if min(n, r, s, t) < 1 or (r + s + t) % 2 == 0:
        return None
    total = sum(B(n, k) ** r * B(2 * n, k) ** s * B(3 * n, k) ** t for k in range(1, n + 1))
    d1 = Fraction(binom(6 * n, n), 3)
    d2 = binom(6 * n, 3 * n)
    ok = (total / d1).denominator == 1 and total % d2 == 0
    return Evaluation(ok, Fraction(total % d2), f"0 mod {render(d1)} and 0 mod {d2}")


def _c79(n, r, s, t):
    if min(n, r, s, t) < 1 or (r + s + t) % 2 == 0:
        return None
    total = sum(B(n, k) ** r * B(2 * n, k) ** s * B(4 * n, k) ** t for k in range(1, n + 1))
    d = binom(8 * n, 3 * n)
    return Evaluation(total % d == 0, Fraction(total % d), f"0 mod {d}")


@dataclass(frozen=True)
class Conjecture:
    id: str
    params: tuple[str, ...]
    predicate: Callable[..., Evaluation | None]
    defaults: dict[str, tuple[int, int]]
    reading: str


CONJECTURES: dict[str, Conjecture] = {
    c.id: c
    for c in (
        Conjecture("7.1", ("n", "r"), _c71, {"n": (1, 30), "r": (1, 30)},
                   "2^(2n - min(bitcount(n), bitcount(r)) - 1) divides sum C(2n,n-k) k^(2r)"),
        Conjecture("7.2", ("n", "r"), _c72, {"n": (1, 24), "r": (1, 3)},
                   "sum B(n,k)^(2r+1) = C(2n-1,n) mod C(2n,n) iff n = 2^a - 2^b"),
        Conjecture("7.3", ("n", "r", "s"), _c73, {"n": (3, 40), "r": (0, 3), "s": (1, 2)},
                   "for n >= 4^s - 1: sum k^(2r+1) B(n,k)^(2s) mod C(2n,n) 4^(s-1) equals "
                   "C(2n-1,n) 4^(s-1) if n = 4^s - 1 or n = 2^a + 1, else 0; alternate reading: "
                   "C(2n,n) 4^(s-1) modulo C(2n,n) 2^(2s-1)"),
        Conjecture("7.4", ("n", "r", "s"), _c74, {"n": (1, 30), "r": (1, 3), "s": (1, 3)},
                   "sum k^(2r) B(n,k)^(2s+1) mod C(2n,n) equals C(2n-1,n) if n = 2^a - 1, else 0"),
        Conjecture("7.5", ("m", "n", "r", "s", "t"), _c75,
                   {"m": (1, 8), "n": (1, 8), "r": (0, 3), "s": (1, 3), "t": (1, 3)},
                   "(2m)!(2n)!/(2 m! n! (m+n)!) divides sum_{k<=n} k^r B(m,k)^s B(n,k)^t, "
                   "B(m,k) = 0 for k > m"),
        Conjecture("7.6", ("n", "r", "s"), _c76, {"n": (1, 20), "r": (1, 3), "s": (1, 3)},
                   "sum B(n,k)^r B(2n,k)^s mod C(4n,n) 2^(min(2r,s)-1) equals "
                   "C(4n,n) 2^(min(2r,s)-2) if 3n = 2^a (2^(2b+1)+1), else 0 (rational congruence)"),
        Conjecture("7.7", ("n", "r", "s"), _c77, {"n": (1, 24), "r": (1, 4), "s": (1, 4)},
                   "sum B(n,k)^r B(n+1,k)^s mod C(2n,n) 2^min(r,s) equals C(2n,n) 2^(min(r,s)-1) "
                   "if (r<s and n = 2^a - 2^b, b >= 1) or (r>s and n = 2^a - 1), else 0"),
        Conjecture("7.8", ("n", "r", "s", "t"), _c78,
                   {"n": (1, 6), "r": (1, 3), "s": (1, 3), "t": (1, 3)},
                   "C(6n,n)/3 and C(6n,3n) divide sum B(n,k)^r B(2n,k)^s B(3n,k)^t"),
        Conjecture("7.9", ("n", "r", "s", "t"), _c79,
                   {"n": (1, 6), "r": (1, 3), "s": (1, 3), "t": (1, 3)},
                   "C(8n,3n) divides sum B(n,k)^r B(2n,k)^s B(4n,k)^t"),
    )
}


def get_conjecture(cid: str) -> Conjecture:
    try:
        return CONJECTURES[cid]
    except KeyError:
        raise KeyError(f"unknown conjecture {cid!r}") from None


def check_conjecture(cid: str, params: Sequence[int]) -> Evaluation | None:
    conj = get_conjecture(cid)
    if len(params) != len(conj.params):
        raise ValueError(f"conjecture {cid} takes parameters {conj.params}")
    return conj.predicate(*(int(p) for p in params))


# -- scanning -----------------------------------------------------------------

@dataclass
class ConjectureReport:
    id: str
    ranges: dict[str, list[int]]
    checked: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    alternate_counterexamples: int | None = None
    reading: str = ""
    # every evaluated tuple as (tuple, value, expected, holds), in grid order
    evaluations: list[tuple] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        if not self.counterexamples:
            return CONFIRMED
        if self.alternate_counterexamples == 0:
            return AMBIGUOUS
        return FALSIFIED


def _evaluate_chunk(args) -> list[tuple[tuple, Evaluation | None]]:
    cid, tuples = args
    predicate = CONJECTURES[cid].predicate
    return [(t, predicate(*t)) for t in tuples]


def _chunks(iterable: Iterable, size: int):
    it = iter(iterable)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def resolve_ranges(cid: str, ranges: dict | None = None) -> dict[str, list[int]]:
    """Explicit value lists per parameter; ``(lo, hi)`` pairs expand inclusively."""
    conj = get_conjecture(cid)
    out = {}
    for name in conj.params:
        spec = (ranges or {}).get(name, conj.defaults[name])
        if isinstance(spec, tuple):
            lo, hi = spec
            out[name] = list(range(lo, hi + 1))
        else:
            out[name] = sorted(set(int(v) for v in spec))
    return out


def scan(cid: str, ranges: dict | None = None, workers: int = 1, chunk_size: int = 64) -> ConjectureReport:
    conj = get_conjecture(cid)
    values = resolve_ranges(cid, ranges)
    grid = product(*(values[name] for name in conj.params))
    report = ConjectureReport(cid, values, reading=conj.reading)
    alt_failures = 0
    has_alt = False
    jobs = ((cid, block) for block in _chunks(grid, chunk_size))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_chunk, jobs))
    else:
        results = [_evaluate_chunk(job) for job in jobs]
    for block in results:
        for params, ev in block:
            if ev is None:
                report.skipped += 1
                continue
            report.checked += 1
            report.evaluations.append((params, render(ev.value), ev.expected, ev.holds))
            if ev.alternate is not None:
                has_alt = True
                alt_failures += not ev.alternate
            if not ev.holds:
                report.counterexamples.append(
                    {"tuple": list(params), "value": render(ev.value), "expected": ev.expected}
                )
    report.counterexamples.sort(key=lambda c: c["tuple"])
    if has_alt:
        report.alternate_counterexamples = alt_failures
    return report
