"""Oracle-equivalence suites shared by the ``verify`` command and the tests."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .classify import CHAR, classify
from .irreducibility import is_irreducible
from .oracle import numeric_factor_batch, numeric_weil_batch, sturm_weil_check
from .padic import newton_polygon, polygon_type, valuation
from .weilcheck import WeilCandidate, a2_range, a3_range, box_triples, prime_power, weil_branch

Triple = tuple[int, int, int]


@dataclass
class SuiteResult:
    suite: str
    q: int
    checked: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def weil_equivalence(q: int, triples: Sequence[Triple], tol: float = 1e-9,
                     decide: Callable[[int, int, int, int], bool] | None = None) -> SuiteResult:
    """theorem1_check vs the exact Sturm oracle vs the numeric oracle."""
    decide = decide or (lambda q, a1, a2, a3: weil_branch(q, a1, a2, a3) is not None)
    res = SuiteResult("weil", q, len(triples))
    numeric = numeric_weil_batch(q, triples, tol)
    for t, num in zip(triples, numeric):
        exact = decide(q, *t)
        sturm = sturm_weil_check(q, *t)
        if not exact == sturm == bool(num):
            res.disagreements.append(f"q={q} {t}: theorem={exact} sturm={sturm} numeric={bool(num)}")
    return res


def irreducibility_agreement(q: int, weil_triples: Sequence[Triple]) -> SuiteResult:
    """is_irreducible vs an exact factor found from numeric root subsets."""
    p, n = prime_power(q)
    res = SuiteResult("irreducibility", q, len(weil_triples))
    found = numeric_factor_batch(q, weil_triples)
    for t, factor in zip(weil_triples, found):
        irred = is_irreducible(WeilCandidate(q, p, n, *t))
        if irred != (factor is None):
            res.disagreements.append(f"q={q} {t}: is_irreducible={irred} factor={factor}")
    return res


def polygon_invariants(q: int, weil_triples: Sequence[Triple]) -> SuiteResult:
    """Newton polygon symmetry, slope sum, ordinary test, and classify consistency."""
    p, n = prime_power(q)
    res = SuiteResult("polygon", q, len(weil_triples))
    bad = res.disagreements.append
    for t in weil_triples:
        w = WeilCandidate(q, p, n, *t)
        g = newton_polygon(w.polynomial(), p)
        vals = sorted(g.root_valuations())
        if vals != sorted(n - v for v in vals):
            bad(f"q={q} {t}: slopes not symmetric about n/2: {vals}")
        if sum(vals) != 3 * n:
            bad(f"q={q} {t}: slope sum {sum(vals)} != 3n")
        ptype = polygon_type(g, n)
        if (ptype == "Ordinary") != (valuation(t[2], p) == 0):
            bad(f"q={q} {t}: Ordinary={ptype == 'Ordinary'} but v_p(a3)={valuation(t[2], p)}")
        c = classify(w)
        if c.verdict == CHAR and c.ptype != ptype:
            bad(f"q={q} {t}: classify type {c.ptype} vs polygon {ptype}")
        if c.verdict == CHAR and c.supersingular and set(vals) != {Fraction(n, 2)}:
            bad(f"q={q} {t}: supersingular but slopes {vals}")
    return res


def widened_box(q: int) -> list[Triple]:
    return list(box_triples(q, widen=1))


def sampled_box(q: int, count: int, rng: random.Random) -> list[Triple]:
    """Seeded draws from the widened box, without materialising it."""
    amax = math.isqrt(36 * q) + 1
    out = []
    while len(out) < count:
        a1 = rng.randint(-amax, amax)
        lo2, hi2 = a2_range(q, a1)
        a2 = rng.randint(lo2 - 1, hi2 + 1)
        lo3, hi3 = a3_range(q, a1, a2)
        if lo3 > hi3:
            lo3 = hi3 = -(2 * a1**3 - 9 * a1 * a2 - 27 * q * a1) // 27
        out.append((a1, a2, rng.randint(lo3 - 1, hi3 + 1)))
    return sorted(set(out))


def run_suites(q_list: Sequence[int], mode: str = "full", seed: int = 0,
               samples: int = 2000) -> list[SuiteResult]:
    if mode not in ("full", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    results = []
    for q in q_list:
        prime_power(q)
        triples = widened_box(q) if mode == "full" else sampled_box(q, samples, rng)
        results.append(weil_equivalence(q, triples))
        weil = [t for t in triples if weil_branch(q, *t) is not None]
        results.append(irreducibility_agreement(q, weil))
        results.append(polygon_invariants(q, weil))
    return results


def format_report(results: Sequence[SuiteResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.suite:<15} q={r.q:<6} checked={r.checked:<8} disagreements={len(r.disagreements)}")
        lines.extend(f"    {d}" for d in r.disagreements)
    total = sum(len(r.disagreements) for r in results)
    lines.append(f"{'PASS' if total == 0 else 'FAIL'} total disagreements={total}")
    return "\n".join(lines)
