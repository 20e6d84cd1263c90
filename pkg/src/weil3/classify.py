"""Decide whether a sextic Weil polynomial is the characteristic polynomial
of an abelian threefold over F_q, and with which p-rank.

Order of the pipeline:

1. not Weil -> NotWeil
2. p(t) = (t^2 + beta t + q)^3 -> CubeOfQuadratic (simple only when 3 | n
   and beta = a q^(1/3) with gcd(a, p) = 1)
3. reducible over Q -> ReducibleWeil (no verdict on non-simple varieties)
4. irreducible: the valuation pattern of (a1, a2, a3) picks one of five
   admissible Newton polygons and a local root test settles e = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import polynomial as P
from .exactmath import integer_kth_root
from .irreducibility import is_irreducible, rational_factors
from .padic import NewtonPolygon, has_qp_root, newton_polygon, polygon_type, valuation, zp_root_exists
from .weilcheck import WeilCandidate, failed_conditions, special_form_check, theorem1_check

NOT_WEIL = "NotWeil"
REDUCIBLE = "ReducibleWeil"
CUBE = "CubeOfQuadratic"
CHAR = "IrreducibleChar"
NOT_CHAR = "IrreducibleNotChar"

P_RANK_OF_TYPE = {"Ordinary": 3, "PRank2": 2, "PRank1": 1, "OneThird": 0, "Supersingular": 0}


@dataclass(frozen=True)
class Classification:
    verdict: str
    p_rank: int | None = None
    ptype: str | None = None
    supersingular: bool = False
    beta: int | None = None
    is_char: bool | None = None
    factors: tuple[tuple[int, ...], ...] = ()
    reasons: tuple[str, ...] = field(default_factory=tuple)

    @property
    def irreducible(self) -> bool | None:
        if self.verdict == NOT_WEIL:
            return None
        return self.verdict in (CHAR, NOT_CHAR)


class ClassificationError(RuntimeError):
    """Internal inconsistency, e.g. two valuation patterns matching at once."""


CYCLOTOMIC = {
    7: (1, 1, 1, 1, 1, 1, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    28: (1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1),
    36: (1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1),
}


def build_cyclotomic(m: int) -> tuple[int, ...]:
    """Phi_m for m in {7, 9, 28, 36}, ascending coefficients."""
    try:
        return CYCLOTOMIC[m]
    except KeyError:
        raise ValueError(f"cyclotomic polynomial {m} is not tabulated") from None


def detect_cube_of_quadratic(w: WeilCandidate) -> int | None:
    """beta when p(t) = (t^2 + beta t + q)^3 with beta^2 < 4q."""
    if w.a1 % 3:
        return None
    beta = w.a1 // 3
    if beta * beta >= 4 * w.q:
        return None
    if P.power((w.q, beta, 1), 3) == w.polynomial():
        return beta
    return None


def xing_e3_is_char(q: int, p: int, n: int, beta: int) -> bool:
    """Does (t^2 + beta t + q)^3 come from a simple abelian threefold?"""
    if n % 3:
        return False
    cube_root = integer_kth_root(q, 3)
    if beta % cube_root:
        return False
    return math.gcd(beta // cube_root, p) == 1


@dataclass(frozen=True)
class SupersingularForm:
    family: str
    sign: int
    coefficients: tuple[int, int, int]


def supersingular_forms(q: int, p: int) -> list[SupersingularForm]:
    """The coefficient patterns available for this q, side conditions applied."""
    forms = []
    s = integer_kth_root(q, 2)
    if s is not None:
        if (p**3 - 1) % 7:
            forms += [SupersingularForm("Zeta7", e, (e * s, q, e * q * s)) for e in (1, -1)]
        if (p - 1) % 3:
            forms += [SupersingularForm("Zeta9", e, (0, 0, e * q * s)) for e in (1, -1)]
    else:
        spq = integer_kth_root(p * q, 2)
        if p == 7:
            forms += [SupersingularForm("Zeta28", e, (e * spq, 3 * q, e * q * spq)) for e in (1, -1)]
        if p == 3:
            forms += [SupersingularForm("Zeta36", e, (0, 0, e * q * spq)) for e in (1, -1)]
    return forms


def scaled_cyclotomic(m: int, q: int, sign: int = 1) -> tuple[int, ...]:
    """q^(d/2) Phi_m(sign * t / sqrt q) for even-degree Phi_m; needs the result integral."""
    phi = build_cyclotomic(m)
    d = len(phi) - 1
    out = []
    for i, c in enumerate(phi):
        # coefficient of t^i picks up sign^i q^((d - i)/2)
        k = d - i
        if k % 2:
            root = integer_kth_root(q**k, 2)
            if root is None:
                if c:
                    raise ValueError("scaled cyclotomic is not integral")
                out.append(0)
                continue
            out.append(c * sign**i * root)
        else:
            out.append(c * sign**i * q ** (k // 2))
    return tuple(out)


def check_supersingular_identity(form: SupersingularForm, q: int) -> None:
    """Assert the polynomial identity behind a supersingular pattern."""
    w = (q**3, q * q * form.coefficients[0], q * form.coefficients[1], form.coefficients[2],
         form.coefficients[1], form.coefficients[0], 1)
    if form.family in ("Zeta7", "Zeta9"):
        m = 7 if form.family == "Zeta7" else 9
        expected = scaled_cyclotomic(m, q, form.sign)
        if w != expected:
            raise ClassificationError(f"{form.family} identity fails at q={q}")
    else:
        m = 28 if form.family == "Zeta28" else 36
        a1, a2, a3 = form.coefficients
        mirror = (q**3, -q * q * a1, q * a2, -a3, a2, -a1, 1)
        if P.mul(w, mirror) != scaled_cyclotomic(m, q):
            raise ClassificationError(f"{form.family} product identity fails at q={q}")


def supersingular_list_check(w: WeilCandidate) -> bool:
    for form in supersingular_forms(w.q, w.p):
        if form.coefficients == w.coefficients:
            check_supersingular_identity(form, w.q)
            return True
    return False


def valuation_patterns(w: WeilCandidate) -> list[int]:
    """Which of the five admissible valuation patterns (1..5) hold."""
    n = w.n
    v1, v2, v3 = (valuation(a, w.p) for a in w.coefficients)
    patterns = []
    if v3 == 0:
        patterns.append(1)
    if v2 == 0 and 2 * v3 >= n:
        patterns.append(2)
    if v1 == 0 and 2 * v2 >= n and v3 >= n:
        patterns.append(3)
    if 3 * v1 >= n and 3 * v2 >= 2 * n and v3 == n:
        patterns.append(4)
    if 2 * v1 >= n and v2 >= n and 2 * v3 >= 3 * n:
        patterns.append(5)
    return patterns


def half_valuation_root(w: WeilCandidate) -> bool:
    """Root of valuation n/2 in Q_p; impossible for odd n."""
    if w.n % 2:
        return False
    return zp_root_exists(w.polynomial(), w.p, w.n // 2)


def classify(w: WeilCandidate) -> Classification:
    if not theorem1_check(w):
        failed = failed_conditions(w)
        return Classification(NOT_WEIL, reasons=tuple(f"condition {i} fails" for i in failed))

    beta = detect_cube_of_quadratic(w)
    if beta is not None:
        is_char = xing_e3_is_char(w.q, w.p, w.n, beta)
        reason = () if is_char else ("beta is not a q^(1/3) multiple coprime to p, or 3 does not divide n",)
        return Classification(CUBE, p_rank=0 if is_char else None, ptype="OneThird" if is_char else None,
                              beta=beta, is_char=is_char, factors=((w.q, beta, 1),) * 3, reasons=reason)

    special = special_form_check(w)
    if special is not None:
        q = w.q
        return Classification(REDUCIBLE, factors=((q * q, 0, -2 * q, 0, 1), (q, special, 1)),
                              reasons=("special form (t^2 - q)^2 (t^2 + beta t + q)",))
    if not is_irreducible(w):
        return Classification(REDUCIBLE, factors=tuple(rational_factors(w)),
                              reasons=("real Weil cubic has an integer root",))

    patterns = valuation_patterns(w)
    if len(patterns) > 1:
        raise ClassificationError(f"valuation patterns {patterns} overlap for {w}")
    if not patterns:
        return Classification(NOT_CHAR, reasons=("valuations match no admissible Newton polygon",))
    case = patterns[0]
    if case == 1:
        return _char("Ordinary")
    if case in (2, 3):
        if half_valuation_root(w):
            return Classification(NOT_CHAR, reasons=(f"case {case}: root of valuation n/2 in Q_p",))
        return _char("PRank2" if case == 2 else "PRank1")
    if case == 4:
        if has_qp_root(w.polynomial(), w.p):
            return Classification(NOT_CHAR, reasons=("case 4: root in Q_p",))
        return _char("OneThird")
    if supersingular_list_check(w):
        return _char("Supersingular")
    return Classification(NOT_CHAR, reasons=("case 5: not in the supersingular list",))


def _char(ptype: str) -> Classification:
    return Classification(CHAR, p_rank=P_RANK_OF_TYPE[ptype], ptype=ptype,
                          supersingular=ptype == "Supersingular")


def p_rank(c: Classification) -> int:
    if c.verdict == CHAR:
        return c.p_rank
    if c.verdict == CUBE and c.is_char:
        return 0
    raise ValueError(f"p-rank undefined for verdict {c.verdict}")


def polygon_of(w: WeilCandidate) -> NewtonPolygon:
    return newton_polygon(w.polynomial(), w.p)


def recomputed_type(w: WeilCandidate) -> str:
    return polygon_type(polygon_of(w), w.n)
