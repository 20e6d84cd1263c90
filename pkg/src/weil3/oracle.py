"""Independent verifiers for the Weil and irreducibility decisions.

None of these call into ``weilcheck`` or ``irreducibility``:

* numeric_weil_check  -- complex roots from companion-matrix eigenvalues
* sturm_weil_check    -- exact Sturm count of the real cubic on [-2 sqrt q, 2 sqrt q]
* numeric_factor_search -- round products of root subsets, confirm by exact division

Eigenvalues of a polynomial with a repeated root are only accurate to about
eps^(1/k). When two computed roots nearly coincide, the polynomial is split
into squarefree factors with exact integer gcds before the roots are recomputed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import polynomial as P
from .exactmath import SurdValue, poly_sign_at, sturm_count

CLUSTER_RADIUS = 0.05
ROUNDING_THRESHOLD = 0.25


class OracleError(RuntimeError):
    """The numeric root finder failed to produce usable roots."""


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    pairing: tuple[tuple[int, int], ...]


def sextic(q: int, a1: int, a2: int, a3: int) -> tuple[int, ...]:
    return (q**3, q * q * a1, q * a2, a3, a2, a1, 1)


def _companions(polys: np.ndarray) -> np.ndarray:
    """Stack of companion matrices for monic polynomials given ascending (N, d+1)."""
    n, d1 = polys.shape
    d = d1 - 1
    comp = np.zeros((n, d, d))
    comp[:, 1:, :-1] = np.eye(d - 1)
    comp[:, :, -1] = -polys[:, :d]
    return comp


def _eigenroots(polys: np.ndarray) -> np.ndarray:
    try:
        roots = np.linalg.eigvals(_companions(polys)).astype(complex)  # real when all roots are
    except np.linalg.LinAlgError as exc:
        raise OracleError(f"eigenvalue iteration did not converge: {exc}") from exc
    if not np.all(np.isfinite(roots)):
        raise OracleError("root finder produced non-finite roots")
    return roots


def _deflated_roots(f: Sequence[int]) -> np.ndarray:
    """Roots of f with multiplicity, each squarefree factor solved separately."""
    out = []
    for g, mult in P.squarefree_decomposition(tuple(f)):
        g = P.monic(g)
        if P.degree(g) == 1:
            roots = np.array([-float(g[0])], dtype=complex)
        else:
            roots = _eigenroots(np.array([[float(c) for c in g]]))[0]
        out.extend(list(roots) * mult)
    return np.array(out, dtype=complex)


def _clustered(roots: np.ndarray, scale: float) -> np.ndarray:
    """Rows containing two roots closer than CLUSTER_RADIUS * scale."""
    diff = np.abs(roots[:, :, None] - roots[:, None, :])
    k = roots.shape[1]
    diff[:, np.arange(k), np.arange(k)] = np.inf
    return diff.min(axis=(1, 2)) < CLUSTER_RADIUS * scale


def sextic_roots(q: int, triples: Sequence[tuple[int, int, int]]) -> np.ndarray:
    """Six complex roots per triple, shape (N, 6)."""
    polys = np.array([sextic(q, *t) for t in triples], dtype=float)
    roots = _eigenroots(polys)
    for i in np.flatnonzero(_clustered(roots, np.sqrt(q))):
        roots[i] = _deflated_roots(sextic(q, *triples[i]))
    return roots


def numeric_weil_batch(q: int, triples: Sequence[tuple[int, int, int]], tol: float = 1e-9) -> np.ndarray:
    if not 1e-12 <= tol <= 1e-6:
        raise ValueError("tol must lie in [1e-12, 1e-6]")
    if not len(triples):
        return np.zeros(0, dtype=bool)
    sq = np.sqrt(q)
    roots = sextic_roots(q, triples)
    return np.all(np.abs(np.abs(roots) - sq) < tol * sq, axis=1)


def numeric_weil_check(q: int, a1: int, a2: int, a3: int, tol: float = 1e-9) -> bool:
    """All six complex roots have modulus sqrt(q) to relative tolerance tol."""
    return bool(numeric_weil_batch(q, [(a1, a2, a3)], tol)[0])


def root_set(q: int, a1: int, a2: int, a3: int) -> RootSet:
    roots = sextic_roots(q, [(a1, a2, a3)])[0]
    order = np.lexsort((roots.imag, roots.real))
    roots = roots[order]
    used, pairs = set(), []
    for i, z in enumerate(roots):
        if i in used:
            continue
        j = min((k for k in range(len(roots)) if k != i and k not in used),
                key=lambda k: abs(roots[k] - np.conj(z)))
        used.update((i, j))
        pairs.append((i, j))
    return RootSet(tuple(complex(z) for z in roots), tuple(pairs))


def _count_with_multiplicity(f: tuple, lo: SurdValue, hi: SurdValue) -> int:
    total = 0
    g = f
    while P.degree(g) > 0:
        sqf = P.squarefree_part(g)
        total += sturm_count(sqf, lo, hi)
        if poly_sign_at(sqf, lo) == 0:
            total += 1
        g = P.primitive_gcd(g, P.derivative(g))
    return total


def sturm_weil_check(q: int, a1: int, a2: int, a3: int) -> bool:
    """Exact: the real cubic has all three roots in [-2 sqrt q, 2 sqrt q]."""
    f = (a3 - 2 * q * a1, a2 - 3 * q, a1, 1)
    lo, hi = SurdValue.sqrt(q, -2), SurdValue.sqrt(q, 2)
    return _count_with_multiplicity(f, lo, hi) == 3


def _subset_products(roots: np.ndarray, masks: list[tuple[int, ...]]) -> list[np.ndarray]:
    out = []
    for idx in masks:
        coeffs = np.ones((roots.shape[0], 1), dtype=complex)
        for i in idx:
            # multiply by (t - root_i), descending coefficient order
            z = roots[:, i][:, None]
            coeffs = np.concatenate([coeffs, np.zeros((roots.shape[0], 1))], axis=1) - \
                np.concatenate([np.zeros((roots.shape[0], 1)), coeffs * z], axis=1)
        out.append(coeffs)
    return out


SUBSETS = [c for k in range(1, 6) for c in itertools.combinations(range(6), k)]


def _factor_rows(polys: Sequence[tuple[int, ...]], roots: np.ndarray, tol: float) -> list:
    found: list = [None] * len(polys)
    for coeffs in _subset_products(roots, SUBSETS):
        rounded = np.round(coeffs.real)
        ok = np.all(np.abs(coeffs - rounded) < tol, axis=1)
        for i in np.flatnonzero(ok):
            if found[i] is not None:
                continue
            g = tuple(int(c) for c in rounded[i][::-1])
            quot = P.exact_quotient(polys[i], g)
            if quot is not None and all(Fraction(c).denominator == 1 for c in quot):
                found[i] = (g, tuple(int(c) for c in quot))
    return found


def numeric_factor_batch(q: int, triples: Sequence[tuple[int, int, int]],
                         tol: float = ROUNDING_THRESHOLD) -> list:
    """Per triple, the first exact factorisation (g, h) found, or None."""
    if not len(triples):
        return []
    return _factor_rows([sextic(q, *t) for t in triples], sextic_roots(q, triples), tol)


def numeric_factor_search(f: Sequence[int], tol: float = ROUNDING_THRESHOLD):
    """Exact nontrivial factorisation (g, h) of a monic sextic, or None.

    Subsets are tried smallest first, so g has the least possible degree.
    """
    f = tuple(f)
    if len(f) != 7 or f[-1] != 1:
        raise ValueError("numeric_factor_search expects a monic sextic")
    roots = _eigenroots(np.array([f], dtype=float))
    if _clustered(roots, max(1.0, abs(f[0]) ** (1 / 6)))[0]:
        roots = _deflated_roots(f)[None, :]
    return _factor_rows([f], roots, tol)[0]


TOWER_LEVELS = (8, 16, 32, 64, 128)
TOWER_CAP = 200_000


def _vp(x: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


def tower_roots(f: Sequence[int], p: int, levels: Sequence[int] = TOWER_LEVELS,
                complete: bool = False) -> list[tuple[int, int]] | None:
    """Brute-force p-adic root search by digit-by-digit lifting.

    Returns certified approximations (x, k): f has a root in Z_p congruent to
    x mod p^k. An empty list means no residue mod p^levels[0] survives, so f
    has no root in Z_p. None means the top level was reached inconclusively.
    With ``complete`` every surviving residue must be certified, so each root
    of f lies in one of the returned classes.
    Works on the squarefree part, where a coherent tower always certifies.
    """
    f = P.squarefree_part(tuple(f))
    df = P.derivative(f)
    residues, k = [0], 0
    for top in levels:
        while k < top:
            mod = p ** (k + 1)
            residues = [x + j * p**k for x in residues for j in range(p)
                        if P.evaluate(f, x + j * p**k) % mod == 0]
            k += 1
            if not residues:
                return []
            if len(residues) > TOWER_CAP:
                raise OracleError(f"lifting tower exceeded {TOWER_CAP} residues")
        if k < levels[-1] and k == levels[0]:
            continue  # the first level only screens residues
        certified = []
        for x in residues:
            d = _vp(P.evaluate(df, x), p, k)
            if 2 * d < k:
                certified.append((x, k - d))  # f(x) = 0 mod p^k already
        if certified and (not complete or len(certified) == len(residues)):
            return certified
    return None


def tower_has_root(f: Sequence[int], p: int) -> bool:
    """Oracle answer for a Z_p root of a monic f; escalation failure raises."""
    found = tower_roots(f, p, TOWER_LEVELS)
    if found is None:
        raise OracleError(f"lifting tower inconclusive at p^{TOWER_LEVELS[-1]}")
    return bool(found)
