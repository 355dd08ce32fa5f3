"""Determinant and branching evaluations of the deformed symmetric polynomials.

G_lam(z; beta) is computed three independent ways: a ratio of determinants, a
sum over interlacing chains of single-variable skew factors, and (at beta = 0)
the classical bialternant.  The module also evaluates the closed determinant
sides of the dual-pairing and weighted-summation identities so callers can
cross-check them against brute-force sums over a box.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DegeneratePointError, ParameterError, PoleError
from .exactcore import Matrix
from .partitions import (
    check_partition,
    complement,
    interlaces,
    interlacing_below,
    part,
    partitions_in_box,
)


def _require_distinct(values: Sequence[Fraction], label: str):
    if len(set(values)) != len(values):
        raise DegeneratePointError(f"{label} must be pairwise distinct")


def groth_det(lam: Sequence[int], zs: Sequence[Fraction], beta: Fraction) -> Fraction:
    """G_lam via the N x N determinant ratio."""
    lam = check_partition(lam)
    zs = [Fraction(z) for z in zs]
    beta = Fraction(beta)
    n = len(zs)
    if len(lam) != n:
        raise ParameterError("need exactly one part (possibly zero) per variable")
    if n == 0:
        return Fraction(1)
    _require_distinct(zs, "variables")
    rows = []
    for z in zs:
        w = 1 + beta * z
        rows.append(
            [z ** (lam[k] + n - 1 - k) * w**k for k in range(n)]
        )
    den = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            den *= zs[j] - zs[k]
    return Matrix(rows).det() / den


def schur_det(lam: Sequence[int], zs: Sequence[Fraction]) -> Fraction:
    """Classical bialternant; an independent beta = 0 reference."""
    lam = check_partition(lam)
    zs = [Fraction(z) for z in zs]
    n = len(zs)
    if len(lam) != n:
        raise ParameterError("need exactly one part (possibly zero) per variable")
    if n == 0:
        return Fraction(1)
    _require_distinct(zs, "variables")
    num = Matrix([[z ** (lam[k] + n - 1 - k) for k in range(n)] for z in zs]).det()
    den = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            den *= zs[j] - zs[k]
    return num / den


def skew_single(
    mu: Sequence[int], lam: Sequence[int], z: Fraction, beta: Fraction
) -> Fraction:
    """One-variable skew factor; zero unless mu interlaces lam.

    Requires len(mu) = len(lam) + 1; pad lam with zeros to express absent
    parts explicitly.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    if len(mu) != len(lam) + 1:
        raise ParameterError("mu must have exactly one part more than lam")
    z = Fraction(z)
    beta = Fraction(beta)
    if not interlaces(mu, lam):
        return Fraction(0)
    val = z ** (sum(mu) - sum(lam))
    bz = beta * z
    for j in range(1, len(lam) + 1):
        if part(mu, j + 1) != part(lam, j):
            val *= 1 + bz
    return val


def groth_chain(lam: Sequence[int], zs: Sequence[Fraction], beta: Fraction) -> Fraction:
    """G_lam as a sum over interlacing chains down to the empty partition."""
    lam = check_partition(lam)
    zs = [Fraction(z) for z in zs]
    if len(lam) != len(zs):
        raise ParameterError("need exactly one part (possibly zero) per variable")
    if not zs:
        return Fraction(1)
    total = Fraction(0)
    for kappa in interlacing_below(lam):
        s = skew_single(lam, kappa, zs[-1], beta)
        if s:
            total += s * groth_chain(kappa, zs[:-1], beta)
    return total


def skew_multi(
    lam: Sequence[int],
    nu: Sequence[int],
    zs: Sequence[Fraction],
    beta: Fraction,
) -> Fraction:
    """Multivariable skew polynomial as a chain sum from lam down to nu."""
    lam = check_partition(lam)
    nu = check_partition(nu)
    zs = [Fraction(z) for z in zs]
    if len(lam) != len(nu) + len(zs):
        raise ParameterError("lengths must satisfy len(lam) = len(nu) + #variables")
    if not zs:
        return Fraction(1) if lam == nu else Fraction(0)
    total = Fraction(0)
    for kappa in interlacing_below(lam):
        s = skew_single(lam, kappa, zs[0], beta)
        if s:
            total += s * skew_multi(kappa, nu, zs[1:], beta)
    return total


def cauchy_lhs(
    width: int,
    zs: Sequence[Fraction],
    ws: Sequence[Fraction],
    beta: Fraction,
) -> Fraction:
    """Brute-force sum of G_lam(z) G_{lam complement}(w) over the box."""
    n = len(zs)
    if len(ws) != n:
        raise ParameterError("need as many w variables as z variables")
    total = Fraction(0)
    for lam in partitions_in_box(width, n):
        total += groth_det(lam, zs, beta) * groth_det(complement(lam, width), ws, beta)
    return total


def cauchy_rhs(
    width: int,
    zs: Sequence[Fraction],
    ws: Sequence[Fraction],
    beta: Fraction,
) -> Fraction:
    """Closed determinant side of the dual-pairing identity."""
    zs = [Fraction(z) for z in zs]
    ws = [Fraction(w) for w in ws]
    beta = Fraction(beta)
    n = len(zs)
    if len(ws) != n:
        raise ParameterError("need as many w variables as z variables")
    if n == 0:
        return Fraction(1)
    _require_distinct(zs, "z variables")
    _require_distinct(ws, "w variables")
    for z in zs:
        if z in ws:
            raise PoleError("z and w variables must avoid each other")
    e = width + n
    rows = []
    for z in zs:
        bz = (1 + beta * z) ** (n - 1)
        row = []
        for w in ws:
            bw = (1 + beta * w) ** (n - 1)
            row.append((z**e * bw - w**e * bz) / (z - w))
        rows.append(row)
    pref = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            pref *= (zs[j] - zs[k]) * (ws[k] - ws[j])
    return Matrix(rows).det() / pref


def summation_lhs(width: int, zs: Sequence[Fraction], beta: Fraction) -> Fraction:
    """Brute-force sum of (-beta)^|lam| G_lam(z) over the box."""
    beta = Fraction(beta)
    total = Fraction(0)
    for lam in partitions_in_box(width, len(zs)):
        total += (-beta) ** sum(lam) * groth_det(lam, zs, beta)
    return total


def summation_rhs(width: int, zs: Sequence[Fraction], beta: Fraction) -> Fraction:
    """Closed determinant side of the weighted box summation; beta must be nonzero."""
    zs = [Fraction(z) for z in zs]
    beta = Fraction(beta)
    if beta == 0:
        raise ParameterError(
            "the closed summation needs beta != 0; sum directly in the beta = 0 limit"
        )
    n = len(zs)
    if n == 0:
        return Fraction(1)
    _require_distinct(zs, "variables")
    e = width + n
    rows = []
    for j in range(1, n):
        mb = (-beta) ** (j - n)
        row = []
        for z in zs:
            w = 1 + beta * z
            acc = Fraction(0)
            for m in range(j):
                acc += (-1) ** m * math.comb(e, m) * w ** (m - j + n - 1)
            row.append(mb * acc)
        rows.append(row)
    last = []
    for z in zs:
        w = 1 + beta * z
        acc = Fraction(0)
        for m in range(max(n - 1, 1), e + 1):
            acc += (-1) ** m * math.comb(e, m) * w ** (m - 1)
        last.append(-acc)
    rows.append(last)
    pref = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            pref *= zs[k] - zs[j]
    return Matrix(rows).det() / pref
