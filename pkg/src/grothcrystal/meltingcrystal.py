"""Deformed melting-crystal partition functions over boxed plane partitions.

The weight of a plane partition depends on where consecutive diagonal slices
agree, with one deformation parameter beta on top of the box-count variable q.
Everything here is evaluated two ways: brute-force sums over enumerated
configurations against closed determinant or product formulas, in numeric
(rational q) or series mode.  The same formula code runs in both modes; only
the final division by a power of q needs a mode-specific step.

Entropy numerics are the one floating-point corner, matching the Bethe-root
treatment elsewhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import IdentityError, OutOfBoxError, ParameterError, PoleError
from .exactcore import (
    Matrix,
    TruncatedSeries,
    binomial_qn_series,
    det_ring,
)
from .partitions import (
    PlanePartition,
    check_plane_partition,
    diagonal_slice,
    part,
    pp_size,
    enumerate_boxed,
)


def weight_phi(pi: PlanePartition, q, beta, n_slices: int) -> object:
    """Slice-agreement weight of a plane partition inside an n x n base.

    Exact over any coefficient field containing q and beta with q invertible;
    the series-mode identities go through the determinant and product routes
    instead, since a lone weight involves negative powers of q.
    """
    pi = check_plane_partition(pi)
    n = n_slices
    if len(pi) > n or (pi and len(pi[0]) > n):
        raise OutOfBoxError("plane partition leaves the n x n base")
    one = q**0
    val = one
    slices = {m: diagonal_slice(pi, m) for m in range(-n, n + 1)}
    for j in range(1, n + 1):
        up = slices[j]
        up_prev = slices[j - 1]
        down = slices[-j]
        down_prev = slices[1 - j]
        qj = q**j
        for k in range(1, n - j + 1):
            if part(up, k) == part(up_prev, k + 1):
                denom = one + beta * qj
                if denom == 0:
                    raise PoleError(f"1 + beta*q^{j} vanishes")
                val = val * _ring_inv(denom)
            if part(down, k) != part(down_prev, k):
                # (1 + beta*q^(1-j)) written with nonnegative powers of q;
                # a vanishing factor is a zero weight, not a pole
                if j == 1:
                    val = val * (one + beta * one)
                else:
                    val = val * (q ** (j - 1) + beta * one) * _ring_inv(q ** (j - 1))
    return val


def _ring_inv(x):
    if isinstance(x, TruncatedSeries):
        return x.inverse()
    return 1 / x


def _ring_div(a, b):
    return a * _ring_inv(b)


def z_box_bruteforce(n: int, height: int, q: Fraction, beta: Fraction) -> Fraction:
    """Sum of weight * q^size over all plane partitions in the n x n x height box."""
    q = Fraction(q)
    beta = Fraction(beta)
    if not 0 < q < 1:
        raise ParameterError("need 0 < q < 1 in numeric mode")
    total = Fraction(0)
    for pi in enumerate_boxed(n, n, height):
        total += weight_phi(pi, q, beta, n) * q ** pp_size(pi)
    return total


def _z_box_det_core(n: int, height: int, q, beta):
    """Shared determinant evaluation.

    Returns (shift, value) with the full answer q**shift * value; `value` only
    uses nonnegative powers of q and inverses of units, so it is valid for
    both rational and series q.
    """
    one = q**0
    ent = []
    for j in range(1, n + 1):
        row = []
        for k in range(1, n + 1):
            e = (j + k - 1) * (height + n) + (1 - k) * (n - 1)
            if e < 0:
                raise ArithmeticError("exponent bookkeeping failed")
            ratio_num = (q ** (k - 1) + beta * one) ** (n - 1)
            ratio_den = (one + beta * q**j) ** (n - 1)
            if ratio_den == 0:
                raise PoleError(f"1 + beta*q^{j} vanishes")
            num = one - q**e * _ring_div(ratio_num, ratio_den)
            den = one - q ** (j + k - 1)
            if den == 0:
                raise PoleError("1 - q^m vanishes")
            row.append(_ring_div(num, den))
        ent.append(row)
    if n == 0:
        return 0, one
    if isinstance(q, TruncatedSeries):
        det = det_ring(ent)
    else:
        det = Matrix(ent).det()
    pref = one
    for j in range(1, n + 1):
        base = one + beta * q**j
        if base == 0:
            raise PoleError(f"1 + beta*q^{j} vanishes")
        pref = pref * base ** (j - 1)
    inv_part = one
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            factor = one - q ** (k - j)
            if factor == 0:
                raise PoleError("1 - q^m vanishes")
            inv_part = inv_part * factor**2
    shift = n * (n - 1) // 2 - 2 * sum(j * (n - j) for j in range(1, n))
    return shift, pref * _ring_inv(inv_part) * det


def z_box_det(n: int, height: int, q: Fraction, beta: Fraction) -> Fraction:
    """Closed determinant form of the boxed partition function, rational q."""
    q = Fraction(q)
    beta = Fraction(beta)
    if q == 0 or q == 1 or q == -1:
        raise ParameterError("q must avoid 0 and +-1")
    shift, value = _z_box_det_core(n, height, q, beta)
    return q**shift * value


def z_box_det_series(n: int, height: int, beta: Fraction, order: int) -> TruncatedSeries:
    """The same determinant as a q-series through the requested order."""
    beta = Fraction(beta)
    neg = 2 * sum(j * (n - j) for j in range(1, n)) - n * (n - 1) // 2
    work_order = order + max(neg, 0)
    q = TruncatedSeries.indeterminate(work_order)
    shift, value = _z_box_det_core(n, height, q, beta)
    if shift >= 0:
        shifted = value * q**shift
    else:
        shifted = value.shift_down(-shift)
    return shifted.truncate(order)


def z_box_beta0(n_rows: int, n_cols: int, height: int, q) -> object:
    """Undeformed boxed partition function: the classical triple product."""
    one = q**0
    total = one
    for j in range(1, n_rows + 1):
        for k in range(1, n_cols + 1):
            num = one - q ** (height + j + k - 1)
            den = one - q ** (j + k - 1)
            if den == 0:
                raise PoleError("1 - q^m vanishes")
            total = total * _ring_div(num, den)
    return total


def z_infinite(beta: Fraction, order: int) -> TruncatedSeries:
    """Unboxed partition function as a q-series through the given order."""
    beta = Fraction(beta)
    out = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        out = out * binomial_qn_series(beta, n, n - 1, order)
        out = out * binomial_qn_series(-1, n, -n, order)
    return out


def z_box_series_limit(beta: Fraction, order: int) -> TruncatedSeries:
    """Boxed determinant series at box size order+1, asserted to have
    stabilized to the unboxed product through the requested order."""
    boxed = z_box_det_series(order + 1, order + 1, beta, order)
    free = z_infinite(beta, order)
    if boxed != free:
        raise IdentityError(
            "boxed series has not stabilized to the unboxed product"
        )
    return boxed


# -- entropy numerics ---------------------------------------------------------


def log_z_numeric(beta: float, q: float, tol: float = 1e-16) -> float:
    """log of the unboxed partition function at numeric q in (0, 1)."""
    if not 0.0 < q < 1.0:
        raise ParameterError("need 0 < q < 1")
    if beta < -1.0:
        raise ParameterError("beta < -1 leaves the physical range")
    total = 0.0
    n = 1
    while True:
        qn = q**n
        term = (n - 1) * math.log1p(beta * qn) - n * math.log1p(-qn)
        total += term
        if abs(term) < tol and n > 1:
            break
        n += 1
        if n > 100000:
            break
    return total


def entropy(mu: float, temperature: float, beta: float, term_tol: float = 1e-14) -> float:
    """Entropy of the deformed crystal at chemical potential mu and temperature.

    Summed until the terms fall below term_tol; beta must be >= -1 for the
    logarithms to stay real.
    """
    if temperature <= 0 or mu <= 0:
        raise ParameterError("need positive temperature and chemical potential")
    if beta < -1.0:
        raise ParameterError("beta < -1 leaves the physical range")
    q = math.exp(-mu / temperature)
    total = 0.0
    n = 1
    while True:
        qinv = q**-n
        energy_part = (mu * n / temperature) * (
            beta * (n - 1) / (beta + qinv) + n / (qinv - 1.0)
        )
        log_part = (n - 1) * math.log1p(beta * q**n) - n * math.log1p(-(q**n))
        term = energy_part + log_part
        total += term
        if abs(term) < term_tol and n > 1:
            break
        n += 1
        if n > 100000:
            break
    return total


def internal_energy_fd(mu: float, temperature: float, beta: float) -> float:
    """T^2 d(log Z)/dT by central finite differences in the temperature."""
    h = temperature * 1e-5
    def lz(t: float) -> float:
        return log_z_numeric(beta, math.exp(-mu / t))
    d = (lz(temperature + h) - lz(temperature - h)) / (2 * h)
    return temperature * temperature * d


def entropy_consistency(mu: float, temperature: float, beta: float) -> float:
    """| S - (log Z + E/T) | with E from finite differences."""
    s = entropy(mu, temperature, beta)
    lz = log_z_numeric(beta, math.exp(-mu / temperature))
    e = internal_energy_fd(mu, temperature, beta)
    return abs(s - (lz + e / temperature))
