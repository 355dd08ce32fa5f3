"""Partitions, particle/occupation encodings, plane partitions and their slices.

A partition is a tuple of weakly decreasing nonnegative ints whose length is
significant (trailing zeros count as parts).  Particle positions are 1-based
strictly increasing tuples; occupation configurations are tuples indexed by
site 0..M-1.  A plane partition is a tuple of row tuples, normalized so that
no row is empty and no row has trailing zeros; entries decrease weakly along
rows and down columns.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import OutOfBoxError, ParameterError

Partition = tuple[int, ...]
PlanePartition = tuple[tuple[int, ...], ...]


def check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ParameterError(f"not weakly decreasing: {lam}")
    if lam and lam[-1] < 0:
        raise ParameterError(f"negative part: {lam}")
    return lam


def part(lam: Sequence[int], j: int) -> int:
    """The j-th part (1-based), zero beyond the length."""
    return lam[j - 1] if 1 <= j <= len(lam) else 0


def partitions_in_box(max_part: int, length: int) -> Iterator[Partition]:
    """All partitions with at most `length` parts each <= max_part, written as
    exactly `length` parts, in ascending lexicographic order."""
    if length == 0:
        yield ()
        return
    for first in range(max_part + 1):
        for rest in partitions_in_box(first, length - 1):
            yield (first,) + rest


def partitions_of_size(n: int) -> Iterator[Partition]:
    """All partitions of n (no padding), largest part first."""
    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(acc)
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            yield from rec(remaining - p, p, acc)
            acc.pop()

    yield from rec(n, n, [])


def interlaces(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether mu >= lam >= mu shifted by one, reading both with zero padding.

    With len(mu) = len(lam) + 1 this is the usual interlacing between adjacent
    rows of a triangular array; the padded reading also serves diagonal slices
    of arbitrary lengths.
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    n = max(len(mu), len(lam) + 1)
    for j in range(1, n + 1):
        if not (part(mu, j) >= part(lam, j) >= part(mu, j + 1)):
            return False
    return True


def interlacing_below(mu: Sequence[int]) -> Iterator[Partition]:
    """All lam with len(lam) = len(mu) - 1 and mu interlacing lam."""
    mu = check_partition(mu)
    if not mu:
        raise ParameterError("empty partition has nothing below")

    def rec(j: int, acc: list[int]) -> Iterator[Partition]:
        if j == len(mu) - 1:
            yield tuple(acc)
            return
        hi = mu[j] if j == 0 else min(mu[j], acc[-1])
        for v in range(mu[j + 1], hi + 1):
            acc.append(v)
            yield from rec(j + 1, acc)
            acc.pop()

    yield from rec(0, [])


def positions_from_partition(lam: Sequence[int], chain_length: int) -> tuple[int, ...]:
    """1-based particle positions x_j = lam_{N-j+1} + j on sites 1..chain_length."""
    lam = check_partition(lam)
    n = len(lam)
    if n > chain_length:
        raise OutOfBoxError("more parts than sites")
    if lam and lam[0] > chain_length - n:
        raise OutOfBoxError(
            f"largest part {lam[0]} exceeds {chain_length}-{n} box"
        )
    return tuple(lam[n - j] + j for j in range(1, n + 1))


def partition_from_positions(x: Sequence[int]) -> Partition:
    x = tuple(int(v) for v in x)
    for a, b in zip(x, x[1:]):
        if a >= b:
            raise ParameterError(f"positions not strictly increasing: {x}")
    if x and x[0] < 1:
        raise ParameterError("positions are 1-based")
    n = len(x)
    return tuple(x[n - j] - (n - j + 1) for j in range(1, n + 1))


def reversed_positions(x: Sequence[int], chain_length: int) -> tuple[int, ...]:
    """The positions after a 180-degree rotation of the chain."""
    x = tuple(x)
    if x and (x[0] < 1 or x[-1] > chain_length):
        raise OutOfBoxError("positions outside the chain")
    return tuple(chain_length - v + 1 for v in reversed(x))


def complement(lam: Sequence[int], width: int) -> Partition:
    """Complement in the width^N box: width - lam_{N+1-j}."""
    lam = check_partition(lam)
    if lam and lam[0] > width:
        raise OutOfBoxError(f"partition does not fit in width {width}")
    return tuple(width - p for p in reversed(lam))


def occupation_from_partition(lam: Sequence[int], num_sites: int) -> tuple[int, ...]:
    """Occupation numbers n_k = multiplicity of k in lam, k = 0..num_sites-1."""
    lam = check_partition(lam)
    if lam and lam[0] >= num_sites:
        raise OutOfBoxError(f"part {lam[0]} needs a site >= {num_sites}")
    occ = [0] * num_sites
    for p in lam:
        occ[p] += 1
    return tuple(occ)


def partition_from_occupation(occ: Sequence[int]) -> Partition:
    out: list[int] = []
    for k in range(len(occ) - 1, -1, -1):
        if occ[k] < 0:
            raise ParameterError("negative occupation")
        out.extend([k] * occ[k])
    return tuple(out)


def admissible(m: Sequence[int], n: Sequence[int]) -> bool:
    """Whether the tail sums of m exceed those of n by 0 or 1 at every site.

    m and n are occupation configurations on the same sites with sum(m) equal
    to sum(n) + 1.
    """
    if len(m) != len(n):
        raise ParameterError("configurations live on different chains")
    if sum(m) != sum(n) + 1:
        raise ParameterError("particle numbers must differ by exactly one")
    tail_m = 0
    tail_n = 0
    for k in range(len(m) - 1, -1, -1):
        tail_m += m[k]
        tail_n += n[k]
        if not 0 <= tail_m - tail_n <= 1:
            return False
    return True


# -- plane partitions ---------------------------------------------------------


def normalize_plane_partition(rows: Sequence[Sequence[int]]) -> PlanePartition:
    out = []
    for row in rows:
        row = tuple(int(v) for v in row)
        while row and row[-1] == 0:
            row = row[:-1]
        if row:
            out.append(row)
        else:
            break
    return tuple(out)


def check_plane_partition(pi: Sequence[Sequence[int]]) -> PlanePartition:
    pi = normalize_plane_partition(pi)
    for row in pi:
        for a, b in zip(row, row[1:]):
            if a < b:
                raise ParameterError(f"row increases: {row}")
        if row[-1] < 0:
            raise ParameterError("negative entry")
    for upper, lower in zip(pi, pi[1:]):
        if len(lower) > len(upper):
            raise ParameterError("row lengths increase downward")
        for a, b in zip(upper, lower):
            if a < b:
                raise ParameterError("column increases downward")
    return pi


def pp_entry(pi: PlanePartition, i: int, j: int) -> int:
    """Entry at row i, column j (1-based), zero outside the support."""
    if i < 1 or j < 1:
        raise ParameterError("plane partition indices are 1-based")
    if i <= len(pi) and j <= len(pi[i - 1]):
        return pi[i - 1][j - 1]
    return 0


def pp_size(pi: PlanePartition) -> int:
    return sum(sum(row) for row in pi)


def diagonal_slice(pi: PlanePartition, m: int) -> Partition:
    """The partition read along the m-th diagonal (entries pi[j-m, j])."""
    out = []
    k = 1
    while True:
        e = pp_entry(pi, k - min(m, 0), k + max(m, 0))
        if e == 0:
            break
        out.append(e)
        k += 1
    return tuple(out)


def all_diagonal_slices(pi: PlanePartition) -> dict[int, Partition]:
    """Every nonempty diagonal slice, keyed by diagonal index."""
    pi = check_plane_partition(pi)
    out = {}
    rows = len(pi)
    cols = len(pi[0]) if pi else 0
    for m in range(-rows + 1, cols):
        s = diagonal_slice(pi, m)
        if s:
            out[m] = s
    return out


def assemble_from_slices(
    slices: Sequence[Sequence[int]], m_first: int
) -> PlanePartition:
    """Rebuild a plane partition from consecutive diagonal slices.

    slices[i] is the diagonal m_first + i; diagonals outside the given range
    are empty.  Raises if the slices are not the diagonals of any plane
    partition (in particular if they violate the interlacing chain).
    """
    given = {m_first + i: check_partition(s) for i, s in enumerate(slices)}
    nonempty = {m: s for m, s in given.items() if s}
    if not nonempty:
        return ()
    rows = max(len(s) - min(m, 0) for m, s in nonempty.items())
    cols = max(len(s) + max(m, 0) for m, s in nonempty.items())
    grid = []
    for i in range(1, rows + 1):
        row = []
        for j in range(1, cols + 1):
            s = given.get(j - i, ())
            row.append(part(s, min(i, j)))
        grid.append(row)
    try:
        pi = check_plane_partition(grid)
    except ParameterError as exc:
        raise ParameterError(f"slices do not interlace: {exc}") from exc
    for m, s in given.items():
        if diagonal_slice(pi, m) != tuple(s):
            raise ParameterError(
                f"slice {m} is inconsistent with the other diagonals"
            )
    return pi


def enumerate_boxed(n_rows: int, n_cols: int, height: int) -> Iterator[PlanePartition]:
    """Every plane partition inside the n_rows x n_cols x height box, in
    ascending lexicographic order of the row-major entry grid."""
    if n_rows < 0 or n_cols < 0 or height < 0:
        raise ParameterError("box dimensions must be nonnegative")
    grid = [[0] * n_cols for _ in range(n_rows)]
    total = n_rows * n_cols

    def rec(pos: int) -> Iterator[PlanePartition]:
        if pos == total:
            yield normalize_plane_partition(grid)
            return
        i, j = divmod(pos, n_cols)
        cap = height
        if i > 0:
            cap = min(cap, grid[i - 1][j])
        if j > 0:
            cap = min(cap, grid[i][j - 1])
        for v in range(cap + 1):
            grid[i][j] = v
            yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def count_boxed(n_rows: int, n_cols: int, height: int) -> int:
    """Number of plane partitions in the box, via the classical product."""
    from fractions import Fraction

    total = Fraction(1)
    for j in range(1, n_rows + 1):
        for k in range(1, n_cols + 1):
            total *= Fraction(height + j + k - 1, j + k - 1)
    if total.denominator != 1:
        raise ArithmeticError("box-count product failed to be integral")
    return total.numerator


def plane_partitions_of_size(n: int) -> Iterator[PlanePartition]:
    """Every plane partition with exactly n boxes."""
    if n < 0:
        raise ParameterError("size must be nonnegative")
    if n == 0:
        yield ()
        return

    def dominated_rows(upper: Sequence[int], max_sum: int) -> Iterator[Partition]:
        # nonempty partitions bounded entrywise by `upper` with size <= max_sum
        def rec(i: int, prev: int, left: int, acc: list[int]) -> Iterator[Partition]:
            if acc:
                yield tuple(acc)
            if i >= len(upper):
                return
            for v in range(1, min(upper[i], prev, left) + 1):
                acc.append(v)
                yield from rec(i + 1, v, left - v, acc)
                acc.pop()

        yield from rec(0, max_sum, max_sum, [])

    def build(upper: Sequence[int], left: int, acc: list[Partition]) -> Iterator[PlanePartition]:
        if left == 0:
            yield tuple(acc)
            return
        for row in dominated_rows(upper, left):
            acc.append(row)
            yield from build(row, left - sum(row), acc)
            acc.pop()

    yield from build((n,) * n, n, [])
