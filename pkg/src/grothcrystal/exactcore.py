"""Exact arithmetic: rationals, Laurent polynomials, truncated q-series, matrices.

Scalars are `fractions.Fraction` throughout; floating point enters only in the
Bethe-root and entropy numerics, which live elsewhere.  A Laurent polynomial is
stored sparsely as {exponent: coefficient} with no zero coefficients kept; a
truncated series stores the coefficients of q^0..q^D and discards everything
above its fixed order.  Rationals serialize as canonical "p/q" strings and
series as lists of such strings.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat_str(x: Fraction) -> str:
    """Serialize a rational as its canonical "p/q" string."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def gen_binomial(e: int, m: int) -> Fraction:
    """Binomial coefficient C(e, m) for an integer e of either sign."""
    num = 1
    for i in range(m):
        num *= e - i
    return Fraction(num, math.factorial(m))


class LaurentPoly:
    """Sparse Laurent polynomial in one variable over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        cleaned: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    cleaned[int(e)] = c
        self.coeffs = cleaned

    @classmethod
    def _raw(cls, coeffs: dict[int, Fraction]) -> "LaurentPoly":
        # trusted constructor: coeffs already normalized, no zeros
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def monomial(cls, coeff, exp: int) -> "LaurentPoly":
        return cls({exp: Fraction(coeff)})

    @classmethod
    def var(cls) -> "LaurentPoly":
        return cls({1: _ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exp: int) -> Fraction:
        return self.coeffs.get(exp, _ZERO)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    def __eq__(self, other) -> bool:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self.coeffs == lifted.coeffs

    __hash__ = None  # mutable-dict backed; not hashable

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in lifted.coeffs.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other) -> "LaurentPoly":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if not c0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * c0 for e, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            # only monomials are units of the Laurent ring
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            ((e, c),) = self.coeffs.items()
            return LaurentPoly.monomial(c ** n, e * n)
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by u^k."""
        return LaurentPoly._raw({e + k: c for e, c in self.coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly._raw(
            {e - 1: c * e for e, c in self.coeffs.items() if e != 0}
        )

    def evaluate(self, a: Fraction) -> Fraction:
        """Value at a nonzero rational (zero allowed when no negative exponents)."""
        a = Fraction(a)
        total = _ZERO
        for e, c in self.coeffs.items():
            total += c * a**e
        return total

    def degrees(self) -> tuple[int, int]:
        """(lowest, highest) exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs), max(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(
            f"({c})*u^{e}" for e, c in sorted(self.coeffs.items())
        )
        return f"LaurentPoly({terms})"


class TruncatedSeries:
    """Power series in q truncated (inclusively) at a fixed order.

    Arithmetic is closed at the common order; mixing orders is an error rather
    than a silent truncation.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        co = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            co = co[: order + 1] + [_ZERO] * (order + 1 - len(co))
        if not co:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = tuple(co)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def indeterminate(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs, order)

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by q^k; the k lowest coefficients must vanish."""
        if k == 0:
            return self
        if k < 0 or k > self.order:
            raise ValueError("bad shift")
        if any(self.coeffs[:k]):
            raise ValueError("series is not divisible by q^%d" % k)
        return TruncatedSeries(self.coeffs[k:])

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return None

    def __eq__(self, other) -> bool:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self.coeffs == lifted.coeffs

    __hash__ = None

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __add__(self, other) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, lifted.coeffs)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other) -> "TruncatedSeries":
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return TruncatedSeries([c * c0 for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        d = self.order
        out = [_ZERO] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term has no inverse")
        d = self.order
        out = [_ZERO] * (d + 1)
        out[0] = 1 / c0
        for n in range(1, d + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out[n] = -acc / c0
        return TruncatedSeries(out)

    def __pow__(self, n: int) -> "TruncatedSeries":
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = TruncatedSeries.one(self.order)
        for _ in range(n):
            out = out * base
        return out

    def to_strings(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_product(factors: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    out = TruncatedSeries.one(order)
    for f in factors:
        out = out * f
    return out


def binomial_qn_series(c, n: int, e: int, order: int) -> TruncatedSeries:
    """The expansion of (1 + c*q^n)^e, e of either sign, n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    c = Fraction(c)
    out = [_ZERO] * (order + 1)
    m = 0
    while m * n <= order:
        out[m * n] = gen_binomial(e, m) * c**m
        m += 1
    return TruncatedSeries(out)


def _int_det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix; destroys m."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


class Matrix:
    """Dense matrix over an exact ring (Fraction or LaurentPoly entries)."""

    __slots__ = ("data",)

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        self.data = data

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = tuple(zip(*other.data))  # columns of other
        out = []
        for row in self.data:
            new_row = []
            for col in ot:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return Matrix(out)

    def scale(self, s) -> "Matrix":
        return Matrix([[x * s for x in row] for row in self.data])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.data)))

    def det(self) -> Fraction:
        """Exact determinant via fraction-free elimination on a cleared matrix."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant needs a square matrix")
        if n == 0:
            return _ONE
        scale = 1
        cleared = []
        for row in self.data:
            den = 1
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
            scale *= den
            cleared.append([int(x * den) for x in row])
        return Fraction(_int_det_bareiss(cleared), scale)

    def inverse(self) -> "Matrix":
        """Exact inverse over the rationals (Gauss-Jordan)."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse needs a square matrix")
        a = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
             for i, row in enumerate(self.data)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if a[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv_p = 1 / a[col][col]
            a[col] = [x * inv_p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def det_ring(rows: Sequence[Sequence]) -> object:
    """Division-free determinant for entries in any commutative ring.

    Dynamic programming over column subsets, so usable well beyond the n <= 3
    range where cofactor expansion stays cheap.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    states = {1 << c: rows[0][c] for c in range(n)}
    for i in range(1, n):
        nxt: dict[int, object] = {}
        row = rows[i]
        for mask, val in states.items():
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                term = val * row[c]
                if bin(mask >> (c + 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        states = nxt
    return states[(1 << n) - 1]


def embed_pair(op: Matrix, pos1: int, pos2: int, dims: Sequence[int]) -> Matrix:
    """Embed an operator on tensor factors pos1 < pos2 into the full product.

    Index convention is big-endian: factor 0 is the most significant digit of
    a product-space index, and `op` is indexed by i1*d2 + i2.
    """
    if not 0 <= pos1 < pos2 < len(dims):
        raise ValueError("bad positions")
    d1, d2 = dims[pos1], dims[pos2]
    if op.rows != d1 * d2 or op.cols != d1 * d2:
        raise ValueError("operator size does not match the chosen factors")
    total = 1
    for d in dims:
        total *= d

    def digits(idx: int) -> list[int]:
        out = [0] * len(dims)
        for k in range(len(dims) - 1, -1, -1):
            out[k] = idx % dims[k]
            idx //= dims[k]
        return out

    out_rows = []
    for r in range(total):
        dr = digits(r)
        row = []
        for c in range(total):
            dc = digits(c)
            same = all(
                dr[k] == dc[k] for k in range(len(dims)) if k not in (pos1, pos2)
            )
            if same:
                row.append(
                    op.entry(dr[pos1] * d2 + dr[pos2], dc[pos1] * d2 + dc[pos2])
                )
            else:
                row.append(_ZERO)
        out_rows.append(row)
    return Matrix(out_rows)
