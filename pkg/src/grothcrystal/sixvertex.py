"""Six-vertex generalization whose weights carry an anisotropy t and six
coefficients alpha_1..alpha_6 subject to two quadratic constraints.

Setting t = alpha_4 = 0 with (alpha_1, alpha_2, alpha_3, alpha_5, alpha_6) =
(1, 1, 1, -1/beta, -1) reproduces the five-vertex site operator, and the
choice alpha_1 = alpha_2 = alpha_3 = alpha_5 = 1, alpha_6 = -1, alpha_4 = -t
turns the site operator into the t-deformed intertwiner itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, PoleError
from .exactcore import Matrix, embed_pair


@dataclass(frozen=True)
class SixVertexParams:
    """Validated weight coefficients (alpha_1..alpha_6, t)."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a5: Fraction
    a6: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a5", "a6", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        first = (1 - self.t) * self.a1 * self.a2 + self.a3 * self.a6 - self.a4 * self.a5
        if first != 0:
            raise ParameterError(
                "first weight constraint violated: "
                "(1-t)a1*a2 + a3*a6 - a4*a5 = " + str(first)
            )
        second = (
            (self.t**2 - self.t) * self.a1 * self.a2
            + self.t**2 * self.a3 * self.a6
            - self.a4 * self.a5
        )
        if second != 0:
            raise ParameterError(
                "second weight constraint violated: "
                "(t^2-t)a1*a2 + t^2*a3*a6 - a4*a5 = " + str(second)
            )


def five_vertex_params(beta: Fraction) -> SixVertexParams:
    """The degeneration reproducing the five-vertex site operator."""
    beta = Fraction(beta)
    if beta == 0:
        raise ParameterError("the five-vertex degeneration needs beta != 0")
    return SixVertexParams(1, 1, 1, 0, Fraction(-1) / beta, -1, 0)


def intertwiner_params(t: Fraction) -> SixVertexParams:
    """The choice that turns the site operator into the intertwiner."""
    return SixVertexParams(1, 1, 1, -Fraction(t), 1, -1, t)


def l_six(u: Fraction, p: SixVertexParams) -> Matrix:
    """Site operator on (aux, site), basis |00>, |01>, |10>, |11>."""
    u = Fraction(u)
    if u == 0:
        raise PoleError("u = 0 is a pole of the site weights")
    zero = Fraction(0)
    ui = 1 / u
    one_t = 1 - p.t
    return Matrix(
        [
            [p.a3 * u + p.a4 * ui, zero, zero, zero],
            [zero, p.a3 * p.t * u + p.a4 * ui, one_t * p.a1, zero],
            [zero, one_t * p.a2, p.a5 * u + p.a6 * ui, zero],
            [zero, zero, zero, p.a5 * u + p.a6 * p.t * ui],
        ]
    )


def r_six(u: Fraction, v: Fraction, t: Fraction) -> Matrix:
    """t-deformed intertwiner on two auxiliary spaces; poles at u^2 = v^2."""
    u = Fraction(u)
    v = Fraction(v)
    t = Fraction(t)
    den = u * u - v * v
    if den == 0:
        raise PoleError("r_six has a pole at u^2 = v^2")
    f = (u * u - t * v * v) / den
    g = (1 - t) * u * v / den
    zero = Fraction(0)
    return Matrix(
        [
            [f, zero, zero, zero],
            [zero, t, g, zero],
            [zero, g, Fraction(1), zero],
            [zero, zero, zero, f],
        ]
    )


def check_rll_six(u: Fraction, v: Fraction, p: SixVertexParams) -> bool:
    """Intertwining relation R(t)(L x L) = (L x L)R(t) on aux x aux x site."""
    dims = (2, 2, 2)
    l_a = embed_pair(l_six(u, p), 0, 2, dims)
    l_b = embed_pair(l_six(v, p), 1, 2, dims)
    r_ab = embed_pair(r_six(u, v, p.t), 0, 1, dims)
    return r_ab @ l_a @ l_b == l_b @ l_a @ r_ab
