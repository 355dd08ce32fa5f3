"""Five-vertex lattice model on a periodic-free row of M sites.

States of the quantum row are bitmasks: bit j (from 0) is site j+1 of the
chain, set when the site is occupied.  The monodromy matrix multiplies the
site operators with site 1 acting first, and its auxiliary-space entries are
taken with the matrix convention T = [[A, B], [C, D]] (row = outgoing
auxiliary state).  B adds a particle to the row, C removes one.

Vertex weights on (aux_in, site_in) -> (aux_out, site_out):
  (0,0)->(0,0): u       (0,1)->(1,0): 1      (1,0)->(0,1): 1
  (1,0)->(1,0): -u/beta - 1/u                (1,1)->(1,1): -u/beta
and the (0,1)->(0,1) vertex is absent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import IdentityError, ParameterError, PoleError
from .exactcore import LaurentPoly, Matrix, embed_pair, rational_sqrt
from .grothendieck import groth_det
from .partitions import complement, partition_from_positions, positions_from_partition

State = Mapping[int, Fraction]


def _check_beta(beta: Fraction) -> Fraction:
    beta = Fraction(beta)
    if beta == 0:
        raise ParameterError("the five-vertex weights need beta != 0")
    return beta


def l_matrix(u: Fraction, beta: Fraction) -> Matrix:
    """Site operator on (aux, site), basis |00>, |01>, |10>, |11>."""
    u = Fraction(u)
    beta = _check_beta(beta)
    if u == 0:
        raise PoleError("u = 0 is a pole of the site weights")
    zero = Fraction(0)
    w_pass = -u / beta - 1 / u
    w_both = -u / beta
    return Matrix(
        [
            [u, zero, zero, zero],
            [zero, zero, Fraction(1), zero],
            [zero, Fraction(1), w_pass, zero],
            [zero, zero, zero, w_both],
        ]
    )


def r_matrix(u: Fraction, v: Fraction) -> Matrix:
    """Intertwiner on two auxiliary spaces; poles at u^2 = v^2."""
    u = Fraction(u)
    v = Fraction(v)
    den = u * u - v * v
    if den == 0:
        raise PoleError("r_matrix has a pole at u^2 = v^2")
    f = u * u / den
    g = u * v / den
    zero = Fraction(0)
    return Matrix(
        [
            [f, zero, zero, zero],
            [zero, zero, g, zero],
            [zero, g, Fraction(1), zero],
            [zero, zero, zero, f],
        ]
    )


def check_ybe(u: Fraction, v: Fraction, w: Fraction) -> bool:
    """Yang-Baxter relation on three auxiliary spaces (beta-independent)."""
    dims = (2, 2, 2)
    r_ab = embed_pair(r_matrix(u, v), 0, 1, dims)
    r_ac = embed_pair(r_matrix(u, w), 0, 2, dims)
    r_bc = embed_pair(r_matrix(v, w), 1, 2, dims)
    return r_ab @ r_ac @ r_bc == r_bc @ r_ac @ r_ab


def check_rll(u: Fraction, v: Fraction, beta: Fraction) -> bool:
    """Intertwining relation R(L x L) = (L x L)R on aux x aux x site."""
    dims = (2, 2, 2)
    l_a = embed_pair(l_matrix(u, beta), 0, 2, dims)
    l_b = embed_pair(l_matrix(v, beta), 1, 2, dims)
    r_ab = embed_pair(r_matrix(u, v), 0, 1, dims)
    return r_ab @ l_a @ l_b == l_b @ l_a @ r_ab


def _scalar_weights(u: Fraction, beta: Fraction):
    u = Fraction(u)
    beta = _check_beta(beta)
    if u == 0:
        raise PoleError("u = 0 is a pole of the site weights")
    return (u, -u / beta - 1 / u, -u / beta, Fraction(1))


def _laurent_weights(beta: Fraction):
    beta = _check_beta(beta)
    return (
        LaurentPoly.var(),
        LaurentPoly({1: -1 / beta, -1: Fraction(-1)}),
        LaurentPoly({1: -1 / beta}),
        LaurentPoly.const(1),
    )


def _transitions(a: int, occ: int, w):
    w_empty, w_pass, w_both, one = w
    if a == 0:
        if occ == 0:
            return ((0, 0, w_empty),)
        return ((1, 0, one),)  # aux picks the particle up
    if occ == 0:
        return ((0, 1, one), (1, 0, w_pass))  # deposit, or pass through
    return ((1, 1, w_both),)


def monodromy_element(
    num_sites: int, state: State, a_in: int, a_out: int, w
) -> dict[int, object]:
    """Apply one auxiliary-space entry of the monodromy matrix to a state.

    The weight tuple w fixes the coefficient ring (rational or Laurent).
    """
    out: dict[int, object] = {}
    for mask, amp in state.items():
        if amp == 0:
            continue
        frontier = {(a_in, 0): amp}
        for site in range(num_sites):
            occ = (mask >> site) & 1
            nxt: dict[tuple[int, int], object] = {}
            for (a, built), c in frontier.items():
                for a2, occ2, wt in _transitions(a, occ, w):
                    key = (a2, built | (occ2 << site))
                    v = c * wt
                    if key in nxt:
                        nxt[key] = nxt[key] + v
                    else:
                        nxt[key] = v
            frontier = nxt
        for (a, built), c in frontier.items():
            if a != a_out:
                continue
            if built in out:
                out[built] = out[built] + c
            else:
                out[built] = c
    return {m: c for m, c in out.items() if not c == 0}


def vacuum_state(num_sites: int) -> dict[int, Fraction]:
    return {0: Fraction(1)}


def mask_from_positions(x: Sequence[int]) -> int:
    mask = 0
    for pos in x:
        bit = 1 << (pos - 1)
        if pos < 1 or mask & bit:
            raise ParameterError(f"bad positions {x}")
        mask |= bit
    return mask


def positions_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    pos = 1
    while mask:
        if mask & 1:
            out.append(pos)
        mask >>= 1
        pos += 1
    return tuple(out)


def sector_masks(num_sites: int, num_particles: int) -> list[int]:
    return [
        m for m in range(1 << num_sites) if bin(m).count("1") == num_particles
    ]


def apply_b(num_sites: int, u: Fraction, beta: Fraction, state: State) -> dict[int, Fraction]:
    """B(u) acting on a weighted state: adds one particle."""
    return monodromy_element(num_sites, state, 1, 0, _scalar_weights(u, beta))


def apply_c(num_sites: int, u: Fraction, beta: Fraction, state: State) -> dict[int, Fraction]:
    """C(u) acting on a weighted state: removes one particle."""
    return monodromy_element(num_sites, state, 0, 1, _scalar_weights(u, beta))


def spectral_map(u: Fraction, beta: Fraction) -> Fraction:
    """The variable z = -1/beta - 1/u^2 induced by a spectral parameter."""
    u = Fraction(u)
    beta = _check_beta(beta)
    if u == 0:
        raise PoleError("u = 0 is a pole of the spectral map")
    return -1 / beta - u**-2


def wavefunction_lattice(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """<x| B(u_1)...B(u_N) |empty row> by repeated operator application."""
    if len(x) != len(us):
        raise ParameterError("need exactly one spectral parameter per particle")
    if x and x[-1] > num_sites:
        raise ParameterError("position beyond the last site")
    state: dict[int, Fraction] = vacuum_state(num_sites)
    for u in reversed(us):
        state = apply_b(num_sites, u, beta, state)
    return state.get(mask_from_positions(x), Fraction(0))


def wavefunction_closed(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """The same amplitude in closed form, through the determinant polynomial."""
    if len(x) != len(us):
        raise ParameterError("need exactly one spectral parameter per particle")
    beta = _check_beta(beta)
    n = len(us)
    lam = partition_from_positions(x)
    if lam and lam[0] > num_sites - n:
        raise ParameterError("positions do not fit the chain")
    zs = [spectral_map(u, beta) for u in us]
    pref = (-1 / beta) ** (n * (n - 1) // 2)
    for u in us:
        pref *= Fraction(u) ** (num_sites - 1)
    return pref * groth_det(lam, zs, beta)


def wavefunction(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """Self-checking amplitude: lattice route asserted against the closed form."""
    lattice = wavefunction_lattice(num_sites, x, us, beta)
    closed = wavefunction_closed(num_sites, x, us, beta)
    if lattice != closed:
        raise IdentityError(
            f"lattice amplitude {lattice} != closed form {closed} at x={tuple(x)}"
        )
    return lattice


def dual_wavefunction_lattice(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """<empty row| C(u_1)...C(u_N) |x> by repeated operator application."""
    if len(x) != len(us):
        raise ParameterError("need exactly one spectral parameter per particle")
    state: dict[int, Fraction] = {mask_from_positions(x): Fraction(1)}
    for u in reversed(us):
        state = apply_c(num_sites, u, beta, state)
    return state.get(0, Fraction(0))


def dual_wavefunction_closed(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """Closed form of the dual amplitude, via the box-complement partition."""
    beta = _check_beta(beta)
    n = len(us)
    lam = partition_from_positions(x)
    lam_c = complement(lam, num_sites - n)
    zs = [spectral_map(u, beta) for u in us]
    pref = (-1 / beta) ** (n * (n - 1) // 2)
    for u in us:
        pref *= Fraction(u) ** (num_sites - 1)
    return pref * groth_det(lam_c, zs, beta)


def dual_wavefunction(
    num_sites: int, x: Sequence[int], us: Sequence[Fraction], beta: Fraction
) -> Fraction:
    lattice = dual_wavefunction_lattice(num_sites, x, us, beta)
    closed = dual_wavefunction_closed(num_sites, x, us, beta)
    if lattice != closed:
        raise IdentityError(
            f"dual lattice amplitude {lattice} != closed form {closed} at x={tuple(x)}"
        )
    return lattice


def skew_matrix_element(
    num_sites: int,
    y: Sequence[int],
    x: Sequence[int],
    u: Fraction,
    beta: Fraction,
) -> Fraction:
    """(-beta)^N u^(1-M) <y|B(u)|x>: the single-variable skew polynomial."""
    beta = _check_beta(beta)
    u = Fraction(u)
    n = len(x)
    if len(y) != n + 1:
        raise ParameterError("y must hold exactly one more particle than x")
    image = apply_b(num_sites, u, beta, {mask_from_positions(x): Fraction(1)})
    amp = image.get(mask_from_positions(y), Fraction(0))
    return (-beta) ** n * u ** (1 - num_sites) * amp


def transfer_matrix(
    num_sites: int, num_particles: int, beta: Fraction
) -> tuple[list[int], Matrix]:
    """t(u) = A(u) + D(u) on one particle-number sector, over Laurent polynomials."""
    basis = sector_masks(num_sites, num_particles)
    index = {m: i for i, m in enumerate(basis)}
    w = _laurent_weights(beta)
    zero = LaurentPoly({})
    columns = []
    for mask in basis:
        start = {mask: LaurentPoly.const(1)}
        image = monodromy_element(num_sites, start, 0, 0, w)
        for m, c in monodromy_element(num_sites, start, 1, 1, w).items():
            image[m] = image[m] + c if m in image else c
        col = [zero] * len(basis)
        for m, c in image.items():
            col[index[m]] = c
        columns.append(col)
    return basis, Matrix(list(zip(*columns)))


def hamiltonian_direct(num_sites: int, beta: Fraction) -> Matrix:
    """Nearest-neighbour hop-plus-interaction generator on the full 2^M space.

    H = sum_j { -(1/beta) sigma_j^+ sigma_{j+1}^- + (sigma_j^z sigma_{j+1}^z - 1)/4 }
    with periodic wrap, where sigma^+ annihilates and sigma^- creates, so the
    hop moves a particle from site j to site j+1.
    """
    beta = _check_beta(beta)
    dim = 1 << num_sites
    h = [[Fraction(0)] * dim for _ in range(dim)]
    hop = -1 / beta
    for s in range(dim):
        diag = Fraction(0)
        for j in range(num_sites):
            k = (j + 1) % num_sites
            bj = (s >> j) & 1
            bk = (s >> k) & 1
            if bj != bk:
                diag -= Fraction(1, 2)
            if bj == 1 and bk == 0:
                t = s ^ (1 << j) ^ (1 << k)
                h[t][s] += hop
        h[s][s] += diag
    return Matrix(h)


def hamiltonian(num_sites: int, beta: Fraction) -> Matrix:
    """Generator built two ways: directly, and as the logarithmic derivative of
    the transfer matrix at u0 = sqrt(-beta).  Returns the direct form after
    asserting sector-by-sector equality."""
    beta = _check_beta(beta)
    u0 = rational_sqrt(-beta)
    if u0 is None:
        raise ParameterError("-beta must be the square of a rational")
    direct = hamiltonian_direct(num_sites, beta)
    for n in range(num_sites + 1):
        basis, t = transfer_matrix(num_sites, n, beta)
        f = t.map(lambda p: p.shift(-num_sites))
        f0 = f.map(lambda p: p.evaluate(u0))
        fp0 = f.map(lambda p: p.derivative().evaluate(u0))
        try:
            f0_inv = f0.inverse()
        except ValueError as exc:
            raise PoleError(f"transfer matrix is singular at u0 = {u0}") from exc
        extracted = (f0_inv @ fp0).scale(u0 / 2)
        restricted = Matrix(
            [[direct.entry(r, c) for c in basis] for r in basis]
        )
        if extracted != restricted:
            raise IdentityError(
                f"transfer-matrix extraction disagrees on the {n}-particle sector"
            )
    return direct
