"""Bosonic phase model on a periodic chain of M sites numbered 0..M-1.

States are occupation tuples (n_0, ..., n_{M-1}).  The site operator acts on
(aux, Fock) as [[1/v - beta*v*P0, raise], [lower, v]] with P0 the projector on
an empty site, and the monodromy matrix multiplies site 0 first.  Its upper
right auxiliary entry adds one boson to the chain; the lower left removes one.
The same path-sum code runs over exact rationals, Laurent polynomials, or
floats, which is how the Bethe-root numerics reuse it.
"""

from __future__ import annotations

from cmath import exp, pi
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import IdentityError, ParameterError, PoleError
from .exactcore import LaurentPoly, Matrix, rat_str
from .grothendieck import groth_det
from .partitions import (
    complement,
    occupation_from_partition,
    partition_from_occupation,
)

State = Mapping[tuple[int, ...], Fraction]


def fock_matrices(cap: int) -> tuple[Matrix, Matrix, Matrix]:
    """(lower, raise, empty-projector) on the Fock space truncated at cap."""
    dim = cap + 1
    lower = [[Fraction(0)] * dim for _ in range(dim)]
    raise_ = [[Fraction(0)] * dim for _ in range(dim)]
    proj = [[Fraction(0)] * dim for _ in range(dim)]
    for n in range(1, dim):
        lower[n - 1][n] = Fraction(1)
    for n in range(dim - 1):
        raise_[n + 1][n] = Fraction(1)
    proj[0][0] = Fraction(1)
    return Matrix(lower), Matrix(raise_), Matrix(proj)


def l_matrix_phase(v: Fraction, beta: Fraction, cap: int) -> Matrix:
    """Site operator on (aux, Fock<=cap), dimension 2*(cap+1)."""
    v = Fraction(v)
    beta = Fraction(beta)
    if v == 0:
        raise PoleError("v = 0 is a pole of the site weights")
    lower, raise_, proj = fock_matrices(cap)
    dim = cap + 1
    top_left = Matrix.identity(dim).scale(1 / v) - proj.scale(beta * v)
    bottom_right = Matrix.identity(dim).scale(v)
    rows = []
    for i in range(dim):
        rows.append(list(top_left.data[i]) + list(raise_.data[i]))
    for i in range(dim):
        rows.append(list(lower.data[i]) + list(bottom_right.data[i]))
    return Matrix(rows)


def check_rll_phase(u: Fraction, v: Fraction, beta: Fraction, cap: int) -> bool:
    """Intertwining relation on aux x aux x Fock, compared on inputs whose site
    occupation is below the truncation cap (those columns are exact)."""
    if cap < 1:
        raise ParameterError("need cap >= 1")
    from .exactcore import embed_pair
    from .fivevertex import r_matrix

    dims = (2, 2, cap + 1)
    l_a = embed_pair(l_matrix_phase(u, beta, cap), 0, 2, dims)
    l_b = embed_pair(l_matrix_phase(v, beta, cap), 1, 2, dims)
    r_ab = embed_pair(r_matrix(u, v), 0, 1, dims)
    lhs = r_ab @ l_a @ l_b
    rhs = l_b @ l_a @ r_ab
    total = 4 * (cap + 1)
    for col in range(total):
        if col % (cap + 1) == cap:
            continue  # truncated raising makes the top Fock column unreliable
        for row in range(total):
            if lhs.entry(row, col) != rhs.entry(row, col):
                return False
    return True


def _scalar_weights_phase(v, beta):
    if v == 0:
        raise PoleError("v = 0 is a pole of the site weights")
    inv = 1 / v if isinstance(v, Fraction) else 1.0 / v
    return (inv - beta * v, inv, v, v**0)


def _laurent_weights_phase(beta: Fraction):
    beta = Fraction(beta)
    return (
        LaurentPoly({-1: Fraction(1), 1: -beta}),
        LaurentPoly({-1: Fraction(1)}),
        LaurentPoly.var(),
        LaurentPoly.const(1),
    )


def _transitions_phase(a: int, n: int, w):
    d_empty, d_occupied, w_v, one = w
    if a == 0:
        moves = [(0, n, d_empty if n == 0 else d_occupied)]
        if n >= 1:
            moves.append((1, n - 1, one))  # aux picks one boson up
        return moves
    return [(0, n + 1, one), (1, n, w_v)]  # deposit, or pass through


def monodromy_element_phase(
    num_sites: int, state: State, a_in: int, a_out: int, w
) -> dict[tuple[int, ...], object]:
    """Apply one auxiliary-space entry of the phase-model monodromy matrix."""
    out: dict[tuple[int, ...], object] = {}
    for occ, amp in state.items():
        if amp == 0:
            continue
        frontier: dict[tuple[int, tuple[int, ...]], object] = {(a_in, ()): amp}
        for site in range(num_sites):
            n_in = occ[site]
            nxt: dict[tuple[int, tuple[int, ...]], object] = {}
            for (a, built), c in frontier.items():
                for a2, n_out, wt in _transitions_phase(a, n_in, w):
                    key = (a2, built + (n_out,))
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
    return {occ: c for occ, c in out.items() if not c == 0}


def vacuum_occupation(num_sites: int) -> tuple[int, ...]:
    return (0,) * num_sites


def sector_basis(num_sites: int, num_particles: int) -> list[tuple[int, ...]]:
    """Occupation tuples with the given total, in lexicographic order."""
    def gen(sites: int, left: int):
        if sites == 1:
            yield (left,)
            return
        for first in range(left + 1):
            for rest in gen(sites - 1, left - first):
                yield (first,) + rest

    return list(gen(num_sites, num_particles))


def apply_b_phase(
    num_sites: int, v: Fraction, beta: Fraction, state: State
) -> dict[tuple[int, ...], Fraction]:
    """Particle-adding monodromy entry acting on a weighted state."""
    return monodromy_element_phase(
        num_sites, state, 1, 0, _scalar_weights_phase(Fraction(v), Fraction(beta))
    )


def apply_c_phase(
    num_sites: int, v: Fraction, beta: Fraction, state: State
) -> dict[tuple[int, ...], Fraction]:
    """Particle-removing monodromy entry acting on a weighted state."""
    return monodromy_element_phase(
        num_sites, state, 0, 1, _scalar_weights_phase(Fraction(v), Fraction(beta))
    )


def skew_element_phase(
    num_sites: int,
    m: Sequence[int],
    n: Sequence[int],
    v: Fraction,
    beta: Fraction,
) -> Fraction:
    """(1/v - beta*v)^(1-M) <m|B(v)|n>: the single-variable skew polynomial."""
    v = Fraction(v)
    beta = Fraction(beta)
    norm = 1 / v - beta * v
    if norm == 0:
        raise PoleError("1/v - beta*v vanishes; the normalization has a pole")
    image = apply_b_phase(num_sites, v, beta, {tuple(n): Fraction(1)})
    amp = image.get(tuple(m), Fraction(0))
    return norm ** (1 - num_sites) * amp


def spectral_map_phase(v: Fraction, beta: Fraction) -> Fraction:
    """The variable z = 1/(1/v^2 - beta) induced by a spectral parameter."""
    v = Fraction(v)
    if v == 0:
        raise PoleError("v = 0 is a pole of the spectral map")
    den = v**-2 - Fraction(beta)
    if den == 0:
        raise PoleError("1/v^2 = beta is a pole of the spectral map")
    return 1 / den


def wavefunction_phase_lattice(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """<occ| B(v_1)...B(v_N) |empty chain> by repeated operator application."""
    occ = tuple(occ)
    if len(occ) != num_sites:
        raise ParameterError("occupation must cover every site")
    if sum(occ) != len(vs):
        raise ParameterError("need exactly one spectral parameter per boson")
    state: dict[tuple[int, ...], Fraction] = {vacuum_occupation(num_sites): Fraction(1)}
    for v in reversed(vs):
        state = apply_b_phase(num_sites, v, beta, state)
    return state.get(occ, Fraction(0))


def wavefunction_phase_closed(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """The same amplitude through the determinant polynomial."""
    occ = tuple(occ)
    beta = Fraction(beta)
    if len(occ) != num_sites:
        raise ParameterError("occupation must cover every site")
    if sum(occ) != len(vs):
        raise ParameterError("need exactly one spectral parameter per boson")
    lam = partition_from_occupation(occ)
    zs = [spectral_map_phase(v, beta) for v in vs]
    pref = Fraction(1)
    for v in vs:
        v = Fraction(v)
        pref *= (1 / v - beta * v) ** (num_sites - 1)
    return pref * groth_det(lam, zs, beta)


def wavefunction_phase(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """Self-checking amplitude: lattice route asserted against the closed form."""
    lattice = wavefunction_phase_lattice(num_sites, occ, vs, beta)
    closed = wavefunction_phase_closed(num_sites, occ, vs, beta)
    if lattice != closed:
        raise IdentityError(
            f"lattice amplitude {lattice} != closed form {closed} at occ={tuple(occ)}"
        )
    return lattice


def dual_wavefunction_phase_lattice(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """<empty chain| C(v_1)...C(v_N) |occ> by repeated operator application."""
    occ = tuple(occ)
    if sum(occ) != len(vs):
        raise ParameterError("need exactly one spectral parameter per boson")
    state: dict[tuple[int, ...], Fraction] = {occ: Fraction(1)}
    for v in reversed(vs):
        state = apply_c_phase(num_sites, v, beta, state)
    return state.get(vacuum_occupation(num_sites), Fraction(0))


def dual_wavefunction_phase_closed(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """Closed form of the dual amplitude, via the box-complement partition."""
    occ = tuple(occ)
    beta = Fraction(beta)
    lam = partition_from_occupation(occ)
    lam_c = complement(lam, num_sites - 1)
    zs = [spectral_map_phase(v, beta) for v in vs]
    pref = Fraction(1)
    for v in vs:
        v = Fraction(v)
        pref *= (1 / v - beta * v) ** (num_sites - 1)
    return pref * groth_det(lam_c, zs, beta)


def dual_wavefunction_phase(
    num_sites: int, occ: Sequence[int], vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    lattice = dual_wavefunction_phase_lattice(num_sites, occ, vs, beta)
    closed = dual_wavefunction_phase_closed(num_sites, occ, vs, beta)
    if lattice != closed:
        raise IdentityError(
            f"dual lattice amplitude {lattice} != closed form {closed} at occ={tuple(occ)}"
        )
    return lattice


def scalar_product(
    num_sites: int,
    us: Sequence[Fraction],
    vs: Sequence[Fraction],
    beta: Fraction,
) -> Fraction:
    """Determinant form of <off-shell state(u)|off-shell state(v)>."""
    us = [Fraction(u) for u in us]
    vs = [Fraction(v) for v in vs]
    beta = Fraction(beta)
    n = len(us)
    if len(vs) != n:
        raise ParameterError("need equally many parameters on both sides")
    if n == 0:
        return Fraction(1)
    u2 = [u * u for u in us]
    v2 = [v * v for v in vs]
    if len(set(u2)) != n or len(set(v2)) != n:
        raise PoleError("squared parameters must be pairwise distinct")
    for a in v2:
        if a in u2:
            raise PoleError("u and v squares must avoid each other")
    e = num_sites + 2 * (n - 1)
    rows = []
    for j in range(n):
        v = vs[j]
        bv = (1 / v - beta * v) ** num_sites
        row = []
        for k in range(n):
            u = us[k]
            bu = (1 / u - beta * u) ** num_sites
            den = v / u - u / v
            row.append((bu * v**e - bv * u**e) / den)
        rows.append(row)
    pref = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            pref *= (v2[j] - v2[k]) * (u2[k] - u2[j])
    return Matrix(rows).det() / pref


def scalar_product_bruteforce(
    num_sites: int,
    us: Sequence[Fraction],
    vs: Sequence[Fraction],
    beta: Fraction,
) -> Fraction:
    """The same pairing as an explicit sum over the particle-number sector."""
    n = len(us)
    if len(vs) != n:
        raise ParameterError("need equally many parameters on both sides")
    total = Fraction(0)
    for occ in sector_basis(num_sites, n):
        left = dual_wavefunction_phase_closed(num_sites, occ, us, beta)
        right = wavefunction_phase_closed(num_sites, occ, vs, beta)
        total += left * right
    return total


def summation_wavefunctions(
    num_sites: int, vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    """Determinant form of the (-beta)-weighted sum of the wavefunction over a
    particle-number sector; beta must be nonzero."""
    vs = [Fraction(v) for v in vs]
    beta = Fraction(beta)
    if beta == 0:
        raise ParameterError(
            "the closed summation needs beta != 0; sum directly in the beta = 0 limit"
        )
    n = len(vs)
    if n == 0:
        return Fraction(1)
    v2 = [v * v for v in vs]
    if len(set(v2)) != n:
        raise PoleError("squared parameters must be pairwise distinct")
    import math

    e = num_sites + n - 1
    rows = []
    for j in range(1, n):
        mb = (-beta) ** (j - n)
        row = []
        for v in vs:
            w = 1 - beta * v * v
            if w == 0:
                raise PoleError("1 - beta*v^2 vanishes")
            acc = Fraction(0)
            for m in range(j):
                acc += (-1) ** m * math.comb(e, m) * w ** (1 - m + j - n)
            row.append(mb * acc)
        rows.append(row)
    last = []
    for v in vs:
        w = 1 - beta * v * v
        if w == 0:
            raise PoleError("1 - beta*v^2 vanishes")
        acc = Fraction(0)
        for m in range(max(n - 1, 1), e + 1):
            acc += (-1) ** m * math.comb(e, m) * w ** (1 - m)
        last.append(-acc)
    rows.append(last)
    pref = Fraction(1)
    for v in vs:
        norm = 1 / v - beta * v
        if norm == 0:
            raise PoleError("1/v - beta*v vanishes")
        pref *= v ** (n - 1) * norm ** (num_sites + n - 2)
    for j in range(n):
        for k in range(j + 1, n):
            pref /= v2[k] - v2[j]
    return pref * Matrix(rows).det()


def summation_wavefunctions_bruteforce(
    num_sites: int, vs: Sequence[Fraction], beta: Fraction
) -> Fraction:
    beta = Fraction(beta)
    total = Fraction(0)
    for occ in sector_basis(num_sites, len(vs)):
        weight = (-beta) ** sum(k * occ[k] for k in range(num_sites))
        total += weight * wavefunction_phase_closed(num_sites, occ, vs, beta)
    return total


def transfer_matrix_phase(
    num_sites: int, num_particles: int, beta: Fraction
) -> tuple[list[tuple[int, ...]], Matrix]:
    """tau(v) = A(v) + D(v) on one particle-number sector, over Laurent polynomials."""
    basis = sector_basis(num_sites, num_particles)
    index = {occ: i for i, occ in enumerate(basis)}
    w = _laurent_weights_phase(beta)
    zero = LaurentPoly({})
    columns = []
    for occ in basis:
        start = {occ: LaurentPoly.const(1)}
        image = monodromy_element_phase(num_sites, start, 0, 0, w)
        for m, c in monodromy_element_phase(num_sites, start, 1, 1, w).items():
            image[m] = image[m] + c if m in image else c
        col = [zero] * len(basis)
        for m, c in image.items():
            col[index[m]] = c
        columns.append(col)
    return basis, Matrix(list(zip(*columns)))


def hamiltonian_phase_direct(num_sites: int, num_particles: int, beta: Fraction) -> Matrix:
    """Hopping-plus-empty-site generator on one particle-number sector.

    H = sum_j { raise_{j+1} lower_j - beta * P0_j } with periodic wrap; the hop
    moves one boson from site j to site j+1.
    """
    beta = Fraction(beta)
    basis = sector_basis(num_sites, num_particles)
    index = {occ: i for i, occ in enumerate(basis)}
    dim = len(basis)
    h = [[Fraction(0)] * dim for _ in range(dim)]
    for col, occ in enumerate(basis):
        empty = sum(1 for n in occ if n == 0)
        h[col][col] -= beta * empty
        for j in range(num_sites):
            if occ[j] == 0:
                continue
            k = (j + 1) % num_sites
            target = list(occ)
            target[j] -= 1
            target[k] += 1
            h[index[tuple(target)]][col] += Fraction(1)
    return Matrix(h)


def hamiltonian_phase(num_sites: int, num_particles: int, beta: Fraction) -> Matrix:
    """Generator built two ways: directly, and as the v^2 coefficient of
    v^M tau(v).  Returns the direct form after asserting equality."""
    direct = hamiltonian_phase_direct(num_sites, num_particles, beta)
    basis, tau = transfer_matrix_phase(num_sites, num_particles, Fraction(beta))
    extracted = tau.map(lambda p: p.shift(num_sites).coeff(2))
    if extracted != direct:
        raise IdentityError("transfer-matrix extraction disagrees with the direct build")
    return direct


# -- Bethe equations in the one-particle sector -------------------------------


def bethe_verify_n1(num_sites: int, beta: Fraction, us=(0.9, 1.7, 2.3)) -> dict:
    """Construct and check all one-particle Bethe roots v^2 = 1/(beta + omega).

    omega runs over the M-th roots of unity; roots colliding with the
    singularity omega = -beta are reported as skipped.  For each constructed
    root the report holds the eigenvalue-equation residual, the Bethe-equation
    residual, and transfer-matrix eigenvalue residuals at the probe points.
    """
    m = num_sites
    beta = Fraction(beta)
    beta_f = float(beta)
    basis = sector_basis(m, 1)
    index = {occ: i for i, occ in enumerate(basis)}
    h_exact = hamiltonian_phase_direct(m, 1, beta)
    h = [[float(h_exact.entry(r, c)) for c in range(m)] for r in range(m)]

    def site_state(j: int) -> tuple[int, ...]:
        occ = [0] * m
        occ[j] = 1
        return tuple(occ)

    roots = []
    for k in range(m):
        omega = exp(2j * pi * k / m)
        if abs(omega + beta_f) < 1e-9:
            roots.append(
                {"k": k, "omega": _c(omega), "skipped": True,
                 "reason": "omega = -beta is a singular point of the root map"}
            )
            continue
        w = beta_f + omega  # w = 1/v^2
        v2 = 1.0 / w
        z = 1.0 / omega
        energy = -beta_f * m + w
        psi_vec = [0.0 + 0.0j] * m
        for j in range(m):
            psi_vec[index[site_state(j)]] = z**j
        hpsi = [
            sum(h[r][c] * psi_vec[c] for c in range(m) if h[r][c])
            for r in range(m)
        ]
        h_res = max(abs(a - energy * b) for a, b in zip(hpsi, psi_vec))
        bae_res = abs((w - beta_f) ** m - 1.0)
        tau_res = []
        for u in us:
            if abs(u * u - v2) < 1e-6 or abs(w * u * u - 1.0) < 1e-9:
                raise ParameterError("probe point too close to a pole")
            tau_val = _tau_numeric(m, u, beta_f)
            tpsi = [
                sum(tau_val[r][c] * psi_vec[c] for c in range(m))
                for r in range(m)
            ]
            lam = ((1.0 / u - beta_f * u) ** m - w * u ** (m + 2)) / (1.0 - w * u * u)
            tau_res.append(max(abs(a - lam * b) for a, b in zip(tpsi, psi_vec)))
        roots.append(
            {
                "k": k,
                "omega": _c(omega),
                "skipped": False,
                "v_squared": _c(v2),
                "energy": _c(energy),
                "eigen_residual": h_res,
                "bae_residual": bae_res,
                "tau_residuals": tau_res,
            }
        )
    checked = [r for r in roots if not r["skipped"]]
    report = {
        "chain_length": m,
        "beta": rat_str(beta),
        "roots": roots,
        "checked": len(checked),
        "skipped": len(roots) - len(checked),
        "max_residual": max(
            (
                max(r["eigen_residual"], r["bae_residual"], *r["tau_residuals"])
                for r in checked
            ),
            default=0.0,
        ),
    }
    return report


def _c(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _tau_numeric(num_sites: int, v: float, beta: float):
    """tau(v) on the one-particle sector with float weights."""
    basis = sector_basis(num_sites, 1)
    index = {occ: i for i, occ in enumerate(basis)}
    w = _scalar_weights_phase(v, beta)
    dim = len(basis)
    mat = [[0.0] * dim for _ in range(dim)]
    for col, occ in enumerate(basis):
        start = {occ: 1.0}
        image = monodromy_element_phase(num_sites, start, 0, 0, w)
        for mkey, c in monodromy_element_phase(num_sites, start, 1, 1, w).items():
            image[mkey] = image.get(mkey, 0.0) + c
        for mkey, c in image.items():
            mat[index[mkey]][col] = c
    return mat
