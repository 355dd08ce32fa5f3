from fractions import Fraction as F
from itertools import combinations

import pytest

from grothcrystal.errors import ParameterError, PoleError
from grothcrystal.exactcore import Matrix, embed_pair
from grothcrystal.fivevertex import (
    apply_b,
    apply_c,
    check_rll,
    check_ybe,
    dual_wavefunction,
    hamiltonian,
    hamiltonian_direct,
    l_matrix,
    mask_from_positions,
    positions_from_mask,
    r_matrix,
    sector_masks,
    skew_matrix_element,
    spectral_map,
    transfer_matrix,
    vacuum_state,
    wavefunction,
    wavefunction_closed,
    wavefunction_lattice,
)
from grothcrystal.grothendieck import skew_single
from grothcrystal.partitions import (
    partition_from_positions,
    reversed_positions,
)


def monodromy_blocks(num_sites, u, beta):
    """Independent oracle: the monodromy matrix as an explicit operator
    product of embedded two-site L-matrices, split into aux blocks."""
    dims = [2] * (num_sites + 1)  # aux first, then site 1..M (big-endian)
    total = Matrix.identity(2 ** (num_sites + 1))
    for j in range(1, num_sites + 1):
        total = embed_pair(l_matrix(u, beta), 0, j, dims) @ total
    half = 2 ** num_sites
    blocks = {}
    for a_out in (0, 1):
        for a_in in (0, 1):
            blocks[a_out, a_in] = Matrix(
                [
                    [total.entry(a_out * half + r, a_in * half + c) for c in range(half)]
                    for r in range(half)
                ]
            )
    return blocks


def chain_index(mask, num_sites):
    # mask keeps site 1 in the low bit; the embedding keeps site 1 most significant
    idx = 0
    for site in positions_from_mask(mask):
        idx += 1 << (num_sites - site)
    return idx


def test_monodromy_matches_embedded_product():
    u, beta = F(3), F(-2)
    for m in (2, 3):
        blocks = monodromy_blocks(m, u, beta)
        b_block = blocks[0, 1]  # adds a particle
        c_block = blocks[1, 0]
        for mask in range(1 << m):
            state = {mask: F(1)}
            got_b = apply_b(m, u, beta, state)
            got_c = apply_c(m, u, beta, state)
            for out_mask in range(1 << m):
                want_b = b_block.entry(chain_index(out_mask, m), chain_index(mask, m))
                want_c = c_block.entry(chain_index(out_mask, m), chain_index(mask, m))
                assert got_b.get(out_mask, F(0)) == want_b
                assert got_c.get(out_mask, F(0)) == want_c


def test_b_and_c_frozen_values():
    u, beta = F(2), F(1)
    out = apply_b(2, u, beta, vacuum_state(2))
    assert out == {
        mask_from_positions((1,)): u,
        mask_from_positions((2,)): -u / beta - 1 / u,
    }
    assert apply_c(2, u, beta, {mask_from_positions((2,)): F(1)}) == {0: u}
    assert apply_c(2, u, beta, {mask_from_positions((1,)): F(1)}) == {0: F(-5, 2)}


def test_mask_helpers():
    assert mask_from_positions((1, 3)) == 0b101
    assert positions_from_mask(0b101) == (1, 3)
    assert sector_masks(3, 2) == [0b011, 0b101, 0b110]


def test_ybe_and_rll():
    u, v, w = F(2), F(3), F(5)
    assert check_ybe(u, v, w)
    for beta in (F(-1), F(2), F(-1, 3)):
        assert check_rll(u, v, beta)
    with pytest.raises(PoleError):
        r_matrix(F(2), F(2))
    with pytest.raises(PoleError):
        r_matrix(F(2), F(-2))  # u^2 = v^2 is enough for the pole
    with pytest.raises(ParameterError):
        l_matrix(F(2), F(0))


def test_wavefunction_closed_form():
    beta = F(-1, 2)
    us = (F(2), F(3))
    for m in (3, 4):
        for x in combinations(range(1, m + 1), 2):
            lattice = wavefunction_lattice(m, x, us, beta)
            closed = wavefunction_closed(m, x, us, beta)
            assert lattice == closed
            assert wavefunction(m, x, us, beta) == lattice
    # empty chain of operators leaves the vacuum
    assert wavefunction(3, (), (), beta) == 1


def test_dual_wavefunction_closed_form():
    beta = F(2)
    us = (F(2), F(5))
    m = 4
    for x in combinations(range(1, m + 1), 2):
        assert dual_wavefunction(m, x, us, beta) is not None


def test_wavefunction_supports_only_its_sector():
    beta = F(1)
    state = apply_b(3, F(2), beta, vacuum_state(3))
    assert set(state) <= set(sector_masks(3, 1))


def test_skew_matrix_element_is_single_variable_skew():
    m, beta, u = 4, F(-1, 3), F(2)
    z = spectral_map(u, beta)
    for n in (0, 1, 2):
        for x in combinations(range(1, m + 1), n):
            lam = partition_from_positions(x)
            for y in combinations(range(1, m + 1), n + 1):
                mu = partition_from_positions(y)
                got = skew_matrix_element(m, y, x, u, beta)
                assert got == skew_single(mu, lam, z, beta)


def test_rotation_symmetry():
    # <y|B|x> equals <x~|C|y~> after rotating the chain half a turn
    m, beta, u = 4, F(1, 2), F(3)
    for x in combinations(range(1, m + 1), 1):
        image = apply_b(m, u, beta, {mask_from_positions(x): F(1)})
        for y in combinations(range(1, m + 1), 2):
            amp = image.get(mask_from_positions(y), F(0))
            xr = reversed_positions(x, m)
            yr = reversed_positions(y, m)
            rot = apply_c(m, u, beta, {mask_from_positions(yr): F(1)})
            assert rot.get(mask_from_positions(xr), F(0)) == amp


def test_b_operators_commute():
    m, beta = 4, F(-2)
    u, v = F(2), F(3)
    for mask in range(1 << m):
        start = {mask: F(1)}
        ab = apply_b(m, u, beta, apply_b(m, v, beta, start))
        ba = apply_b(m, v, beta, apply_b(m, u, beta, start))
        assert ab == ba


def test_transfer_matrices_commute():
    m, beta = 3, F(-1)
    for n in range(m + 1):
        basis, t_sym = transfer_matrix(m, n, beta)
        assert len(basis) == len(t_sym.data)
        for i in range(2 * m + 1):
            v0 = F(2) + F(i, 2 * m + 2)
            t_num = t_sym.map(lambda p: p.evaluate(v0))
            comm = t_sym @ t_num - t_num @ t_sym
            assert all(x == 0 for row in comm.data for x in row)


def test_hamiltonian_extraction_matches_direct():
    for beta in (F(-1), F(-4), F(-1, 4)):
        h = hamiltonian(4, beta)
        assert h == hamiltonian_direct(4, beta)


def test_hamiltonian_needs_rational_square_root():
    with pytest.raises(ParameterError):
        hamiltonian(3, F(-2))
    with pytest.raises(ParameterError):
        hamiltonian(3, F(1))


def test_tasep_generator_structure():
    # at beta = -1 the direct form is a continuous-time TASEP generator
    m = 5
    h = hamiltonian_direct(m, F(-1))
    dim = 1 << m
    for c in range(dim):
        assert sum(h.entry(r, c) for r in range(dim)) == 0
    for r in range(dim):
        for c in range(dim):
            if r != c:
                assert h.entry(r, c) in (F(0), F(1))


def test_self_checking_wrapper_returns_lattice_value():
    beta, us = F(1), (F(2),)
    val = wavefunction(3, (2,), us, beta)
    assert val == wavefunction_closed(3, (2,), us, beta)
    assert val == wavefunction_lattice(3, (2,), us, beta)
