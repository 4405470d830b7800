import itertools

import numpy as np
import pytest

from qheap import states as S
from qheap.analysis import entropy

SQ = 1 / np.sqrt(2)


def col(*xs):
    return np.array(xs, dtype=complex).reshape(-1, 1)


def test_ket_examples():
    assert np.array_equal(S.ket([0]), col(1, 0))
    assert np.array_equal(S.ket([1, 0]), col(0, 0, 1, 0))
    assert np.array_equal(S.ket([1, 1]), col(0, 0, 0, 1))


@pytest.mark.parametrize("bad", [[], [0, 2], [1, -1]])
def test_ket_rejects(bad):
    with pytest.raises(ValueError):
        S.ket(bad)


def test_ketn_examples():
    assert S.ketn(0, 3)[0, 0] == 1
    assert np.array_equal(S.ketn(5, 3), S.ket([1, 0, 1]))
    assert np.array_equal(S.ketn(1, 1), col(0, 1))
    with pytest.raises(ValueError):
        S.ketn(8, 3)


def test_ketn_matches_ket_exhaustively():
    for n in range(1, 7):
        for k in range(1 << n):
            bits = [int(c) for c in format(k, f"0{n}b")]
            assert np.array_equal(S.ketn(k, n), S.ket(bits))


def test_bran_is_transpose():
    for value, size in [(0, 3), (5, 3), (1, 1)]:
        assert np.array_equal(S.bran(value, size), S.ketn(value, size).T)


def test_state_examples():
    assert np.array_equal(S.state(S.ket([0])), np.diag([1, 0]).astype(complex))
    rho = S.state(S.bell("phip"))
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 0.5
    assert np.allclose(rho, expected, atol=1e-15)
    assert abs(np.trace(rho) - 1) < 1e-12
    with pytest.raises(ValueError):
        S.state(col(1, 1))


def test_mixstates():
    rho = S.state(S.ket([1]))
    assert np.array_equal(S.mixstates([(1, rho)]), rho)
    half = S.mixstates([(0.5, S.state(S.ket([0]))), (0.5, S.state(S.ket([1])))])
    assert np.allclose(half, np.eye(2) / 2)
    m = S.mixstates([(0.25, S.state(S.ghz(2))), (0.75, S.maximallymixed(4))])
    assert abs(np.trace(m) - 1) < 1e-12


def test_mixstates_errors():
    rho = S.maximallymixed(2)
    with pytest.raises(ValueError):
        S.mixstates([(0.5, rho), (0.4, rho)])
    with pytest.raises(ValueError):
        S.mixstates([(1.5, rho), (-0.5, rho)])
    with pytest.raises(ValueError):
        S.mixstates([(0.5, rho), (0.5, S.maximallymixed(4))])


def test_ghz():
    assert np.allclose(S.ghz(2), col(SQ, 0, 0, SQ))
    g3 = S.ghz(3).ravel()
    assert np.allclose(g3[[0, 7]], SQ) and np.count_nonzero(g3) == 2
    for n in range(1, 8):
        assert abs(np.linalg.norm(S.ghz(n)) - 1) < 1e-12
    with pytest.raises(ValueError):
        S.ghz(0)


def test_bell_states():
    assert np.allclose(S.bell("phip"), col(SQ, 0, 0, SQ))
    assert np.allclose(S.bell("psim"), col(0, SQ, -SQ, 0))
    kets = [S.bell(w) for w in ("phip", "phim", "psip", "psim")]
    for a, b in itertools.combinations(kets, 2):
        assert abs(np.vdot(a, b)) < 1e-15
    with pytest.raises(ValueError):
        S.bell("omega")


def test_maximallymixed():
    assert np.allclose(S.maximallymixed(2), np.eye(2) / 2)
    assert abs(np.trace(S.maximallymixed(8)) - 1) < 1e-12
    assert abs(entropy(S.maximallymixed(4)) - 2) < 1e-12
    with pytest.raises(ValueError):
        S.maximallymixed(3)


def test_werner():
    assert np.allclose(S.wernersinglet(0), np.eye(4) / 4)
    assert np.allclose(S.wernersinglet(1), S.state(S.bell("phim")))
    assert abs(np.trace(S.wernersinglet(0.3)) - 1) < 1e-12
    with pytest.raises(ValueError):
        S.wernersinglet(1.2)


def test_constructors_satisfy_invariants():
    mixed = [S.maximallymixed(4), S.wernersinglet(0.4)]
    pure = [S.ghz(3), S.bell("psip"), S.ketn(3, 2)]
    for rho in mixed + [S.state(p) for p in pure]:
        assert S.is_density_matrix(rho)
    for psi in pure:
        rho = S.state(psi)
        assert np.max(np.abs(rho @ rho - rho)) <= 1e-10
