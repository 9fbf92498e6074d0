"""The rank-one matrix oracle and its agreement with the closed form."""
import random
from fractions import Fraction

import pytest

from cherednik.modules import NotInClassificationError, dirac_cohomology
from cherednik.polynomials import Poly, xi_to_density
from cherednik.rank_one import (
    build_module,
    dirac_matrix,
    mat_mul,
    mat_rank,
    mat_sub,
    nullity,
    oracle_cohomology,
    weight_labels,
    zeros,
)
from cherednik.verify import random_rank_one_instance
from cherednik.weights import CentralCharPoly, Weight

F = Fraction


def test_build_module_sl2_like():
    m = build_module(Poly.of(0, 1), 1)
    assert m.nu == 2
    assert m.d == [F(0), F(2), F(2), F(0)]
    assert [m.t[k][k] for k in range(3)] == [F(1), F(0), F(-1)]


def test_build_module_trivial():
    m = build_module(Poly.of(0, 1), 0)
    assert m.nu == 0
    assert m.x == [[F(0)]] and m.y == [[F(0)]]


def test_build_module_rejects_nonmember():
    with pytest.raises(NotInClassificationError):
        build_module(Poly.of(0, 0, 1), 1)  # density 3z^2 never sums to zero
    with pytest.raises(NotInClassificationError):
        build_module(Poly.of(7), 2)


def test_module_relations_hold_as_matrices():
    rng = random.Random(47)
    for _ in range(10):
        xi, lam = random_rank_one_instance(rng, max_deg=3, max_nu=6)
        m = build_module(xi, lam)
        size = m.nu + 1
        p = xi_to_density(xi, 1)
        tx = mat_sub(mat_mul(m.t, m.x), mat_mul(m.x, m.t))
        assert tx == [[-c for c in row] for row in m.x]
        ty = mat_sub(mat_mul(m.t, m.y), mat_mul(m.y, m.t))
        assert ty == m.y
        yx = mat_sub(mat_mul(m.y, m.x), mat_mul(m.x, m.y))
        want = zeros(size, size)
        for k in range(size):
            want[k][k] = p(m.t[k][k])
        assert yx == want


def test_dirac_matrix_trivial_module_is_zero():
    m = build_module(Poly.of(0, 1), 0)
    assert dirac_matrix(m) == [[F(0), F(0)], [F(0), F(0)]]


def test_dirac_matrix_six_by_six_kernel():
    m = build_module(Poly.of(0, 1), 1)
    d = dirac_matrix(m)
    assert len(d) == 6
    d2 = mat_mul(d, d)
    assert nullity(d2) == 2
    assert nullity(d) == 2
    assert mat_rank(d) == mat_rank(d2) == 4


def test_d_squared_eigenblocks():
    rng = random.Random(53)
    for _ in range(8):
        xi, lam = random_rank_one_instance(rng, max_deg=3, max_nu=6)
        m = build_module(xi, lam)
        d2 = mat_mul(dirac_matrix(m), dirac_matrix(m))
        labels = weight_labels(m)
        P = CentralCharPoly.from_xi(xi, 1)
        p_lam = P.value(Weight.of(m.lam))
        for i, mu_i in enumerate(labels):
            for j, mu_j in enumerate(labels):
                if mu_i != mu_j:
                    assert d2[i][j] == 0
                elif i == j:
                    assert d2[i][j] == 2 * p_lam - 2 * P.value(Weight.of(mu_i - F(1, 2)))
                else:
                    assert d2[i][j] == 0


def test_oracle_examples():
    got = oracle_cohomology(Poly.of(0, 1), 1)
    assert {w.coords[0]: m for w, m in got.entries.items()} == {F(3, 2): 1, F(-3, 2): 1}
    got0 = oracle_cohomology(Poly.of(0, 1), 0)
    assert {w.coords[0]: m for w, m in got0.entries.items()} == {F(1, 2): 1, F(-1, 2): 1}


def test_oracle_agrees_with_closed_form():
    rng = random.Random(59)
    for _ in range(20):
        xi, lam = random_rank_one_instance(rng)
        oracle = oracle_cohomology(xi, lam)
        closed = dirac_cohomology(CentralCharPoly.from_xi(xi, 1), Weight.of(lam))
        assert oracle == closed


def test_half_integral_family():
    # xi = c z: members are exactly the half-integers >= 0, box size 2 lam
    for c in (F(1), F(2), F(-1, 3)):
        xi = Poly.of(0, c)
        for lam in (F(0), F(1, 2), F(1), F(3, 2), F(2), F(7, 2)):
            m = build_module(xi, lam)
            assert m.nu == 2 * lam
            coh = oracle_cohomology(xi, lam)
            assert {w.coords[0]: mm for w, mm in coh.entries.items()} == \
                {lam + F(1, 2): 1, -lam - F(1, 2): 1}
