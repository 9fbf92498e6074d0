"""
Brute-force oracle at rank one.

At n = 1 the deformed algebra has generators t = E_11, x, y with relations
[t, x] = -x, [t, y] = y, [y, x] = p(t), where p is the density polynomial of
xi (p(z) = sum_m (m+1) xi_m z^m). The finite-dimensional module headed by a
rational lam is realized concretely on basis v_0..v_nu of t-weights
lam..lam-nu with

    x v_k = v_{k+1},   y v_k = d_k v_{k-1},
    d_0 = 0,           d_{k+1} = d_k + p(lam - k),

finite-dimensionality forcing d_{nu+1} = 0, which is exactly the membership
equation P(lam) = P(lam - nu - 1) since P is the discrete antiderivative of p
at rank one. The Dirac operator x (x) y_C + y (x) x_C is assembled as an
explicit matrix on L (x) S (spin factors computed through the Clifford normal
form), and its kernel is taken by exact Gaussian elimination. Everything here
is independent of the closed-form selection rule in modules.py, which is the
point: the two routes must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import CliffordElement, SpinVector, gamma_e, spin_action
from .modules import ModuleDecomposition, nu_vector
from .polynomials import Poly, xi_to_density
from .weights import CentralCharPoly, Weight

Matrix = list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                for j in range(cols):
                    out[i][j] += a[i][k] * b[k][j]
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_rank(a: Matrix) -> int:
    m = [row[:] for row in a]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def nullity(a: Matrix) -> int:
    return (len(a[0]) if a else 0) - mat_rank(a)


@dataclass
class RankOneModule:
    xi: Poly
    lam: Fraction
    nu: int
    t: Matrix
    x: Matrix
    y: Matrix
    d: list[Fraction]


def build_module(xi: Poly, lam) -> RankOneModule:
    """Construct the module headed by lam, rejecting lam outside the
    classification; asserts the closing condition d_{nu+1} = 0."""
    lam = Fraction(lam)
    P = CentralCharPoly.from_xi(xi, 1)
    nu = nu_vector(P, Weight.of(lam))[0]

    p = xi_to_density(xi, 1)
    size = nu + 1
    d = [Fraction(0)]
    for k in range(size):
        d.append(d[k] + p(lam - k))
    assert d[size] == 0, "membership and the recurrence disagree"

    t = zeros(size, size)
    x = zeros(size, size)
    y = zeros(size, size)
    for k in range(size):
        t[k][k] = lam - k
        if k + 1 < size:
            x[k + 1][k] = Fraction(1)
        if k - 1 >= 0:
            y[k - 1][k] = d[k]
    return RankOneModule(xi=xi, lam=lam, nu=nu, t=t, x=x, y=y, d=d[:size + 1])


def _spin_matrix(c: CliffordElement) -> Matrix:
    """Matrix of left multiplication on the 2-dimensional spin basis
    [u, x_1 u]."""
    basis = [(), (1,)]
    cols = []
    for e in basis:
        img = spin_action(c, SpinVector.basis(e), 1)
        cols.append([img.terms.get(b, Fraction(0)) for b in basis])
    return [[cols[j][i] for j in range(2)] for i in range(2)]


def _kron(a: Matrix, s: Matrix) -> Matrix:
    rows = len(a) * len(s)
    out = zeros(rows, rows)
    for i in range(len(a)):
        for j in range(len(a)):
            for si in range(len(s)):
                for sj in range(len(s)):
                    out[i * len(s) + si][j * len(s) + sj] = a[i][j] * s[si][sj]
    return out


def dirac_matrix(module: RankOneModule) -> Matrix:
    """The Dirac element x (x) y_C + y (x) x_C on L (x) S, basis ordered
    v_0 u, v_0 x_1 u, v_1 u, ..."""
    y_c = _spin_matrix(CliffordElement.vector(("y", 1)))
    x_c = _spin_matrix(CliffordElement.vector(("x", 1)))
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in
            zip(_kron(module.x, y_c), _kron(module.y, x_c))]


def weight_labels(module: RankOneModule) -> list[Fraction]:
    """Eigenvalue of t (x) 1 + 1 (x) gamma(E_11) on each basis vector."""
    g = _spin_matrix(gamma_e(1, 1, 1))
    labels = []
    for k in range(module.nu + 1):
        for s in range(2):
            labels.append(module.t[k][k] + g[s][s])
    return labels


def oracle_cohomology(xi: Poly, lam) -> ModuleDecomposition:
    """
    Dirac cohomology computed from matrices alone: assemble D, check that
    ker D = ker D^2 and ker D meets im D trivially (rank D = rank D^2), and
    decompose ker D^2 by the weight grading. Asserts that D^2 is
    block-diagonal across weights and acts on the weight-mu block by the
    scalar 2 P(lam) - 2 P(mu - 1/2).
    """
    module = build_module(xi, lam)
    d = dirac_matrix(module)
    d2 = mat_mul(d, d)

    rank_d, rank_d2 = mat_rank(d), mat_rank(d2)
    size = len(d)
    assert rank_d + nullity(d) == size
    assert nullity(d) == nullity(d2), "D and D^2 must have the same kernel"
    assert rank_d == rank_d2, "ker D must meet im D trivially"

    labels = weight_labels(module)
    P = CentralCharPoly.from_xi(xi, 1)
    p_lam = P.value(Weight.of(module.lam))
    groups: dict[Fraction, list[int]] = {}
    for idx, mu in enumerate(labels):
        groups.setdefault(mu, []).append(idx)

    out = ModuleDecomposition(rank=1)
    for mu, idxs in groups.items():
        expected = 2 * p_lam - 2 * P.value(Weight.of(mu - Fraction(1, 2)))
        for i in idxs:
            for j in range(size):
                if j in idxs:
                    want = expected if i == j else Fraction(0)
                    assert d2[i][j] == want, "D^2 is not the expected scalar on a weight block"
                else:
                    assert d2[i][j] == 0, "D^2 mixes distinct weights"
        if expected == 0:
            out.add(Weight.of(mu), len(idxs))
    total = out.total_dimension()
    assert total == nullity(d2)
    return out
