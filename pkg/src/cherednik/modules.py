"""
Finite-dimensional module classification and Dirac cohomology selection.

For a deformation with central character polynomial P and a dominant weight
``lam``, the pipeline is:

* membership: ``lam`` heads a finite-dimensional irreducible iff some
  nonnegative integer v satisfies P(lam) = P(lam - (0,...,0,v+1)); the minimal
  such v is found exactly by clearing denominators of the difference
  polynomial q(t) = P(lam) - P(lam - t*e_n) and enumerating positive integer
  roots with the rational root theorem (q(0) = 0 always, so the factor t is
  stripped first; q == 0 is the degenerate deformation, giving v = 0).
* nu vector: per coordinate i < n, the minimal k such that lam - (k+1)e_i
  either stops being dominant or satisfies the P-equality; for i = n the
  membership value (lowering the last coordinate never breaks dominance).
* L(lam) = the box of weights lam - nu' for 0 <= nu' <= nu, multiplicity one.
* tensor with spin: each box weight shifted by every sign vector in
  {+-1/2}^n; candidates are kept when their rho-shift is weakly decreasing,
  which on these candidates is automatic. Boundary candidates (repeated
  shifted coordinate) are genuine formal summands of dimension 0 and are
  retained so multiplicity grids close up; total-dimension accounting counts
  them as 0.
* Dirac cohomology: the sub-multiset of the spin tensor whose members mu
  satisfy P(lam) = P(mu - (1/2,...,1/2)).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .polynomials import Poly
from .weights import (
    CentralCharPoly,
    Weight,
    basis_weight,
    half_vector,
    is_dominant,
    is_shift_weakly_decreasing,
    weyl_dim_formal,
)


class NotInClassificationError(ValueError):
    """Raised when a weight does not head a finite-dimensional module."""


@dataclass
class ModuleDecomposition:
    """Finite multiset of (weight, multiplicity) pairs, all multiplicities >= 1.

    Weights must have a weakly decreasing rho-shift; boundary weights (formal
    Weyl dimension 0) are allowed and count 0 toward the total dimension.
    """

    rank: int
    entries: dict[Weight, int] = field(default_factory=dict)

    def add(self, w: Weight, mult: int = 1) -> None:
        if mult < 1:
            raise ValueError("multiplicity must be positive")
        if not is_shift_weakly_decreasing(w):
            raise ValueError(f"rho-shift of {w} is not weakly decreasing")
        self.entries[w] = self.entries.get(w, 0) + mult

    def multiplicity(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def total_dimension(self) -> int:
        return sum(m * weyl_dim_formal(w) for w, m in self.entries.items())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        """Entries ordered by descending rho-shifted lexicographic order."""
        return sorted(self.entries.items(), key=lambda wm: wm[0].shifted(), reverse=True)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ModuleDecomposition)
                and self.rank == other.rank and self.entries == other.entries)

    def is_submultiset_of(self, other: ModuleDecomposition) -> bool:
        return all(other.multiplicity(w) >= m for w, m in self.entries.items())

    def __repr__(self) -> str:
        parts = ", ".join(f"{m} x {w}" for w, m in self.sorted_items())
        return f"ModuleDecomposition({parts or '0'})"


def _positive_integer_roots(q: Poly) -> list[int]:
    """All positive integer roots of q, by the rational root theorem on the
    denominator-cleared polynomial (complete: an integer root divides the
    constant term once powers of t are stripped)."""
    if q.is_zero():
        raise ValueError("zero polynomial has every root")
    denom_lcm = 1
    for c in q.coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in q.coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)
    if not ints:
        return []
    return sorted(d for d in _divisors(abs(ints[0])) if q(d) == 0)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def membership_detail(P: CentralCharPoly, lam: Weight) -> tuple[int | None, bool]:
    """(minimal v, degenerate?) where v >= 0 satisfies the last-coordinate
    P-equality at step v+1; degenerate means P does not depend on that step at
    all (q == 0), in which case v = 0."""
    if not is_dominant(lam):
        raise ValueError(f"weight is not dominant: {lam}")
    n = lam.rank
    shifted = lam.shifted()
    point = [Poly.const(c) for c in shifted]
    point[n - 1] = Poly.const(shifted[n - 1]) - Poly.x()
    q = Poly.const(P.evaluate(shifted)) - P.evaluate(point)
    if q.is_zero():
        return 0, True
    roots = _positive_integer_roots(q)
    if not roots:
        return None, False
    return min(roots) - 1, False


def lambda_tilde_member(P: CentralCharPoly, lam: Weight) -> int | None:
    """The minimal v >= 0 with P(lam) = P(lam - (0,...,0,v+1)), or None when
    no such integer exists (lam heads no finite-dimensional module)."""
    return membership_detail(P, lam)[0]


def nu_vector(P: CentralCharPoly, lam: Weight) -> tuple[int, ...]:
    """
    The box bounds nu: for i < n the minimal k such that lam - (k+1)e_i is
    non-dominant or P-equal to lam (termination: dominance eventually fails);
    for i = n the membership value. Rejects non-member weights.
    """
    n = lam.rank
    last = lambda_tilde_member(P, lam)
    if last is None:
        raise NotInClassificationError(
            "no nonnegative integer v with P(lambda) = P(lambda - (0,...,0,v+1)); "
            f"lambda = {lam} heads no finite-dimensional module")
    p_lam = P.value(lam)
    nu = []
    for i in range(1, n):
        k = 0
        while True:
            lowered = lam - basis_weight(n, i) * (k + 1)
            if not is_dominant(lowered) or P.value(lowered) == p_lam:
                nu.append(k)
                break
            k += 1
    nu.append(last)
    return tuple(nu)


def L_decomposition(lam: Weight, nu: tuple[int, ...]) -> ModuleDecomposition:
    """The box {lam - nu' : 0 <= nu' <= nu componentwise}, multiplicity one.
    Every box weight must be dominant (guaranteed by minimality of nu)."""
    n = lam.rank
    out = ModuleDecomposition(rank=n)
    for offsets in product(*(range(v + 1) for v in nu)):
        w = Weight(tuple(c - o for c, o in zip(lam.coords, offsets)))
        assert is_dominant(w), f"box weight {w} is not dominant; nu is wrong"
        out.add(w, 1)
    return out


def tensor_with_spin(L: ModuleDecomposition) -> ModuleDecomposition:
    """
    Decomposition of L tensored with the 2^n-dimensional spin module: every
    weight of L shifted by every sign vector in {+-1/2}^n, retained when the
    rho-shift stays weakly decreasing. Dropped candidates would be formal
    summands with a shifted coordinate inversion; on boxes of dominant
    weights nothing is ever dropped.
    """
    n = L.rank
    half = Fraction(1, 2)
    out = ModuleDecomposition(rank=n)
    for w, mult in L.entries.items():
        for signs in product((half, -half), repeat=n):
            cand = Weight(tuple(c + s for c, s in zip(w.coords, signs)))
            if is_shift_weakly_decreasing(cand):
                out.add(cand, mult)
    return out


def dirac_cohomology(P: CentralCharPoly, lam: Weight) -> ModuleDecomposition:
    """
    The Dirac cohomology of the finite-dimensional module headed by lam, as a
    gl_n decomposition: the part of L(lam) (x) spin whose weights mu satisfy
    P(lam) = P(mu - (1/2,...,1/2)).
    """
    nu = nu_vector(P, lam)
    ls = tensor_with_spin(L_decomposition(lam, nu))
    target = P.value(lam)
    n = lam.rank
    out = ModuleDecomposition(rank=n)
    for mu, mult in ls.entries.items():
        if P.value(mu - half_vector(n)) == target:
            out.add(mu, mult)
    return out


def guaranteed_classes(P: CentralCharPoly, lam: Weight) -> list[Weight]:
    """
    The classes certain to appear with multiplicity one in the Dirac
    cohomology: lam + (1/2,...,1/2) and lam + (1/2,...,1/2,-nu_n-1/2)
    unconditionally, plus lam + (1/2,..,-nu_i-1/2,..,1/2) for each i < n
    whose companion lam - (nu_i+1)e_i is dominant.
    """
    nu = nu_vector(P, lam)
    n = lam.rank
    half = Fraction(1, 2)

    def spiked(i: int) -> Weight:
        return Weight(tuple(
            c + (-nu[i - 1] - half if j == i - 1 else half)
            for j, c in enumerate(lam.coords)))

    out = [lam + half_vector(n)]
    for i in range(1, n):
        companion = lam - basis_weight(n, i) * (nu[i - 1] + 1)
        if is_dominant(companion):
            out.append(spiked(i))
    out.append(spiked(n))
    return out
