"""
Exact Clifford algebra of V = h + h* and its spin module.

Generators are the V-basis vectors ('x', 1) < ... < ('x', n) < ('y', 1) <
... < ('y', n); the bilinear form pairs x_i with y_i (value 1) and vanishes
on same-species pairs, so the rewriting rules are v w = 2<v, w> - w v and
v v = 0. Elements are combinations of squarefree strictly increasing
monomials; the span has dimension 2^(2n).

The spin module S is the left ideal generated by u = y_1...y_n, with basis
x^e u over subsets e of {1..n}; acting on it goes through the full normal
form, which independently exercises y_i u = 0 and the +-1/2 eigenvalues of
the lifted diagonal generators rather than hard-coding fermionic rules.

gamma lifts gl_n into the Clifford algebra: gamma(E_ij) = (y_i x_j -
x_j y_i)/4, a Lie algebra map whose Clifford commutator with a vector
reproduces the module action on V.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .enveloping import CheckReport, VBasis, act_on_v, UEAElement
from .polynomials import _as_fraction
from .weights import Weight

ClMono = tuple[VBasis, ...]           # strictly increasing


def _pairing(a: VBasis, b: VBasis) -> Fraction:
    if a[0] != b[0] and a[1] == b[1]:
        return Fraction(1)
    return Fraction(0)


@lru_cache(maxsize=None)
def _cl_normalize(word: ClMono) -> tuple[tuple[ClMono, Fraction], ...]:
    for idx in range(len(word) - 1):
        a, b = word[idx], word[idx + 1]
        if a == b:
            return ()  # v v = <v, v> = 0 for every basis vector
        if a > b:
            acc: dict[ClMono, Fraction] = {}
            pair = _pairing(a, b)
            if pair:
                dropped = word[:idx] + word[idx + 2:]
                for m, c in _cl_normalize(dropped):
                    acc[m] = acc.get(m, Fraction(0)) + 2 * pair * c
            swapped = word[:idx] + (b, a) + word[idx + 2:]
            for m, c in _cl_normalize(swapped):
                acc[m] = acc.get(m, Fraction(0)) - c
            return tuple((m, c) for m, c in acc.items() if c)
    return ((word, Fraction(1)),)


class CliffordElement:
    """Combination of squarefree ordered monomials with Fraction
    coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ClMono, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @staticmethod
    def zero() -> CliffordElement:
        return CliffordElement()

    @staticmethod
    def scalar(c) -> CliffordElement:
        return CliffordElement({(): Fraction(c)})

    @staticmethod
    def from_word(*word: VBasis) -> CliffordElement:
        return CliffordElement(dict(_cl_normalize(tuple(word))))

    @staticmethod
    def vector(v: VBasis) -> CliffordElement:
        return CliffordElement({(v,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CliffordElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: CliffordElement) -> CliffordElement:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return CliffordElement(out)

    def __neg__(self) -> CliffordElement:
        return CliffordElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        return self + (-other)

    def __mul__(self, other: CliffordElement | int | Fraction) -> CliffordElement:
        if isinstance(other, (int, Fraction)):
            return CliffordElement({m: c * other for m, c in self.terms.items()})
        out: dict[ClMono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for m, c in _cl_normalize(m1 + m2):
                    out[m] = out.get(m, Fraction(0)) + c1 * c2 * c
        return CliffordElement(out)

    def __rmul__(self, other: int | Fraction) -> CliffordElement:
        return self * other

    def commutator(self, other: CliffordElement) -> CliffordElement:
        return self * other - other * self

    def __repr__(self) -> str:
        def fmt(m: ClMono) -> str:
            return "1" if not m else "".join(f"{k}{i}" for k, i in m)
        parts = " + ".join(f"{c}*{fmt(m)}" for m, c in sorted(self.terms.items()))
        return f"Clifford({parts or '0'})"


def clifford_multiply(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def gamma_e(i: int, j: int, n: int) -> CliffordElement:
    """gamma(E_ij) = (y_i x_j - x_j y_i) / 4 in normal form."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("generator indices out of range")
    yx = CliffordElement.from_word(("y", i), ("x", j))
    xy = CliffordElement.from_word(("x", j), ("y", i))
    return (yx - xy) * Fraction(1, 4)


class SpinVector:
    """Element of the spin module in the subset basis {x^e u}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @staticmethod
    def basis(e: Sequence[int] = ()) -> SpinVector:
        return SpinVector({tuple(sorted(e)): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpinVector) and self.terms == other.terms

    def __add__(self, other: SpinVector) -> SpinVector:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return SpinVector(out)

    def __mul__(self, c) -> SpinVector:
        c = _as_fraction(c)
        return SpinVector({e: v * c for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = " + ".join(f"{c}*x{list(e)}u" for e, c in sorted(self.terms.items()))
        return f"Spin({parts or '0'})"


def _ideal_representative(e: tuple[int, ...], n: int) -> ClMono:
    return tuple(("x", i) for i in e) + tuple(("y", i) for i in range(1, n + 1))


def spin_action(c: CliffordElement, s: SpinVector, n: int) -> SpinVector:
    """Left multiplication on representatives x^e u = x^e y_1...y_n, reduced
    to normal form and re-read in the subset basis; every surviving monomial
    carries the full y-block (anything else would contradict y_i u = 0)."""
    u_block = tuple(("y", i) for i in range(1, n + 1))
    out: dict[tuple[int, ...], Fraction] = {}
    for e, ce in s.terms.items():
        rep = CliffordElement({_ideal_representative(e, n): ce})
        prod = c * rep
        for mono, coeff in prod.terms.items():
            assert len(mono) >= n and mono[-n:] == u_block and all(
                k == "x" for k, _ in mono[:-n]), \
                f"product left the spin ideal: {mono}"
            subset = tuple(i for _, i in mono[:-n])
            out[subset] = out.get(subset, Fraction(0)) + coeff
    return SpinVector(out)


def spin_weights(n: int) -> list[tuple[Weight, int]]:
    """Diagonalize the commuting operators gamma(E_ii) on the subset basis;
    the weights are exactly {+-1/2}^n, each once."""
    diag = [gamma_e(i, i, n) for i in range(1, n + 1)]
    out = []
    for size in range(n + 1):
        for e in combinations(range(1, n + 1), size):
            vec = SpinVector.basis(e)
            coords = []
            for i in range(n):
                image = spin_action(diag[i], vec, n)
                assert set(image.terms) <= {tuple(e)}, "gamma(E_ii) must be diagonal"
                coords.append(image.terms.get(tuple(e), Fraction(0)))
            out.append((Weight(tuple(coords)), 1))
    return out


def gamma_rank_one(v: Sequence[Fraction]) -> CliffordElement:
    """gamma of the rank-one projector attached to a rational unit vector:
    sum_ij v_i v_j gamma(E_ij); squares to 1/4."""
    v = [_as_fraction(c) for c in v]
    if sum(c * c for c in v) != 1:
        raise ValueError("vector must have rational unit length")
    n = len(v)
    out = CliffordElement.zero()
    for i, j in product(range(1, n + 1), repeat=2):
        coeff = v[i - 1] * v[j - 1]
        if coeff:
            out = out + gamma_e(i, j, n) * coeff
    return out


def gamma_lie_hom_check(n: int) -> CheckReport:
    """[gamma(E_ij), gamma(E_kl)] = gamma([E_ij, E_kl]) for all generator
    pairs."""
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        lhs = gamma_e(i, j, n).commutator(gamma_e(k, l, n))
        rhs = CliffordElement.zero()
        if j == k:
            rhs = rhs + gamma_e(i, l, n)
        if l == i:
            rhs = rhs - gamma_e(k, j, n)
        if lhs != rhs:
            return CheckReport(False, witness=(i, j, k, l))
    return CheckReport(True)


def commutator_matches_action(n: int) -> CheckReport:
    """[gamma(E_ij), v] in the Clifford algebra equals the module action
    E_ij . v embedded back, for every generator and V-basis vector."""
    from .enveloping import v_basis
    for i, j in product(range(1, n + 1), repeat=2):
        g = gamma_e(i, j, n)
        e = UEAElement.generator(i, j)
        for v in v_basis(n):
            lhs = g.commutator(CliffordElement.vector(v))
            rhs = CliffordElement.zero()
            for b, c in act_on_v(e, v).items():
                rhs = rhs + CliffordElement.vector(b) * c
            if lhs != rhs:
                return CheckReport(False, witness=((i, j), v))
    return CheckReport(True)
