"""
Symbolic U(gl_n) engine and PBW-certificate checks for deformation maps.

Elements of U(gl_n) are kept in PBW normal form: linear combinations of
monomials in the elementary matrices E_ij, each monomial a non-decreasing
tuple of (i, j) indices ordered lexicographically. Out-of-order adjacent
pairs are rewritten with [E_ij, E_kl] = d_jk E_il - d_li E_kj.

V = h + h* is the direct sum of the standard module (basis y_1..y_n, with
E_ij . y_k = d_jk y_i) and its contragredient (basis x_1..x_n, with
E_ij . x_k = -d_ik x_j). V-basis vectors are written ('x', i) / ('y', i).

The deformation map kappa attached to a polynomial xi is assembled from the
generating-series coefficients r_m: over a commutative ring in n^2 symbols
a_kl, r_m(x_i, y_j) is the tau^m coefficient of entry (i, j) of
(1 - tau A)^{-1} * det(1 - tau A)^{-1}, with the determinant inverse expanded
through exp of the power-sum series; each commutative monomial is sent to
U(gl_n) by a_kl -> E_lk (the trace pairing) followed by symmetrization
(average over all factor orderings). Then kappa(y_j, x_i) = sum_m xi_m r_m,
kappa vanishes on pairs of the same species, and extends skew-symmetrically.

The certificates: with h > v := h.v - eps(h) v and [h, v] = (h_(1) > v) h_(2)
computed in the free module V (x) U, the cyclic Jacobi identity, the
wedge-square symmetry, the wedge-cube vanishing, and adjoint-action linearity
are checked on all basis tuples. Jacobi + linearity certify flatness of the
deformation at the given rank.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .polynomials import Poly

Gen = tuple[int, int]                 # (i, j) index pair of E_ij, 1-based
Monomial = tuple[Gen, ...]            # non-decreasing in lexicographic order
VBasis = tuple[str, int]              # ('x', i) or ('y', i)


@lru_cache(maxsize=None)
def _normalize(mono: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """PBW normal form of a (possibly unordered) generator word."""
    for idx in range(len(mono) - 1):
        a, b = mono[idx], mono[idx + 1]
        if a > b:
            # E_a E_b = E_b E_a + [E_a, E_b]
            acc: dict[Monomial, Fraction] = {}
            swapped = mono[:idx] + (b, a) + mono[idx + 2:]
            for m, c in _normalize(swapped):
                acc[m] = acc.get(m, Fraction(0)) + c
            (i, j), (k, l) = a, b
            if j == k:
                for m, c in _normalize(mono[:idx] + ((i, l),) + mono[idx + 2:]):
                    acc[m] = acc.get(m, Fraction(0)) + c
            if l == i:
                for m, c in _normalize(mono[:idx] + ((k, j),) + mono[idx + 2:]):
                    acc[m] = acc.get(m, Fraction(0)) - c
            return tuple((m, c) for m, c in acc.items() if c)
    return ((mono, Fraction(1)),)


class UEAElement:
    """Linear combination of PBW monomials with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @staticmethod
    def zero() -> UEAElement:
        return UEAElement()

    @staticmethod
    def one() -> UEAElement:
        return UEAElement({(): Fraction(1)})

    @staticmethod
    def generator(i: int, j: int) -> UEAElement:
        return UEAElement({((i, j),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: UEAElement) -> UEAElement:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return UEAElement(out)

    def __neg__(self) -> UEAElement:
        return UEAElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: UEAElement) -> UEAElement:
        return self + (-other)

    def __mul__(self, other: UEAElement | int | Fraction) -> UEAElement:
        if isinstance(other, (int, Fraction)):
            return UEAElement({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for m, c in _normalize(m1 + m2):
                    out[m] = out.get(m, Fraction(0)) + c1 * c2 * c
        return UEAElement(out)

    def __rmul__(self, other: int | Fraction) -> UEAElement:
        return self * other

    def commutator(self, other: UEAElement) -> UEAElement:
        return self * other - other * self

    def __repr__(self) -> str:
        def fmt(m: Monomial) -> str:
            return "1" if not m else "".join(f"E{i}{j}" for i, j in m)
        parts = " + ".join(f"{c}*{fmt(m)}" for m, c in sorted(self.terms.items()))
        return f"UEA({parts or '0'})"


def uea_multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b


def coproduct(a: UEAElement) -> dict[tuple[Monomial, Monomial], Fraction]:
    """Two-fold coproduct; generators are primitive, so a monomial splits as
    the sum over position subsets (subsequences stay sorted)."""
    out: dict[tuple[Monomial, Monomial], Fraction] = {}
    for mono, c in a.terms.items():
        for pick in product((0, 1), repeat=len(mono)):
            left = tuple(g for g, p in zip(mono, pick) if p == 0)
            right = tuple(g for g, p in zip(mono, pick) if p == 1)
            out[(left, right)] = out.get((left, right), Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def _act_gen(gen: Gen, v: VBasis) -> tuple[VBasis, Fraction] | None:
    i, j = gen
    kind, k = v
    if kind == "y":
        return (("y", i), Fraction(1)) if j == k else None
    return (("x", j), Fraction(-1)) if i == k else None


def _act_monomial(mono: Monomial, v: VBasis) -> dict[VBasis, Fraction]:
    state: dict[VBasis, Fraction] = {v: Fraction(1)}
    for gen in reversed(mono):
        new: dict[VBasis, Fraction] = {}
        for basis, c in state.items():
            hit = _act_gen(gen, basis)
            if hit is not None:
                b2, c2 = hit
                new[b2] = new.get(b2, Fraction(0)) + c * c2
        state = new
        if not state:
            break
    return state


def act_on_v(a: UEAElement, v: VBasis) -> dict[VBasis, Fraction]:
    """The module action of U(gl_n) on V = h + h*, as a combination of basis
    vectors."""
    out: dict[VBasis, Fraction] = {}
    for mono, c in a.terms.items():
        for b, c2 in _act_monomial(mono, v).items():
            out[b] = out.get(b, Fraction(0)) + c * c2
    return {b: c for b, c in out.items() if c}


def v_basis(n: int) -> list[VBasis]:
    return [("x", i) for i in range(1, n + 1)] + [("y", i) for i in range(1, n + 1)]


# ---------------------------------------------------------------------------
# r_m via the commutative generating series
# ---------------------------------------------------------------------------

CMono = tuple[Gen, ...]               # sorted multiset of symbols a_kl
CPoly = dict[CMono, Fraction]


def _cp_add(p: CPoly, q: CPoly, scale: Fraction = Fraction(1)) -> CPoly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, Fraction(0)) + scale * c
    return {m: c for m, c in out.items() if c}


def _cp_mul(p: CPoly, q: CPoly) -> CPoly:
    out: CPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _symmetrize_to_uea(p: CPoly) -> UEAElement:
    """a_kl -> E_lk on each factor, averaged over all factor orderings."""
    out = UEAElement.zero()
    for mono, c in p.items():
        gens = tuple((l, k) for k, l in mono)
        perms = list(permutations(gens))
        total: dict[Monomial, Fraction] = {}
        for perm in perms:
            for m, cc in _normalize(perm):
                total[m] = total.get(m, Fraction(0)) + cc
        out = out + UEAElement(total) * Fraction(c, len(perms))
    return out


@lru_cache(maxsize=None)
def r_matrix(n: int, m: int) -> tuple[tuple[UEAElement, ...], ...]:
    """Entry (i, j) [0-based] is r_m(x_{i+1}, y_{j+1}) in U(gl_n).

    Symmetrization averages over all m! factor orderings, so this is meant
    for desk scale (m <= 4, n <= 3)."""
    one: CPoly = {(): Fraction(1)}
    a: list[list[CPoly]] = [[{((k + 1, l + 1),): Fraction(1)} for l in range(n)]
                            for k in range(n)]

    powers = [[[one if i == j else {} for j in range(n)] for i in range(n)]]
    for _ in range(m):
        prev = powers[-1]
        nxt = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc: CPoly = {}
                for k in range(n):
                    acc = _cp_add(acc, _cp_mul(prev[i][k], a[k][j]))
                nxt[i][j] = acc
        powers.append(nxt)

    traces = []
    for k in range(m + 1):
        tr: CPoly = {}
        for i in range(n):
            tr = _cp_add(tr, powers[k][i][i])
        traces.append(tr)

    # det(1 - tau A)^{-1} = exp(sum_k Tr(A^k) tau^k / k): e_m = (1/m) sum tr_k e_{m-k}
    det_inv = [one]
    for mm in range(1, m + 1):
        acc: CPoly = {}
        for k in range(1, mm + 1):
            acc = _cp_add(acc, _cp_mul(traces[k], det_inv[mm - k]))
        det_inv.append({mo: Fraction(c, mm) for mo, c in acc.items()})

    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = {}
            for k in range(m + 1):
                acc = _cp_add(acc, _cp_mul(powers[k][i][j], det_inv[m - k]))
            row.append(_symmetrize_to_uea(acc))
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# kappa and the certificates
# ---------------------------------------------------------------------------

@dataclass
class KappaMap:
    """Skew map on V-basis pairs valued in U(gl_n); zero on same-species
    pairs, stored on the (y_j, x_i) side."""

    n: int
    entries: dict[tuple[VBasis, VBasis], UEAElement] = field(default_factory=dict)

    def pair(self, a: VBasis, b: VBasis) -> UEAElement:
        if a[0] == b[0]:
            return UEAElement.zero()
        if a[0] == "y":
            return self.entries.get((a, b), UEAElement.zero())
        return -self.entries.get((b, a), UEAElement.zero())

    def extend(self, va: dict[VBasis, Fraction], vb: dict[VBasis, Fraction]) -> UEAElement:
        out = UEAElement.zero()
        for a, ca in va.items():
            for b, cb in vb.items():
                out = out + self.pair(a, b) * (ca * cb)
        return out


def kappa_from_r_matrices(xi: Poly, rmats, n: int) -> KappaMap:
    entries: dict[tuple[VBasis, VBasis], UEAElement] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc = UEAElement.zero()
            for m, coeff in enumerate(xi.coeffs):
                if coeff:
                    acc = acc + rmats[m][i - 1][j - 1] * coeff
            entries[(("y", j), ("x", i))] = acc
    return KappaMap(n, entries)


def kappa_of(xi: Poly, n: int) -> KappaMap:
    """kappa(y_j, x_i) = sum_m xi_m r_m(x_i, y_j)."""
    rmats = [r_matrix(n, m) for m in range(len(xi.coeffs))]
    return kappa_from_r_matrices(xi, rmats, n)


VH = dict[tuple[VBasis, Monomial], Fraction]


def _bracket_into_vh(h: UEAElement, v: VBasis) -> VH:
    """[h, v] = (h_(1) > v) h_(2) as an element of the free module V (x) U;
    the empty left factor contributes nothing since 1 > v = 0."""
    out: VH = {}
    for mono, c in h.terms.items():
        for pick in product((0, 1), repeat=len(mono)):
            left = tuple(g for g, p in zip(mono, pick) if p == 0)
            if not left:
                continue
            right = tuple(g for g, p in zip(mono, pick) if p == 1)
            for b, c2 in _act_monomial(left, v).items():
                key = (b, right)
                out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in out.items() if c}


def _vh_add(p: VH, q: VH) -> VH:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


@dataclass
class CheckReport:
    ok: bool
    witness: tuple | None = None
    residual: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def jacobi_check(kappa: KappaMap, n: int) -> CheckReport:
    """Cyclic identity [kappa(u,v), w] + [kappa(v,w), u] + [kappa(w,u), v] = 0
    over all ordered basis triples; reports the first offending triple."""
    basis = v_basis(n)
    for u, v, w in product(basis, repeat=3):
        residual: VH = {}
        for a, b, c in ((u, v, w), (v, w, u), (w, u, v)):
            residual = _vh_add(residual, _bracket_into_vh(kappa.pair(a, b), c))
        if residual:
            return CheckReport(False, witness=(u, v, w), residual=residual)
    return CheckReport(True)


def _wedge_invariant(kappa: KappaMap, vs: tuple[VBasis, ...],
                     x: VBasis, y: VBasis) -> dict:
    """(v_1,..,v_k | x, y): apply the first k coproduct legs of kappa(x, y)
    through > to v_1..v_k, wedge the results, tensor the last leg."""
    k = len(vs)
    h = kappa.pair(x, y)
    out: dict[tuple[tuple[VBasis, ...], Monomial], Fraction] = {}
    for mono, c in h.terms.items():
        for assign in product(range(k + 1), repeat=len(mono)):
            blocks: list[list[Gen]] = [[] for _ in range(k + 1)]
            for g, b in zip(mono, assign):
                blocks[b].append(g)
            if any(not blocks[b] for b in range(k)):
                continue  # empty leg acts through > as zero
            acted = [_act_monomial(tuple(blocks[b]), vs[b]) for b in range(k)]
            if any(not a for a in acted):
                continue
            tail = tuple(blocks[k])
            for combo in product(*(a.items() for a in acted)):
                vec = [b for b, _ in combo]
                if len(set(vec)) != k:
                    continue
                sign, svec = _sort_sign(vec)
                coeff = c * sign
                for _, cc in combo:
                    coeff *= cc
                key = (tuple(svec), tail)
                out[key] = out.get(key, Fraction(0)) + coeff
    return {key: c for key, c in out.items() if c}


def _sort_sign(vec: list) -> tuple[int, list]:
    vec = list(vec)
    sign = 1
    for i in range(len(vec)):
        for j in range(len(vec) - 1 - i):
            if vec[j] > vec[j + 1]:
                vec[j], vec[j + 1] = vec[j + 1], vec[j]
                sign = -sign
    return sign, vec


def higher_jacobi_checks(kappa: KappaMap, n: int) -> CheckReport:
    """Wedge-square symmetry (z,u|x,y) = (x,y|z,u) and wedge-cube vanishing
    (z,u,v|x,y) = 0 over all basis tuples."""
    basis = v_basis(n)
    for z, u, x, y in product(basis, repeat=4):
        lhs = _wedge_invariant(kappa, (z, u), x, y)
        rhs = _wedge_invariant(kappa, (x, y), z, u)
        if lhs != rhs:
            return CheckReport(False, witness=("square", z, u, x, y))
    for x, y in product(basis, repeat=2):
        for z, u, v in product(basis, repeat=3):
            if _wedge_invariant(kappa, (z, u, v), x, y):
                return CheckReport(False, witness=("cube", z, u, v, x, y))
    return CheckReport(True)


def h_linearity_check(kappa: KappaMap, n: int) -> CheckReport:
    """Adjoint linearity on generators: [E, kappa(v, w)] = kappa(E.v, w) +
    kappa(v, E.w) for every generator E and V-basis pair."""
    basis = v_basis(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = UEAElement.generator(i, j)
            for v, w in product(basis, repeat=2):
                lhs = e.commutator(kappa.pair(v, w))
                rhs = kappa.extend(act_on_v(e, v), {w: Fraction(1)})
                rhs = rhs + kappa.extend({v: Fraction(1)}, act_on_v(e, w))
                if lhs != rhs:
                    return CheckReport(False, witness=((i, j), v, w),
                                       residual=(lhs - rhs).terms)
    return CheckReport(True)
