"""
Exact univariate polynomial calculus over the rationals.

This module provides the dense polynomial arithmetic everything else is built
on, together with the discrete calculus used to turn a deformation polynomial
``xi`` into the data that controls representation theory:

* Bernoulli polynomials ``B_k``, satisfying ``B_k(z+1) - B_k(z) = k z^(k-1)``.
* The step-difference operator ``nabla_eps f(z) = f(z+eps) - f(z+eps-1)`` and
  its inverse (unique once the constant term is pinned to 0), constructed from
  Bernoulli polynomials in one exact pass.
* The ladder of transforms attached to a deformation ``xi`` of rank ``n``:

      density(z)      = d^n/dz^n [ z^n xi(z) ]
      density_sum     = the polynomial F with F(z) - F(z-1) = density(z), F(0)=0
      w               = the polynomial with w_0 = 0 such that applying
                        nabla_{1/2} n times to z^(n-1) w(z) gives density(z+1/2)

  ``w`` has degree deg(xi) + 1 and its coefficients are exactly the
  h-basis coefficients of the central character polynomial (see weights.py).

* ``TwistedPoly``: the quotient ring Q[z,g] mod (g^2 - 1/4), used to certify
  the substitution identity p(z)g = f(z+g) + p(z)/2 - f(z+1/2) that underlies
  the square of the Dirac element.

All coefficients are ``fractions.Fraction``; nothing here ever touches a
float.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

Scalar = int | Fraction


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


@dataclass(frozen=True)
class Poly:
    """
    Dense univariate polynomial over Fraction; ``coeffs[k]`` is the z^k
    coefficient, trailing zeros trimmed (the zero polynomial has no coeffs).

    >>> Poly.of(1, 2) * Poly.of(0, 1)
    Poly('2z^2 + z')
    >>> Poly.of(0, 0, 1).shift(Fraction(1, 2))
    Poly('z^2 + z + 1/4')
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs: Scalar) -> Poly:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def zero() -> Poly:
        return Poly(())

    @staticmethod
    def const(c: Scalar) -> Poly:
        return Poly.of(c)

    @staticmethod
    def x() -> Poly:
        return Poly.of(0, 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.of(other)
        return Poly.of(*(a + b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=Fraction(0))))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | Scalar) -> Poly:
        other = other if isinstance(other, Poly) else Poly.of(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return Poly.of(other) + (-self)

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            return Poly.of(*(c * a for a in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly.of(*out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.of(1)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> Poly:
        return Poly.of(*(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def shift(self, c: Scalar) -> Poly:
        """Compose with z + c, i.e. return p(z + c)."""
        c = _as_fraction(c)
        result = Poly.zero()
        for a in reversed(self.coeffs):
            result = result * Poly.of(c, 1) + a
        return result

    def __call__(self, z: Scalar) -> Fraction:
        z = _as_fraction(z)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * z + a
        return acc

    def with_constant_zero(self) -> Poly:
        return self - self.coeff(0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly('0')"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mag = abs(c)
            var = "" if k == 0 else "z" if k == 1 else f"z^{k}"
            num = "" if (mag == 1 and var) else str(mag)
            parts.append(f"{sign}{num}{var}")
        return f"Poly('{''.join(parts)}')"


def _bernoulli_numbers(up_to: int) -> list[Fraction]:
    # B_0 = 1 and sum_{i<=j} C(j+1, i) B_i = 0 for j >= 1 (B_1 = -1/2 convention).
    nums = [Fraction(1)]
    for j in range(1, up_to + 1):
        s = sum(comb(j + 1, i) * nums[i] for i in range(j))
        nums.append(Fraction(-s, j + 1))
    return nums


def bernoulli(k: int) -> Poly:
    """
    The k-th Bernoulli polynomial B_k(z).

    >>> bernoulli(1)
    Poly('z - 1/2')
    >>> bernoulli(2)
    Poly('z^2 - z + 1/6')
    """
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    nums = _bernoulli_numbers(k)
    out = [Fraction(0)] * (k + 1)
    for i in range(k + 1):
        out[k - i] = comb(k, i) * nums[i]
    return Poly.of(*out)


def nabla(eps: Scalar, f: Poly) -> Poly:
    """The step difference f(z + eps) - f(z + eps - 1)."""
    eps = _as_fraction(eps)
    return f.shift(eps) - f.shift(eps - 1)


def nabla_inverse(eps: Scalar, p: Poly) -> Poly:
    """
    The unique f with nabla(eps, f) = p and constant term 0.

    Built as sum_i p_i/(i+1) * B_{i+1}(z + 1 - eps), then the constant
    is dropped; nabla kills constants, so this normalization is free.
    """
    eps = _as_fraction(eps)
    f = Poly.zero()
    for i, c in enumerate(p.coeffs):
        if c:
            f = f + bernoulli(i + 1).shift(1 - eps) * Fraction(c, i + 1)
    return f.with_constant_zero()


def xi_to_density(xi: Poly, n: int) -> Poly:
    """
    The n-th derivative of z^n * xi(z); same degree as xi, coefficient of z^m
    is (m+n)!/m! * xi_m.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    f = Poly.of(*([0] * n + list(xi.coeffs)))
    for _ in range(n):
        f = f.derivative()
    return f


def xi_to_density_sum(xi: Poly, n: int) -> Poly:
    """
    The polynomial F with F(z) - F(z-1) = xi_to_density(xi, n) and F(0) = 0;
    on nonnegative integers it sums the density over 1..z.
    """
    return nabla_inverse(0, xi_to_density(xi, n))


def half_step_transform(w: Poly, n: int) -> Poly:
    """Apply nabla_{1/2} n times to z^(n-1) * w(z)."""
    f = Poly.of(*([0] * (n - 1) + list(w.coeffs)))
    for _ in range(n):
        f = nabla(Fraction(1, 2), f)
    return f


def xi_to_w(xi: Poly, n: int) -> Poly:
    """
    The unique polynomial w with constant term 0 such that
    half_step_transform(w, n) equals density(z + 1/2).

    The images of the monomials z^k (k >= 1) have degree exactly k - 1, so
    the system is triangular; constants lie in the kernel, which is why the
    normalization w_0 = 0 costs nothing. For xi != 0, deg w = deg xi + 1.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    rhs = xi_to_density(xi, n).shift(Fraction(1, 2))
    coeffs: dict[int, Fraction] = {}
    for k in range(rhs.degree + 1, 0, -1):
        image = half_step_transform(Poly.of(*([0] * k + [1])), n)
        assert image.degree == k - 1
        c = rhs.coeff(k - 1) / image.coeff(k - 1)
        coeffs[k] = c
        rhs = rhs - image * c
    assert rhs.is_zero(), "half-step system must close exactly"
    out = [Fraction(0)] * (max(coeffs, default=0) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly.of(*out)


@dataclass(frozen=True)
class TwistedPoly:
    """
    Element a(z) + b(z)*g of Q[z, g] mod (g^2 - 1/4).

    >>> t = TwistedPoly(Poly.x(), Poly.of(1))  # z + g
    >>> t * t                                  # (z+g)^2 = z^2 + 1/4 + 2zg
    TwistedPoly(a=Poly('z^2 + 1/4'), b=Poly('2z'))
    """

    a: Poly
    b: Poly

    @staticmethod
    def plain(p: Poly) -> TwistedPoly:
        return TwistedPoly(p, Poly.zero())

    def __add__(self, other: TwistedPoly) -> TwistedPoly:
        return TwistedPoly(self.a + other.a, self.b + other.b)

    def __sub__(self, other: TwistedPoly) -> TwistedPoly:
        return TwistedPoly(self.a - other.a, self.b - other.b)

    def __mul__(self, other: TwistedPoly) -> TwistedPoly:
        quarter = Fraction(1, 4)
        return TwistedPoly(
            self.a * other.a + self.b * other.b * quarter,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, k: int) -> TwistedPoly:
        result = TwistedPoly(Poly.of(1), Poly.zero())
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()


def compose_z_plus_gamma(f: Poly) -> TwistedPoly:
    """f(z + g) expanded in Q[z, g] mod (g^2 - 1/4)."""
    z_plus_g = TwistedPoly(Poly.x(), Poly.of(1))
    result = TwistedPoly(Poly.zero(), Poly.zero())
    for a in reversed(f.coeffs):
        result = result * z_plus_g + TwistedPoly.plain(Poly.of(a))
    return result


def twisted_identity_check(p: Poly) -> bool:
    """
    Check p(z)*g == f(z+g) + p(z)/2 - f(z+1/2) mod (g^2 - 1/4), where f is
    any half-step antidifference of p (the identity is insensitive to f's
    constant term).
    """
    f = nabla_inverse(Fraction(1, 2), p)
    lhs = TwistedPoly(Poly.zero(), p)
    rhs = compose_z_plus_gamma(f) + TwistedPoly.plain(
        p * Fraction(1, 2) - f.shift(Fraction(1, 2)))
    return (lhs - rhs).is_zero()
