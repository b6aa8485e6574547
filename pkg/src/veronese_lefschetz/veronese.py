"""The Artinian reduction of a Veronese subalgebra, in the original variables.

For a Cohen-Macaulay stable ideal I of dimension d the last d variables
are a linear system of parameters.  With ``J = I + (x_{n-d+1}^r, ..., x_n^r)``
the degree-i piece of the reduced Veronese algebra is ``(S/J)_{i*r}``; all
multiplication happens in S and is reduced modulo the monomial ideal J by
dropping monomials that lie in J.
"""

from __future__ import annotations

import threading
from math import factorial
from typing import Mapping

from . import monomials as mon
from .exactla import RationalMatrix
from .monomials import Monomial, MonomialIdeal
from .upoly import IntPolynomial, ci_hilbert

Polynomial = dict  # Monomial -> int coefficient


def veronese_h_transform(h, d: int, r: int) -> IntPolynomial:
    """h-polynomial of the r-th Veronese: coefficient i is sum_k h_k c_{d,r}(i*r - k)."""
    h = h if isinstance(h, IntPolynomial) else IntPolynomial(h)
    if r < 1 or d < 0:
        raise ValueError("need r >= 1 and d >= 0")
    if h.is_zero() or h[0] != 1 or any(c < 0 for c in h):
        raise ValueError("h must have constant term 1 and nonnegative coefficients")
    if r == 1:
        return h
    c = ci_hilbert(d, r)
    top = (d * (r - 1) + h.degree) // r
    out = []
    for i in range(top + 1):
        out.append(sum(hk * c[i * r - k] for k, hk in enumerate(h) if i * r - k >= 0))
    return IntPolynomial(out)


def veronese_degree(deg_h: int, d: int, r: int) -> int:
    if r < 1 or d < 0 or deg_h < 0:
        raise ValueError("need r >= 1, d >= 0 and deg_h >= 0")
    return (d * (r - 1) + deg_h) // r


def linear_form_power(n: int, variables: range | list[int], r: int) -> Polynomial:
    """Expansion of (sum of the given 1-based variables)^r, keyed by monomial, revlex descending."""
    variables = list(variables)
    terms = {}
    rf = factorial(r)
    for m in mon.monomials_of_degree(len(variables), r):
        coeff = rf
        for e in m:
            coeff //= factorial(e)
        full = [0] * n
        for v, e in zip(variables, m):
            full[v - 1] = e
        terms[tuple(full)] = coeff
    return {m: terms[m] for m in mon.sort_revlex(terms)}


def poly_degree(w: Mapping[Monomial, int]) -> int | None:
    """Common degree of the monomials with nonzero coefficient; None if inhomogeneous or zero."""
    degs = {sum(m) for m, c in w.items() if c}
    return degs.pop() if len(degs) == 1 else None


def poly_mul(a: Mapping[Monomial, int], b: Mapping[Monomial, int]) -> Polynomial:
    out: dict[Monomial, int] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mon.mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def reduce_mod(w: Mapping[Monomial, int], ideal: MonomialIdeal) -> Polynomial:
    """Drop every term lying in the monomial ideal."""
    return {m: c for m, c in w.items() if c and m not in ideal}


def quotient_multiplication_matrix(
    ideal: MonomialIdeal,
    w: Mapping[Monomial, int],
    source: list[Monomial],
    target: list[Monomial],
) -> RationalMatrix:
    """Matrix of p -> w*p from span(source) to span(target) in S/ideal.

    Columns follow ``source``, rows follow ``target``; products landing in
    the ideal are dropped.
    """
    index = {m: i for i, m in enumerate(target)}
    terms = [(m, c) for m, c in w.items() if c]
    cols: dict[int, dict[int, int]] = {}
    for j, b in enumerate(source):
        col: dict[int, int] = {}
        for m, c in terms:
            prod = tuple(x + y for x, y in zip(m, b))
            i = index.get(prod)
            if i is None:
                if prod not in ideal:
                    raise ValueError(f"product {mon.format_monomial(prod)} missing from target basis")
                continue
            col[i] = col.get(i, 0) + c
        cols[j] = col
    return RationalMatrix.from_columns(cols, len(target), len(source))


class VeroneseQuotient:
    """The reduced r-th Veronese algebra of S/I, presented through S/J.

    Bases of the graded pieces are computed on first use under a lock and
    then shared read-only.
    """

    def __init__(self, ideal: MonomialIdeal, r: int):
        if r < 1:
            raise ValueError("Veronese index must be >= 1")
        if not mon.is_stable(ideal):
            raise ValueError(f"{ideal!r} is not stable")
        self.ideal = ideal
        self.n = ideal.n
        self.r = r
        self.d = mon.dimension(ideal)
        self.h = mon.h_polynomial_stable(ideal)  # raises for non-CM input
        powers = [mon.variable(i, self.n, r) for i in range(self.n - self.d + 1, self.n + 1)]
        self.J = ideal + MonomialIdeal(self.n, powers)
        self._bases: dict[int, list[Monomial]] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"VeroneseQuotient({self.ideal!r}, r={self.r}, d={self.d}, h={list(self.h)})"

    @property
    def theta(self) -> list[int]:
        """1-based indices of the parameter variables x_{n-d+1}..x_n."""
        return list(range(self.n - self.d + 1, self.n + 1))

    @property
    def top_internal_degree(self) -> int:
        """Degrees of S/J above this vanish."""
        return (self.r - 1) * self.d + self.h.degree

    def basis(self, i: int) -> list[Monomial]:
        """Monomial basis of the degree-i piece, i.e. of (S/J)_{i*r}, revlex descending."""
        if i < 0:
            return []
        with self._lock:
            b = self._bases.get(i)
            if b is None:
                b = mon.graded_basis(self.J, i * self.r) if i * self.r <= self.top_internal_degree else []
                self._bases[i] = b
        return b

    def graded_dim(self, i: int) -> int:
        return len(self.basis(i))

    def hilbert(self) -> IntPolynomial:
        """Hilbert function of the quotient, from basis counts."""
        top = self.top_internal_degree // self.r
        return IntPolynomial(self.graded_dim(i) for i in range(top + 1))

    def h_transform(self) -> IntPolynomial:
        return veronese_h_transform(self.h, self.d, self.r)

    def power_linear_form(self) -> Polynomial:
        """w = (x_{n-d+1} + ... + x_n)^r."""
        return linear_form_power(self.n, self.theta, self.r)

    def check_form(self, w: Mapping[Monomial, int]) -> None:
        deg = poly_degree(w)
        if deg is not None and deg != self.r:
            raise ValueError(f"w must be homogeneous of degree {self.r}, got degree {deg}")
        if deg is None and any(c for c in w.values()):
            raise ValueError(f"w must be homogeneous of degree {self.r}")

    def multiplication_matrix(self, w: Mapping[Monomial, int], i: int) -> RationalMatrix:
        """Matrix of multiplication by w from piece i to piece i+1."""
        self.check_form(w)
        return quotient_multiplication_matrix(self.J, w, self.basis(i), self.basis(i + 1))

    def socle_degree(self) -> int:
        """Largest i with a nonzero degree-i piece."""
        i = self.top_internal_degree // self.r
        while i > 0 and not self.basis(i):
            i -= 1
        return i


def graded_dim(V: VeroneseQuotient, i: int) -> int:
    return V.graded_dim(i)


def power_linear_form(V: VeroneseQuotient) -> Polynomial:
    return V.power_linear_form()


def multiplication_matrix(V: VeroneseQuotient, w: Mapping[Monomial, int], i: int) -> RationalMatrix:
    return V.multiplication_matrix(w, i)
