"""Integer univariate polynomials and numerical validators for h-, g- and f-vectors."""

from __future__ import annotations

from math import comb
from typing import Iterable, Optional, Sequence


class IntPolynomial:
    """Immutable polynomial with integer coefficients, lowest degree first.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return IntPolynomial, (self._coeffs,)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative degree")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (list, tuple)):
            return self == IntPolynomial(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPolynomial":
        return cls(int(x) for x in data)


def _as_poly(h) -> IntPolynomial:
    return h if isinstance(h, IntPolynomial) else IntPolynomial(h)


def h_to_g(h) -> IntPolynomial:
    """First-difference truncation of ``h`` up to degree floor(deg h / 2)."""
    h = _as_poly(h)
    if h.is_zero() or h[0] != 1:
        raise ValueError(f"expected an h-polynomial with constant term 1, got {h}")
    half = h.degree // 2
    return IntPolynomial([h[0]] + [h[i] - h[i - 1] for i in range(1, half + 1)])


def is_unimodal(h) -> tuple[bool, Optional[int]]:
    """Return ``(flag, peak)`` with ``peak`` the smallest valid peak index.

    For deg h >= 1 the peak is searched in 1..deg h; a constant polynomial
    has peak 0.
    """
    h = _as_poly(h)
    c = h.coeffs
    if any(x < 0 for x in c):
        raise ValueError("unimodality is only defined for nonnegative coefficients")
    s = h.degree
    if s <= 0:
        return True, (0 if s == 0 else None)
    for p in range(1, s + 1):
        rising = all(c[i] <= c[i + 1] for i in range(p))
        falling = all(c[i] >= c[i + 1] for i in range(p, s))
        if rising and falling:
            return True, p
    return False, None


def macaulay_representation(a: int, i: int) -> list[tuple[int, int]]:
    """Greedy i-binomial expansion ``a = C(a_i, i) + C(a_{i-1}, i-1) + ...``.

    Returns the list of ``(a_j, j)`` pairs with ``a_i > a_{i-1} > ... >= j``.
    """
    if a < 0 or i < 1:
        raise ValueError("need a >= 0 and i >= 1")
    rep = []
    j = i
    while a > 0 and j >= 1:
        top = j
        while comb(top + 1, j) <= a:
            top += 1
        rep.append((top, j))
        a -= comb(top, j)
        j -= 1
    return rep


def macaulay_upper(a: int, i: int) -> int:
    """Macaulay's bound a^<i> on the next value of an O-sequence."""
    return sum(comb(top + 1, j + 1) for top, j in macaulay_representation(a, i))


def kruskal_katona_upper(a: int, i: int) -> int:
    """Kruskal-Katona bound a^(i): largest face count of size i+1 over ``a`` faces of size i."""
    return sum(comb(top, j + 1) for top, j in macaulay_representation(a, i))


def is_O_sequence(h) -> bool:
    h = _as_poly(h)
    c = h.coeffs
    if not c or c[0] != 1 or any(x < 0 for x in c):
        return False
    return all(c[i + 1] <= macaulay_upper(c[i], i) for i in range(1, len(c) - 1))


def kruskal_katona_check(f) -> bool:
    """True iff ``f`` (faces counted by size, constant term 1) is an f-polynomial."""
    f = _as_poly(f)
    c = f.coeffs
    if not c or c[0] != 1 or any(x < 0 for x in c):
        return False
    return all(c[i + 1] <= kruskal_katona_upper(c[i], i) for i in range(1, len(c) - 1))


def ci_hilbert(d: int, r: int) -> IntPolynomial:
    """Hilbert function of K[x_1..x_d]/(x_1^r..x_d^r), i.e. (1 + t + ... + t^(r-1))^d."""
    if d < 0 or r < 1:
        raise ValueError("need d >= 0 and r >= 1")
    return IntPolynomial([1] * r) ** d
