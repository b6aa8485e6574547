"""Monomials, graded reverse lexicographic order and monomial ideals.

A monomial in ``x_1, ..., x_n`` is a plain tuple of ``n`` nonnegative
exponents.  Variable indices in the public API (``max_index``,
``min_index``, the text format) are 1-based, matching ``x1 .. xn``.
"""

from __future__ import annotations

import os
import random
import re
from functools import cmp_to_key
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .upoly import IntPolynomial

Monomial = tuple[int, ...]

MAX_N = int(os.environ.get("VLEF_MAX_N", "10"))


def unit(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def variable(i: int, n: int, e: int = 1) -> Monomial:
    """The monomial x_i^e (1-based ``i``)."""
    if not 1 <= i <= n:
        raise ValueError(f"x{i} is out of range for n={n}")
    m = [0] * n
    m[i - 1] = e
    return tuple(m)


def max_index(m: Monomial) -> int:
    """Largest 1-based index i with x_i dividing m."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    raise ValueError("max_index of the unit monomial")


def min_index(m: Monomial) -> int:
    """Smallest 1-based index i with x_i dividing m."""
    for i, e in enumerate(m):
        if e:
            return i + 1
    raise ValueError("min_index of the unit monomial")


def revlex_key(m: Monomial) -> tuple:
    """Sort key for graded reverse lexicographic order (x_1 > ... > x_n).

    ``a > b`` iff ``revlex_key(a) > revlex_key(b)``.  At equal degree the
    monomial with the smaller exponent at the last differing variable wins.
    """
    return (sum(m),) + tuple(-e for e in reversed(m))


def revlex_compare(a: Monomial, b: Monomial) -> int:
    """Return 1, 0 or -1 as ``a`` is larger than, equal to or smaller than ``b``."""
    if len(a) != len(b):
        raise ValueError("monomials live in different polynomial rings")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def sort_revlex(monos: Iterable[Monomial], descending: bool = True) -> list[Monomial]:
    return sorted(monos, key=revlex_key, reverse=descending)


def monomials_of_degree(n: int, k: int) -> Iterator[Monomial]:
    """All degree-k monomials in n variables (no particular order)."""
    for combo in combinations_with_replacement(range(n), k):
        m = [0] * n
        for i in combo:
            m[i] += 1
        yield tuple(m)


_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1^2*x3`` (or ``1`` for the unit) into an exponent tuple."""
    text = text.strip()
    if text == "1":
        return unit(n)
    m = [0] * n
    for factor in text.split("*"):
        match = _VAR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse factor {factor!r}")
        i = int(match.group(1))
        e = int(match.group(2)) if match.group(2) else 1
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} out of range for n={n}")
        m[i - 1] += e
    return tuple(m)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), revlex_key(g)))
    keep: list[Monomial] = []
    for g in uniq:
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return tuple(sort_revlex(keep))


class MonomialIdeal:
    """A monomial ideal of K[x_1..x_n] held by its minimal generators."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError("need at least one variable")
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", _minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __reduce__(self):
        return MonomialIdeal, (self.n, self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(all(x <= y for x, y in zip(g, m)) for g in self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and (self.n, self.gens) == (other.n, other.gens)

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("ideals live in different rings")
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __repr__(self) -> str:
        body = ", ".join(format_monomial(g) for g in self.gens) or "0"
        return f"MonomialIdeal(n={self.n}, ({body}))"

    def is_proper(self) -> bool:
        return unit(self.n) not in self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def to_text(self) -> str:
        lines = [f"n={self.n}"] + [format_monomial(g) for g in self.gens]
        return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal text format: a ``n=<int>`` header then one monomial per line."""
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            match = re.match(r"^n\s*=\s*(\d+)$", line)
            if not match:
                raise ValueError(f"line {lineno}: expected header 'n=<int>', got {line!r}")
            n = int(match.group(1))
            if not 1 <= n <= MAX_N:
                raise ValueError(f"line {lineno}: n={n} outside 1..{MAX_N}")
            continue
        try:
            gens.append(parse_monomial(line, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'n=<int>' header")
    return MonomialIdeal(n, gens)


def exchange(m: Monomial, i: int) -> Monomial:
    """m * x_i / x_max(m) for a 1-based ``i < max_index(m)``."""
    j = max_index(m)
    out = list(m)
    out[j - 1] -= 1
    out[i - 1] += 1
    return tuple(out)


def is_stable(ideal: MonomialIdeal) -> bool:
    """Stability tested on minimal generators (sufficient)."""
    for g in ideal.gens:
        if not any(g):
            continue
        for i in range(1, max_index(g)):
            if exchange(g, i) not in ideal:
                return False
    return True


def is_stable_slow(ideal: MonomialIdeal) -> bool:
    """Stability tested on every member of degree <= the top generator degree."""
    for k in range(1, ideal.max_generator_degree() + 1):
        for m in monomials_of_degree(ideal.n, k):
            if m in ideal:
                for i in range(1, max_index(m)):
                    if exchange(m, i) not in ideal:
                        return False
    return True


def graded_basis(ideal: MonomialIdeal, k: int) -> list[Monomial]:
    """Degree-k monomials outside ``ideal``, in descending revlex order."""
    n = ideal.n
    gens = ideal.gens
    out: list[Monomial] = []
    exps = [0] * n

    # Assign exponents variable by variable; a partial monomial already in the
    # ideal can only grow, so its subtree is pruned.
    def rec(pos: int, left: int) -> None:
        if pos == n - 1:
            exps[pos] = left
            m = tuple(exps)
            if not any(all(x <= y for x, y in zip(g, m)) for g in gens):
                out.append(m)
            exps[pos] = 0
            return
        for e in range(left, -1, -1):
            exps[pos] = e
            partial = tuple(exps)
            if not any(all(x <= y for x, y in zip(g, partial)) for g in gens):
                rec(pos + 1, left - e)
        exps[pos] = 0

    if k < 0:
        return []
    rec(0, k)
    out.sort(key=revlex_key, reverse=True)
    return out


def dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of S/I: n minus the smallest variable set meeting every generator's support."""
    if not ideal.is_proper():
        raise ValueError("dimension of the unit ideal")
    n = ideal.n
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            c = set(cover)
            if all(s & c for s in supports):
                return n - size
    raise AssertionError("unreachable: all variables always form a cover")


def is_cm_stable(ideal: MonomialIdeal) -> bool:
    """Cohen-Macaulay test for a stable ideal: generators live in x_1..x_{n-d}."""
    if not is_stable(ideal):
        raise ValueError("is_cm_stable needs a stable ideal")
    if ideal.is_zero():
        return True
    if not ideal.is_proper():
        raise ValueError("is_cm_stable needs a proper ideal")
    top = max(max_index(g) for g in ideal.gens)
    return top == ideal.n - dimension(ideal)


def h_polynomial_stable(ideal: MonomialIdeal) -> IntPolynomial:
    """h-polynomial of S/I for a Cohen-Macaulay stable ideal I.

    Computed as the Hilbert function of K[x_1..x_{n-d}]/I, where the last d
    variables form the linear system of parameters.
    """
    if not is_cm_stable(ideal):
        raise ValueError(f"{ideal!r} is not Cohen-Macaulay")
    d = dimension(ideal)
    m = ideal.n - d
    if m == 0:
        return IntPolynomial([1])
    reduced = MonomialIdeal(m, [g[:m] for g in ideal.gens])
    coeffs = []
    k = 0
    while True:
        size = len(graded_basis(reduced, k))
        if size == 0:
            break
        coeffs.append(size)
        k += 1
    return IntPolynomial(coeffs)


def stable_closure(n: int, monos: Iterable[Monomial]) -> MonomialIdeal:
    """Smallest stable ideal containing ``monos``."""
    pending = list(monos)
    seen: set[Monomial] = set()
    while pending:
        m = pending.pop()
        if m in seen:
            continue
        seen.add(m)
        if any(m):
            for i in range(1, max_index(m)):
                pending.append(exchange(m, i))
    return MonomialIdeal(n, seen)


def random_stable_cm_ideal(n: int, d: int, max_deg: int, seed: int) -> MonomialIdeal:
    """Seeded random stable ideal generated in x_1..x_{n-d}, hence Cohen-Macaulay of dimension d."""
    if not 1 <= d < n or max_deg < 1:
        raise ValueError("need 1 <= d < n and max_deg >= 1")
    rng = random.Random(seed)
    m = n - d
    pad = (0,) * d
    seeds = [mono + pad for mono in monomials_of_degree(m, max_deg + 1)]
    for _ in range(rng.randint(0, 3)):
        k = rng.randint(1, max_deg)
        choices = sorted(monomials_of_degree(m, k))
        seeds.append(rng.choice(choices) + pad)
    return stable_closure(n, seeds)


def remark_ideal() -> MonomialIdeal:
    """(x1^2, x1x2, ..., x1x5) + (x2, ..., x5)^3 in eight variables."""
    n = 8
    gens = [variable(1, n, 2)] + [mul(variable(1, n), variable(i, n)) for i in range(2, 6)]
    for combo in combinations_with_replacement(range(2, 6), 3):
        m = unit(n)
        for i in combo:
            m = mul(m, variable(i, n))
        gens.append(m)
    return MonomialIdeal(n, gens)


def revlex_sorted_cmp(monos: list[Monomial]) -> list[Monomial]:
    """Descending sort through :func:`revlex_compare`; used to cross-check :func:`revlex_key`."""
    return sorted(monos, key=cmp_to_key(revlex_compare), reverse=True)
