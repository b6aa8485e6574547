"""Fixture ideals and the seeded random corpus."""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

from .monomials import MonomialIdeal, parse_ideal, random_stable_cm_ideal

CURATED = (
    "remark24",
    "poly_n2",
    "x1sq_n3",
    "weak_n4",
    "x1cube_n2",
    "x1fifth_n3",
    "x1sq_n4",
    "poly_n4",
    "x1fourth_n5",
    "x1fifth_n5",
    "borel_n4",
)


def read_ideal_file(path) -> MonomialIdeal:
    return parse_ideal(Path(path).read_text())


def fixture(name: str) -> MonomialIdeal:
    text = resources.files(__package__).joinpath("fixtures", f"{name}.ideal").read_text()
    return parse_ideal(text)


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", f"{name}.ideal").read_text()


def curated() -> list[tuple[str, MonomialIdeal]]:
    return [(name, fixture(name)) for name in CURATED]


def random_corpus(count: int = 50, seed: int = 0) -> list[tuple[str, MonomialIdeal]]:
    """``count`` stable Cohen-Macaulay ideals with n <= 5, d <= 3 and generators of degree <= 3."""
    rng = random.Random(seed)
    out = []
    for j in range(count):
        n = rng.randint(2, 5)
        d = rng.randint(1, min(3, n - 1))
        max_deg = rng.randint(1, 2)
        sub_seed = rng.getrandbits(32)
        out.append((f"random-{seed}-{j:02d}", random_stable_cm_ideal(n, d, max_deg, sub_seed)))
    return out


def full_corpus(count: int = 50, seed: int = 0) -> list[tuple[str, MonomialIdeal]]:
    return curated() + random_corpus(count, seed)
