"""Lefschetz-type properties of reduced Veronese algebras, decided by exact rank.

All maps are multiplication by a degree-r form ``w`` of S, viewed as a
degree-one element of the reduced Veronese algebra.  Verdicts per degree:
``inj`` when rank equals the source dimension, ``surj`` when it equals the
target dimension, ``both`` or ``neither`` otherwise.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Optional

from . import monomials as mon
from .exactla import RationalMatrix, rank
from .monomials import Monomial, MonomialIdeal
from .upoly import IntPolynomial, ci_hilbert, h_to_g, is_O_sequence, is_unimodal
from .veronese import VeroneseQuotient, linear_form_power, quotient_multiplication_matrix, veronese_h_transform


@dataclass(frozen=True)
class DegreeVerdict:
    i: int
    dim_source: int
    dim_target: int
    rank: int
    verdict: str

    def to_json(self) -> dict:
        return {k: (str(v) if isinstance(v, int) else v) for k, v in asdict(self).items()}


def _verdict(rk: int, dim_source: int, dim_target: int) -> str:
    inj = rk == dim_source
    surj = rk == dim_target
    if inj and surj:
        return "both"
    if inj:
        return "inj"
    if surj:
        return "surj"
    return "neither"


@dataclass
class LefschetzReport:
    property: str
    holds: bool
    witness_description: str
    k: Optional[int] = None
    gap: Optional[int] = None
    per_degree: list[DegreeVerdict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "k": None if self.k is None else str(self.k),
            "holds": self.holds,
            "witness_description": self.witness_description,
            "gap": None if self.gap is None else str(self.gap),
            "per_degree": [v.to_json() for v in self.per_degree],
        }


def describe_form(w: Mapping[Monomial, int]) -> str:
    terms = [f"{c}*{mon.format_monomial(m)}" for m, c in w.items() if c]
    return " + ".join(terms) if terms else "0"


def socle_degree(V: VeroneseQuotient) -> int:
    return V.socle_degree()


class _Steps:
    """Per-call cache of the single-step matrices A_i -> A_{i+1}."""

    def __init__(self, V: VeroneseQuotient, w: Mapping[Monomial, int]):
        V.check_form(w)
        self.V = V
        self.w = w
        self._mats: dict[int, RationalMatrix] = {}

    def __getitem__(self, i: int) -> RationalMatrix:
        if i not in self._mats:
            self._mats[i] = self.V.multiplication_matrix(self.w, i)
        return self._mats[i]


def check_k_lefschetz(V: VeroneseQuotient, w, k: int, rank_method: str = "exact") -> LefschetzReport:
    """Is w^(k-2i): A_i -> A_{k-i} injective for 0 <= i <= (k-1)//2 ?"""
    if k < 1:
        raise ValueError("k-Lefschetz needs k >= 1")
    steps = _Steps(V, w)
    rows = []
    for i in range((k - 1) // 2 + 1):
        composed = steps[i]
        for t in range(i + 1, k - i):
            composed = steps[t] @ composed
        rk = rank(composed, rank_method)
        src, tgt = V.graded_dim(i), V.graded_dim(k - i)
        rows.append(DegreeVerdict(i, src, tgt, rk, _verdict(rk, src, tgt)))
    holds = all(v.verdict in ("inj", "both") for v in rows)
    return LefschetzReport(f"k_lefschetz({k})", holds, describe_form(w), k=k, per_degree=rows)


def check_almost_strong(V: VeroneseQuotient, w, rank_method: str = "exact") -> LefschetzReport:
    s = V.socle_degree()
    if s <= 1:
        return LefschetzReport("almost_strong", True, describe_form(w) + " (vacuous: socle degree <= 1)", k=s - 1)
    rep = check_k_lefschetz(V, w, s - 1, rank_method)
    rep.property = "almost_strong"
    return rep


def step_verdicts(V: VeroneseQuotient, w, rank_method: str = "exact") -> list[DegreeVerdict]:
    """Verdicts of w: A_i -> A_{i+1} for 0 <= i <= socle degree."""
    steps = _Steps(V, w)
    out = []
    for i in range(V.socle_degree() + 1):
        rk = rank(steps[i], rank_method)
        src, tgt = V.graded_dim(i), V.graded_dim(i + 1)
        out.append(DegreeVerdict(i, src, tgt, rk, _verdict(rk, src, tgt)))
    return out


def check_weak(V: VeroneseQuotient, w, rank_method: str = "exact", verdicts=None) -> LefschetzReport:
    rows = verdicts if verdicts is not None else step_verdicts(V, w, rank_method)
    holds = all(v.verdict != "neither" for v in rows)
    return LefschetzReport("weak", holds, describe_form(w), per_degree=list(rows))


def check_almost_weak(V: VeroneseQuotient, w, rank_method: str = "exact", verdicts=None) -> LefschetzReport:
    """At most one step map may be neither injective nor surjective; its index is the gap."""
    rows = verdicts if verdicts is not None else step_verdicts(V, w, rank_method)
    bad = [v.i for v in rows if v.verdict == "neither"]
    gap = bad[0] if len(bad) == 1 else None
    return LefschetzReport("almost_weak", len(bad) <= 1, describe_form(w), gap=gap, per_degree=list(rows))


def random_form(V: VeroneseQuotient, rng: random.Random, coeff_bound: int) -> dict[Monomial, int]:
    """Random integer combination of the degree-r monomials outside J."""
    return {m: rng.randint(-coeff_bound, coeff_bound) for m in V.basis(1)}


def generic_max_rank(V: VeroneseQuotient, i: int, trials: int = 20, seed: int = 0,
                     coeff_bound: int = 10**4, rank_method: str = "exact") -> int:
    """Largest rank of w: A_i -> A_{i+1} over seeded random forms w.

    A lower bound on the rank of a generic form; equal to it with high
    probability.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        w = random_form(V, rng, coeff_bound)
        best = max(best, rank(V.multiplication_matrix(w, i), rank_method))
    return best


@dataclass
class RemarkCertificate:
    r: int
    annihilated: bool
    dim_V: int
    dim_W: int
    expected_dim_V: int
    expected_dim_W: int
    holds: bool

    def to_json(self) -> dict:
        return {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                for k, v in asdict(self).items()}


def remark24_certificate(r: int) -> RemarkCertificate:
    """Structural reason why the eight-variable example has no injective w: A_1 -> A_2.

    Every x1*x_i (i <= 5) lies in the ideal, so multiplication by any form maps
    V = x1*(CI)_{r-1} into W = x1*(CI)_{2r-1}, where CI is the complete
    intersection K[x6,x7,x8]/(x6^r,x7^r,x8^r); and dim V > dim W.
    """
    if r < 3:
        raise ValueError("the certificate needs r >= 3")
    ideal = mon.remark_ideal()
    n = ideal.n
    x1 = mon.variable(1, n)
    annihilated = all(mon.mul(x1, mon.variable(i, n)) in ideal for i in range(1, 6))
    c = ci_hilbert(3, r)
    dim_v, dim_w = c[r - 1], c[2 * r - 1]
    ev, ew = comb(r + 1, 2), comb(r, 2)
    holds = annihilated and dim_v == ev and dim_w == ew and dim_v > dim_w
    return RemarkCertificate(r, annihilated, dim_v, dim_w, ev, ew, holds)


@dataclass(frozen=True)
class Theorem23Case:
    case_id: str
    r_bound: Fraction
    d: int

    def predicted_gaps(self, r: Optional[int] = None) -> Optional[frozenset[int]]:
        """Admissible gap positions; the last two cases need r."""
        d = self.d
        if self.case_id in ("a.i", "a.ii"):
            return frozenset({d // 2})
        if self.case_id in ("a.iii", "a.iv"):
            return frozenset({d // 2 - 1, d // 2 + 1})
        if self.case_id in ("b.i", "b.ii"):
            return frozenset({(d - 1) // 2})
        if r is None:
            return None
        s = (r - 1) * d // r
        return frozenset({(s + 1) // 2})

    def met_by(self, r: int) -> bool:
        return r >= self.r_bound


@dataclass(frozen=True)
class Theorem23Result:
    cases: tuple[Theorem23Case, ...]

    @property
    def case_ids(self) -> list[str]:
        return [c.case_id for c in self.cases]

    @property
    def r_bound(self) -> Fraction:
        return min(c.r_bound for c in self.cases)

    def predicted_gaps(self, r: Optional[int] = None):
        """Union over applicable cases of their admissible gap positions."""
        out: set[int] = set()
        for c in self.cases:
            g = c.predicted_gaps(r)
            if g is None:
                return None
            out |= g
        return frozenset(out)


def theorem23_required_r(d: int, deg_h: int) -> Theorem23Result:
    """All cases of the almost-weak case table applying to (d, deg h)."""
    if d < 1 or deg_h < 0:
        raise ValueError("need d >= 1 and deg_h >= 0")
    D = Fraction(deg_h)
    dd = Fraction(d)
    if d % 2 == 0:
        table = [
            ("a.i", dd <= D / 2, (2 * D - dd) / 3),
            ("a.ii", D / 2 <= dd <= D, dd),
            ("a.iii", D <= dd <= 3 * D / 2, 2 * D - dd),
            ("a.iv", 3 * D / 2 <= dd <= 3 * D, dd / 3),
            ("a.v", dd >= 3 * D, D),
        ]
    else:
        table = [
            ("b.i", dd <= D, D - dd / 2),
            ("b.ii", D <= dd <= 2 * D, dd / 2),
            ("b.iii", dd >= 2 * D, D),
        ]
    return Theorem23Result(tuple(Theorem23Case(cid, bound, d) for cid, ok, bound in table if ok))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    reports: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "reports": [r.to_json() for r in self.reports],
        }


@dataclass
class TheoremReport:
    instance: str
    r: int
    d: int
    h: IntPolynomial
    h_r: IntPolynomial
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "r": str(self.r),
            "d": str(self.d),
            "h": self.h.to_json(),
            "h_r": self.h_r.to_json(),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def verify_theorem(V: VeroneseQuotient, rank_method: str = "exact", name: str = "") -> TheoremReport:
    """Check every Lefschetz and h-vector claim that applies to ``V``."""
    r, d = V.r, V.d
    D = V.h.degree
    h_r = veronese_h_transform(V.h, d, r)
    out = TheoremReport(name or repr(V.ideal), r, d, V.h, h_r)
    w = V.power_linear_form()
    s = (r - 1) * d // r

    if s >= 1:
        rep = check_k_lefschetz(V, w, s, rank_method)
        out.checks.append(Check("s_lefschetz", rep.holds, f"s={s}", [rep]))
    else:
        out.checks.append(Check("s_lefschetz", True, "s=0: vacuous"))

    verdicts = None
    if r >= D:
        strong = check_almost_strong(V, w, rank_method)
        out.checks.append(Check("almost_strong", strong.holds, f"socle={V.socle_degree()}", [strong]))
        verdicts = step_verdicts(V, w, rank_method)
        half = V.socle_degree() // 2
        ok = all(v.verdict in ("inj", "both") for v in verdicts if v.i <= half - 1)
        out.checks.append(Check("almost_strong_injective_steps", ok, f"i <= {half - 1}"))
        weak_rep = check_almost_weak(V, w, verdicts=verdicts)
        out.checks.append(Check("almost_weak", weak_rep.holds, f"gap={weak_rep.gap}", [weak_rep]))

    table = theorem23_required_r(d, D) if d >= 1 else None
    if table is not None:
        met = [c for c in table.cases if c.met_by(r)]
        if met:
            if verdicts is None:
                verdicts = step_verdicts(V, w, rank_method)
            weak_rep = check_almost_weak(V, w, verdicts=verdicts)
            bad = [v.i for v in verdicts if v.verdict == "neither"]
            ok = weak_rep.holds and all(gap in c.predicted_gaps(r) for gap in bad for c in met)
            detail = f"cases={[c.case_id for c in met]} gaps_observed={bad} " + \
                f"predicted={[sorted(c.predicted_gaps(r)) for c in met]}"
            out.checks.append(Check("theorem23_gap", ok, detail, [weak_rep]))

    even_case = d % 2 == 0 and d >= 1 and r >= max(d, 2 * D - d)
    odd_case = d % 2 == 1 and 2 * r >= d and 2 * D <= d
    if even_case or odd_case:
        if verdicts is None:
            verdicts = step_verdicts(V, w, rank_method)
        weak = check_weak(V, w, verdicts=verdicts)
        out.checks.append(Check("weak", weak.holds, "even d" if even_case else "odd d", [weak]))

    sym = all(h_r[i] <= h_r[s - i] for i in range(s // 2 + 1))
    out.checks.append(Check("h_r_symmetric_bound", sym, f"s={s} h_r={list(h_r)}"))

    if r >= D:
        g = h_to_g(h_r)
        uni, peak = is_unimodal(h_r)
        out.checks.append(Check("g_is_O_sequence", is_O_sequence(g), f"g={list(g)}"))
        out.checks.append(Check("h_r_unimodal", uni, f"peak={peak}"))
    return out


@dataclass
class Lemma22Report:
    d: int
    r: int
    pairs: int
    failures: list[tuple[int, int, str]]
    table: list[tuple[int, int, int, int, int]]

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "d": str(self.d),
            "r": str(self.r),
            "pairs": str(self.pairs),
            "holds": self.holds,
            "failures": [[str(i), str(j), why] for i, j, why in self.failures],
        }


def verify_lemma22(d: int, r: int, budget: int = 12, rank_method: str = "auto") -> Lemma22Report:
    """Exhaustive rank sweep of (x_1+...+x_d)^(j-i) on K[x_1..x_d]/(x_1^r..x_d^r)."""
    if d < 1 or r < 1:
        raise ValueError("need d, r >= 1")
    top = (r - 1) * d
    if top > budget:
        raise ValueError(f"(r-1)d = {top} exceeds the budget {budget}")
    ideal = MonomialIdeal(d, [mon.variable(i, d, r) for i in range(1, d + 1)])
    bases = [mon.graded_basis(ideal, k) for k in range(top + 1)]
    w = linear_form_power(d, range(1, d + 1), 1)
    steps = [quotient_multiplication_matrix(ideal, w, bases[k], bases[k + 1]) for k in range(top)]
    failures = []
    table = []
    pairs = 0
    for i in range(top + 1):
        composed = None
        for j in range(i + 1, top + 1):
            composed = steps[j - 1] if composed is None else steps[j - 1] @ composed
            rk = rank(composed, rank_method)
            src, tgt = len(bases[i]), len(bases[j])
            table.append((i, j, src, tgt, rk))
            pairs += 1
            if i + j <= top and rk != src:
                failures.append((i, j, "not injective"))
            if i + j >= top and rk != tgt:
                failures.append((i, j, "not surjective"))
    return Lemma22Report(d, r, pairs, failures, table)
