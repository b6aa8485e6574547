"""Verification suites over a corpus of ideals and a range of Veronese indices.

Each instance (ideal, r) yields a list of named checks; a suite passes when
every check of every instance passes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import ert, lefschetz as lef
from . import monomials as mon
from .lefschetz import Check
from .monomials import MonomialIdeal
from .upoly import h_to_g, is_O_sequence, kruskal_katona_check
from .veronese import VeroneseQuotient, veronese_degree, veronese_h_transform

THEOREMS = ("1.1", "1.2", "2.3", "1.3", "2.4")

# check name -> theorem group
_GROUP = {
    "s_lefschetz": "1.1",
    "almost_strong": "1.1",
    "almost_strong_injective_steps": "1.1",
    "almost_weak": "1.2",
    "weak": "1.2",
    "theorem23_gap": "2.3",
    "h_r_symmetric_bound": "1.3",
    "g_is_O_sequence": "1.3",
    "h_r_unimodal": "1.3",
}


@dataclass
class InstanceResult:
    name: str
    r: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "instance": self.name,
            "r": str(self.r),
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def veronese_checks(V: VeroneseQuotient) -> list[Check]:
    """Basis counts against the convolution formula and the degree formula."""
    h_r = veronese_h_transform(V.h, V.d, V.r)
    dims = V.hilbert()
    # the basis is truncated at the a-priori top degree, so also probe above it directly
    above = [len(mon.graded_basis(V.J, V.top_internal_degree + t)) for t in (1, 2)]
    deg = veronese_degree(V.h.degree, V.d, V.r)
    return [
        Check("dims_match_transform", dims == h_r and not any(above), f"dims={list(dims)} h_r={list(h_r)}"),
        Check("degree_formula", h_r.degree == deg and V.socle_degree() == deg, f"deg={deg}"),
    ]


def theorem13_checks(V: VeroneseQuotient) -> list[Check]:
    """The complexes built from standard monomials."""
    h_r = veronese_h_transform(V.h, V.d, V.r)
    D = V.h.degree
    out = []
    delta = ert.build_delta(V)
    f = ert.f_polynomial(delta)
    out.append(Check("delta_f_polynomial", f == h_r, f"f={list(f)}"))
    if delta.is_simplicial:
        out.append(Check("delta_kruskal_katona", kruskal_katona_check(f)))
    else:
        # repeated vertices: a multicomplex, whose face counts satisfy Macaulay's bound instead
        out.append(Check("delta_macaulay", is_O_sequence(f), "multicomplex"))
    if 2 * V.r >= D + 1:
        out.append(Check("delta_squarefree", delta.is_simplicial))
        out.append(Check("delta_flag", ert.is_flag(delta)))
        out.append(Check("delta_pure_power_closed", ert.pure_power_closed(V)))
    if V.r >= D:
        gamma = ert.build_gamma(V)
        fg = ert.f_polynomial(gamma)
        g = h_to_g(h_r)
        out.append(Check("gamma_f_polynomial", fg == g, f"f={list(fg)} g={list(g)}"))
        out.append(Check("gamma_kruskal_katona", kruskal_katona_check(fg)))
    return out


def check_instance(name: str, ideal: MonomialIdeal, r: int, theorems: Sequence[str] = THEOREMS,
                   rank_method: str = "exact") -> InstanceResult:
    V = VeroneseQuotient(ideal, r)
    res = InstanceResult(name, r)
    if "2.4" in theorems:
        res.checks += veronese_checks(V)
    if any(t in theorems for t in ("1.1", "1.2", "2.3", "1.3")):
        rep = lef.verify_theorem(V, rank_method, name)
        res.checks += [c for c in rep.checks if _GROUP[c.name] in theorems]
    if "1.3" in theorems:
        res.checks += theorem13_checks(V)
    return res


def _run_one(args):
    return check_instance(*args)


def run_corpus(instances: Iterable[tuple[str, MonomialIdeal]], r_values: Sequence[int],
               theorems: Sequence[str] = THEOREMS, rank_method: str = "exact",
               jobs: int = 1) -> list[InstanceResult]:
    """Run the chosen checks on every (instance, r); results sorted by (name, r)."""
    tasks = [(name, ideal, r, tuple(theorems), rank_method) for name, ideal in instances for r in r_values]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    return sorted(results, key=lambda x: (x.name, x.r))


def lemma22_suite(budget: int = 12, rank_method: str = "auto") -> list[lef.Lemma22Report]:
    out = []
    for r in range(2, budget + 2):
        for d in range(1, budget // (r - 1) + 1):
            out.append(lef.verify_lemma22(d, r, budget, rank_method))
    return out


@dataclass
class RemarkResult:
    r: int
    h: list[int]
    h_r: list[int]
    strictly_increasing: bool
    weak: bool
    almost_weak: bool
    gap: int | None
    certificate: lef.RemarkCertificate
    generic_ranks: list[int]
    dim_A1: int

    @property
    def passed(self) -> bool:
        return (
            self.h == [1, 5, 10]
            and self.strictly_increasing
            and not self.weak
            and self.almost_weak
            and self.gap == 1
            and self.certificate.holds
            and all(rk < self.dim_A1 for rk in self.generic_ranks)
        )

    def to_json(self) -> dict:
        return {
            "r": str(self.r),
            "h": [str(x) for x in self.h],
            "h_r": [str(x) for x in self.h_r],
            "strictly_increasing": self.strictly_increasing,
            "weak": self.weak,
            "almost_weak": self.almost_weak,
            "gap": None if self.gap is None else str(self.gap),
            "certificate": self.certificate.to_json(),
            "generic_ranks": [str(x) for x in self.generic_ranks],
            "dim_A1": str(self.dim_A1),
            "passed": self.passed,
        }


def remark24_suite(r: int, seeds: Sequence[int] = range(20), coeff_bound: int = 10**4) -> RemarkResult:
    ideal = mon.remark_ideal()
    V = VeroneseQuotient(ideal, r)
    h_r = list(V.h_transform())
    w = V.power_linear_form()
    verdicts = lef.step_verdicts(V, w)
    weak = lef.check_weak(V, w, verdicts=verdicts)
    almost = lef.check_almost_weak(V, w, verdicts=verdicts)
    ranks = [lef.generic_max_rank(V, 1, trials=1, seed=s, coeff_bound=coeff_bound) for s in seeds]
    return RemarkResult(
        r=r,
        h=list(V.h),
        h_r=h_r,
        strictly_increasing=all(a < b for a, b in zip(h_r, h_r[1:])),
        weak=weak.holds,
        almost_weak=almost.holds,
        gap=almost.gap,
        certificate=lef.remark24_certificate(r),
        generic_ranks=ranks,
        dim_A1=V.graded_dim(1),
    )
