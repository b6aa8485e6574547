"""Command-line front end.  Every command writes a JSON report; exit status 0 iff all checks pass."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import __version__, ert, lefschetz as lef
from . import monomials as mon
from .corpus import full_corpus, random_corpus, read_ideal_file
from .upoly import IntPolynomial, h_to_g
from .verify import THEOREMS, lemma22_suite, remark24_suite, run_corpus
from .veronese import VeroneseQuotient, veronese_degree, veronese_h_transform

SCHEMA = 1
LEMMA22_BUDGET = int(os.environ.get("VLEF_LEMMA22_BUDGET", "12"))
MAX_R = int(os.environ.get("VLEF_MAX_R", "12"))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_ideal_file(path) -> tuple[int, mon.MonomialIdeal]:
    ideal = read_ideal_file(path)
    return ideal.n, ideal


def parse_form(text: str, n: int) -> dict:
    """Polynomial file: one term per line, ``<coeff>*<monomial>`` or ``<monomial>``."""
    w: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition("*")
        try:
            coeff = int(head)
            mono = rest if rest else "1"
        except ValueError:
            coeff, mono = 1, line
        try:
            m = mon.parse_monomial(mono, n)
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        w[m] = w.get(m, 0) + coeff
    return w


def _config(args) -> dict:
    def enc(v):
        if v is None or isinstance(v, bool):
            return v
        return [str(x) for x in v] if isinstance(v, list) else str(v)
    return {k: enc(v) for k, v in sorted(vars(args).items()) if k != "func"}


def _envelope(args, result: dict, passed: bool) -> dict:
    return {
        "schema": SCHEMA,
        "tool": "veronese-lefschetz",
        "version": __version__,
        "config": _config(args),
        "passed": passed,
        "result": result,
    }


def _ideal(args) -> mon.MonomialIdeal:
    if not args.ideal:
        raise UsageError("--ideal is required")
    try:
        return parse_ideal_file(args.ideal)[1]
    except (OSError, ValueError) as exc:
        raise UsageError(f"{args.ideal}: {exc}") from None


def _quotient(args) -> VeroneseQuotient:
    if args.r is None or not 1 <= args.r <= MAX_R:
        raise UsageError(f"--r must be in 1..{MAX_R}")
    try:
        return VeroneseQuotient(_ideal(args), args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_hilbert(args):
    ideal = _ideal(args)
    if not mon.is_stable(ideal):
        raise UsageError("ideal is not stable")
    if not mon.is_cm_stable(ideal):
        raise UsageError("ideal is not Cohen-Macaulay")
    h = mon.h_polynomial_stable(ideal)
    return {"n": str(ideal.n), "d": str(mon.dimension(ideal)), "h": h.to_json(), "g": h_to_g(h).to_json()}, True


def cmd_veronese(args):
    if args.action == "degree":
        if None in (args.deg_h, args.d, args.r):
            raise UsageError("degree needs --deg-h, --d and --r")
        return {"degree": str(veronese_degree(args.deg_h, args.d, args.r))}, True
    if args.action == "h-transform":
        if args.h is not None:
            if args.d is None or args.r is None:
                raise UsageError("h-transform with --h needs --d and --r")
            h = IntPolynomial(int(x) for x in args.h.split(","))
            d = args.d
        else:
            V = _quotient(args)
            h, d = V.h, V.d
        try:
            return {"h": h.to_json(), "h_r": veronese_h_transform(h, d, args.r).to_json()}, True
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    V = _quotient(args)
    dims = V.hilbert()
    h_r = V.h_transform()
    return {"dims": dims.to_json(), "h_r": h_r.to_json(), "d": str(V.d), "h": V.h.to_json()}, dims == h_r


def cmd_lefschetz(args):
    V = _quotient(args)
    if args.w == "auto":
        w = V.power_linear_form()
    elif args.w == "generic":
        w = lef.random_form(V, random.Random(args.seed), args.coeff_bound)
    else:
        try:
            w = parse_form(Path(args.w).read_text(), V.n)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        V.check_form(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    prop = args.property
    if prop == "k":
        if args.k is None or args.k < 1:
            raise UsageError("--property k needs --k >= 1")
        rep = lef.check_k_lefschetz(V, w, args.k, args.rank_method)
    elif prop == "almost-strong":
        rep = lef.check_almost_strong(V, w, args.rank_method)
    elif prop == "weak":
        rep = lef.check_weak(V, w, args.rank_method)
    else:
        rep = lef.check_almost_weak(V, w, args.rank_method)
    return rep.to_json(), rep.holds


def cmd_complex(args):
    V = _quotient(args)
    if args.kind == "delta":
        C = ert.build_delta(V)
        expected = V.h_transform()
    else:
        try:
            C = ert.build_gamma(V)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        expected = h_to_g(V.h_transform())
    f = ert.f_polynomial(C)
    result = C.to_json()
    result.update({"simplicial": C.is_simplicial, "flag": ert.is_flag(C), "expected_f": expected.to_json()})
    if args.json:
        Path(args.json).write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")
    return result, f == expected


def cmd_verify(args):
    if not args.all and not args.thm:
        raise UsageError("verify needs --all or --thm")
    wanted = set(THEOREMS) | {"lemma2.2", "remark2.4"} if args.all else {args.thm}
    out: dict = {}
    passed = True
    corpus_theorems = [t for t in THEOREMS if t in wanted]
    if corpus_theorems:
        if args.ideal:
            instances = [(Path(args.ideal).stem, _ideal(args))]
        else:
            instances = full_corpus(args.count, args.seed)
        r_values = [args.r] if args.r else list(range(1, 7))
        results = run_corpus(instances, r_values, corpus_theorems, args.rank_method, args.jobs)
        out["instances"] = [x.to_json() for x in results]
        out["instance_count"] = str(len(results))
        passed &= all(x.passed for x in results)
    if "lemma2.2" in wanted:
        reports = lemma22_suite(args.budget)
        out["lemma2.2"] = [rep.to_json() for rep in reports]
        passed &= all(rep.holds for rep in reports)
    if "remark2.4" in wanted:
        rs = [args.r] if args.r else [3, 4]
        if any(r < 3 for r in rs):
            raise UsageError("remark2.4 needs r >= 3")
        results = [remark24_suite(r) for r in rs]
        out["remark2.4"] = [x.to_json() for x in results]
        passed &= all(x.passed for x in results)
    return out, passed


def cmd_corpus(args):
    items = random_corpus(args.count, args.seed)
    if args.out:
        target = Path(args.out)
        target.mkdir(parents=True, exist_ok=True)
        for name, ideal in items:
            (target / f"{name}.ideal").write_text(ideal.to_text())
    return {"ideals": {name: ideal.to_text().splitlines() for name, ideal in items}}, True


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="veronese-lefschetz", description=__doc__)
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_opts(sp, r=True):
        sp.add_argument("--ideal", help="ideal file (n=<int> header, one monomial per line)")
        if r:
            sp.add_argument("--r", type=int, help="Veronese index")

    sp = sub.add_parser("hilbert", help="h- and g-polynomial of S/I")
    ideal_opts(sp, r=False)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("veronese", help="Veronese h-transform, graded dimensions, degree formula")
    sp.add_argument("action", choices=["h-transform", "dims", "degree"])
    ideal_opts(sp)
    sp.add_argument("--h", help="comma-separated h-vector, e.g. 1,5,10")
    sp.add_argument("--d", type=int)
    sp.add_argument("--deg-h", type=int)
    sp.set_defaults(func=cmd_veronese)

    sp = sub.add_parser("lefschetz", help="decide a Lefschetz property by exact rank")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("--property", required=True, choices=["k", "almost-strong", "weak", "almost-weak"])
    ideal_opts(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--w", default="auto", help="auto | generic | path to a polynomial file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--coeff-bound", type=int, default=10**4)
    sp.add_argument("--rank-method", choices=["exact", "auto"], default="exact")
    sp.set_defaults(func=cmd_lefschetz)

    sp = sub.add_parser("complex", help="build the standard-monomial complexes")
    sp.add_argument("kind", choices=["delta", "gamma"])
    ideal_opts(sp)
    sp.add_argument("--json", help="also write the complex to this file")
    sp.set_defaults(func=cmd_complex)

    sp = sub.add_parser("verify", help="run theorem verification suites")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true")
    group.add_argument("--thm", choices=list(THEOREMS) + ["lemma2.2", "remark2.4"])
    ideal_opts(sp)
    sp.add_argument("--seed", type=int, default=0, help="seed of the random corpus")
    sp.add_argument("--count", type=int, default=50, help="size of the random corpus")
    sp.add_argument("--budget", type=int, default=LEMMA22_BUDGET, help="cap on (r-1)d for lemma2.2")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--rank-method", choices=["exact", "auto"], default="exact")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("corpus", help="random stable Cohen-Macaulay ideals")
    sp.add_argument("action", choices=["generate"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--out", help="directory for .ideal files")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raw = list(sys.argv[1:] if argv is None else argv)
        args = argparse.Namespace(argv=raw, output=_find_output(raw))
        text = json.dumps(_envelope(args, {"error": str(exc)}, False), indent=2, sort_keys=True) + "\n"
        _emit(text, args.output)
        return 2
    try:
        result, passed = args.func(args)
        status = 0 if passed else 1
    except UsageError as exc:
        result, passed, status = {"error": str(exc)}, False, 2
        print(f"error: {exc}", file=sys.stderr)
    text = json.dumps(_envelope(args, result, passed), indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return status


def _find_output(argv):
    for i, a in enumerate(argv):
        if a == "--output" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--output="):
            return a.split("=", 1)[1]
    return None


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
