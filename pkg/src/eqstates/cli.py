"""Batch command surface.

One executable with subcommands; jobs can come from a JSON file (--job) with
flags overriding individual fields.  Reports are JSON lines / CSV on stdout
or --out, each run echoing its effective config first, with no timestamps so
reruns are byte-identical.  Exit codes: 0 ok, 2 input error, 3 budget or
precision error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .beta import (
    BasicBetaDecomposition,
    BetaExpansion,
    RefinedBetaDecomposition,
    TrivialDecomposition,
)
from .errors import BudgetError, InputError, PrecisionError
from .interval_maps import (
    MPMap,
    diagnostics,
    mp_decompose,
    pressure_curve,
    x_ladder,
)
from .measures import cesaro_measure, gibbs_report, periodic_orbit_measure
from .potentials import (
    GridCoefficients,
    GridLevelDecomposition,
    GridPotential,
    LocallyConstant,
    ZeroPotential,
    grid_bowen_criterion,
    variation_diagnostic,
)
from .pressure import condition_III_diagnostic, gap_checks, pressure_bracket
from .speccheck import check_specification, dump_witnesses, min_gap
from .suites import SUITES, run_suite
from .words import SFT, BetaShift, FullShift, word_from_string, word_to_string

DEFAULT_BUDGET = int(os.environ.get("EQSTATES_BUDGET", 10**7))


# ---------------------------------------------------------------------------
# spec parsing
# ---------------------------------------------------------------------------


def parse_model(spec: str):
    parts = spec.split(":")
    kind = parts[0]
    if kind == "full":
        return FullShift(int(parts[1]))
    if kind == "sft":
        b = int(parts[1])
        forbidden = [word_from_string(p) for p in parts[2].split(",")]
        return SFT(b, forbidden)
    if kind == "beta":
        return BetaShift(BetaExpansion(parts[1]))
    if kind == "mp":
        from .interval_maps import symbolic_model

        return symbolic_model(MPMap(Fraction(parts[1]), Fraction(parts[2])))
    raise InputError(f"unknown model spec {spec!r}")


def parse_coeffs(spec: str) -> GridCoefficients:
    parts = spec.split(":")
    if parts[0] == "harmonic":
        return GridCoefficients(a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1))
    if parts[0] == "alternating":
        return GridCoefficients(
            a=lambda k: (-1.0) ** k / (k + 1), sup_tail=lambda K: 1.0 / (K + 1)
        )
    if parts[0] == "geometric":
        r = float(parts[1]) if len(parts) > 1 else 0.5
        if not (0 < r < 1):
            raise InputError("geometric ratio must lie in (0, 1)")
        return GridCoefficients(a=lambda k: r**k, sup_tail=lambda K: r**K)
    if parts[0] == "mp":
        return mp_decompose(MPMap(Fraction(parts[1]), Fraction(parts[2])))["coeffs"]
    raise InputError(f"unknown coefficient spec {spec!r}")


def parse_potential(spec: str, model=None):
    parts = spec.split(":")
    if parts[0] == "zero":
        return ZeroPotential()
    if parts[0] == "bernoulli":
        p = float(parts[1])
        if not (0 < p < 1):
            raise InputError("bernoulli parameter must lie in (0, 1)")
        return LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})
    if parts[0] == "grid":
        return GridPotential(parse_coeffs(":".join(parts[1:])))
    if parts[0] == "geom":
        from .interval_maps import GeometricPotential

        t = float(parts[1]) if len(parts) > 1 else 1.0
        pmap = MPMap(Fraction(parts[2]), Fraction(parts[3])) if len(parts) > 3 else None
        if pmap is None:
            raise InputError("geometric potential spec: geom:t:gamma:eps")
        return GeometricPotential(pmap, t)
    raise InputError(f"unknown potential spec {spec!r}")


def parse_dec(spec: str, model):
    parts = spec.split(":")
    if parts[0] == "trivial":
        return TrivialDecomposition(model, int(parts[1]) if len(parts) > 1 else 0)
    if parts[0] == "basic":
        if not isinstance(model, BetaShift):
            raise InputError("basic decomposition needs a beta-type model")
        return BasicBetaDecomposition(model.digits)
    if parts[0] == "refined":
        if not isinstance(model, BetaShift):
            raise InputError("refined decomposition needs a beta-type model")
        return RefinedBetaDecomposition(model.digits)
    if parts[0] == "gridlevel":
        level = int(parts[1]) if len(parts) > 1 else 1
        t = int(parts[2]) if len(parts) > 2 else 0
        return GridLevelDecomposition(model, None, level, t)
    raise InputError(f"unknown decomposition spec {spec!r}")


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------


class Report:
    def __init__(self, out_path=None):
        self.lines = []
        self.out_path = out_path

    def emit(self, obj):
        if isinstance(obj, str):
            self.lines.append(obj)
        else:
            self.lines.append(json.dumps(obj, sort_keys=True))

    def flush(self):
        text = "\n".join(self.lines) + "\n"
        if self.out_path:
            with open(self.out_path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def effective_config(args, fields):
    cfg = {k: getattr(args, k) for k in fields}
    cfg["version"] = __version__
    return {"config": cfg}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_expand(args, rep):
    dig = BetaExpansion(args.beta)
    rep.emit(effective_config(args, ["beta", "digits"]))
    rep.emit(word_to_string(dig.prefix(args.digits), dig.alphabet_size))
    hint = dig.exact_period()
    if hint:
        rep.emit({"exact_period": {"preperiod": hint[0], "period": hint[1]}})


def cmd_words(args, rep):
    model = parse_model(args.model)
    rep.emit(effective_config(args, ["model", "n", "count_only", "budget"]))
    if args.count_only:
        rep.emit({"n": args.n, "count": model.count_words(args.n, args.budget)})
    else:
        ws = model.enumerate_words(args.n, args.budget)
        rep.emit({"n": args.n, "count": len(ws)})
        for w in ws:
            rep.emit(word_to_string(w, model.alphabet_size))


def cmd_pressure(args, rep):
    model = parse_model(args.model)
    pot = parse_potential(args.potential, model)
    dec = parse_dec(args.dec, model)
    rep.emit(effective_config(args, ["model", "potential", "dec", "nmax", "M", "budget"]))
    pb = pressure_bracket(model, pot, dec, args.nmax, args.M, args.budget)
    rep.emit(
        {
            "op": "pressure",
            "model": model.describe(),
            "potential": pot.describe(),
            "n": args.nmax,
            "lo": pb.lower,
            "hi": pb.upper,
            "n_used": pb.n_used,
            "method": {k: v for k, v in pb.method.items() if k != "upper_sequence"},
        }
    )


def cmd_spec_check(args, rep):
    model = parse_model(args.model)
    dec = parse_dec(args.dec, model)
    lo, hi = (int(x) for x in args.lengths.split(":"))
    classifier = (lambda w: dec.in_GM(w, args.M)) if args.dec != "trivial" else None
    rep.emit(
        effective_config(args, ["model", "dec", "M", "variant", "t", "lengths"])
    )
    if args.t is None:
        t, v = min_gap(model, classifier, range(lo, hi + 1), args.variant)
        rep.emit({"op": "min_gap", "t": t})
    else:
        v = check_specification(model, classifier, range(lo, hi + 1), args.t, args.variant)
        rep.emit(
            {
                "op": "spec-check",
                "verdict": v.describe(),
                "holds": v.holds,
                "counterexample": v.counterexample and [
                    word_to_string(w, model.alphabet_size) for w in v.counterexample
                ],
            }
        )
    if v is not None and args.witnesses:
        for line in dump_witnesses(v):
            rep.emit(line)


def cmd_diagnose_bowen(args, rep):
    coeffs = parse_coeffs(args.coeffs)
    rep.emit(effective_config(args, ["coeffs", "terms"]))
    res = grid_bowen_criterion(coeffs, args.terms)
    rep.emit(
        {
            "op": "diagnose-bowen",
            "verdict": res["verdict"],
            "reason": res["reason"],
            "partial_sum_last": res["partial_sums"][-1],
        }
    )
    if args.variation_model:
        model = parse_model(args.variation_model)
        vd = variation_diagnostic(GridPotential(coeffs), model, lambda w: True, args.variation_n)
        rep.emit({"op": "variation", "V": vd["V"], "verdict": vd["verdict"]})


def cmd_cond3(args, rep):
    model = parse_model(args.model)
    pot = parse_potential(args.potential, model)
    dec = parse_dec(args.dec, model)
    rep.emit(effective_config(args, ["model", "potential", "dec", "nmax", "M"]))
    pb = pressure_bracket(model, pot, dec, args.nmax, args.M)
    res = condition_III_diagnostic(model, pot, dec, pb, args.nmax)
    rep.emit(
        {
            "op": "cond3",
            "verdict": res["verdict"],
            "ratio_estimate": res["ratio_estimate"],
            "partial_sums": res["partial_sums"],
        }
    )


def cmd_gaps(args, rep):
    model = parse_model(args.model)
    pot_r = parse_potential(args.regular, model)
    grid = GridPotential(parse_coeffs(args.coeffs))
    dec = parse_dec(args.dec, model)
    rep.emit(effective_config(args, ["model", "regular", "coeffs", "dec", "nmax"]))
    res = gap_checks(model, pot_r, grid, dec, args.nmax)
    for name in ("thmB", "BR", "factor"):
        rep.emit(
            {
                "op": f"gap_{name}",
                "lhs": list(res[name]["lhs"]),
                "rhs": list(res[name]["rhs"]),
                "verdict": res[name]["verdict"],
            }
        )


def cmd_eqstate(args, rep):
    model = parse_model(args.model)
    pot = parse_potential(args.potential, model)
    rep.emit(
        effective_config(args, ["model", "potential", "kind", "n", "gibbs_M", "gibbs_n"])
    )
    if args.kind == "periodic":
        meas = periodic_orbit_measure(model, pot, args.n)
    else:
        meas = cesaro_measure(model, pot, args.n)
    for line in meas.dump_json_lines():
        rep.emit(line)
    if args.gibbs_n:
        dec = parse_dec(args.dec, model)
        pb = pressure_bracket(model, pot, dec, args.n, args.gibbs_M)
        gr = gibbs_report(meas, pot, pb, dec, args.gibbs_M, args.gibbs_n)
        for line in gr.dump_csv_lines():
            rep.emit(line)
        rep.emit({"op": "gibbs", "min_lo": gr.min_lo, "max_hi": gr.max_hi})


def cmd_mp(args, rep):
    pmap = MPMap(Fraction(args.gamma), Fraction(args.eps))
    rep.emit(
        effective_config(
            args, ["gamma", "eps", "ladder", "curve", "curve_n", "diagnose", "seed"]
        )
    )
    if args.ladder:
        lad = x_ladder(pmap, args.ladder)
        for line in lad.dump_csv_lines():
            rep.emit(line)
        if args.ladder >= 52:
            rep.emit({"op": "ladder_fit", "slope": lad.decay_fit(50, args.ladder - 2)})
    if args.decompose:
        dec = mp_decompose(pmap, args.decompose)
        rep.emit({"op": "decompose", "a_head": dec["a"][:8]})
        res = grid_bowen_criterion(dec["coeffs"], min(args.decompose, 200))
        rep.emit({"op": "diagnose-bowen", "verdict": res["verdict"], "reason": res["reason"]})
    if args.diagnose:
        d = diagnostics(pmap, n=args.diagnose, samples=args.samples, seed=args.seed)
        rep.emit(
            {
                "op": "diagnostics",
                "young_L_estimate": d["young_L_estimate"],
                "bowen_verdict": d["bowen_verdict"],
                "lyapunov": {str(k): v for k, v in d["lyapunov"].items()},
            }
        )
    if args.curve:
        t0, t1, k = args.curve.split(":")
        k = int(k)
        ts = [float(t0) + (float(t1) - float(t0)) * i / (k - 1) for i in range(k)]
        pc = pressure_curve(pmap, ts, args.curve_n)
        for line in pc.dump_csv_lines():
            rep.emit(line)
        rep.emit({"op": "kink", "estimate": pc.kink_estimate})


def cmd_verify(args, rep):
    result = run_suite(args.suite)
    ok = result["passed"]
    for label, good, detail in result["checks"]:
        rep.emit(f"[{'pass' if good else 'FAIL'}] {args.suite}: {label}" + (f" ({detail})" if detail else ""))
    rep.emit(f"suite {args.suite}: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="eqstates", description="shift-space pressure and equilibrium-state workbench"
    )
    ap.add_argument("--job", help="JSON job file; flags override its fields")
    ap.add_argument("--out", help="write the report here instead of stdout")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("expand", help="greedy expansion digits of 1")
    p.add_argument("--beta", required=True)
    p.add_argument("--digits", type=int, default=16)

    p = sub.add_parser("words", help="language enumeration / counts")
    p.add_argument("--model", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("pressure", help="pressure bracket")
    p.add_argument("--model", required=True)
    p.add_argument("--potential", default="zero")
    p.add_argument("--dec", default="trivial:0")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("spec-check", help="specification gluing check")
    p.add_argument("--model", required=True)
    p.add_argument("--dec", default="trivial")
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--variant", choices=["W", "S", "Per"], default="S")
    p.add_argument("--t", type=int, default=None, help="omit to search min gap")
    p.add_argument("--lengths", default="1:4")
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("diagnose-bowen", help="coefficient summability verdict")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--terms", type=int, default=256)
    p.add_argument("--variation-model", default=None)
    p.add_argument("--variation-n", type=int, default=10)

    p = sub.add_parser("cond3", help="suffix/prefix summability surrogate")
    p.add_argument("--model", required=True)
    p.add_argument("--potential", default="zero")
    p.add_argument("--dec", default="basic")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--M", type=int, default=1)

    p = sub.add_parser("gaps", help="sufficient-gap checks for split potentials")
    p.add_argument("--model", required=True)
    p.add_argument("--regular", default="zero")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--dec", default="trivial:0")
    p.add_argument("--nmax", type=int, default=8)

    p = sub.add_parser("eqstate", help="measure construction + Gibbs report")
    p.add_argument("--model", required=True)
    p.add_argument("--potential", default="zero")
    p.add_argument("--kind", choices=["periodic", "cesaro"], default="periodic")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--dec", default="trivial:0")
    p.add_argument("--gibbs-M", type=int, default=1)
    p.add_argument("--gibbs-n", type=int, default=0)

    p = sub.add_parser("mp", help="intermittent-map toolbox")
    p.add_argument("--gamma", default="1")
    p.add_argument("--eps", default="1/2")
    p.add_argument("--ladder", type=int, default=0)
    p.add_argument("--decompose", type=int, default=0)
    p.add_argument("--diagnose", type=int, default=0)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--curve", default=None, help="t0:t1:points")
    p.add_argument("--curve-n", type=int, default=12)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=sorted(SUITES))
    return ap


COMMANDS = {
    "expand": cmd_expand,
    "words": cmd_words,
    "pressure": cmd_pressure,
    "spec-check": cmd_spec_check,
    "diagnose-bowen": cmd_diagnose_bowen,
    "cond3": cmd_cond3,
    "gaps": cmd_gaps,
    "eqstate": cmd_eqstate,
    "mp": cmd_mp,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    job_path = None
    for i, tok in enumerate(argv):
        if tok == "--job" and i + 1 < len(argv):
            job_path = argv[i + 1]
        elif tok.startswith("--job="):
            job_path = tok.split("=", 1)[1]
    if job_path:
        try:
            with open(job_path) as fh:
                job = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            print(f"error: bad job file: {e}", file=sys.stderr)
            return 2
        # drop --job itself, then splice job fields in before explicit flags
        rest = []
        skip = False
        for i, tok in enumerate(argv):
            if skip:
                skip = False
                continue
            if tok == "--job":
                skip = True
            elif tok.startswith("--job="):
                pass
            else:
                rest.append(tok)
        cmd = job.pop("command", None)
        if cmd and (not rest or rest[0] not in COMMANDS):
            rest = [cmd] + rest
        out = job.pop("out", None)
        if out and "--out" not in rest:
            rest = ["--out", str(out)] + rest
        extra = []
        for k, v in job.items():
            flag = "--" + k.replace("_", "-")
            if isinstance(v, bool):
                if v:
                    extra.append(flag)
            else:
                extra.extend([flag, str(v)])
        cut = next((i + 1 for i, tok in enumerate(rest) if tok in COMMANDS), len(rest))
        argv = rest[:cut] + extra + rest[cut:]
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if not args.command:
        ap.print_usage(sys.stderr)
        return 2
    rep = Report(args.out)
    t0 = time.perf_counter()
    try:
        rc = COMMANDS[args.command](args, rep) or 0
    except InputError as e:
        rep.emit({"error": "input", "message": str(e), "partial": True})
        rep.flush()
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (BudgetError, PrecisionError) as e:
        rep.emit({"error": "resource", "message": str(e), "partial": True})
        rep.flush()
        print(f"error: {e}", file=sys.stderr)
        return 3
    rep.flush()
    print(f"done in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return rc


if __name__ == "__main__":
    sys.exit(main())
