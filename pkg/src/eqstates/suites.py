"""Built-in verification suites.

Each suite returns {"name", "passed", "checks": [(label, ok, detail), ...]}
and is shared between the command-line `verify` subcommand and the test
suite.  All suites are deterministic: fixed seeds, compensated sums,
no timestamps.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .beta import (
    BasicBetaDecomposition,
    BetaExpansion,
    TrivialDecomposition,
)
from .interval_maps import (
    MPMap,
    diagnostics,
    mp_decompose,
    pressure_curve,
    x_ladder,
)
from .measures import gibbs_report, periodic_orbit_measure
from .potentials import (
    GridCoefficients,
    GridLevelDecomposition,
    GridPotential,
    LocallyConstant,
    ZeroPotential,
    grid_bowen_criterion,
    variation_diagnostic,
)
from .pressure import partition_sum, pressure_bracket
from .speccheck import check_specification, min_gap
from .words import SFT, BetaShift, FullShift


def _suite(name, checks):
    return {"name": name, "passed": all(ok for _, ok, _ in checks), "checks": checks}


def fibonacci_entropy_oracle() -> float:
    """log of the spectral radius of the golden-mean transfer matrix."""
    ev = np.linalg.eigvals(np.array([[1.0, 1.0], [1.0, 0.0]]))
    return math.log(max(abs(ev)))


def harmonic_partial_sum(n: int) -> float:
    return math.fsum(1.0 / (j + 1) for j in range(1, n + 1))


# ---------------------------------------------------------------------------


def suite_bernoulli():
    p = 0.3
    m = FullShift(2)
    pot = LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)})
    td = TrivialDecomposition(m, 0)
    checks = []

    pb = pressure_bracket(m, pot, td, 8)
    checks.append(
        (
            "pressure bracket [0,0] within 1e-9",
            abs(pb.lower) <= 1e-9 and abs(pb.upper) <= 1e-9,
            f"[{pb.lower:.3e}, {pb.upper:.3e}]",
        )
    )

    meas = periodic_orbit_measure(m, pot, 10)
    worst = 0.0
    for k in range(1, 5):
        for u in m.enumerate_words(k):
            want = p ** (k - sum(u)) * (1 - p) ** sum(u)
            worst = max(worst, abs(meas.cylinder_mass(u) - want))
    checks.append(
        ("product-measure masses within 1e-12", worst <= 1e-12, f"defect {worst:.2e}")
    )

    gr = gibbs_report(meas, pot, pb, td, 1, 5)
    dev = max(abs(gr.min_lo - 1.0), abs(gr.max_hi - 1.0))
    checks.append(("all Gibbs ratios 1 within 1e-9", dev <= 1e-9, f"dev {dev:.2e}"))
    return _suite("bernoulli", checks)


def _lex_admissible_mask(digits, n: int, b: int):
    """Vectorized independent check: every shift of w is <= the digit word."""
    words = np.array(
        np.meshgrid(*([np.arange(b)] * n), indexing="ij")
    ).reshape(n, -1).T.astype(np.int8)
    d = np.array(digits.prefix(n), dtype=np.int8)
    ok = np.ones(len(words), dtype=bool)
    for k in range(n):
        m = n - k
        undecided = np.ones(len(words), dtype=bool)
        for j in range(m):
            col = words[:, k + j]
            gt = undecided & (col > d[j])
            ok &= ~gt
            undecided = undecided & (col == d[j])
    return words, ok


def suite_beta_oracles():
    checks = []
    for spec in (Fraction(3, 2), Fraction(5, 2), "1.8"):
        dig = BetaExpansion(spec)
        model = BetaShift(dig)
        b = model.alphabet_size
        agree = True
        for n in range(1, 13):
            words, mask = _lex_admissible_mask(dig, n, b)
            walk = set(model.enumerate_words(n))
            lex = {tuple(int(c) for c in words[i]) for i in np.nonzero(mask)[0]}
            if walk != lex:
                agree = False
                break
        checks.append((f"beta={spec}: walk == lex up to n=12", agree, ""))
    dig = BetaExpansion(Fraction(3, 2))
    model = BetaShift(dig)
    c2, c3 = model.count_words(2), model.count_words(3)
    checks.append(("beta=3/2 counts n=2,3 are 3,5", (c2, c3) == (3, 5), f"{c2},{c3}"))
    return _suite("beta-oracles", checks)


def suite_entropy():
    checks = []
    z = ZeroPotential()

    sft = SFT(2, [(1, 1)])
    pb = pressure_bracket(sft, z, TrivialDecomposition(sft, 1), 14)
    target = fibonacci_entropy_oracle()
    checks.append(
        (
            "SFT(no 11) bracket holds log golden mean, width <= 0.1",
            pb.lower <= target <= pb.upper and pb.upper - pb.lower <= 0.1,
            f"[{pb.lower:.4f}, {pb.upper:.4f}] target {target:.5f}",
        )
    )

    dig = BetaExpansion(Fraction(3, 2))
    bs = BetaShift(dig)
    bd = BasicBetaDecomposition(dig)
    best = None
    for M in (1, 2, 3):
        cand = pressure_bracket(bs, z, bd, 14, M=M)
        if best is None or cand.lower > best.lower:
            best = cand
    target = math.log(1.5)
    checks.append(
        (
            "beta=3/2 bracket holds log 1.5, width <= 0.15",
            best.lower <= target <= best.upper and best.upper - best.lower <= 0.15,
            f"[{best.lower:.4f}, {best.upper:.4f}]",
        )
    )
    return _suite("entropy", checks)


def suite_specification():
    checks = []
    dig = BetaExpansion(Fraction(3, 2))
    bs = BetaShift(dig)
    bd = BasicBetaDecomposition(dig)
    lens = range(1, 7)

    t1, _ = min_gap(bs, lambda w: bd.in_GM(w, 1), lens, "S")
    checks.append(("min_gap(G, S) = 0", t1 == 0, f"got {t1}"))
    t2, _ = min_gap(bs, lambda w: bd.in_GM(w, 2), lens, "S")
    checks.append(("min_gap(G(2), S) = 2 = tau_2", t2 == 2, f"got {t2}"))

    v = check_specification(bs, lambda w: bd.in_GM(w, 2), lens, 2, "Per")
    closed = v.holds and all(
        bs.is_periodic_word(w1 + conn + w2 + close)
        for (w1, conn, w2, close) in v.witnesses
    )
    checks.append(
        ("(Per) witnesses close to periodic words", closed, f"{len(v.witnesses)} pairs")
    )
    return _suite("specification", checks)


def suite_bowen():
    checks = []
    geo = GridCoefficients(a=lambda k: 2.0**-k, sup_tail=lambda K: 2.0**-K)
    har = GridCoefficients(a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1))
    v1 = grid_bowen_criterion(geo)["verdict"]
    v2 = grid_bowen_criterion(har)["verdict"]
    checks.append(("a_k = 2^-k reads bowen", v1 == "bowen", v1))
    checks.append(("a_k = 1/(k+1) reads not-bowen", v2 == "not-bowen", v2))

    m = FullShift(2)
    gp = GridPotential(har)
    vd = variation_diagnostic(gp, m, lambda w: True, 12)
    oracle = harmonic_partial_sum(12)
    checks.append(
        (
            "harmonic V_12 > 2.0 (oracle sum_2^13 1/j)",
            vd["V"][11] > 2.0 and oracle > 2.0,
            f"V_12={vd['V'][11]:.4f} oracle={oracle:.4f}",
        )
    )

    g1 = GridLevelDecomposition(m, None, 1)
    vg = variation_diagnostic(gp, m, g1.in_G, 12)
    bound = 2.0 * gp.sup_norm_bound
    checks.append(
        (
            "variation on G^1 stays <= 2 sup|a| for n <= 12",
            all(v <= bound + 1e-12 for v in vg["V"]),
            f"max {max(vg['V']):.4f} <= {bound:.1f}",
        )
    )
    return _suite("bowen", checks)


def _builtin_pairs():
    p = 0.3
    dig = BetaExpansion(Fraction(3, 2))
    gold = BetaExpansion("golden")
    har = GridCoefficients(a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1))
    return [
        ("full2/zero", FullShift(2), ZeroPotential()),
        (
            "full2/bernoulli",
            FullShift(2),
            LocallyConstant(1, {(0,): math.log(p), (1,): math.log(1 - p)}),
        ),
        ("full2/grid-harmonic", FullShift(2), GridPotential(har)),
        ("sft11/zero", SFT(2, [(1, 1)]), ZeroPotential()),
        ("beta32/zero", BetaShift(dig), ZeroPotential()),
        ("golden/zero", BetaShift(gold), ZeroPotential()),
    ]


def suite_invariance():
    checks = []
    for label, model, pot in _builtin_pairs():
        meas = periodic_orbit_measure(model, pot, 8)
        defect = abs(meas.total - 1.0)
        worst = 0.0
        for k in range(1, 4):
            for u in model.enumerate_words(k):
                pre = math.fsum(
                    meas.cylinder_mass((s,) + u)
                    for s in range(model.alphabet_size)
                    if model.contains((s,) + u)
                )
                worst = max(worst, abs(pre - meas.cylinder_mass(u)))
        checks.append(
            (
                f"{label}: shift defect <= 1e-10, mass 1 +- 1e-12",
                worst <= 1e-10 and defect <= 1e-12,
                f"defect {worst:.2e} mass {defect:.2e}",
            )
        )
    return _suite("invariance", checks)


def suite_mp_phase():
    checks = []
    mp = MPMap(1, Fraction(1, 2))
    lad = x_ladder(mp, 520)
    checks.append(
        ("x_0 = 0.5699 within 1e-3", abs(lad.xs[0] - 0.5699) <= 1e-3, f"{lad.xs[0]:.6f}")
    )
    fit = lad.decay_fit(50, 500)
    checks.append(
        ("ladder decay exponent in [-3.4, -2.6]", -3.4 <= fit <= -2.6, f"{fit:.3f}")
    )

    ts = [0.0, 0.25, 0.5, 0.75, 1.0, 1.25]
    pc = pressure_curve(mp, ts, 12)
    i1 = ts.index(1.0)
    checks.append(
        (
            "t=1 bracket holds 0 with upper <= 0.05",
            pc.lowers[i1] <= 0.0 <= pc.uppers[i1] and pc.uppers[i1] <= 0.05,
            f"[{pc.lowers[i1]:.4f}, {pc.uppers[i1]:.4f}]",
        )
    )
    pos = all(pc.lowers[ts.index(t)] > 0 for t in (0.0, 0.25, 0.5))
    checks.append(
        ("t in {0, 0.25, 0.5} have positive lower bounds", pos, str(pc.lowers[:3]))
    )
    u = pc.uppers
    mono = all(b <= a + 1e-6 for a, b in zip(u, u[1:]))
    sec = [
        (u[i + 1] - u[i]) / (ts[i + 1] - ts[i]) - (u[i] - u[i - 1]) / (ts[i] - ts[i - 1])
        for i in range(1, len(u) - 1)
    ]
    convex = all(s >= -1e-6 for s in sec)
    checks.append(("upper envelope convex and nonincreasing", mono and convex, ""))
    out = _suite("mp-phase", checks)
    out["curve"] = pc
    return out


def suite_submultiplicative():
    checks = []
    z = ZeroPotential()
    dig = BetaExpansion(Fraction(3, 2))
    cases = [
        ("full2/zero", FullShift(2), z, None),
        (
            "full2/bernoulli",
            FullShift(2),
            LocallyConstant(
                1, {(0,): math.log(0.3), (1,): math.log(0.7)}
            ),
            None,
        ),
        (
            "full2/grid-harmonic",
            FullShift(2),
            GridPotential(
                GridCoefficients(a=lambda k: 1.0 / (k + 1), sup_tail=lambda K: 1.0 / (K + 1))
            ),
            None,
        ),
        ("sft11/zero", SFT(2, [(1, 1)]), z, None),
        ("beta32/zero", BetaShift(dig), z, BasicBetaDecomposition(dig)),
    ]
    n_max = 9
    for label, model, pot, dec in cases:
        lams = [partition_sum(model, pot, None, n).hi for n in range(1, n_max + 1)]
        sub = all(
            lams[n + m - 1] <= lams[n - 1] * lams[m - 1] * (1 + 1e-12)
            for n in range(1, n_max + 1)
            for m in range(1, n_max + 1 - n)
        )
        checks.append((f"{label}: Lambda_(n+m) <= Lambda_n Lambda_m", sub, ""))
        if dec is not None:
            dom = all(
                partition_sum(model, pot, lambda w: dec.in_GM(w, 2), n).hi
                <= lams[n - 1] * (1 + 1e-12)
                for n in range(1, n_max + 1)
            )
            checks.append((f"{label}: Lambda_n(G(M)) <= Lambda_n(L)", dom, ""))
    return _suite("submultiplicative", checks)


def _determinism_report() -> str:
    mp = MPMap(1, Fraction(1, 2))
    d = diagnostics(mp, n=20, samples=500, seed=7)
    dig = BetaExpansion(Fraction(3, 2))
    bs = BetaShift(dig)
    meas = periodic_orbit_measure(bs, ZeroPotential(), 6)
    pc = pressure_curve(mp, [0.0, 0.5, 1.0], 10)
    blob = {
        "diag": {
            "young": d["young_L_estimate"],
            "lyapunov": d["lyapunov"],
            "mean": d["mean_lyapunov"],
        },
        "measure": meas.dump_json_lines(),
        "curve": pc.dump_csv_lines(),
    }
    return json.dumps(blob, sort_keys=True)


def suite_determinism():
    r1 = _determinism_report()
    r2 = _determinism_report()
    return _suite(
        "determinism",
        [("seeded rerun is byte-identical", r1 == r2, f"{len(r1)} bytes")],
    )


SUITES = {
    "bernoulli": suite_bernoulli,
    "beta-oracles": suite_beta_oracles,
    "entropy": suite_entropy,
    "specification": suite_specification,
    "bowen": suite_bowen,
    "invariance": suite_invariance,
    "mp-phase": suite_mp_phase,
    "submultiplicative": suite_submultiplicative,
    "determinism": suite_determinism,
}


def run_suite(name: str):
    from .errors import InputError

    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    return SUITES[name]()
