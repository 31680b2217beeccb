"""Command-line front end: ``qasymmetry {table1,sweep,witness,circuit}``.

Exit codes: 0 success, 1 numerical mismatch in ``table1``, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import math
import re
import sys
from dataclasses import astuple, dataclass
from functools import partial
from typing import Iterator, Sequence

import numpy as np

from .asymmetry import ApproximationConfig, spin_report
from .errors import QAsymmetryError
from .interferometer import measure_bound_via_circuit, swap_test_overlap
from .states import AXES, ghz_diagonal
from .witnesses import (
    QUANTITY_KINDS,
    averaged_threshold,
    evaluate_witnesses,
    ghz_exact_condition,
    ghz_exact_margin,
    solve_threshold,
    spin_quantity,
    witness_threshold,
)

N_QUBITS = 3
DEFAULT_THETA = math.pi / 6
TABLE1_TOL = 1e-3

# (quantity, axis or "mean", target) -> published threshold
TABLE1_EXPECTED = {
    ("qfi", "z", 3): 0.674,
    ("qfi", "z", 5): 0.813,
    ("bound", "z", 3): 0.751,
    ("bound", "z", 5): 0.861,
    ("qfi", "mean", 2): 0.646,
    ("bound", "mean", 2): 0.772,
}

CSV_HEADER = "p,axis,qfi,bound,bound_approx,approx_error,witness_k1,witness_k2,avg_value,avg_flag".split(",")


@dataclass(frozen=True)
class SweepRecord:
    p: float
    axis: str
    qfi: float
    bound: float
    bound_approx: float
    approx_error: float
    witness_k1: bool
    witness_k2: bool
    averaged_value: float
    averaged_flag: bool

    def csv_row(self) -> list[str]:
        out = []
        for v in astuple(self):
            if isinstance(v, bool):
                out.append(str(int(v)))
            elif isinstance(v, float):
                out.append(f"{v:.12g}")
            else:
                out.append(str(v))
        return out


_PI_EXPR = re.compile(r"^\s*(-?)\s*(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$")


def parse_angle(text: str) -> float:
    """Radians given as a float or as ``pi``, ``pi/6``, ``2*pi/3``, ``-pi/12``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_EXPR.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}")
    sign, coef, denom = m.groups()
    value = (float(coef) if coef else 1.0) * math.pi / (float(denom) if denom else 1.0)
    return -value if sign else value


# -- table1 -----------------------------------------------------------------


def _ghz_quantity(kind: str, axis: str, p: float) -> float:
    rho = ghz_diagonal(p)
    if axis == "mean":
        return float(np.mean([spin_quantity(rho, N_QUBITS, a, kind) for a in AXES]))
    return spin_quantity(rho, N_QUBITS, axis, kind)


def table1_thresholds() -> dict[tuple[str, str, int], float | None]:
    """Bisection thresholds in p for every (quantity, axis, target) of the case study."""
    out = {}
    for kind in ("qfi", "bound"):
        for axis in AXES:
            for target in (witness_threshold(N_QUBITS, 1), witness_threshold(N_QUBITS, 2)):
                out[(kind, axis, int(target))] = solve_threshold(partial(_ghz_quantity, kind, axis), target)
        target = averaged_threshold(N_QUBITS)
        out[(kind, "mean", int(target))] = solve_threshold(partial(_ghz_quantity, kind, "mean"), target)
    return out


def cmd_table1(args, out) -> int:
    found = table1_thresholds()
    fmt = lambda v: "not reached" if v is None else f"{v:.3f}"
    print(f"{'quantity':<10}{'axis':<6}{'target':>7}  {'p threshold':>12}", file=out)
    for (kind, axis, target), value in found.items():
        print(f"{kind:<10}{axis:<6}{target:>7}  {fmt(value):>12}", file=out)

    ok = True
    for key, expected in TABLE1_EXPECTED.items():
        value = found[key]
        if value is None or abs(value - expected) > TABLE1_TOL:
            ok = False
            print(f"MISMATCH {key}: got {fmt(value)}, expected {expected:.3f}", file=out)
    print("table1: all thresholds match" if ok else "table1: mismatch", file=out)
    return 0 if ok else 1


# -- sweep ------------------------------------------------------------------


def sweep_records(
    ps: Sequence[float],
    theta: float,
    mode: str = "analytic",
    axes: Sequence[str] = AXES,
    shots: int | None = None,
    seed: int = 0,
) -> Iterator[SweepRecord]:
    """One record per (p, axis), ordered by p then axis.

    Witness flags and averaged fields use the commutator bound; in circuit
    mode only ``bound_approx`` comes from the interferometer.
    """
    cfg = ApproximationConfig(theta)
    rng = np.random.default_rng(seed)
    t1 = witness_threshold(N_QUBITS, 1)
    t2 = witness_threshold(N_QUBITS, 2)
    t_avg = averaged_threshold(N_QUBITS)
    for p in ps:
        rho = ghz_diagonal(p)
        reports = {a: spin_report(rho, a, N_QUBITS, cfg) for a in AXES}
        avg = float(np.mean([r.bound for r in reports.values()]))
        for a in axes:
            r = reports[a]
            approx = r.bound_approx
            if mode == "circuit":
                approx = measure_bound_via_circuit(p, a, theta, shots=shots, rng=rng)
            yield SweepRecord(
                p=float(p),
                axis=a,
                qfi=r.qfi,
                bound=r.bound,
                bound_approx=approx,
                approx_error=r.approx_error,
                witness_k1=r.bound > t1,
                witness_k2=r.bound > t2,
                averaged_value=avg,
                averaged_flag=avg > t_avg,
            )


def write_csv(records, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())


def cmd_sweep(args, out) -> int:
    ps = np.linspace(args.p_min, args.p_max, args.steps)
    axes = AXES if args.axis == "all" else (args.axis,)
    records = sweep_records(ps, args.theta, args.mode, axes, args.shots, args.seed)
    write_csv(records, out)
    return 0


# -- witness ----------------------------------------------------------------


def format_verdict(verdict) -> str:
    lines = [f"[{verdict.quantity_kind}]"]
    for axis, w in verdict.per_axis.items():
        lines.append(
            f"  J_{axis}: {w.value:.6f}  > {w.threshold_k1:g}: {'yes' if w.entangled else 'no':<3}"
            f"  > {w.threshold_k2:g}: {'yes' if w.genuinely_multipartite else 'no'}"
        )
    avg = verdict.averaged
    lines.append(f"  mean: {avg.value:.6f}  > {avg.threshold:g}: {'yes' if avg.entangled else 'no'}")
    return "\n".join(lines)


def cmd_witness(args, out) -> int:
    rho = ghz_diagonal(args.p)
    cfg = ApproximationConfig(args.theta)
    print(f"p = {args.p:g}, theta = {args.theta:.6f}", file=out)
    for kind in QUANTITY_KINDS:
        print(format_verdict(evaluate_witnesses(rho, N_QUBITS, cfg, kind)), file=out)
    margin = ghz_exact_margin(rho)
    verdict = "genuinely tripartite entangled" if ghz_exact_condition(rho) else "not tripartite entangled"
    print(f"[exact GHZ-diagonal condition] margin {margin:.6f}: {verdict}", file=out)
    return 0


# -- circuit ----------------------------------------------------------------


def cmd_circuit(args, out) -> int:
    axes = AXES if args.axis == "all" else (args.axis,)
    rng = np.random.default_rng(args.seed)
    cfg = ApproximationConfig(args.theta)
    rho = ghz_diagonal(args.p)
    print("axis,purity,overlap,bound_approx_circuit,bound_approx_analytic,bound", file=out)
    for a in axes:
        pur = swap_test_overlap(args.p, a, 0.0, args.shots, rng)
        ov = swap_test_overlap(args.p, a, args.theta, args.shots, rng)
        est = 4 * (pur - ov) / args.theta**2
        r = spin_report(rho, a, N_QUBITS, cfg)
        print(",".join([a] + [f"{v:.12g}" for v in (pur, ov, est, r.bound_approx, r.bound)]), file=out)
    return 0


# -- argument parsing -------------------------------------------------------


def _probability(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"p must lie in [0, 1], got {v}")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qasymmetry", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table1", help="threshold table for the GHZ-diagonal case study")
    p_table.add_argument("--out", default="-", help="output file (default stdout)")
    p_table.set_defaults(func=cmd_table1)

    def common(sp):
        sp.add_argument("--theta", type=parse_angle, default=DEFAULT_THETA, help="phase shift in radians (default pi/6)")
        sp.add_argument("--out", default="-", help="output file (default stdout)")

    p_sweep = sub.add_parser("sweep", help="CSV of QFI, bound and witnesses as a function of p")
    p_sweep.add_argument("--p-min", type=_probability, default=0.0)
    p_sweep.add_argument("--p-max", type=_probability, default=1.0)
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument("--axis", choices=[*AXES, "all"], default="all")
    p_sweep.add_argument("--mode", choices=["analytic", "circuit"], default="analytic")
    p_sweep.add_argument("--shots", type=_positive_int, default=None, help="ancilla samples per circuit run (circuit mode)")
    p_sweep.add_argument("--seed", type=int, default=0, help="seed for shot sampling")
    common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_wit = sub.add_parser("witness", help="witness verdicts at a single p")
    p_wit.add_argument("--p", type=_probability, required=True)
    common(p_wit)
    p_wit.set_defaults(func=cmd_witness)

    p_circ = sub.add_parser("circuit", help="run the swap-test interferometer at a single p")
    p_circ.add_argument("--p", type=_probability, required=True)
    p_circ.add_argument("--axis", choices=[*AXES, "all"], default="all")
    p_circ.add_argument("--shots", type=_positive_int, default=None)
    p_circ.add_argument("--seed", type=int, default=0)
    common(p_circ)
    p_circ.set_defaults(func=cmd_circuit)
    return parser


def _validate(parser, args) -> None:
    theta = getattr(args, "theta", None)
    if theta is not None and (theta == 0 or abs(theta) > math.pi):
        parser.error("--theta must be nonzero with |theta| <= pi")
    if args.command == "sweep":
        if not args.p_min < args.p_max:
            parser.error("--p-min must be smaller than --p-max")
        if args.steps < 2:
            parser.error("--steps must be at least 2")
    if getattr(args, "shots", None) is not None and getattr(args, "mode", "circuit") != "circuit":
        parser.error("--shots only applies to circuit mode")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        return args.func(args, out)
    except QAsymmetryError as exc:
        print(f"qasymmetry: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
