"""Command-line front end.

Subcommands: ``enumerate``, ``check``, ``canonical``, ``center`` and ``orbit``.
Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .canonical import CanonicalError, Scaling, apply_scaling, canonical_forms, reduce_field
from .enumerator import (
    AffineForm,
    ConsistencyError,
    Family,
    FamilyKey,
    ParamWeightVector,
    enumeration_report,
)
from .poly import VectorField
from .weights import WeightVector, format_index

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_COLUMNS = ("name", "part", "t", "tt", "p", "q", "dt", "k", "support_p", "support_q", "w", "w_m", "lambda")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    degree: int | None = None
    s_bound: int | None = None
    d_bound: int | None = None
    step: float = 1e-3
    steps: int = 100000
    tol: float = 1e-4
    fmt: str = "text"
    output: str | None = None
    complete: bool = False
    seed: int = 0

    def validate(self) -> None:
        if self.degree is not None and self.degree < 2:
            raise UsageError("degree must exceed 1")
        if self.step <= 0 or self.tol <= 0:
            raise UsageError("tolerances and step must be positive")
        if self.steps < 1:
            raise UsageError("steps must be at least 1")
        for name in ("s_bound", "d_bound"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"{name.replace('_', '-')} must be positive")


# serialization


def family_to_record(fam: Family) -> dict:
    sp, sq = fam.slots()
    return {
        "name": fam.name,
        "degree": fam.n,
        "part": fam.key.part,
        "t": fam.key.t,
        "tt": fam.key.tt,
        "p": fam.key.p,
        "q": fam.key.q,
        "dt": fam.key.dt,
        "k": fam.key.k,
        "support_p": [[i, j, c] for i, j, c in sp],
        "support_q": [[i, j, c] for i, j, c in sq],
        "w": {
            "forms": [{"coef": f.coef, "const": f.const, "param": f.param, "mod": f.mod} for f in fam.w.forms],
            "param": fam.w.param,
            "start": fam.w.start,
            "step": fam.w.step,
        },
        "w_m": list(fam.w_m.as_tuple()),
        "lambda": format_index(fam.lam),
    }


def record_to_family(rec: dict) -> Family:
    w = rec["w"]
    num, den = rec["lambda"].split("/")
    return Family(
        key=FamilyKey(rec["part"], rec["t"], rec["tt"], rec["p"], rec["q"], rec["dt"], rec["k"]),
        support_p=frozenset((i, j) for i, j, _ in rec["support_p"]),
        support_q=frozenset((i, j) for i, j, _ in rec["support_q"]),
        w=ParamWeightVector(
            tuple(AffineForm(f["coef"], f["const"], f["param"], f["mod"]) for f in w["forms"]),
            w["param"],
            w["start"],
            w["step"],
        ),
        w_m=WeightVector(*rec["w_m"]),
        lam=Fraction(int(num), int(den)),
        n=rec["degree"],
    )


def _support_text(support) -> str:
    return ";".join(f"{i}:{j}" for i, j in sorted(support))


def render_families(fams: list[Family], fmt: str, removed=()) -> str:
    if fmt == "json":
        doc = {
            "families": [family_to_record(f) for f in fams],
            "removed": [
                {
                    "name": r.key.name,
                    "support_p": sorted(list(e) for e in r.support_p),
                    "support_q": sorted(list(e) for e in r.support_q),
                    "w_m": list(r.w_m.as_tuple()) if r.w_m else None,
                }
                for r in removed
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for f in fams:
            k = f.key
            writer.writerow(
                [f.name, k.part, k.t, k.tt, k.p, k.q, _opt(k.dt), _opt(k.k),
                 _support_text(f.support_p), _support_text(f.support_q), str(f.w),
                 str(f.w_m), format_index(f.lam)]
            )
        return buf.getvalue()
    lines = [f"{f.describe()}  w_m={f.w_m}  lambda={format_index(f.lam)}" for f in fams]
    lines.append(f"families: {len(fams)}  removed (index 0): {len(removed)}")
    return "\n".join(lines) + "\n"


def _opt(v) -> str:
    return "" if v is None else str(v)


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# commands


def cmd_enumerate(cfg: RunConfig) -> int:
    report = enumeration_report(cfg.degree, complete=cfg.complete)
    _emit(render_families(report.families, cfg.fmt, report.removed), cfg)
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    from .oracle import brute_force_families, diff_family_sets

    fams = enumeration_report(cfg.degree, complete=cfg.complete).families
    oracle = brute_force_families(cfg.degree, cfg.s_bound, cfg.d_bound)
    diff = diff_family_sets(oracle, fams)
    lines = [f"oracle: {len(oracle)}  enumerator: {len(fams)}"] + diff.lines()
    lines.append("no differences" if diff.empty else "differences found")
    _emit("\n".join(lines) + "\n", cfg)
    return EXIT_OK if diff.empty else EXIT_FAIL


def cmd_canonical(cfg: RunConfig, p: str | None, q: str | None, trials: int) -> int:
    if p is not None and q is not None:
        try:
            vf = VectorField.parse(p, q)
        except Exception as exc:  # sympy raises many types on bad input
            raise UsageError(f"cannot parse field: {exc}") from exc
        try:
            label, s = reduce_field(vf)
        except CanonicalError as exc:
            _emit(f"error: {exc}\n", cfg)
            return EXIT_FAIL
        target = apply_scaling(vf, s)
        _emit(
            f"label: {label}\nscaling: alpha={s.alpha} beta={s.beta} gamma={s.gamma}\n"
            f"form: {target}\n",
            cfg,
        )
        return EXIT_OK
    if cfg.degree not in (2, 3):
        raise UsageError("give P and Q, or --degree 2 or 3 for a round-trip check")
    rng = random.Random(cfg.seed)
    failures, total = [], 0
    for label, vf in canonical_forms(cfg.degree):
        for _ in range(trials):
            s = Scaling(*(rng.choice((1, -1)) * 2.0 ** rng.randint(-3, 3) for _ in range(3)))
            got, _ = reduce_field(apply_scaling(vf, s))
            total += 1
            same = (got.id, got.k, got.signs, got.variant) == (label.id, label.k, label.signs, label.variant)
            if same and label.residual_params:
                same = abs(float(got.residual_params[0][1]) - float(label.residual_params[0][1])) <= 1e-10
            if not same:
                failures.append(f"{label} -> {got}")
    lines = failures + [f"round trips: {total - len(failures)}/{total} ok (seed {cfg.seed})"]
    _emit("\n".join(lines) + "\n", cfg)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_center(cfg: RunConfig) -> int:
    from .centers import CENTER, UNRESOLVED, center_report

    if cfg.degree not in (2, 3):
        raise UsageError("center analysis supports degree 2 or 3")
    rows = center_report(cfg.degree, complete=cfg.complete)
    lines = [f"{r.name}\t{r.verdict}\t{r.technique}\t{r.detail}" for r in rows]
    found = [r for r in rows if r.verdict == CENTER]
    summary = f"centers: {len(found)}"
    if found:
        summary += " (" + ", ".join(r.label.name if r.label else r.name for r in found) + ")"
    lines.append(summary)
    _emit("\n".join(lines) + "\n", cfg)
    return EXIT_FAIL if any(r.verdict == UNRESOLVED for r in rows) else EXIT_OK


def cmd_orbit(cfg: RunConfig, x0: float, y0: float) -> int:
    from .dynamics import ANNULUS, CENTER_FIELD, CENTER_INTEGRAL, integrate_to_return, rk4_integrate

    h0 = CENTER_INTEGRAL.evaluate(x0, y0)
    header = [f"# field: {CENTER_FIELD}", f"# h={h0:.12g}"]
    if not float(ANNULUS[0]) < h0 < float(ANNULUS[1]):
        header.append("# warning: start point lies outside the period annulus 0 < H < 3/4")
    px, py = CENTER_FIELD.evaluate(x0, y0)
    if px == 0 and py == 0:
        samples = rk4_integrate(CENTER_FIELD, x0, y0, cfg.step, 1).samples[:1]
        samples.append((cfg.step * cfg.steps, x0, y0))
        header.append("# fixed point; closure=false")
    else:
        traj, ret = integrate_to_return(CENTER_FIELD, x0, y0, cfg.step, cfg.steps, cfg.tol)
        samples = traj.samples
        status = f"# closure={'true' if ret.closed else 'false'}"
        if ret.time is not None:
            status += f" return_time={ret.time:.9g} return_x={ret.x:.12g}"
        if traj.truncated:
            status += " truncated=true"
        header.append(status)
    header.append("# t\tx\ty\tH")
    rows = [f"{t:.6f}\t{x:.12g}\t{y:.12g}\t{CENTER_INTEGRAL.evaluate(x, y):.12g}" for t, x, y in samples]
    _emit("\n".join(header + rows) + "\n", cfg)
    return EXIT_OK


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqhsys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree_required=True):
        p.add_argument("--degree", type=int, required=degree_required)
        p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output")
        p.add_argument("--complete", action="store_true", help="include supports missing from the classical listing")

    p = sub.add_parser("enumerate", help="list the families of one degree")
    common(p)
    p = sub.add_parser("check", help="compare the enumeration with the brute-force scan")
    common(p)
    p.add_argument("--s-bound", type=int)
    p.add_argument("--d-bound", type=int)
    p = sub.add_parser("canonical", help="reduce a field, or run a scaling round-trip check")
    common(p, degree_required=False)
    p.add_argument("p", nargs="?", help="x' as an expression in x and y")
    p.add_argument("q", nargs="?", help="y' as an expression in x and y")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p = sub.add_parser("center", help="center verdict for every canonical form")
    common(p)
    p = sub.add_parser("orbit", help="integrate x' = x^2 - y^3, y' = x from a start point")
    p.add_argument("x0", type=float)
    p.add_argument("y0", type=float)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--steps", type=int, default=100000)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        degree=getattr(args, "degree", None),
        s_bound=getattr(args, "s_bound", None),
        d_bound=getattr(args, "d_bound", None),
        step=getattr(args, "step", 1e-3),
        steps=getattr(args, "steps", 100000),
        tol=getattr(args, "tol", 1e-4),
        fmt=getattr(args, "fmt", "text"),
        output=args.output,
        complete=getattr(args, "complete", False),
        seed=getattr(args, "seed", 0),
    )
    try:
        cfg.validate()
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "check":
            return cmd_check(cfg)
        if args.command == "canonical":
            return cmd_canonical(cfg, args.p, args.q, args.trials)
        if args.command == "center":
            return cmd_center(cfg)
        return cmd_orbit(cfg, args.x0, args.y0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
