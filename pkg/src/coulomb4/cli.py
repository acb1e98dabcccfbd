"""``coulomb4`` command line: solve, scan, profile, verify, partition.

Exit codes: 0 success, 1 usage error, 2 numerical non-convergence (or a
failed self-check), 3 infeasible constraints.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import __version__
from .checks import run_suite
from .core import (
    ConstraintViolationError,
    ConvergenceError,
    DomainError,
    OverflowGuardError,
    PotentialParams,
    SingularDenominatorError,
    evaluate_wavefunction,
    potential_value,
)
from .fixtures import REFERENCE_SETS
from .gup_solver import (
    build_gup_wavefunction,
    general_condition_residuals,
    solve_first_excited_gup,
    solve_ground_gup,
)
from .oracle import GridTooCoarseError, count_nodes, default_grid, fd_eigen_solve, normalized, ode_residual
from .ordinary_qes import (
    closed_form_energy,
    first_excited_constraint_residual,
    physical_node_position,
    qes_determinant_residual,
    solve_alpha2_ground,
    solve_constraint_n1,
    solve_ordinary,
)
from .thermo import PartitionRequest, partition_euler_maclaurin, thermo_quantities

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGENCE, EXIT_INFEASIBLE = 0, 1, 2, 3
PROFILE_POINTS = 400


class UsageError(Exception):
    pass


class InfeasibleError(Exception):
    pass


@dataclass
class Output:
    """What a command produced: a JSON document and, optionally, a flat table."""

    inputs: dict
    outputs: dict
    residuals: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)
    header: list[str] | None = None
    rows: list[list[Any]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK


# ---------------------------------------------------------------- formatting

def fmt(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    return obj


def render(out: Output, fmt_name: str) -> str:
    if fmt_name == "json":
        doc = {
            "inputs": out.inputs,
            "outputs": out.outputs,
            "residuals": out.residuals,
            "diagnostics": out.diagnostics,
        }
        return json.dumps(_jsonable(doc), indent=2) + "\n"
    buf = io.StringIO()
    for c in out.comments:
        buf.write(f"# {c}\n")
    if out.header is not None:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(out.header)
        for row in out.rows:
            w.writerow([fmt(v) for v in row])
    for c in out.diagnostics.get("trailing_comments", []):
        buf.write(f"# {c}\n")
    return buf.getvalue()


# ---------------------------------------------------------------- arguments

def parse_range(text: Any, name: str, integer_steps: bool = True) -> tuple[float, float, int]:
    """``start,stop,steps`` from a string or a three-element list."""
    parts = text if isinstance(text, (list, tuple)) else str(text).split(",")
    if len(parts) != 3:
        raise UsageError(f"{name}: expected start,stop,steps")
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps_f = float(parts[2])
    except (TypeError, ValueError):
        raise UsageError(f"{name}: non-numeric range {text!r}") from None
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise UsageError(f"{name}: range ends must be finite")
    if integer_steps and steps_f != int(steps_f):
        raise UsageError(f"{name}: steps must be an integer")
    steps = int(steps_f)
    if steps < 2:
        raise UsageError(f"{name}: steps must be at least 2")
    return start, stop, steps


def _float(args, key: str, required: bool = True) -> float | None:
    v = getattr(args, key, None)
    if v is None:
        if required:
            raise UsageError(f"--{key.replace('_', '-')} is required")
        return None
    try:
        return float(v)
    except (TypeError, ValueError):
        raise UsageError(f"--{key.replace('_', '-')}: not a number: {v!r}") from None


def _int(args, key: str, required: bool = True, default: int | None = None) -> int | None:
    v = getattr(args, key, None)
    if v is None:
        if required and default is None:
            raise UsageError(f"--{key.replace('_', '-')} is required")
        return default
    try:
        f = float(v)
    except (TypeError, ValueError):
        raise UsageError(f"--{key.replace('_', '-')}: not an integer: {v!r}") from None
    if f != int(f):
        raise UsageError(f"--{key.replace('_', '-')}: not an integer: {v!r}")
    return int(f)


def _triple(args) -> tuple[float, float, float, float | None, str | None]:
    """``(alpha1, alpha3, alpha4, alpha2_or_None, fixture)``; explicit flags override a fixture."""
    name = getattr(args, "fixture", None)
    base = {}
    if name is not None:
        if name not in REFERENCE_SETS:
            raise UsageError(f"unknown fixture {name!r}; choose from {', '.join(REFERENCE_SETS)}")
        p = REFERENCE_SETS[name].params
        base = {"alpha1": p.alpha1, "alpha2": p.alpha2, "alpha3": p.alpha3, "alpha4": p.alpha4}
    vals = {}
    for k in ("alpha1", "alpha2", "alpha3", "alpha4"):
        v = _float(args, k, required=False)
        vals[k] = v if v is not None else base.get(k)
    for k in ("alpha1", "alpha3", "alpha4"):
        if vals[k] is None:
            raise UsageError(f"--{k} is required (or pass --fixture)")
    if not vals["alpha1"] < 0:
        raise UsageError("alpha1 must be negative")
    if not vals["alpha4"] > 0:
        raise UsageError("alpha4 must be positive")
    return vals["alpha1"], vals["alpha3"], vals["alpha4"], vals["alpha2"], name


def _n(args, allowed=(0, 1), default: int | None = None) -> int:
    n = _int(args, "n", default=default)
    if n not in allowed:
        raise UsageError(f"--n must be one of {allowed}")
    return n


def _wavefunction_doc(spec) -> dict:
    return {
        "power": spec.power,
        "exp_coeffs": list(spec.exp_coeffs),
        "poly_coeffs": list(spec.poly_coeffs),
        "norm_constant": spec.norm_constant,
    }


# ---------------------------------------------------------------- commands

def cmd_solve_ordinary(args) -> Output:
    n = _n(args)
    a1, a3, a4, _, _ = _triple(args)
    sols = solve_ordinary(n, a1, a3, a4)
    if not sols:
        raise InfeasibleError("no real alpha2 closes the constraint")
    rows, docs, resid = [], [], []
    for s in sols:
        wf = normalized(s.wavefunction)
        grid = default_grid(wf)
        res = fd_eigen_solve(lambda x, p=s.params: potential_value(p, x), grid, k=n + 1)
        ev = float(res.eigenvalues[n])
        dev = abs(ev - s.energy) / abs(s.energy)
        node = physical_node_position(s.params) if n == 1 else None
        docs.append({
            "alpha2": s.params.alpha2,
            "energy": s.energy,
            "node_position": node,
            "wavefunction": _wavefunction_doc(wf),
        })
        resid.append({
            "constraint": s.constraint_residual,
            "oracle_eigenvalue": ev,
            "oracle_relative_deviation": dev,
            "oracle_richardson_error": float(res.richardson_error[n]),
            "oracle_node_count": res.node_counts[n],
        })
        rows.append([n, a1, s.params.alpha2, a3, a4, s.energy, s.constraint_residual, ev, dev, res.node_counts[n]])
    return Output(
        inputs={"n": n, "alpha1": a1, "alpha3": a3, "alpha4": a4},
        outputs={"solutions": docs},
        residuals={"solutions": resid},
        diagnostics={"grid_points": grid.points, "root_count": len(sols)},
        header=["n", "alpha1", "alpha2", "alpha3", "alpha4", "energy", "constraint_residual",
                "oracle_eigenvalue", "oracle_relative_deviation", "oracle_node_count"],
        rows=rows,
    )


def cmd_solve_gup(args) -> Output:
    n = _n(args)
    a1 = _float(args, "alpha1")
    beta = _float(args, "beta")
    sols = [solve_ground_gup(a1, beta)] if n == 0 else solve_first_excited_gup(a1, beta)
    docs, resid, rows = [], [], []
    for s in sols:
        wf = normalized(build_gup_wavefunction(s))
        grid = default_grid(wf)
        ode = ode_residual(wf, s.gamma(), grid)
        docs.append({
            "alpha2": s.alpha2, "alpha3": s.alpha3, "alpha4": s.alpha4,
            "eps_ordinary": s.eps_ordinary, "eps_gup": s.eps_gup,
            "bethe_roots": list(s.bethe_roots), "wavefunction": _wavefunction_doc(wf),
        })
        resid.append({
            "residual_norm": s.residual_norm,
            "general_conditions": list(general_condition_residuals(s)),
            "ode_residual": ode,
        })
        x1 = s.bethe_roots[0] if s.bethe_roots else math.nan
        rows.append([n, a1, beta, s.alpha2, s.alpha3, s.alpha4, s.eps_ordinary, s.eps_gup, x1, s.residual_norm, ode])
    return Output(
        inputs={"n": n, "alpha1": a1, "beta": beta},
        outputs={"solutions": docs},
        residuals={"solutions": resid},
        diagnostics={"solution_count": len(sols), "solver": [s.diagnostics for s in sols]},
        header=["n", "alpha1", "beta", "alpha2", "alpha3", "alpha4", "eps_ordinary", "eps_gup",
                "x1", "residual_norm", "ode_residual"],
        rows=rows,
    )


def _scan_point(task: tuple[int, float, float, float]) -> list[tuple[float, float, float]]:
    """``[(alpha2, energy, residual), ...]`` at one grid point; empty when infeasible."""
    n, a1, a3, a4 = task
    if not a4 > 0 or not a3 > -2.0 * a4:
        return []
    try:
        eps = closed_form_energy(n, PotentialParams(a1, 0.0, a3, a4))
        roots = [solve_alpha2_ground(a1, a3, a4)] if n == 0 else solve_constraint_n1(a1, a3, a4)
    except (DomainError, SingularDenominatorError, ZeroDivisionError):
        return []
    out = []
    for a2 in roots:
        p = PotentialParams(a1, a2, a3, a4)
        res = qes_determinant_residual(n, p) if n == 0 else first_excited_constraint_residual(p)
        out.append((a2, eps, res))
    return out


def cmd_scan(args) -> Output:
    n = _n(args)
    a1 = _float(args, "alpha1")
    if not a1 < 0:
        raise UsageError("alpha1 must be negative")
    r3 = parse_range(_required(args, "alpha3_range"), "--alpha3-range")
    r4 = parse_range(_required(args, "alpha4_range"), "--alpha4-range")
    workers = _int(args, "workers", default=1)
    if workers < 1:
        raise UsageError("--workers must be positive")
    a3s, a4s = np.linspace(*r3), np.linspace(*r4)
    tasks = [(n, a1, float(a3), float(a4)) for a3 in a3s for a4 in a4s]
    if workers == 1:
        results = list(map(_scan_point, tasks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_scan_point, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    rows, omitted = [], 0
    for (_, _, a3, a4), found in zip(tasks, results):
        if not found:
            omitted += 1
        for a2, eps, res in found:
            rows.append([a3, a4, a2, eps, res])
    worst = max((abs(r[4]) for r in rows), default=0.0)
    return Output(
        inputs={"n": n, "alpha1": a1, "alpha3_range": list(r3), "alpha4_range": list(r4)},
        outputs={"rows": [dict(zip(["alpha3", "alpha4", "alpha2", "energy", "residual"], r)) for r in rows]},
        residuals={"max_abs_residual": worst},
        diagnostics={"grid_points": len(tasks), "omitted_points": omitted,
                     "trailing_comments": [f"omitted_points={omitted}"]},
        header=["alpha3", "alpha4", "alpha2", "energy", "residual"],
        rows=rows,
        comments=[
            f"scan n={n} alpha1={fmt(a1)}",
            f"alpha3_range={fmt(r3[0])},{fmt(r3[1])},{r3[2]} alpha4_range={fmt(r4[0])},{fmt(r4[1])},{r4[2]}",
            "rows: every real alpha2 root per grid point, ascending; residual is the normalized constraint",
        ],
    )


def _required(args, key: str):
    v = getattr(args, key, None)
    if v is None:
        raise UsageError(f"--{key.replace('_', '-')} is required")
    return v


def cmd_profile(args) -> Output:
    beta = _float(args, "beta", required=False)
    fixture = getattr(args, "fixture", None)
    default_n = REFERENCE_SETS[fixture].n if fixture in REFERENCE_SETS else None
    n = _n(args, default=default_n)
    comments = []
    if beta:
        a1 = _float(args, "alpha1", required=False)
        if a1 is None and fixture in REFERENCE_SETS:
            a1 = REFERENCE_SETS[fixture].params.alpha1
        if a1 is None:
            raise UsageError("--alpha1 is required (or pass --fixture)")
        sols = [solve_ground_gup(a1, beta)] if n == 0 else solve_first_excited_gup(a1, beta)
        sol = sols[0]
        params, energy = sol.params, sol.eps_gup
        spec = build_gup_wavefunction(sol)
        residual = sol.residual_norm
        comments.append(f"gup profile n={n} beta={fmt(beta)} solutions_found={len(sols)} (first shown)")
    else:
        a1, a3, a4, a2_in, _ = _triple(args)
        sols = solve_ordinary(n, a1, a3, a4)
        if not sols:
            raise InfeasibleError("no real alpha2 closes the constraint")
        # n=1: the smaller root carries the node on the half-line
        sol = sols[0]
        params, energy, spec = sol.params, sol.energy, sol.wavefunction
        residual = sol.constraint_residual
        comments.append(f"ordinary profile n={n} alpha2 re-solved from {fmt(a2_in) if a2_in is not None else 'none'}")
    spec = normalized(spec)
    if getattr(args, "x_range", None) is not None:
        lo, hi, pts = parse_range(args.x_range, "--x-range")
        if not 0 < lo < hi:
            raise UsageError("--x-range needs 0 < start < stop")
    else:
        g = default_grid(spec)
        lo, hi, pts = g.x_lo, g.x_hi, PROFILE_POINTS
    x = np.linspace(lo, hi, pts)
    psi = evaluate_wavefunction(spec, x)
    V = potential_value(params, x)
    nodes = count_nodes(psi)
    rows = [[xi, vi, pi * pi, energy] for xi, vi, pi in zip(x, V, psi)]
    if fixture:
        comments.insert(0, f"fixture={fixture}")
    comments += [
        f"alpha1={fmt(params.alpha1)} alpha2={fmt(params.alpha2)} alpha3={fmt(params.alpha3)} alpha4={fmt(params.alpha4)}",
        f"constraint_residual={fmt(residual)} node_count={nodes}",
    ]
    return Output(
        inputs={"n": n, "fixture": fixture, "beta": beta, "x_range": [lo, hi, pts]},
        outputs={"params": list(params.as_tuple()), "energy": energy, "wavefunction": _wavefunction_doc(spec),
                 "x": x, "V": V, "psi_sq_normalized": psi * psi},
        residuals={"constraint": residual},
        diagnostics={"node_count": nodes},
        header=["x", "V", "psi_sq_normalized", "energy"],
        rows=rows,
        comments=comments,
    )


def cmd_verify(args) -> Output:
    scope = getattr(args, "scope", None) or "all"
    if scope not in ("ordinary", "gup", "heun", "thermo", "all"):
        raise UsageError("--scope must be ordinary, gup, heun, thermo or all")
    checks = run_suite(scope)
    ok = all(c.passed for c in checks)
    rows = [["PASS" if c.passed else "FAIL", c.name, c.value, c.limit] for c in checks]
    return Output(
        inputs={"scope": scope},
        outputs={"passed": ok, "checks": [{"name": c.name, "passed": c.passed} for c in checks]},
        residuals={c.name: c.value for c in checks},
        diagnostics={"limits": {c.name: c.limit for c in checks}},
        header=["status", "check", "value", "limit"],
        rows=rows,
        comments=[f"verify scope={scope}: {sum(c.passed for c in checks)}/{len(checks)} passed"],
        exit_code=EXIT_OK if ok else EXIT_NONCONVERGENCE,
    )


def cmd_partition(args) -> Output:
    a1, a3, a4, a2, fixture = _triple(args)
    params = PotentialParams(a1, a2 if a2 is not None else 0.0, a3, a4)
    nu = _int(args, "nu")
    k = _int(args, "k", default=2)
    if nu < 0:
        raise UsageError("--nu must be non-negative")
    if not 1 <= k <= 4:
        raise UsageError("--k must be in [1, 4]")
    T_single = _float(args, "T", required=False)
    T_range = getattr(args, "T_range", None)
    if (T_single is None) == (T_range is None):
        raise UsageError("pass exactly one of --T and --T-range")
    if T_single is not None:
        temps = np.array([T_single])
    else:
        lo, hi, steps = parse_range(T_range, "--T-range")
        spacing = getattr(args, "T_spacing", None) or "linear"
        if spacing not in ("linear", "log"):
            raise UsageError("--T-spacing must be linear or log")
        if not 0 < lo < hi:
            raise UsageError("--T-range needs 0 < start < stop")
        temps = np.geomspace(lo, hi, steps) if spacing == "log" else np.linspace(lo, hi, steps)
    if not np.all(temps > 0):
        raise UsageError("temperatures must be positive")
    results = [partition_euler_maclaurin(PartitionRequest(params, float(t), nu, k)) for t in temps]
    header = ["T", "Z_direct", "Z_EM", "remainder_estimate"]
    rows = [[float(t), r.z_direct, r.z_euler_maclaurin, r.remainder_estimate] for t, r in zip(temps, results)]
    table = None
    if temps.size >= 3:
        table = thermo_quantities(params, temps, nu)
        header += ["F", "U", "C", "S"]
        for row, tr in zip(rows, table):
            row += [tr.F, tr.U, tr.C, tr.S]
    outputs = {"rows": [dict(zip(header, r)) for r in rows]}
    return Output(
        inputs={"params": list(params.as_tuple()), "fixture": fixture, "nu": nu, "k": k, "T": temps},
        outputs=outputs,
        residuals={"em_minus_direct": [r.z_euler_maclaurin - r.z_direct for r in results]},
        diagnostics={"correction_terms": [r.correction_terms for r in results]},
        header=header,
        rows=rows,
        comments=[f"partition nu={nu} k={k}" + (f" fixture={fixture}" if fixture else ""),
                  "endpoint rows of a temperature grid carry no U, C, S"] if table else
                 [f"partition nu={nu} k={k}" + (f" fixture={fixture}" if fixture else "")],
    )


COMMANDS = {
    "solve-ordinary": cmd_solve_ordinary,
    "solve-gup": cmd_solve_gup,
    "scan": cmd_scan,
    "profile": cmd_profile,
    "verify": cmd_verify,
    "partition": cmd_partition,
}
DEFAULT_FORMAT = {"solve-ordinary": "json", "solve-gup": "json"}


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, argument_default=None)
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--config", help="JSON file of flag values; flags override it")

    params = _Parser(add_help=False, argument_default=None)
    params.add_argument("--fixture", help="reference set: " + ", ".join(REFERENCE_SETS))
    for name in ("alpha1", "alpha2", "alpha3", "alpha4"):
        params.add_argument(f"--{name}")

    parser = _Parser(prog="coulomb4", description="Coulomb-4 QES and minimal-length solvers")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("solve-ordinary", parents=[common, params], help="close the ordinary constraint in alpha2")
    p.add_argument("--n")
    p = sub.add_parser("solve-gup", parents=[common], help="self-consistent minimal-length solutions")
    p.add_argument("--n")
    p.add_argument("--alpha1")
    p.add_argument("--beta")
    p = sub.add_parser("scan", parents=[common], help="constraint surface over an (alpha3, alpha4) grid")
    p.add_argument("--n")
    p.add_argument("--alpha1")
    p.add_argument("--alpha3-range", dest="alpha3_range", metavar="START,STOP,STEPS")
    p.add_argument("--alpha4-range", dest="alpha4_range", metavar="START,STOP,STEPS")
    p.add_argument("--workers")
    p = sub.add_parser("profile", parents=[common, params], help="potential and normalized density on a grid")
    p.add_argument("--n")
    p.add_argument("--beta")
    p.add_argument("--x-range", dest="x_range", metavar="START,STOP,POINTS")
    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument("--scope")
    p = sub.add_parser("partition", parents=[common, params], help="truncated partition sum and Euler-Maclaurin")
    p.add_argument("--nu")
    p.add_argument("--k")
    p.add_argument("--T")
    p.add_argument("--T-range", dest="T_range", metavar="START,STOP,STEPS")
    p.add_argument("--T-spacing", dest="T_spacing", choices=["linear", "log"])
    return parser


def _merge_config(args) -> None:
    path = getattr(args, "config", None)
    if path is None:
        return
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a flat JSON object")
    known = vars(args)
    for key, value in data.items():
        dest = key.replace("-", "_")
        if dest in ("command", "config") or dest not in known:
            raise UsageError(f"config key {key!r} is not a flag of {args.command}")
        if known[dest] is None:
            setattr(args, dest, value)


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Attach each option's value with ``=`` so negative numbers and ranges
    such as ``-0.02,0,50`` are not mistaken for flags."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and tok not in _SWITCHES and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


_SWITCHES = {"--help", "--version"}


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Execute one invocation; returns ``(exit_code, stdout_text, stderr_text)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_values(argv))
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        _merge_config(args)
        fmt_name = args.format or DEFAULT_FORMAT.get(args.command, "csv")
        if fmt_name not in ("csv", "json"):
            raise UsageError("--format must be csv or json")
        out = COMMANDS[args.command](args)
        text = render(out, fmt_name)
    except UsageError as exc:
        return EXIT_USAGE, "", f"usage error: {exc}\n"
    except (ConvergenceError, GridTooCoarseError) as exc:
        return EXIT_NONCONVERGENCE, "", f"did not converge: {exc}\n"
    except (InfeasibleError, ConstraintViolationError, DomainError, SingularDenominatorError,
            OverflowGuardError) as exc:
        return EXIT_INFEASIBLE, "", f"infeasible: {exc}\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            return EXIT_USAGE, "", f"usage error: cannot write {args.out}: {exc}\n"
        return out.exit_code, "", ""
    return out.exit_code, text, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, text, err = run(argv)
    sys.stdout.write(text)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
