"""Command-line interface.

Commands: ``solve`` and ``verify`` read a tetrahedron from a JSON file,
``sixth-angle`` reads five angles, ``batch-verify`` drives the seeded
verification corpus.  Exit codes: 0 success/pass, 2 invalid input,
3 non-convergence, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .batch import run_batch_verify
from .errors import NonConvergence, TetrafermatError
from .formula import FiveAngles, sixth_angle
from .geometry import Tetrahedron, direction_config
from .properties import (
    AngleSextuple,
    PropertyReport,
    angle_sextuple,
    verify_fundamental_property,
)
from .solver import FermatSolution, INTERIOR, SolverConfig, classify, solve

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NONCONVERGENCE = 3
EXIT_VERIFICATION_FAILED = 4

ANGLE_KEYS = ("a102", "a103", "a104", "a203", "a204")


class InputError(Exception):
    """Unusable input file (missing, malformed, or failing validation)."""


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation parameters, one instance per command run."""

    command: str
    input_path: str | None = None
    tol: float = 1e-6
    grad_tol: float = 1e-10
    max_iter: int = 10000
    seed: int = 0
    count: int = 1000
    format: str = "text"

    def __post_init__(self):
        if not self.tol > 0:
            raise InputError("tol must be positive")
        if not self.grad_tol > 0:
            raise InputError("grad-tol must be positive")
        if self.max_iter < 1:
            raise InputError("max-iter must be at least 1")
        if self.count < 1:
            raise InputError("count must be at least 1")
        if self.seed < 0:
            raise InputError("seed must be non-negative")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            input_path=getattr(args, "input", None),
            tol=getattr(args, "tol", 1e-6),
            grad_tol=getattr(args, "grad_tol", 1e-10),
            max_iter=getattr(args, "max_iter", 10000),
            seed=getattr(args, "seed", 0),
            count=getattr(args, "count", 1000),
            format=args.format,
        )


@dataclass
class SolutionReport:
    """Everything the solve/verify commands report for one tetrahedron."""

    solution: FermatSolution
    pull_norms: tuple[float, float, float, float]
    angles: AngleSextuple | None
    property_report: PropertyReport | None
    flags: tuple[str, ...]

    def to_dict(self) -> dict:
        sol = self.solution
        d = {
            "kind": sol.kind,
            "point": [float(c) for c in sol.point],
            "vertex_index": sol.vertex_index,
            "objective": sol.objective_value,
            "residual": sol.residual,
            "iterations": sol.iterations,
            "pull_norms": list(self.pull_norms),
            "angles_rad": None,
            "checks": None,
            "flags": list(self.flags),
        }
        if self.angles is not None:
            a = self.angles
            d["angles_rad"] = {
                "a102": a.a102, "a103": a.a103, "a104": a.a104,
                "a203": a.a203, "a204": a.a204, "a304": a.a304,
            }
        if self.property_report is not None:
            r = self.property_report
            d["checks"] = {
                "opposite_angles": list(r.opposite_angle_residuals),
                "cosine_sum": r.cosine_sum_residual,
                "bisector_orthogonality": list(r.bisector_dot_residuals),
                "bisector_antiparallel": list(r.antiparallel_residuals),
                "pass": r.passed,
            }
        return d

    @classmethod
    def from_dict(cls, d: dict, tol: float) -> "SolutionReport":
        solution = FermatSolution(
            kind=d["kind"],
            point=np.array(d["point"]),
            vertex_index=d["vertex_index"],
            residual=d["residual"],
            iterations=d["iterations"],
            objective_value=d["objective"],
        )
        angles = None
        if d["angles_rad"] is not None:
            angles = AngleSextuple(**d["angles_rad"])
        report = None
        if d["checks"] is not None:
            c = d["checks"]
            report = PropertyReport(
                opposite_angle_residuals=tuple(c["opposite_angles"]),
                cosine_sum_residual=c["cosine_sum"],
                bisector_dot_residuals=tuple(c["bisector_orthogonality"]),
                antiparallel_residuals=tuple(c["bisector_antiparallel"]),
                tol=tol,
                passed=c["pass"],
            )
        return cls(
            solution=solution,
            pull_norms=tuple(d["pull_norms"]),
            angles=angles,
            property_report=report,
            flags=tuple(d["flags"]),
        )


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def load_tetrahedron(path: str) -> Tetrahedron:
    """Read {"vertices": [[x,y,z] * 4]} and validate it."""
    data = _load_json(path)
    if "vertices" not in data:
        raise InputError(f'{path}: missing "vertices"')
    try:
        return Tetrahedron(np.array(data["vertices"], dtype=float))
    except (TetrafermatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}")


def load_five_angles(path: str) -> FiveAngles:
    """Read {"angles_deg": [...]} or {"angles_rad": [...]} (five values in
    the order a102, a103, a104, a203, a204)."""
    data = _load_json(path)
    if "angles_deg" in data:
        values = [math.radians(float(v)) for v in data["angles_deg"]]
    elif "angles_rad" in data:
        values = [float(v) for v in data["angles_rad"]]
    else:
        raise InputError(f'{path}: need "angles_deg" or "angles_rad"')
    if len(values) != 5:
        raise InputError(f"{path}: expected 5 angles, got {len(values)}")
    try:
        return FiveAngles(**dict(zip(ANGLE_KEYS, values)))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}")


def build_report(tetra: Tetrahedron, grad_tol: float, max_iter: int,
                 tol: float) -> SolutionReport:
    cls = classify(tetra)
    solution = solve(tetra, SolverConfig(grad_tol=grad_tol, max_iter=max_iter))
    angles = None
    report = None
    if solution.kind == INTERIOR:
        config = direction_config(tetra, solution.point)
        angles = angle_sextuple(config)
        report = verify_fundamental_property(config, tol)
    flags = tuple(dict.fromkeys(cls.flags + solution.flags))
    return SolutionReport(
        solution=solution,
        pull_norms=cls.pull_norms,
        angles=angles,
        property_report=report,
        flags=flags,
    )


def _format_angle_row(name: str, value: float) -> str:
    return f"  {name}: {value:.12f} rad  ({math.degrees(value):.8f} deg)"


def format_report_text(report: SolutionReport) -> str:
    sol = report.solution
    lines = [f"kind: {sol.kind}"]
    lines.append(
        "point: ({:.12g}, {:.12g}, {:.12g})".format(*(float(c) for c in sol.point))
    )
    if sol.vertex_index is not None:
        lines.append(f"vertex index: {sol.vertex_index}")
    lines.append(f"objective: {sol.objective_value:.12g}")
    lines.append(f"residual: {sol.residual:.6e}")
    lines.append(f"iterations: {sol.iterations}")
    lines.append(
        "pull norms: " + "  ".join(f"{p:.9f}" for p in report.pull_norms)
    )
    if report.angles is not None:
        lines.append("angles:")
        a = report.angles
        for name, value in zip(
            ("a102", "a103", "a104", "a203", "a204", "a304"), a.as_tuple()
        ):
            lines.append(_format_angle_row(name, value))
    if report.property_report is not None:
        r = report.property_report
        lines.append(f"checks (tol {r.tol:.3e}):")
        lines.append(
            "  opposite angles:        "
            + "  ".join(f"{x:.3e}" for x in r.opposite_angle_residuals)
        )
        lines.append(f"  cosine sum:             {r.cosine_sum_residual:.3e}")
        lines.append(
            "  bisector orthogonality: "
            + "  ".join(f"{x:.3e}" for x in r.bisector_dot_residuals)
        )
        lines.append(
            "  bisector antiparallel:  "
            + "  ".join(f"{x:.3e}" for x in r.antiparallel_residuals)
        )
        lines.append("  " + ("PASS" if r.passed else "FAIL"))
    if report.flags:
        lines.append("flags: " + ", ".join(report.flags))
    return "\n".join(lines)


def cmd_solve(cfg: RunConfig, verify_mode: bool = False) -> int:
    tetra = load_tetrahedron(cfg.input_path)
    try:
        report = build_report(tetra, cfg.grad_tol, cfg.max_iter, cfg.tol)
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    if cfg.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(format_report_text(report))
    if verify_mode and report.property_report is not None \
            and not report.property_report.passed:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_sixth_angle(cfg: RunConfig) -> int:
    fa = load_five_angles(cfg.input_path)
    result = sixth_angle(fa)
    if cfg.format == "json":
        out = {
            "b_magnitude": result.b_magnitude,
            "cos_plus": result.cos_plus,
            "cos_minus": result.cos_minus,
            "realizable_plus": result.realizable_plus,
            "realizable_minus": result.realizable_minus,
            "angle_plus_rad": result.angle(1) if result.realizable_plus else None,
            "angle_minus_rad": result.angle(-1) if result.realizable_minus else None,
        }
        print(json.dumps(out, indent=2))
    else:
        lines = [
            "input angles (rad): "
            + "  ".join(
                f"{k}={getattr(fa, k):.9f}" for k in ANGLE_KEYS
            ),
            f"radical magnitude: {result.b_magnitude:.12g}",
        ]
        for label, cos_value, ok in (
            ("plus branch ", result.cos_plus, result.realizable_plus),
            ("minus branch", result.cos_minus, result.realizable_minus),
        ):
            if ok:
                ang = math.acos(min(1.0, max(-1.0, cos_value)))
                lines.append(
                    f"{label}: cos = {cos_value:.12g}, angle = {ang:.12f} rad "
                    f"({math.degrees(ang):.8f} deg)"
                )
            else:
                lines.append(
                    f"{label}: cos = {cos_value:.12g} (not realizable)"
                )
        print("\n".join(lines))
    return EXIT_OK


def cmd_batch_verify(cfg: RunConfig) -> int:
    summary = run_batch_verify(
        seed=cfg.seed,
        count=cfg.count,
        tol=cfg.tol,
        grad_tol=cfg.grad_tol,
        max_iter=cfg.max_iter,
    )
    print(summary.format_text())
    return EXIT_OK if summary.passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrafermat",
        description="Minimize the distance sum over a tetrahedron and verify "
        "the junction-angle identities of the minimizer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("--input", required=True, help="JSON input file")
        p.add_argument("--tol", type=float, default=1e-6,
                       help="verification tolerance (default 1e-6)")
        p.add_argument("--grad-tol", type=float, default=1e-10,
                       help="solver residual tolerance (default 1e-10)")
        p.add_argument("--max-iter", type=int, default=10000,
                       help="solver iteration budget (default 10000)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_solve = sub.add_parser("solve", help="solve one tetrahedron")
    add_common(p_solve)
    p_verify = sub.add_parser(
        "verify", help="solve and fail (exit 4) when any identity check fails"
    )
    add_common(p_verify)
    p_sixth = sub.add_parser(
        "sixth-angle", help="evaluate the sixth angle from five given angles"
    )
    p_sixth.add_argument("--input", required=True, help="JSON input file")
    p_sixth.add_argument("--format", choices=("text", "json"), default="text")
    p_batch = sub.add_parser(
        "batch-verify", help="verify a corpus of seeded random tetrahedra"
    )
    p_batch.add_argument("--seed", type=int, default=0)
    p_batch.add_argument("--count", type=int, default=1000)
    add_common(p_batch, with_input=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "solve":
            return cmd_solve(cfg)
        if cfg.command == "verify":
            return cmd_solve(cfg, verify_mode=True)
        if cfg.command == "sixth-angle":
            return cmd_sixth_angle(cfg)
        return cmd_batch_verify(cfg)
    except (InputError, TetrafermatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
