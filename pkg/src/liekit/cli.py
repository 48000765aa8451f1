"""Command-line driver: ``liekit <command> ...``.

Every command prints a report to stdout, as text by default or as one JSON
object with ``--format json``. A report records the command line, the
SHA-256 digest of the input file, the seed (for commands that sample), the
results and an overall ``passed`` flag.

Exit status: 0 on success, 1 on a mathematical failure (Jacobi identity
violated, weights that do not grade, reproduction mismatch), 2 on usage,
file or parse errors. Query answers such as "not characteristically
nilpotent" are successes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import LieAlgebra, center, check_jacobi, invariants
from .coadjoint import dual_basis, flat_orbit, generic_index, radical
from .derivations import DEFAULT_SEED, derivation_space, engel_all_nilpotent
from .expr import ParseError, parse_coefficient
from .families import LieFamily
from .fileformat import AlgebraFileError, parse_algebra, render_algebra
from .gab import gab, gab_family, gab_quotient, shipped_family_text
from .gradings import dilation_status, search_positive_diagonal_grading, verify_grading
from .linalg import DimensionError, Matrix, format_combination
from .repro import repro_paper

SEED_ENV = "LIE_KIT_SEED"


class UsageError(Exception):
    """Bad arguments or unreadable input; exit status 2."""


def _rational(text: str, what: str) -> Fraction:
    try:
        return parse_coefficient(text, ()).constant_value()
    except (ParseError, ValueError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _rationals(text: str, what: str) -> list:
    return [_rational(part, what) for part in text.split(",")]


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _matrix_text(m: Matrix) -> str:
    """``m`` as a combination of matrix units ``E[row,col]`` (1-based)."""
    coords = []
    labels = []
    for c in range(m.ncols):
        for r in range(m.nrows):
            coords.append(m[r, c])
            labels.append(f"E[{r + 1},{c + 1}]")
    return format_combination(coords, labels)


def _matrix_json(m: Matrix) -> list:
    return [[str(a) for a in row] for row in m.rows]


# ---------------------------------------------------------------- reports


class Report:
    def __init__(self, command: str, digest: Optional[str], seed: Optional[int] = None):
        self.command = command
        self.digest = digest
        self.seed = seed
        self.results = {}
        self.lines = []
        self.passed = True
        self.raw = None  # printed verbatim instead of the report when set

    def add(self, key: str, value, text: Optional[str] = None) -> None:
        self.results[key] = value
        if text is not None:
            self.lines.append(text)

    def fail(self) -> None:
        self.passed = False

    def as_dict(self) -> dict:
        out = {"command": self.command, "input_sha256": self.digest}
        if self.seed is not None:
            out["seed"] = self.seed
        out["results"] = self.results
        out["passed"] = self.passed
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.as_dict(), indent=2) + "\n"
        head = [f"command: {self.command}"]
        if self.digest is not None:
            head.append(f"input sha256: {self.digest}")
        if self.seed is not None:
            head.append(f"seed: {self.seed}")
        tail = [f"status: {'pass' if self.passed else 'FAIL'}"]
        return "\n".join(head + self.lines + tail) + "\n"


# ---------------------------------------------------------------- input


def _read_input(path: str) -> tuple:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not valid UTF-8") from None
    try:
        obj = parse_algebra(text)
    except AlgebraFileError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return obj, _sha256(data)


def _param_values(pairs: Sequence[str]) -> dict:
    values = {}
    for item in pairs or ():
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"--param expects name=value, got {item!r}")
        if name in values:
            raise UsageError(f"--param {name} given twice")
        values[name] = _rational(value, f"--param {name}")
    return values


def _load(args) -> tuple:
    obj, digest = _read_input(args.file)
    values = _param_values(args.param)
    if isinstance(obj, LieFamily):
        try:
            obj = obj.specialize(values)
        except ValueError as exc:
            raise UsageError(f"{args.file}: {exc} (use --param name=value)") from None
    elif values:
        raise UsageError(f"{args.file} has no parameters; --param is not allowed")
    return obj, digest


def _jacobi_gate(g: LieAlgebra, report: Report) -> bool:
    """Record a Jacobi violation and mark the report failed; True if the identity holds."""
    violation = check_jacobi(g)
    if violation is None:
        return True
    report.add("jacobi", {"ok": False, "triple": [violation.i, violation.j, violation.k]},
               f"Jacobi identity violated: {violation}")
    report.fail()
    return False


def _functional(args, n: int) -> tuple:
    if args.dual_basis_index is not None:
        try:
            return dual_basis(n, args.dual_basis_index)
        except IndexError as exc:
            raise UsageError(str(exc)) from None
    ell = _rationals(args.functional, "--functional")
    if len(ell) != n:
        raise UsageError(f"--functional has {len(ell)} coordinates for a {n}-dimensional algebra")
    return tuple(ell)


def _functional_text(ell: Sequence, labels: Sequence[str]) -> str:
    return format_combination(ell, [f"{name}*" for name in labels])


# ---------------------------------------------------------------- commands


def cmd_check_jacobi(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    violation = check_jacobi(g)
    if violation is None:
        report.add("jacobi", {"ok": True}, "Jacobi identity: ok")
    else:
        report.add("jacobi", {"ok": False, "triple": [violation.i, violation.j, violation.k]},
                   f"Jacobi identity violated: {violation}")
        report.fail()
    return report


def cmd_invariants(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    inv = invariants(g)
    z = center(g)
    report.add("center", z.describe(g.labels), f"center: {z.describe(g.labels)}")
    report.add("center_dim", inv.center_dim, f"center dim: {inv.center_dim}")
    report.add("lcs_dims", list(inv.lcs_dims), f"lower central series dims: {list(inv.lcs_dims)}")
    report.add("nilpotent", inv.nilpotent, f"nilpotent: {str(inv.nilpotent).lower()}")
    idx = inv.nilpotency_index
    report.add("nilpotency_index", idx, f"nilpotency index: {idx if idx is not None else 'n/a'}")
    report.add("filiform", inv.filiform, f"filiform: {str(inv.filiform).lower()}")
    return report


def cmd_derivations(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    der = derivation_space(g)
    report.add("dim", der.dim, f"dim Der: {der.dim}")
    if args.print_basis:
        report.add("basis", [_matrix_json(m) for m in der.basis])
        for n, m in enumerate(der.basis, 1):
            report.lines.append(f"D{n} = {_matrix_text(m)}")
    return report


def cmd_char_nilpotent(args, command: str) -> Report:
    g, digest = _load(args)
    seed = args.seed if args.seed is not None else _default_seed()
    report = Report(command, digest, seed)
    if not _jacobi_gate(g, report):
        return report
    der = derivation_space(g)
    verdict = engel_all_nilpotent(der, seed=seed)
    word = str(verdict.all_nilpotent).lower()
    report.add("characteristically_nilpotent", verdict.all_nilpotent, f"characteristically nilpotent: {word}")
    report.add("der_dim", der.dim, f"dim Der: {der.dim}")
    if verdict.all_nilpotent:
        report.add("flag_dims", list(verdict.flag_dims), f"flag dims: {list(verdict.flag_dims)}")
    else:
        w = verdict.witness
        report.add("witness", None if w is None else _matrix_json(w),
                   "non-nilpotent witness: " + ("none found" if w is None else _matrix_text(w)))
    return report


def cmd_radical(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    ell = _functional(args, g.dim)
    rad = radical(g, ell)
    report.add("functional", [str(a) for a in ell], f"functional: {_functional_text(ell, g.labels)}")
    report.add("radical", rad.describe(g.labels), f"radical: {rad.describe(g.labels)}")
    report.add("dim", rad.dim, f"dim: {rad.dim}")
    report.add("orbit_dim", rad.codim, f"orbit dim: {rad.codim}")
    return report


def cmd_flat_orbit(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    ell = _functional(args, g.dim)
    flat = flat_orbit(g, ell)
    report.add("functional", [str(a) for a in ell], f"functional: {_functional_text(ell, g.labels)}")
    report.add("radical", radical(g, ell).describe(g.labels), f"radical: {radical(g, ell).describe(g.labels)}")
    report.add("center", center(g).describe(g.labels), f"center: {center(g).describe(g.labels)}")
    report.add("flat_orbit", flat, f"flat orbit: {str(flat).lower()}")
    return report


def cmd_index(args, command: str) -> Report:
    g, digest = _load(args)
    seed = args.seed if args.seed is not None else _default_seed()
    report = Report(command, digest, seed)
    if not _jacobi_gate(g, report):
        return report
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    est = generic_index(g, args.samples, seed)
    d = est.as_dict()
    report.add("index", d["min_radical_dim"],
               f"index (sampled upper bound): {est.min_radical_dim}")
    report.add("kind", d["kind"])
    report.add("samples", est.samples, f"samples: {est.samples}")
    report.add("functional", d["functional"], f"attained at: {_functional_text(est.functional, g.labels)}")
    return report


def cmd_grading_verify(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    weights = _rationals(args.weights, "--weights")
    try:
        bad = verify_grading(g, weights)
    except DimensionError as exc:
        raise UsageError(str(exc)) from None
    report.add("weights", [str(w) for w in weights], f"weights: {', '.join(str(w) for w in weights)}")
    if bad is None:
        report.add("grading", True, "grading: ok")
    else:
        i, j, k = bad
        report.add("grading", False, f"grading: violated by [e{i}, e{j}] -> e{k}")
        report.add("violation", list(bad))
        report.fail()
    return report


def cmd_grading_search(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    w = search_positive_diagonal_grading(g)
    if w is None:
        report.add("weights", None, "positive diagonal grading: none in this basis")
    else:
        report.add("weights", [int(a) for a in w],
                   f"positive diagonal grading: {', '.join(str(a) for a in w)}")
    return report


def cmd_dilation_status(args, command: str) -> Report:
    g, digest = _load(args)
    report = Report(command, digest)
    if not _jacobi_gate(g, report):
        return report
    status = dilation_status(g).as_dict()
    detail = {"dilations": lambda: f" (weights {', '.join(str(w) for w in status['weights'])})",
              "no-dilations": lambda: f" ({status['reason']})",
              "unknown": lambda: f" ({status['note']})"}[status["status"]]()
    report.add("dilation_status", status, f"dilation status: {status['status']}{detail}")
    return report


def cmd_family_gab(args, command: str) -> Report:
    if (args.alpha is None) != (args.beta is None):
        raise UsageError("give both --alpha and --beta, or neither for the symbolic family")
    if args.alpha is None:
        if args.quotient:
            raise UsageError("--quotient needs --alpha and --beta")
        obj = gab_family()
    else:
        a = _rational(args.alpha, "--alpha")
        b = _rational(args.beta, "--beta")
        obj = gab_quotient(a, b) if args.quotient else gab(a, b)
    text = render_algebra(obj)
    data = text.encode("utf-8")
    report = Report(command, _sha256(shipped_family_text().encode("utf-8")))
    if args.out is None:
        report.raw = text
        return report
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    report.add("out", args.out, f"wrote: {args.out}")
    report.add("dim", obj.dim, f"dim: {obj.dim}")
    report.add("output_sha256", _sha256(data), f"output sha256: {_sha256(data)}")
    return report


def _grid(text: str) -> list:
    points = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"--grid expects 'alpha,beta;alpha,beta;...', got {chunk!r}")
        points.append((_rational(parts[0], "--grid"), _rational(parts[1], "--grid")))
    return points


def cmd_repro_paper(args, command: str) -> Report:
    seed = args.seed if args.seed is not None else _default_seed()
    grid = _grid(args.grid) if args.grid is not None else None
    result = repro_paper(grid, seed=seed, apply_errata=args.apply_errata)
    report = Report(command, _sha256(shipped_family_text().encode("utf-8")), seed)
    report.add("repro", result.as_dict())
    report.lines.append(result.render_text().rstrip("\n"))
    if not result.passed:
        report.fail()
    return report


# ---------------------------------------------------------------- parser


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    filed = _ArgumentParser(add_help=False, parents=[common])
    filed.add_argument("file", metavar="FILE")
    filed.add_argument("--param", action="append", metavar="NAME=VALUE",
                       help="value for a family parameter, e.g. alpha=1/2 (repeatable)")

    def functional_args(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--functional", metavar="COORDS",
                           help="comma-separated rational coordinates in the dual basis")
        group.add_argument("--dual-basis-index", type=int, metavar="K", help="use e_K* (1-based)")

    parser = _ArgumentParser(prog="liekit", description="Exact invariants of Lie algebras given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    check = sub.add_parser("check", help="identity checks")
    check_sub = check.add_subparsers(dest="check_command", required=True, parser_class=_ArgumentParser)
    p = check_sub.add_parser("jacobi", parents=[filed], help="verify the Jacobi identity")
    p.set_defaults(handler=cmd_check_jacobi)

    p = sub.add_parser("invariants", parents=[filed], help="center, lower central series, filiform test")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("derivations", parents=[filed], help="derivation algebra")
    p.add_argument("--print-basis", action="store_true")
    p.set_defaults(handler=cmd_derivations)

    p = sub.add_parser("char-nilpotent", parents=[filed], help="is every derivation nilpotent?")
    p.add_argument("--seed", type=int, help="seed for the witness search")
    p.set_defaults(handler=cmd_char_nilpotent)

    p = sub.add_parser("radical", parents=[filed], help="radical of the form l([x, y])")
    functional_args(p)
    p.set_defaults(handler=cmd_radical)

    p = sub.add_parser("flat-orbit", parents=[filed], help="is the radical equal to the center?")
    functional_args(p)
    p.set_defaults(handler=cmd_flat_orbit)

    p = sub.add_parser("index", parents=[filed], help="sampled minimum radical dimension")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.set_defaults(handler=cmd_index)

    grading = sub.add_parser("grading", help="diagonal gradings in the given basis")
    grading_sub = grading.add_subparsers(dest="grading_command", required=True, parser_class=_ArgumentParser)
    p = grading_sub.add_parser("verify", parents=[filed], help="check a weight vector")
    p.add_argument("--weights", required=True, metavar="W1,...,WN")
    p.set_defaults(handler=cmd_grading_verify)
    p = grading_sub.add_parser("search", parents=[filed], help="find positive integer weights")
    p.set_defaults(handler=cmd_grading_search)

    p = sub.add_parser("dilation-status", parents=[filed], help="dilations / no dilations / unknown")
    p.set_defaults(handler=cmd_dilation_status)

    family = sub.add_parser("family", help="built-in families")
    family_sub = family.add_subparsers(dest="family_name", required=True, parser_class=_ArgumentParser)
    p = family_sub.add_parser("gab", parents=[common], help="the 11-dimensional family g(alpha, beta)")
    p.add_argument("--alpha", metavar="P/Q")
    p.add_argument("--beta", metavar="P/Q")
    p.add_argument("--quotient", action="store_true", help="write g(alpha, beta)/z instead")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=cmd_family_gab)

    repro = sub.add_parser("repro", help="reproduction suites")
    repro_sub = repro.add_subparsers(dest="repro_name", required=True, parser_class=_ArgumentParser)
    p = repro_sub.add_parser("paper", parents=[common], help="recompute the published claims about g(alpha, beta)")
    p.add_argument("--grid", metavar="A,B;A,B;...", help="parameter points (default: 51-point grid)")
    p.add_argument("--seed", type=int)
    p.add_argument("--apply-errata", action="store_true",
                   help="use the corrected printed derivation basis")
    p.set_defaults(handler=cmd_repro_paper)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        command = " ".join(["liekit"] + argv)
        report = args.handler(args, command)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    stdout.write(report.raw if report.raw is not None else report.render(args.format))
    return 0 if report.passed else 1


def main() -> None:
    sys.exit(run())
