"""Command-line front end: ``connect``, ``verify``, ``expand``, ``walks``.

Outputs are machine-readable (json/csv) or human-readable (text); every
output echoes the effective run configuration.  JSON uses the versioned
schema ``heun-connect/1`` with complex numbers as ``[re, im]`` pairs and all
floats printed to 17 significant digits, so parsing and re-emitting is
idempotent at binary64.

Exit codes: 0 success, 1 computational failure (the error name goes to
stderr), 2 usage error (bad flags, missing family fields, order caps).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Any, Optional

from . import __version__
from .combinatorics import compositions, enumerate_walk_types, n_mu
from .connection import METHODS, connection_matrix, det_residual
from .equations import EquationSpec, che_spec, he_spec, hyp_spec, rche_spec
from .errors import FamilyFieldError, HeunConnError, SizeError
from .perturbative import (
    c1_closed_he,
    c1_closed_rche,
    c2_closed_rche,
    c_coefficients,
)
from .precision import check_precision, default_precision, spec_to_precision
from .validation import CheckConfig, full_report

SCHEMA = "heun-connect/1"

_ENTRY_KEYS = ("++", "+-", "-+", "--")


@dataclass(frozen=True)
class RunConfig:
    """Effective run configuration, echoed in every output."""

    method: str = "cf"
    tol: float = 1e-10
    max_depth: int = 2**20
    K: int = 400
    precision: str = "double"
    output: str = "text"
    seed: int = 0


# ---------------------------------------------------------------------------
# parsing helpers


def parse_complex(text: str):
    """Complex flag literal: ``0.1`` (real) or ``0.1+0.05i``."""
    s = text.strip().replace(" ", "")
    try:
        val = complex(s.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real or a+bi complex literal: {text!r}")
    return val.real if val.imag == 0.0 else val


_FAMILY_ALIASES = {
    "hyp": "HYP",
    "rche": "RCHE",
    "che": "CHE",
    "he": "HE",
    "heun": "HE",
}


def build_spec(args: argparse.Namespace) -> EquationSpec:
    family = _FAMILY_ALIASES[args.family.lower()]
    lam = args.lam if args.lam is not None else 0.0
    if family == "HYP":
        if lam:
            raise FamilyFieldError("HYP has no coupling; drop --lambda")
        return hyp_spec(args.theta0, args.theta1, theta_inf_hyp=args.thetainf)
    if family == "RCHE":
        return rche_spec(args.theta0, args.theta1, omega=args.omega, lam=lam)
    if family == "CHE":
        return che_spec(
            args.theta0,
            args.theta1,
            omega=args.omega,
            theta_star=args.thetastar,
            lam=lam,
        )
    return he_spec(
        args.theta0,
        args.theta1,
        omega=args.omega,
        theta_t=args.thetat,
        theta_inf=args.thetainf,
        lam=lam,
    )


def _spec_params(spec: EquationSpec) -> dict:
    out: dict = {"theta0": spec.theta0, "theta1": spec.theta1}
    if spec.family != "HYP":
        out["lambda"] = spec.lam
    if spec.family == "HYP":
        out["theta_inf"] = spec.theta_inf_hyp
    elif spec.family == "RCHE":
        out["omega"] = spec.omega
    elif spec.family == "CHE":
        out["omega"] = spec.omega
        out["theta_star"] = spec.theta_star
    else:
        out["omega"] = spec.omega
        out["theta_t"] = spec.theta_t
        out["theta_inf"] = spec.theta_inf
    return out


# ---------------------------------------------------------------------------
# output formatting


def format_float(x: float) -> str:
    """17 significant digits: bit-faithful round-trip at binary64."""
    return "%.17g" % x


def _json_scalar(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isfinite(v):
            return format_float(v)
        return "null"
    if isinstance(v, complex):
        return f"[{format_float(v.real)}, {format_float(v.imag)}]"
    if isinstance(v, str):
        out = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    raise TypeError(f"not JSON-serializable here: {type(v)}")


def _is_scalar(v: Any) -> bool:
    return v is None or isinstance(v, (bool, int, float, complex, str))


def dump_json(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON emitter with fixed float formatting."""
    pad = "  " * indent
    if _is_scalar(obj):
        return _json_scalar(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad}  {_json_scalar(str(k))}: {dump_json(v, indent + 1)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(_is_scalar(v) and not isinstance(v, str) for v in seq):
            return "[" + ", ".join(_json_scalar(v) for v in seq) + "]"
        items = [f"{pad}  {dump_json(v, indent + 1)}" for v in seq]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    raise TypeError(f"not JSON-serializable here: {type(obj)}")


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, complex):
        return f"{format_float(v.real)}{'+' if v.imag >= 0 else '-'}{format_float(abs(v.imag))}i"
    s = str(v)
    if any(ch in s for ch in ",\"\n"):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _csv(rows: list) -> str:
    return "\n".join(",".join(_csv_cell(c) for c in row) for row in rows) + "\n"


def _config_echo(cfg: RunConfig) -> dict:
    return {
        "method": cfg.method,
        "tol": cfg.tol,
        "max_depth": cfg.max_depth,
        "K": cfg.K,
        "precision": cfg.precision,
        "output": cfg.output,
        "seed": cfg.seed,
    }


def _fmt_c(v: complex) -> str:
    return f"{format_float(v.real)} {'+' if v.imag >= 0 else '-'} {format_float(abs(v.imag))}i"


def _strip_runtimes(obj: Any) -> Any:
    """Golden files must be reproducible; wall-clock fields are zeroed."""
    if isinstance(obj, dict):
        return {
            k: (0.0 if k == "runtime" else _strip_runtimes(v)) for k, v in obj.items()
        }
    if isinstance(obj, list):
        return [_strip_runtimes(v) for v in obj]
    return obj


def _write_output(text: str, golden_payload: Optional[dict], golden_path: Optional[str]) -> None:
    sys.stdout.write(text)
    if golden_path:
        golden = dump_json(_strip_runtimes(golden_payload)) + "\n"
        directory = os.path.dirname(os.path.abspath(golden_path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(golden)
            os.replace(tmp, golden_path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


# ---------------------------------------------------------------------------
# subcommands


def cmd_connect(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = build_spec(args)
    work_spec = spec_to_precision(spec, cfg.precision)
    mat = connection_matrix(
        work_spec,
        method=cfg.method,
        tol=cfg.tol,
        allow_large_coupling=args.allow_large_coupling,
        max_depth=cfg.max_depth,
    )
    payload = {
        "schema": SCHEMA,
        "command": "connect",
        "family": spec.family,
        "params": _spec_params(spec),
        "method": mat.method,
        "precision": cfg.precision,
        "depth": mat.depth_or_K,
        "est_error": float(mat.err_estimate),
        "C": {k: complex(mat[k]) for k in _ENTRY_KEYS},
        "det": complex(mat.det()),
        "det_residual": float(det_residual(mat)),
        "config": _config_echo(cfg),
    }
    if cfg.output == "json":
        text = dump_json(payload) + "\n"
    elif cfg.output == "csv":
        rows = [["entry", "re", "im"]]
        rows += [[k, complex(mat[k]).real, complex(mat[k]).imag] for k in _ENTRY_KEYS]
        rows += [
            ["det", complex(mat.det()).real, complex(mat.det()).imag],
            ["det_residual", det_residual(mat), 0.0],
            ["est_error", mat.err_estimate, 0.0],
        ]
        text = _csv(rows)
    else:
        lines = [
            f"connection matrix  family={spec.family}  method={mat.method}  "
            f"precision={cfg.precision}",
            f"params: " + ", ".join(f"{k}={v}" for k, v in _spec_params(spec).items()),
        ]
        for k in _ENTRY_KEYS:
            lines.append(f"  C[{k}] = {_fmt_c(complex(mat[k]))}")
        lines += [
            f"  det    = {_fmt_c(complex(mat.det()))}",
            f"  det residual {det_residual(mat):.3e}   est error {mat.err_estimate:.3e}   "
            f"depth {mat.depth_or_K}",
        ]
        text = "\n".join(lines) + "\n"
    _write_output(text, payload, args.golden_out)
    return 0


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = build_spec(args)
    if args.tol is not None:
        t = args.tol
        check_cfg = CheckConfig(
            K=cfg.K,
            tol_identity=t,
            tol_det=t,
            tol_method=t,
            tol_ss=t,
            tol_monodromy=t,
            tol_closed=t,
            tol_limit=t,
            tol_reflection=t,
            tol_tail=t,
            matrix_tol=min(1e-10, t),
            include_slow=not args.fast,
        )
    else:
        check_cfg = CheckConfig(K=cfg.K, include_slow=not args.fast)
    report = full_report(spec, check_cfg)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "family": spec.family,
        "params": _spec_params(spec),
        "passed": report.passed,
        "checks": report.as_dict()["checks"],
        "config": _config_echo(cfg),
    }
    if cfg.output == "json":
        text = dump_json(payload) + "\n"
    elif cfg.output == "csv":
        rows = [["name", "passed", "residual", "tol", "runtime", "detail"]]
        rows += [
            [c.name, c.passed, c.residual, c.tol, c.runtime, c.detail]
            for c in report.checks
        ]
        text = _csv(rows)
    else:
        text = report.summary() + "\n"
    _write_output(text, payload, args.golden_out)
    return 0 if report.passed else 1


def _closed_form_reference(spec: EquationSpec, n: int):
    if spec.family == "RCHE" and n == 1:
        return c1_closed_rche(spec)
    if spec.family == "RCHE" and n == 2:
        return c2_closed_rche(spec)
    if spec.family == "HE" and n == 1:
        return c1_closed_he(spec)
    return None


def cmd_expand(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = build_spec(args)
    coeffs = c_coefficients(spec, args.order)
    table = []
    for n, c in enumerate(coeffs, start=1):
        ref = _closed_form_reference(spec, n)
        table.append(
            {
                "n": n,
                "c": c,
                "closed": ref,
                "diff": abs(c - ref) if ref is not None else None,
            }
        )
    payload = {
        "schema": SCHEMA,
        "command": "expand",
        "family": spec.family,
        "params": _spec_params(spec),
        "N": args.order,
        "coefficients": table,
        "config": _config_echo(cfg),
    }
    if cfg.output == "json":
        text = dump_json(payload) + "\n"
    elif cfg.output == "csv":
        rows = [["n", "re", "im", "closed_re", "closed_im", "abs_diff"]]
        for row in table:
            ref = row["closed"]
            rows.append(
                [
                    row["n"],
                    row["c"].real,
                    row["c"].imag,
                    None if ref is None else ref.real,
                    None if ref is None else ref.imag,
                    row["diff"],
                ]
            )
        text = _csv(rows)
    else:
        lines = [f"series coefficients of ln a_inf  family={spec.family}  N={args.order}"]
        for row in table:
            line = f"  c_{row['n']} = {_fmt_c(row['c'])}"
            if row["closed"] is not None:
                line += f"   closed {_fmt_c(row['closed'])}   |diff| {row['diff']:.3e}"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    _write_output(text, payload, args.golden_out)
    return 0


def cmd_walks(args: argparse.Namespace, cfg: RunConfig) -> int:
    n = args.n
    formula = {mu: n_mu(mu) for mu in compositions(n)}
    census = enumerate_walk_types(n) if n <= 8 else None
    total = sum(formula.values())
    binom = math.comb(2 * n, n)
    table = []
    for mu, count in formula.items():
        entry = {
            "mu": list(mu),
            "n_mu": count,
            "enumerated": None if census is None else census.get(mu, 0),
        }
        entry["equal"] = None if census is None else entry["enumerated"] == count
        table.append(entry)
    payload = {
        "schema": SCHEMA,
        "command": "walks",
        "n": n,
        "types": table,
        "sum": total,
        "binomial": binom,
        "sum_matches_binomial": total == binom,
        "config": _config_echo(cfg),
    }
    if cfg.output == "json":
        text = dump_json(payload) + "\n"
    elif cfg.output == "csv":
        rows = [["mu", "n_mu", "enumerated", "equal"]]
        for entry in table:
            rows.append(
                [
                    "(" + " ".join(str(p) for p in entry["mu"]) + ")",
                    entry["n_mu"],
                    entry["enumerated"],
                    entry["equal"],
                ]
            )
        rows.append(["sum", total, binom, total == binom])
        text = _csv(rows)
    else:
        lines = [f"walk types for n={n} ({len(table)} compositions)"]
        for entry in table:
            mu_s = "(" + ",".join(str(p) for p in entry["mu"]) + ")"
            line = f"  {mu_s:>16}  N_mu {entry['n_mu']:>8}"
            if census is not None:
                line += f"   enumerated {entry['enumerated']:>8}   equal {entry['equal']}"
            lines.append(line)
        lines.append(
            f"  sum {total} vs binom(2n,n) {binom}: "
            + ("match" if total == binom else "MISMATCH")
        )
        text = "\n".join(lines) + "\n"
    _write_output(text, payload, args.golden_out)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--family",
        required=True,
        choices=sorted(_FAMILY_ALIASES),
        help="equation family (heun is an alias for he)",
    )
    sub.add_argument("--theta0", type=parse_complex, required=True,
                     help="exponent parameter at z=0")
    sub.add_argument("--theta1", type=parse_complex, required=True,
                     help="exponent parameter at z=1")
    sub.add_argument("--lambda", dest="lam", type=parse_complex, default=None,
                     help="coupling (default 0; HYP forbids it)")
    sub.add_argument("--omega", type=parse_complex, default=None,
                     help="spectral parameter (RCHE/CHE/HE)")
    sub.add_argument("--thetat", type=parse_complex, default=None,
                     help="exponent parameter at the movable point (HE)")
    sub.add_argument("--thetainf", type=parse_complex, default=None,
                     help="exponent parameter at infinity (HYP/HE)")
    sub.add_argument("--thetastar", type=parse_complex, default=None,
                     help="irregular-point parameter (CHE)")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", choices=("json", "csv", "text"), default="text",
                     help="output format (default text)")
    sub.add_argument("--precision", choices=("double", "high"), default=None,
                     help="working precision; default from HEUN_PRECISION or double")
    sub.add_argument("--seed", type=int, default=0,
                     help="random seed echoed in outputs (default 0)")
    sub.add_argument("--golden-out", default=None, metavar="PATH",
                     help="also write a reproducible JSON artifact (runtimes zeroed)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heunconn",
        description="Connection matrices between Frobenius bases at z=0 and z=1 "
        "for the Heun family of equations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("connect", help="compute the 2x2 connection matrix")
    _add_family_flags(p)
    _add_common_flags(p)
    p.add_argument("--method", choices=METHODS, default="cf",
                   help="route (default cf)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="target tolerance for iterative routes (default 1e-10)")
    p.add_argument("--max-depth", type=int, default=2**20,
                   help="depth/truncation cap for iterative routes (default 2^20)")
    p.add_argument("--K", type=int, default=400,
                   help="series truncation echoed to series-based routes (default 400)")
    p.add_argument("--allow-large-coupling", action="store_true",
                   help="bypass the |lambda| < 0.9 safety gate")
    p.set_defaults(func=cmd_connect)

    p = subs.add_parser("verify", help="run the consistency-check suite")
    _add_family_flags(p)
    _add_common_flags(p)
    p.add_argument("--tol", type=float, default=None,
                   help="override every check tolerance with one value")
    p.add_argument("--K", type=int, default=400,
                   help="series truncation for the identity check (default 400)")
    p.add_argument("--fast", action="store_true",
                   help="skip the slow checks (family limits, slopes, tails)")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("expand", help="coupling-series coefficients of ln a_inf")
    _add_family_flags(p)
    _add_common_flags(p)
    p.add_argument("--order", type=int, default=6, metavar="N",
                   help="number of coefficients, at most 8 (default 6)")
    p.set_defaults(func=cmd_expand)

    p = subs.add_parser("walks", help="walk-type counts and cross-checks")
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True,
                   help="composition weight; formula to 16, enumeration to 8")
    p.set_defaults(func=cmd_walks)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    precision = args.precision if args.precision else default_precision()
    check_precision(precision)
    return RunConfig(
        method=getattr(args, "method", "cf"),
        tol=args.tol if getattr(args, "tol", None) is not None else 1e-10,
        max_depth=getattr(args, "max_depth", 2**20),
        K=getattr(args, "K", 400),
        precision=precision,
        output=args.output,
        seed=args.seed,
    )


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        cfg = _run_config(args)
        return args.func(args, cfg)
    except (SizeError, FamilyFieldError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except HeunConnError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
