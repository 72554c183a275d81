"""Command-line front end: evaluate kernels, run transforms, verify, list spectra.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 domain error, 4 non-convergence, 5 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bargmann import SampledFunction, relativistic_transform_grid
from .coherent import (CoherentLabel, cs_wavefunction, overlap,
                       transform_kernel)
from .disk import LandauIndex, basis_phi, landau_level
from .errors import (DomainError, InputFormatError, NonConvergenceError,
                     RelBargmannError)
from .oscillator import ModelParams, OscParams, eigenfunction, energy
from .verification import SUITES, run_suite

RMAX = 0.85

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_NONCONVERGENCE = 4
EXIT_INPUT = 5

EVAL_FUNCTIONS = ("basis_phi", "eigenfunction", "cs_wavefunction", "overlap",
                  "kernel")


class ConfigError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def parse_grid(spec: str) -> list[complex]:
    """Parse a z grid: a comma list of complex numbers, or
    ``mesh:re0:re1:n,im0:im1:n`` for a rectangular mesh."""
    spec = spec.strip()
    if spec.startswith("mesh:"):
        body = spec[len("mesh:"):]
        try:
            re_part, im_part = body.split(",")
            r0, r1, nr = re_part.split(":")
            i0, i1, ni = im_part.split(":")
            res = np.linspace(float(r0), float(r1), int(nr))
            ims = np.linspace(float(i0), float(i1), int(ni))
        except ValueError as exc:
            raise ConfigError(f"bad mesh spec {spec!r}") from exc
        return [complex(x, y) for x in res for y in ims]
    try:
        return [complex(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad grid spec {spec!r}") from exc


def parse_xi(spec: str) -> list[float]:
    """Parse a xi grid: a comma list, or ``lin:a:b:n``."""
    spec = spec.strip()
    if spec.startswith("lin:"):
        try:
            a, b, n = spec[len("lin:"):].split(":")
            return [float(v) for v in np.linspace(float(a), float(b), int(n))]
        except ValueError as exc:
            raise ConfigError(f"bad xi spec {spec!r}") from exc
    try:
        return [float(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad xi spec {spec!r}") from exc


def load_config_file(path: str) -> dict:
    """Read a key=value config file; blank lines and # comments allowed."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"bad config line {line!r}")
                key, val = line.split("=", 1)
                out[key.strip()] = val.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return out


def _merge_config(args: argparse.Namespace, actions: dict,
                  explicit: set) -> None:
    """Fill argparse values from the config file; explicitly passed flags win."""
    if not args.config:
        return
    file_cfg = load_config_file(args.config)
    for key, raw in file_cfg.items():
        if key not in actions:
            raise ConfigError(f"unknown config key {key!r}")
        if key in explicit:
            continue
        action = actions[key]
        caster = action.type or str
        try:
            setattr(args, key, caster(raw))
        except ValueError as exc:
            raise ConfigError(f"bad value for config key {key!r}: {raw!r}") \
                from exc


def _check_tol(tol: float) -> float:
    if not 1e-12 <= tol <= 1e-2:
        raise ConfigError(f"tol must lie in [1e-12, 1e-2], got {tol}")
    return tol


def _check_grid_cap(points) -> None:
    for z in points:
        if abs(z) > RMAX:
            raise DomainError(
                f"grid point {z} violates the evaluation cap |z| <= {RMAX}")


def _write_text(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _records_to_output(records: list[dict], columns: list[str],
                       fmt: str, meta: dict) -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        for rec in records:
            lines.append(",".join(_fmt(rec[c]) if isinstance(rec[c], float)
                                  else str(rec[c]) for c in columns))
        return "\n".join(lines) + "\n"
    payload = {"meta": meta, "records": records}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _meta(args: argparse.Namespace, **extra) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items())
           if k not in ("func", "explicit_flags") and v is not None}
    cfg.update(extra)
    return {"version": __version__, "config": cfg}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    tol = _check_tol(args.tol)
    fn = args.function
    if fn not in EVAL_FUNCTIONS:
        raise ConfigError(f"unknown function {fn!r}; choose from {EVAL_FUNCTIONS}")
    records: list[dict] = []

    if fn == "eigenfunction":
        if args.xi is None:
            raise ConfigError("eigenfunction evaluation needs --xi")
        osc = OscParams(args.c)
        for xi in parse_xi(args.xi):
            val = eigenfunction(args.k, osc, xi)
            records.append({"xi": float(xi), "re_val": val.real,
                            "im_val": val.imag})
        columns = ["xi", "re_val", "im_val"]
    else:
        if args.grid is None:
            raise ConfigError("this evaluation needs --grid")
        points = parse_grid(args.grid)
        if not points:
            raise ConfigError("empty z grid")
        _check_grid_cap(points)
        if fn == "basis_phi":
            sigma = args.sigma if args.sigma is not None else ModelParams(
                OscParams(args.c), args.m).sigma
            idx = LandauIndex(sigma, args.m)
            for z in points:
                val = complex(basis_phi(args.k, idx, z))
                records.append({"re_z": z.real, "im_z": z.imag,
                                "re_val": val.real, "im_val": val.imag})
            columns = ["re_z", "im_z", "re_val", "im_val"]
        elif fn == "overlap":
            sigma = args.sigma if args.sigma is not None else ModelParams(
                OscParams(args.c), args.m).sigma
            idx = LandauIndex(sigma, args.m)
            if args.w is None:
                raise ConfigError("overlap evaluation needs --w")
            w = complex(args.w)
            _check_grid_cap([w])
            for z in points:
                val = complex(overlap(idx, z, w))
                records.append({"re_z": z.real, "im_z": z.imag,
                                "re_val": val.real, "im_val": val.imag})
            columns = ["re_z", "im_z", "re_val", "im_val"]
        else:  # cs_wavefunction | kernel, on a z x xi grid
            if args.xi is None:
                raise ConfigError(f"{fn} evaluation needs --xi")
            xis = parse_xi(args.xi)
            params = ModelParams(OscParams(args.c), args.m)
            for z in points:
                for xi in xis:
                    if fn == "cs_wavefunction":
                        val = complex(cs_wavefunction(
                            CoherentLabel(z, params), xi))
                    else:
                        val = complex(transform_kernel(params, z, xi))
                    records.append({"re_z": z.real, "im_z": z.imag,
                                    "xi": float(xi), "re_val": val.real,
                                    "im_val": val.imag})
            columns = ["re_z", "im_z", "xi", "re_val", "im_val"]

    text = _records_to_output(records, columns, args.format,
                              _meta(args, tol=tol))
    _write_text(args.out, text)
    return EXIT_OK


def read_sampled_function(path: str) -> SampledFunction:
    """Load a CSV with header ``xi,re,im`` into a SampledFunction."""
    try:
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().strip().lower().replace(" ", "")
            if header != "xi,re,im":
                raise InputFormatError(
                    f"expected header 'xi,re,im', got {header!r}")
            rows = []
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                parts = line.split(",")
                if len(parts) != 3:
                    raise InputFormatError(f"bad sample row {line!r}")
                rows.append([float(p) for p in parts])
    except OSError as exc:
        raise InputFormatError(f"cannot read input {path}: {exc}") from exc
    except ValueError as exc:
        raise InputFormatError(f"non-numeric sample in {path}: {exc}") from exc
    if not rows:
        raise InputFormatError(f"no samples in {path}")
    arr = np.asarray(rows, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InputFormatError(f"non-finite sample value in {path}")
    return SampledFunction(grid=arr[:, 0], values=arr[:, 1] + 1j * arr[:, 2])


def cmd_transform(args: argparse.Namespace) -> int:
    tol = _check_tol(args.tol)
    sampled = read_sampled_function(args.input)
    points = parse_grid(args.grid) if args.grid else []
    if not points:
        raise ConfigError("transform needs a nonempty --grid")
    _check_grid_cap(points)
    params = ModelParams(OscParams(args.c), args.m)
    result = relativistic_transform_grid(params, sampled, points, tol=tol)
    records = [{"re_z": z.real, "im_z": z.imag, "re_val": v.real,
                "im_val": v.imag, "quad_error": float(e)}
               for z, v, e in zip(result.points, result.values, result.errors)]
    columns = ["re_z", "im_z", "re_val", "im_val", "quad_error"]
    text = _records_to_output(records, columns, args.format,
                              _meta(args, tol=tol))
    _write_text(args.out, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    tol = args.tol
    if tol is not None:
        _check_tol(tol)
    if args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}; choose from {SUITES}")
    # only explicitly supplied parameters reach the suites; otherwise each
    # suite runs its documented baseline configuration
    explicit = getattr(args, "explicit_flags", set())
    config: dict = {}
    for key in ("c", "m", "sigma", "kmax", "k"):
        val = getattr(args, key, None)
        if val is not None and key in explicit:
            config[key] = val
    if tol is not None:
        config["tol"] = tol
    report = run_suite(args.suite, config)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    _write_text(args.out, text)
    if args.out:
        status = "PASS" if report["pass"] else "FAIL"
        sys.stdout.write(f"{status}: {args.suite} "
                         f"({sum(c['pass'] for c in report['checks'])}"
                         f"/{len(report['checks'])} checks)\n")
    return EXIT_OK if report["pass"] else EXIT_VERIFY_FAILED


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.kmax < 0:
        raise ConfigError("kmax must be nonnegative")
    osc = OscParams(args.c)
    records = []
    for k in range(args.kmax + 1):
        records.append({"kind": "energy", "index": k,
                        "value": float(energy(k, osc))})
    for m in range(args.m + 1):
        idx = ModelParams(osc, m).landau_index()
        records.append({"kind": "landau", "index": m,
                        "value": float(landau_level(idx))})
    text = _records_to_output(records, ["kind", "index", "value"],
                              args.format, _meta(args))
    _write_text(args.out, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relbargmann",
        description="Relativistic Bargmann-type transforms on the Poincare disk")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--c", type=float, default=1.0,
                       help="oscillator parameter c > 0")
        p.add_argument("--m", type=int, default=0, help="Landau level number")
        p.add_argument("--tol", type=float, default=1e-10,
                       help="tolerance in [1e-12, 1e-2]")
        p.add_argument("--out", type=str, default=None, help="output path")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--grid", type=str, default=None,
                       help="z grid: comma list or mesh:re0:re1:n,im0:im1:n")
        p.add_argument("--config", type=str, default=None,
                       help="key=value config file; flags win")

    p_eval = sub.add_parser("eval", help="evaluate a kernel on a grid")
    common(p_eval)
    p_eval.add_argument("--function", type=str, required=True,
                        choices=EVAL_FUNCTIONS)
    p_eval.add_argument("--k", type=int, default=0, help="basis/state index")
    p_eval.add_argument("--sigma", type=float, default=None,
                        help="disk weight (defaults to 2(gamma+m))")
    p_eval.add_argument("--xi", type=str, default=None,
                        help="xi grid: comma list or lin:a:b:n")
    p_eval.add_argument("--w", type=str, default=None,
                        help="second disk point for overlap")
    p_eval.set_defaults(func=cmd_eval)

    p_tr = sub.add_parser("transform", help="apply the transform to samples")
    common(p_tr)
    p_tr.add_argument("--input", type=str, required=True,
                      help="CSV file with header xi,re,im")
    p_tr.set_defaults(func=cmd_transform)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    common(p_ver)
    p_ver.set_defaults(tol=None)
    p_ver.add_argument("--suite", type=str, required=True)
    p_ver.add_argument("--sigma", type=float, default=None)
    p_ver.add_argument("--kmax", type=int, default=None)
    p_ver.add_argument("--k", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_sp = sub.add_parser("spectrum", help="list oscillator and Landau levels")
    common(p_sp)
    p_sp.add_argument("--kmax", type=int, default=5)
    p_sp.set_defaults(func=cmd_spectrum)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    tokens = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(tokens)
    actions = {a.dest: a for g in parser._subparsers._group_actions
               for a in g.choices[args.command]._actions}
    explicit = {dest for dest, action in actions.items()
                if any(t == opt or t.startswith(opt + "=")
                       for t in tokens for opt in action.option_strings)}
    args.explicit_flags = explicit
    try:
        _merge_config(args, actions, explicit)
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except RelBargmannError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
