"""Command-line front end.

Every subcommand writes machine-readable output to stdout or to ``--out``.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
import json
import math
import re
import sys
import warnings
from pathlib import Path
from typing import Sequence

import numpy as np
import yaml

from . import eft_engine, entanglement, lattice_compare, minimality
from .errors import DomainError
from .flavor_sectors import parse_sector, realized_sectors, sector_summary, su3_basis
from .smatrix import PhaseShiftSet, build, np_smatrix

DEFAULTS = {
    "seed": entanglement.DEFAULT_SEED,
    "samples": entanglement.DEFAULT_SAMPLES,
    "tol": minimality.DEFAULT_TOL,
    "format": "json",
    "workers": 1,
    "mass": 938.9187,  # MeV, isospin-averaged nucleon
    "mu": 0.0,
}
PHASE_KEYS = ("27", "8S", "1", "10", "10bar", "8A")
WILSON_KEYS = ("c1", "c2", "c3", "c4", "c5", "c6")
_DEGREE = re.compile(r"(deg|degrees?|°)\s*$", re.IGNORECASE)


class UsageError(Exception):
    pass


def radians(text: str) -> float:
    """Parse an angle in radians; degree-suffixed input is refused."""
    s = str(text).strip()
    if _DEGREE.search(s):
        raise argparse.ArgumentTypeError(f"angles are radians only, got {text!r}")
    try:
        value = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite, got {text!r}")
    return value


def parse_phase_spec(text: str) -> dict[str, float]:
    """``equal:x``, ``swap:x`` (antisymmetric irreps at x, symmetric at x + pi/2) or ``27=x,10bar=y``."""
    kind, sep, rest = text.partition(":")
    if sep and kind in ("equal", "swap"):
        x = radians(rest)
        ps = PhaseShiftSet.equal(x) if kind == "equal" else PhaseShiftSet.swap_point(x)
        return ps.as_dict()
    out = {}
    for item in text.split(","):
        key, eq, val = item.partition("=")
        key = key.strip().lstrip("d")
        key = {"8s": "8S", "8a": "8A"}.get(key, key)
        if not eq or key not in PHASE_KEYS:
            raise argparse.ArgumentTypeError(f"bad phase spec {text!r}")
        out[key] = radians(val)
    return out


# ----------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, help=f"root RNG seed (default {DEFAULTS['seed']})")
    p.add_argument("--samples", type=int, help=f"Monte Carlo samples (default {DEFAULTS['samples']})")
    p.add_argument("--tol", type=float, help=f"verdict tolerance (default {DEFAULTS['tol']})")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), help="output format (default json; csv for scan)")
    p.add_argument("--workers", type=int, help="worker threads; results do not depend on it")
    p.add_argument("--config", help="JSON or YAML file; its values win over flags")
    return p


def _phase_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phases", type=parse_phase_spec, help="equal:X, swap:X or 27=X,10bar=Y,... (radians)")
    for key in PHASE_KEYS:
        p.add_argument(f"--d{key}", dest=f"d{key}", type=radians, help=f"phase of the {key} channel (radians)")


def _wilson_args(p: argparse.ArgumentParser) -> None:
    for key in WILSON_KEYS:
        p.add_argument(f"--{key}", type=float, help=f"Wilson coefficient {key} (MeV^-2)")
    p.add_argument("--su6", help="a,b: use the two-parameter SU(6) Wilson set")


def _scheme_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mass", type=float, help=f"baryon mass in MeV (default {DEFAULTS['mass']})")
    p.add_argument("--mu", type=float, help="PDS subtraction scale in MeV (0 selects MS)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="baryon-entanglement", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("sectors", parents=[common], help="list realized (Q,S) sectors")

    p = sub.add_parser("basis", parents=[common], help="ordered-pair basis and SU(3) states of a sector")
    p.add_argument("--sector", required=True)

    p = sub.add_parser("smatrix", parents=[common], help="sector S-matrix as re/im pairs")
    p.add_argument("--sector")
    _phase_args(p)

    p = sub.add_parser("epower", parents=[common], help="Monte Carlo entanglement power")
    p.add_argument("--sector", help="sector profile; without it the two-qubit np form is used")
    p.add_argument("--delta0", type=radians, help="spin-singlet phase for the two-qubit form")
    p.add_argument("--delta1", type=radians, help="spin-triplet phase for the two-qubit form")
    _phase_args(p)

    p = sub.add_parser("check", parents=[common], help="Identity/SWAP verdict per sector")
    p.add_argument("--sector", help="one sector; all realized sectors if omitted")
    _phase_args(p)

    p = sub.add_parser("scan", parents=[common], help="grid scan over phases or Wilson coefficients")
    p.add_argument("--sector")
    p.add_argument("--grid", action="append", help="name=start:stop:num, repeat for a 2D grid")
    p.add_argument("--metric", action="append", choices=minimality.METRICS)
    p.add_argument("--p", type=float, help="momentum in MeV for Wilson-coefficient axes")
    _phase_args(p)
    _wilson_args(p)
    _scheme_args(p)

    p = sub.add_parser("eft", help="contact EFT tools")
    eft_sub = p.add_subparsers(dest="eft_command", required=True)
    q = eft_sub.add_parser("couplings", parents=[common], help="irrep couplings from c1..c6")
    _wilson_args(q)
    q = eft_sub.add_parser("phases", parents=[common], help="irrep phase shifts at momentum p")
    _wilson_args(q)
    _scheme_args(q)
    q.add_argument("--p", type=float, help="momentum in MeV")
    q = eft_sub.add_parser("resum", parents=[common], help="PDS-matched amplitude and p cot delta")
    q.add_argument("--a", type=float, help="scattering length in fm")
    q.add_argument("--r0", type=float, help="effective range in fm")
    q.add_argument("--p", type=float, action="append", help="momentum in MeV, repeatable")
    _scheme_args(q)
    q = eft_sub.add_parser("check-symmetry", parents=[common], help="enlarged-symmetry flags")
    _wilson_args(q)
    _scheme_args(q)

    p = sub.add_parser("lattice", parents=[common], help="SU(6) fits and spread of lattice couplings")
    p.add_argument("--in", dest="infile", help="data file (bundled lattice fixture if omitted)")
    p.add_argument("--report", choices=("json", "text"), default="json")
    p.add_argument("--threshold", type=float, default=2.0, help="z threshold for the SU(16) proximity flag")
    return parser


# ----------------------------------------------------------------------------
# option resolution


def _load_config(path: str) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text) if path.endswith(".json") else yaml.safe_load(text)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise UsageError("config file must hold a mapping")
    return data


def _flatten_config(cfg: dict) -> dict:
    flat = {}
    for key, val in cfg.items():
        if key == "phases" and isinstance(val, dict):
            for k, v in val.items():
                k = str(k).lstrip("d")
                k = {"8s": "8S", "8a": "8A"}.get(k, k)
                if k not in PHASE_KEYS:
                    raise UsageError(f"unknown phase {k!r} in config")
                flat["d" + k] = radians(v)
        elif key == "phases" and isinstance(val, str):
            flat.update({"d" + k: v for k, v in parse_phase_spec(val).items()})
        elif key == "wilson" and isinstance(val, dict):
            for k, v in val.items():
                if k not in WILSON_KEYS:
                    raise UsageError(f"unknown Wilson coefficient {k!r} in config")
                flat[k] = float(v)
        else:
            flat[key.replace("-", "_")] = val
    return flat


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Expand ``--phases``, apply the config file and fill defaults."""
    if getattr(args, "phases", None):
        for k, v in args.phases.items():
            if getattr(args, "d" + k) is None:
                setattr(args, "d" + k, v)
    if args.config:
        for key, val in _flatten_config(_load_config(args.config)).items():
            if not hasattr(args, key):
                raise UsageError(f"config key {key!r} does not apply to this command")
            current = getattr(args, key)
            if current is not None and current != val:
                warnings.warn(f"config value {key}={val!r} overrides command-line {current!r}", stacklevel=2)
            setattr(args, key, val)
    for key, val in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, val)
    return args


def _phases(args) -> PhaseShiftSet:
    return PhaseShiftSet(**{f"d{k}": float(getattr(args, f"d{k}") or 0.0) for k in PHASE_KEYS})


def _wilson(args) -> eft_engine.WilsonSet:
    if getattr(args, "su6", None):
        try:
            a, b = (Fraction(x.strip()) for x in str(args.su6).split(","))
        except ValueError:
            raise UsageError("--su6 expects a,b") from None
        return eft_engine.su6_wilson(a, b)
    return eft_engine.WilsonSet(*(float(getattr(args, k) or 0.0) for k in WILSON_KEYS))


def _ctx(args) -> eft_engine.SchemeContext:
    return eft_engine.SchemeContext(float(args.mass), float(args.mu))


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n for n in missing))


# ----------------------------------------------------------------------------
# commands


def cmd_sectors(args):
    return [sector_summary(label) for label in realized_sectors()]


def cmd_basis(args):
    basis = su3_basis(parse_sector(args.sector))
    return {
        "Q": basis.label.Q,
        "S": basis.label.S,
        "ordered_pairs": [f"{a} {b}" for a, b in basis.ordered_pairs],
        "states": [
            {"irrep": st.irrep.name, "components": [float(x) for x in row]}
            for st, row in zip(basis.su3_states, basis.O)
        ],
    }


def _complex_rows(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def cmd_smatrix(args):
    _require(args, "sector")
    S = build(parse_sector(args.sector), _phases(args))
    spins = ("uu", "ud", "du", "dd")
    return {
        "Q": S.sector.Q,
        "S": S.sector.S,
        "dim": int(S.matrix.shape[0]),
        "basis": [f"{s} {a} {b}" for s in spins for a, b in S.basis.ordered_pairs],
        "matrix": _complex_rows(S.matrix),
    }


def cmd_epower(args):
    if args.sector is None:
        _require(args, "delta0", "delta1")
        U = np_smatrix(args.delta0, args.delta1)
        est = entanglement.entanglement_power(U, samples=args.samples, seed=args.seed, workers=args.workers)
        return {**est.as_dict(), "closed_form": entanglement.np_entanglement_power(args.delta0, args.delta1)}
    S = build(parse_sector(args.sector), _phases(args))
    prof = entanglement.sector_entanglement_profile(S, samples=args.samples, seed=args.seed, workers=args.workers)
    errs = [e.std_error for e in prof.per_input.values()]
    std = math.sqrt(math.fsum(e * e for e in errs)) / len(errs) if errs else 0.0
    return {
        "mean": prof.average,
        "std_error": std,
        "samples": args.samples,
        "max": prof.max,
        "per_input": prof.as_dict()["per_input"],
        "excluded": prof.as_dict()["excluded"],
    }


def cmd_check(args):
    phases = _phases(args)
    labels = [parse_sector(args.sector)] if args.sector else realized_sectors()
    rows = []
    for label in labels:
        v = minimality.check_sector(label, phases, args.tol)
        rows.append({**v.as_dict(), "routes_agree": v.routes_agree})
    return rows[0] if args.sector else rows


def cmd_scan(args):
    _require(args, "sector", "grid")
    axes = [minimality.parse_axis(g) for g in args.grid]
    metrics = args.metric or ["residual_I", "residual_SWAP"]
    wilson_axes = all(a.name.startswith("c") for a in axes)
    if wilson_axes:
        _require(args, "p")
        base, ctx, p = _wilson(args), _ctx(args), args.p
    else:
        base, ctx, p = _phases(args), None, None
    return minimality.scan(
        args.sector,
        axes,
        metrics,
        base=base,
        ctx=ctx,
        p=p,
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
    )


def cmd_eft(args):
    sub = args.eft_command
    if sub == "couplings":
        w = _wilson(args)
        return {"wilson": w.as_dict(), "couplings": eft_engine.irrep_couplings(w).as_dict()}
    if sub == "phases":
        _require(args, "p")
        w = _wilson(args)
        ph = minimality.phases_from_wilson(w, _ctx(args), args.p)
        return {"p": args.p, "mass": args.mass, "mu": args.mu, "phases": ph.as_dict()}
    if sub == "resum":
        _require(args, "a", "r0", "p")
        ctx = _ctx(args)
        rows = []
        for p in args.p:
            A = eft_engine.resummed_amplitude(
                lambda q: eft_engine.matched_coupling_sum(args.a, args.r0, ctx, q), ctx, p
            )
            pc = eft_engine.pcotdelta_from_amplitude(A, ctx, p)
            ere = eft_engine.ere_pcotdelta(eft_engine.EREParams(args.a, (args.r0,)), p / eft_engine.HBARC)
            rows.append(
                {
                    "p": p,
                    "amplitude": [A.real, A.imag],
                    "pcotdelta": float(pc.real) / eft_engine.HBARC,
                    "ere_pcotdelta": ere,
                }
            )
        return {"a": args.a, "r0": args.r0, "mass": args.mass, "mu": args.mu, "units": "p in MeV, pcotdelta in fm^-1", "rows": rows}
    if sub == "check-symmetry":
        return eft_engine.symmetry_report(_wilson(args), _ctx(args), args.tol).as_dict()
    raise UsageError(f"unknown eft command {sub!r}")


def cmd_lattice(args):
    records = lattice_compare.load(args.infile)
    out = []
    for rec in records:
        entry = {"spread": lattice_compare.spread_report(rec, args.threshold)}
        try:
            entry["su6_fit"] = lattice_compare.su6_fit(rec).as_dict()
        except DomainError as exc:
            entry["su6_fit"] = {"error": str(exc)}
        out.append(entry)
    return out


COMMANDS = {
    "sectors": cmd_sectors,
    "basis": cmd_basis,
    "smatrix": cmd_smatrix,
    "epower": cmd_epower,
    "check": cmd_check,
    "scan": cmd_scan,
    "eft": cmd_eft,
    "lattice": cmd_lattice,
}


# ----------------------------------------------------------------------------
# rendering


def _clean(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return obj


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return pad + ", ".join(str(v) for v in obj)
        return "\n".join(_text(v, indent) + ("\n" if isinstance(v, dict) else "") for v in obj).rstrip("\n")
    return f"{pad}{obj}"


def render(result, fmt: str) -> str:
    result = _clean(result)
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    if fmt == "csv":
        rows = result if isinstance(result, list) else [result]
        if not all(isinstance(r, dict) for r in rows):
            raise UsageError("csv output needs tabular results")
        flat = [{k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()} for r in rows]
        return minimality.rows_to_csv(flat)
    return _text(result) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt_given = args.format is not None
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            args = resolve(args)
        for w in caught:
            print(f"warning: {w.message}", file=stderr)
        if args.command == "scan" and not fmt_given:
            args.format = "csv"
        if args.command == "lattice" and not fmt_given:
            args.format = "text" if args.report == "text" else "json"
        result = COMMANDS[args.command](args)
        text = render(result, args.format)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (argparse.ArgumentTypeError, KeyError) as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        module = type(exc).__module__.rsplit(".", 1)[-1]
        origin = _origin_module(exc) or module
        print(f"error [{origin}]: {exc}", file=stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return 0


def _origin_module(exc: BaseException) -> str | None:
    tb = exc.__traceback__
    name = None
    while tb is not None:
        mod = tb.tb_frame.f_globals.get("__name__", "")
        if mod.startswith("baryon_entanglement.") and not mod.endswith(".cli"):
            name = mod.rsplit(".", 1)[-1]
        tb = tb.tb_next
    return name


def main() -> None:
    sys.exit(run())
