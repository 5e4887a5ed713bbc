"""Command-line front end.

Six subcommands share one set of flags::

    ringspectra spectrum-single --gamma 2 --R 1
    ringspectra spectrum-double --alpha 1 --beta 1 --R 1 --d 0.5
    ringspectra sweep-approach  --alpha 1 --beta 1 --R 1
    ringspectra sweep-diverge   --alpha 1 --beta 1 --R 1 --d-start 8 --d-stop 20
    ringspectra coefficients    --alpha 1 --beta 1 --R 1
    ringspectra verify --output report.json

Tables go to ``--output`` (stdout by default) as CSV or JSON. Every float is
written with 17 significant digits, so output is reproducible bit for bit.
Exit status: 0 success, 1 failed verification, 2 usage error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__, asymptotics, double_ring, harness, single_ring
from .errors import ModeError, NumericalFailure

__all__ = [
    "RunConfig",
    "UsageError",
    "COLUMNS",
    "format_value",
    "write_csv",
    "read_csv",
    "dumps_json",
    "read_config_file",
    "build_grid",
    "run",
    "main",
]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

COMMANDS = (
    "spectrum-single",
    "spectrum-double",
    "sweep-approach",
    "sweep-diverge",
    "coefficients",
    "verify",
)

SPECTRUM_COLUMNS = ["m", "kappa", "energy", "multiplicity"]
SWEEP_COLUMNS = ["m", "branch", "d", "kappa", "energy", "model_value", "residual"]
COLUMNS = {
    "spectrum-single": SPECTRUM_COLUMNS,
    "spectrum-double": SPECTRUM_COLUMNS,
    "sweep-approach": SWEEP_COLUMNS,
    "sweep-diverge": SWEEP_COLUMNS,
    "coefficients": ["m", "E_m", "t_m", "kappa_m_beta", "w_m"],
    "verify": ["id", "status", "description", "measured", "tolerance"],
}

REQUIRED = {
    "spectrum-single": ("gamma", "R"),
    "spectrum-double": ("alpha", "beta", "R", "d"),
    "sweep-approach": ("alpha", "beta", "R"),
    "sweep-diverge": ("alpha", "beta", "R"),
    "coefficients": ("alpha", "beta", "R"),
    "verify": (),
}

# (start, stop, count, spacing) used when a sweep is given no grid
DEFAULT_GRIDS = {
    "sweep-approach": (1e-5, 1e-2, 13, "geometric"),
    "sweep-diverge": (8.0, 20.0, 13, "linear"),
}


class UsageError(ValueError):
    """Invalid or incomplete command-line configuration."""


@dataclass
class RunConfig:
    """Everything one invocation needs; ``None`` means not given."""

    command: str
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None
    R: float | None = None
    d: float | None = None
    d_start: float | None = None
    d_stop: float | None = None
    d_count: int | None = None
    d_spacing: str | None = None
    format: str = "csv"
    output: str | None = None
    criteria: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        missing = [name for name in REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + n.replace("_", "-") for n in missing)
            raise UsageError(f"{self.command} needs {flags}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.command.startswith("sweep-"):
            build_grid(*self.grid_spec())
        unknown = [c for c in self.criteria if c not in harness.DEFAULT_CONFIG]
        if unknown:
            raise UsageError(f"unknown criteria: {', '.join(unknown)}")

    def grid_spec(self) -> tuple[float, float, int, str]:
        start, stop, count, spacing = DEFAULT_GRIDS[self.command]
        return (
            start if self.d_start is None else self.d_start,
            stop if self.d_stop is None else self.d_stop,
            count if self.d_count is None else self.d_count,
            spacing if self.d_spacing is None else self.d_spacing,
        )

    def parameters(self) -> dict[str, Any]:
        """Resolved inputs echoed into JSON output; unused fields are dropped."""
        out: dict[str, Any] = {}
        for name in ("alpha", "beta", "gamma", "R", "d"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.command.startswith("sweep-"):
            start, stop, count, spacing = self.grid_spec()
            out["d_grid"] = {"start": start, "stop": stop, "count": count, "spacing": spacing}
        if self.command == "verify":
            out["criteria"] = self.criteria or sorted(harness.DEFAULT_CONFIG, key=lambda c: int(c[1:]))
        return out


def build_grid(start: float, stop: float, count: int, spacing: str) -> list[float]:
    """Separation grid; ``count = 1`` gives ``[start]``."""
    if count < 1:
        raise UsageError(f"grid count must be >= 1, got {count}")
    if not start < stop:
        raise UsageError(f"grid needs start < stop, got {start} and {stop}")
    if spacing == "linear":
        grid = np.linspace(start, stop, count)
    elif spacing == "geometric":
        if start <= 0.0:
            raise UsageError("geometric grid needs a positive start")
        grid = np.geomspace(start, stop, count)
    else:
        raise UsageError(f"unknown spacing {spacing!r}")
    return [float(x) for x in grid]


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def _format_float(value: float) -> str:
    text = format(value, ".17g")
    # keep integral floats recognisable as floats when read back
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def format_value(value: Any) -> str:
    """CSV cell text; floats at 17 significant digits, ``None`` as empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _format_float(float(value))
    if isinstance(value, (dict, list)):
        return dumps_json(value, indent=None)
    return str(value)


def write_csv(columns: Sequence[str], rows: Sequence[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def _parse_cell(text: str) -> Any:
    if text == "":
        return None
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def read_csv(text: str) -> tuple[list[str], list[dict[str, Any]]]:
    """Inverse of :func:`write_csv` for numeric and plain-text cells."""
    reader = csv.reader(io.StringIO(text, newline=""))
    columns = next(reader)
    rows = [dict(zip(columns, (_parse_cell(c) for c in line))) for line in reader]
    return columns, rows


def _json_scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        # JSON has no NaN or infinity
        return _format_float(value) if math.isfinite(value) else "null"
    return json.dumps(str(value), ensure_ascii=False)


def dumps_json(obj: Any, indent: int | None = 2, _level: int = 0) -> str:
    """JSON text with sorted keys and 17-digit floats.

    ``json.dumps`` writes the shortest round-trip form of a float, which
    is not a fixed number of digits, hence this small writer.
    """
    if isinstance(obj, tuple):
        obj = list(obj)
    if not isinstance(obj, (dict, list)):
        return _json_scalar(obj)
    if isinstance(obj, dict):
        items = [
            f"{json.dumps(str(k), ensure_ascii=False)}: {dumps_json(v, indent, _level + 1)}"
            for k, v in sorted(obj.items())
        ]
        open_, close = "{", "}"
    else:
        items = [dumps_json(v, indent, _level + 1) for v in obj]
        open_, close = "[", "]"
    if not items:
        return open_ + close
    if indent is None:
        return open_ + ", ".join(items) + close
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    return open_ + "\n" + ",\n".join(pad + s for s in items) + "\n" + end + close


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _spectrum_rows(states) -> list[dict[str, Any]]:
    return [
        {"m": s.m, "kappa": s.kappa, "energy": s.energy, "multiplicity": s.multiplicity}
        for s in states
    ]


def _sweep_rows(fits: list[harness.SweepFit]) -> list[dict[str, Any]]:
    rows = []
    seen = set()
    for fit in fits:
        # the inner branch carries a rate fit and a prefactor fit over the same samples
        key = (fit.m, fit.branch)
        if key in seen:
            continue
        seen.add(key)
        for (d, kappa, energy), model, residual in zip(fit.samples, fit.model_values, fit.residuals):
            rows.append(
                {
                    "m": fit.m,
                    "branch": fit.branch,
                    "d": d,
                    "kappa": kappa,
                    "energy": energy,
                    "model_value": model,
                    "residual": residual,
                }
            )
    return rows


def _execute(config: RunConfig) -> tuple[list[dict[str, Any]], bool]:
    """Rows for the table and whether the command succeeded."""
    c = config
    if c.command == "spectrum-single":
        return _spectrum_rows(single_ring.spectrum(single_ring.RingSpec(c.gamma, c.R))), True
    if c.command == "spectrum-double":
        spec = double_ring.DoubleRingSpec(c.alpha, c.beta, c.R, c.d)
        return _spectrum_rows(double_ring.spectrum(spec)), True
    if c.command == "sweep-approach":
        grid = build_grid(*c.grid_spec())
        return _sweep_rows(harness.sweep_approach(c.alpha, c.beta, c.R, grid)), True
    if c.command == "sweep-diverge":
        grid = build_grid(*c.grid_spec())
        return _sweep_rows(harness.sweep_diverge(c.alpha, c.beta, c.R, grid)), True
    if c.command == "coefficients":
        rows = [
            {"m": r.m, "E_m": r.E_m, "t_m": r.t_m, "kappa_m_beta": r.kappa_m_beta, "w_m": r.w_m}
            for r in asymptotics.coefficients(c.alpha, c.beta, c.R)
        ]
        return rows, True
    # verify
    if c.criteria:
        cfg = {cid: {} for cid in c.criteria}
    else:
        cfg = None
    report = harness.verify_all(cfg)
    return report["criteria"], report["passed"]


def render(config: RunConfig, rows: list[dict[str, Any]]) -> str:
    if config.format == "json":
        doc = {
            "command": config.command,
            "parameters": config.parameters(),
            "rows": rows,
            "version": __version__,
        }
        return dumps_json(doc) + "\n"
    return write_csv(COLUMNS[config.command], rows)


def _diagnose(message: str) -> None:
    print(f"ringspectra: {message}".splitlines()[0], file=sys.stderr)


def run(config: RunConfig) -> int:
    """Execute ``config`` and write its table; returns the exit status."""
    try:
        config.validate()
        rows, ok = _execute(config)
    except (UsageError, ModeError) as exc:
        _diagnose(f"error: {exc}")
        return EXIT_USAGE
    except NumericalFailure as exc:
        _diagnose(f"numerical failure: {exc}")
        return EXIT_NUMERICAL
    except ValueError as exc:
        _diagnose(f"error: {exc}")
        return EXIT_USAGE
    text = render(config, rows)
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not ok:
        failed = [r["id"] for r in rows if r.get("status") == "fail"]
        _diagnose(f"verification failed: {', '.join(failed)}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

_FLOAT_KEYS = ("alpha", "beta", "gamma", "R", "d", "d_start", "d_stop")


def read_config_file(path: str | Path) -> dict[str, Any]:
    """Parse ``key = value`` lines; ``#`` starts a comment, dashes in keys become underscores."""
    values: dict[str, Any] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        try:
            if key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key == "d_count":
                values[key] = int(value)
            elif key in ("d_spacing", "format", "output"):
                values[key] = value
            elif key == "criteria":
                values[key] = [c.strip() for c in value.split(",") if c.strip()]
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, UsageError):
                raise
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        # reported by main() as a one-line diagnostic with status 2
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ringspectra",
        description="Bound states of one or two concentric delta circles in the plane.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("command", choices=COMMANDS)
    for name in ("alpha", "beta", "gamma", "R", "d"):
        parser.add_argument(f"--{name}", type=float, help=f"{name} (real)")
    parser.add_argument("--d-start", type=float, help="first separation of a sweep")
    parser.add_argument("--d-stop", type=float, help="last separation of a sweep")
    parser.add_argument("--d-count", type=int, help="number of separations")
    parser.add_argument("--d-spacing", choices=("linear", "geometric"))
    parser.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    parser.add_argument("--output", "-o", help="output file (default stdout)")
    parser.add_argument(
        "--criteria",
        help="comma-separated subset of acceptance criteria for verify, e.g. A1,A4",
    )
    parser.add_argument("--config", help="key=value file; flags on the command line win")
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values: dict[str, Any] = read_config_file(args.config) if args.config else {}
    flags = vars(args)
    for key in _FLOAT_KEYS + ("d_count", "d_spacing", "format", "output"):
        if flags[key] is not None:
            values[key] = flags[key]
    if args.criteria is not None:
        values["criteria"] = [c.strip() for c in args.criteria.split(",") if c.strip()]
    if "format" not in values:
        values["format"] = "json" if args.command == "verify" else "csv"
    return RunConfig(command=args.command, **values)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = config_from_args(argv)
    except UsageError as exc:
        _diagnose(f"usage error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _diagnose(f"usage error: cannot read config: {exc}")
        return EXIT_USAGE
    return run(config)


def _entry_point() -> None:
    sys.exit(main())
