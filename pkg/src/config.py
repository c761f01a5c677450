"""
Run Configuration

Builds the RunConfig of one CLI invocation from parsed arguments, an
optional relaxed-JSON run-config file and the environment.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import json5

from src.errors import UsageError

logger = logging.getLogger(__name__)

THREADS_ENV = "HEXF_THREADS"
FORMATS = ("csv", "json", "parquet", "md")


def default_workers() -> int:
    return min(4, os.cpu_count() or 1)


def max_workers(environ: Optional[Mapping[str, str]] = None) -> int:
    """Thread cap for n-sweeps, from HEXF_THREADS or min(4, cpu count)."""
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default_workers()
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {value}")
    return value


def load_config(path: str) -> Dict[str, Any]:
    """
    Load a run-config file.

    Args:
        path: File holding one JSON5 object; comments and trailing commas are allowed.

    Returns:
        The parsed object with '-' in keys replaced by '_'.
    """
    config_path = Path(path)
    if not config_path.exists():
        raise UsageError(f"Run config not found: {path}")
    with open(config_path, "r", encoding="utf-8") as f:
        try:
            data = json5.load(f)
        except ValueError as e:
            raise UsageError(f"Run config {path} is not valid JSON5: {e}")
    if not isinstance(data, dict):
        raise UsageError(f"Run config {path} must hold an object, got {type(data).__name__}")
    logger.debug(f"Loaded {len(data)} setting(s) from {path}")
    return {str(key).replace("-", "_"): value for key, value in data.items()}


class RunConfig:
    """Settings of one command run.

    Explicit CLI flags win over file values, which win over defaults.
    """

    def __init__(self, command: str, params: Dict[str, Any], seed: int = 0,
                 output_format: str = "csv", out: Optional[str] = None,
                 invocation: str = "", workers: Optional[int] = None):
        self.command = command
        self.params = dict(params)
        try:
            self.seed = int(seed)
        except (TypeError, ValueError):
            raise UsageError(f"seed must be a non-negative integer, got {seed!r}")
        self.output_format = output_format
        self.out = out
        self.invocation = invocation
        self.workers = workers if workers is not None else max_workers()

    @classmethod
    def from_args(cls, args, defaults: Mapping[str, Any], invocation: str = "",
                  environ: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """
        Merge parsed arguments with the run-config file and command defaults.

        Args:
            args: argparse namespace; a value of None means the flag was not given.
            defaults: Per-command default values.
            invocation: Command line echoed into output headers.
            environ: Environment mapping (defaults to os.environ).
        """
        file_values = load_config(args.config) if getattr(args, "config", None) else {}
        skip = {"command", "config", "verbose", "quiet", "func"}
        params: Dict[str, Any] = dict(defaults)
        for key, value in file_values.items():
            if key not in ("seed", "format", "out"):
                params[key] = value
        for key, value in vars(args).items():
            if key in skip or key in ("seed", "format", "out"):
                continue
            if value is not None:
                params[key] = value

        def pick(name: str, fallback):
            value = getattr(args, name, None)
            if value is not None:
                return value
            return file_values.get(name, fallback)

        return cls(
            command=args.command,
            params=params,
            seed=pick("seed", 0),
            output_format=pick("format", "csv"),
            out=pick("out", None),
            invocation=invocation,
            workers=max_workers(environ),
        )

    def get(self, name: str, default: Any = None) -> Any:
        return self.params.get(name, default)

    def __repr__(self):
        return (f"RunConfig(command={self.command}, seed={self.seed}, format={self.output_format}, "
                f"out={self.out}, params={self.params})")
