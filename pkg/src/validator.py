"""
Validator Module

Checks a RunConfig against the parameter table of its command before
anything is computed. All violations are gathered into a single UsageError.
"""

import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.config import FORMATS, RunConfig
from src.errors import UsageError

logger = logging.getLogger(__name__)


class Param:
    """One row of a command's parameter table.

    Args:
        kind: "int", "float", "p" (a float >= 1 or "inf"), "str", "bool",
            "int_list" or "float_list". Lists may be given as comma-separated text.
        required: The command cannot run without it.
        minimum: Inclusive lower bound for numbers and list elements.
        choices: Allowed values for strings.
    """

    def __init__(self, kind: str, required: bool = False, minimum: Optional[float] = None,
                 choices: Optional[Sequence[str]] = None):
        self.kind = kind
        self.required = required
        self.minimum = minimum
        self.choices = tuple(choices) if choices else None


KERNEL_TYPES = ("dirichlet", "theta", "poisson", "cesaro", "cesaro2", "jackson", "eta")
EXPERIMENTS = ("lebesgue", "bernstein", "jackson", "inverse", "moments", "l1growth", "cutoff")

COMMAND_PARAMS: Dict[str, Dict[str, Param]] = {
    "kernel": {
        "type": Param("str", required=True, choices=KERNEL_TYPES),
        "n": Param("int", minimum=0),
        "r": Param("float", minimum=0),
        "delta": Param("float", minimum=0),
        "grid": Param("int", minimum=1),
        "as_grid": Param("bool"),
    },
    "expand": {
        "f": Param("str", required=True),
        "n": Param("int", required=True, minimum=0),
        "grid": Param("int", minimum=1),
        "prune": Param("float", minimum=0),
    },
    "summab": {
        "f": Param("str", required=True),
        "method": Param("str", required=True),
        "ns": Param("int_list", required=True, minimum=0),
        "p": Param("p"),
        "grid": Param("int", minimum=1),
    },
    "report": {
        "experiment": Param("str", required=True, choices=EXPERIMENTS),
        "ns": Param("int_list", minimum=1),
        "r": Param("int", minimum=1),
        "nu": Param("float", minimum=0),
        "alpha": Param("str"),
        "trials": Param("int", minimum=1),
        "f": Param("str"),
        "p": Param("p"),
        "hs": Param("float_list", minimum=0),
        "grid": Param("int", minimum=1),
    },
    "triangle": {
        "f": Param("str", required=True),
        "n": Param("int", required=True, minimum=0),
        "M": Param("int", minimum=1),
        "cesaro": Param("bool"),
    },
}


def _split(value: Any) -> List[Any]:
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


class RunConfigValidator:
    """Validates and normalizes RunConfig parameters per command."""

    def __init__(self, tables: Optional[Dict[str, Dict[str, Param]]] = None):
        self.tables = tables if tables is not None else COMMAND_PARAMS

    def _coerce(self, name: str, value: Any, param: Param) -> Tuple[Any, Optional[str]]:
        try:
            if param.kind == "int":
                if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
                    return value, f"'{name}' must be an integer, got {value!r}"
                value = int(value)
            elif param.kind == "float":
                value = float(value)
            elif param.kind == "p":
                value = math.inf if str(value).strip().lower() in ("inf", "infinity") else float(value)
                if not value >= 1:
                    return value, f"'{name}' must be >= 1 or inf, got {value!r}"
                return value, None
            elif param.kind == "str":
                value = str(value)
            elif param.kind == "bool":
                if not isinstance(value, bool):
                    return value, f"'{name}' must be true or false, got {value!r}"
                return value, None
            elif param.kind == "int_list":
                value = [int(v) for v in _split(value)]
            elif param.kind == "float_list":
                value = [float(v) for v in _split(value)]
        except (TypeError, ValueError):
            return value, f"'{name}' has the wrong type for {param.kind}: {value!r}"

        if param.kind.endswith("_list"):
            if not value:
                return value, f"'{name}' must not be empty"
            items = value
        else:
            items = [value]
        for item in items:
            if param.minimum is not None and isinstance(item, (int, float)) and item < param.minimum:
                return value, f"'{name}' must be >= {param.minimum}, got {item!r}"
        if param.choices is not None and value not in param.choices:
            return value, f"'{name}' must be one of {', '.join(param.choices)}, got {value!r}"
        return value, None

    def validate(self, config: RunConfig) -> RunConfig:
        """
        Check every parameter of `config` against its command's table.

        Returns:
            The same RunConfig with parameters coerced to their declared types.

        Raises:
            UsageError: listing every violation found.
        """
        table = self.tables.get(config.command)
        if table is None:
            raise UsageError(f"Unknown command: {config.command}")

        problems: List[str] = []
        normalized: Dict[str, Any] = {}
        for name, param in table.items():
            value = config.params.get(name)
            if value is None:
                if param.required:
                    problems.append(f"'{name}' is required for {config.command}")
                continue
            value, problem = self._coerce(name, value, param)
            if problem:
                problems.append(problem)
            normalized[name] = value

        unknown = sorted(set(k for k, v in config.params.items() if v is not None) - set(table))
        if unknown:
            logger.warning(f"Ignoring unknown setting(s) for {config.command}: {', '.join(unknown)}")

        if config.output_format not in FORMATS:
            problems.append(f"format must be one of {', '.join(FORMATS)}, got {config.output_format!r}")
        if config.output_format == "parquet" and not config.out:
            problems.append("parquet output needs --out")
        if isinstance(config.seed, bool) or int(config.seed) < 0:
            problems.append(f"seed must be a non-negative integer, got {config.seed!r}")

        if problems:
            raise UsageError(f"Invalid {config.command} run: " + "; ".join(problems))

        config.params = normalized
        logger.debug(f"Validated {config}")
        return config
