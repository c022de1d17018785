"""Python bindings for the summa absolute Cesàro summability lab."""

import json

from ._summa import (
    ConfigError,
    InvalidArgument,
    __version__,
    cesaro_coefficients,
    cesaro_kernel,
    cesaro_sigma,
    cesaro_t,
    materialize,
    w_sequence,
)
from . import _summa


def family_catalog():
    return json.loads(_summa._family_catalog())


def growth_diagnostic(checkpoints, values, slope=0.1, ratio=1.5):
    return json.loads(_summa._growth_diagnostic(list(checkpoints), list(values), slope, ratio))


def almost_increasing(b, start=1, floor=1e-6):
    return json.loads(_summa._almost_increasing(list(b), start, floor))


def run_oracle(seed=42, trials=0):
    """Runs the exact-arithmetic oracle suites; trials=0 keeps the default counts."""
    return json.loads(_summa._run_oracle(seed, trials))


def run(config, write=False):
    """Runs an experiment config (dict or JSON text).

    Returns (report, exit_status, files) where report is the decoded report
    document and files maps output names to their CSV text.
    """
    text = config if isinstance(config, str) else json.dumps(config)
    rendered, status, files = _summa._run_config(text, write)
    return json.loads(rendered), status, dict(files)


__all__ = [
    "ConfigError",
    "InvalidArgument",
    "__version__",
    "almost_increasing",
    "cesaro_coefficients",
    "cesaro_kernel",
    "cesaro_sigma",
    "cesaro_t",
    "family_catalog",
    "growth_diagnostic",
    "materialize",
    "run",
    "run_oracle",
    "w_sequence",
]
