"""Double square well: spectrum, tunnelling dynamics, thermal limits and density matrices."""

import json

from ._dwell import *  # noqa: F401,F403
from ._dwell import DwellError, run as _run


def run(command, format="json", **settings):
    """Run a CLI command in-process. Returns parsed JSON (or CSV text) and an error flag."""
    text, failed = _run(command, [(k, str(v)) for k, v in settings.items()], format)
    return (json.loads(text) if format == "json" else text), failed


__all__ = ["DwellError", "run"]
