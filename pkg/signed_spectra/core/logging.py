import logging
import sys

_FORMAT = "level=%(levelname)s logger=%(name)s msg=%(message)s"


def configure_logging(level: str) -> None:
    """Install a single stderr handler on the package logger."""
    root = logging.getLogger("signed_spectra")
    root.setLevel(level.upper())
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    root.addHandler(handler)
    root.propagate = False
