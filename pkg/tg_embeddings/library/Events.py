import json
import logging
from typing import NamedTuple


def emit(logger: logging.Logger, event: NamedTuple) -> None:
    """Log an event record as its type name followed by its fields rendered as JSON."""
    if logger.isEnabledFor(logging.INFO):
        logger.info("%s %s", type(event).__name__, json.dumps(event._asdict(), default=str, sort_keys=True))
