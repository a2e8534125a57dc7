import logging
import sys
from typing import Optional

from core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configures the root logger once. Output goes to stderr so that JSON and CSV
    written to stdout stay byte-stable.
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    numeric = logging.getLevelName(level_name)
    if not isinstance(numeric, int):
        numeric = logging.WARNING

    root = logging.getLogger()
    if not any(getattr(h, "_rees_handler", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._rees_handler = True
        root.addHandler(handler)
    root.setLevel(numeric)
