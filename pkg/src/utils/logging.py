import logging
import sys
from pathlib import Path
from typing import Optional

from tqdm import tqdm


class TqdmStderrHandler(logging.Handler):
    """
    Writes records through tqdm so an active --progress bar is redrawn below
    them. sys.stderr is looked up per record, so a replaced stream is honoured.
    """

    def emit(self, record: logging.LogRecord):
        try:
            tqdm.write(self.format(record), file=sys.stderr)
        except Exception:
            self.handleError(record)


def setup_logging(verbose: bool = False, log_file: Optional[Path] = None):
    """
    Configure logging for the application.

    Records go to stderr so that tables and series written to stdout stay
    byte-identical between runs.

    Args:
        verbose (bool): If True, set level to DEBUG.
        log_file (Path): Optional path to write logs to.
    """
    level = logging.DEBUG if verbose else logging.INFO

    handlers = [TqdmStderrHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
