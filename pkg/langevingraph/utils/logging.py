"""
Centralised logging for langevingraph.

All modules obtain their logger through :func:`get_logger`, which lazily
attaches a single stderr handler to the library root logger. Verbosity can be
changed programmatically (``set_verbosity_*``) or through the
``LANGEVINGRAPH_VERBOSITY`` environment variable; level names are coloured
unless ``NO_COLOR`` is set or stderr is not a terminal.
"""

import logging
import os
import sys
import threading
from functools import lru_cache
from typing import Optional

_library_name = __name__.split(".", maxsplit=1)[0]

DEFAULT_HANDLER = None
_DEFAULT_LOGGING_LEVEL = logging.WARNING
VERBOSITY_ENV = "LANGEVINGRAPH_VERBOSITY"

_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "fatal": logging.FATAL,
}

_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.FATAL: "\033[1;31m",
}
_RESET = "\033[0m"

_semaphore = threading.Lock()


def _get_library_root_logger() -> logging.Logger:
    return logging.getLogger(_library_name)


def _level_from_env() -> int:
    """
    Resolve the default level, letting ``LANGEVINGRAPH_VERBOSITY`` override it.
    """
    value = os.environ.get(VERBOSITY_ENV)
    if value is None:
        return _DEFAULT_LOGGING_LEVEL
    return _LEVELS.get(value.strip().lower(), _DEFAULT_LOGGING_LEVEL)


def _set_library_root_logger() -> None:
    """
    Install the default stderr handler on the library root logger, once.
    """
    global DEFAULT_HANDLER

    with _semaphore:
        if DEFAULT_HANDLER:
            return

        DEFAULT_HANDLER = logging.StreamHandler()  # sys.stderr as stream

        if sys.stderr is None:
            sys.stderr = open(os.devnull, "w", encoding="utf-8")

        DEFAULT_HANDLER.flush = sys.stderr.flush

        library_root_logger = _get_library_root_logger()
        library_root_logger.addHandler(DEFAULT_HANDLER)
        library_root_logger.setLevel(_level_from_env())
        library_root_logger.propagate = False


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name (Optional[str]): The name of the logger. If None, the root logger
            of the library is returned.

    Returns:
        logging.Logger: The requested logger.
    """
    _set_library_root_logger()
    return logging.getLogger(name or _library_name)


def get_verbosity() -> int:
    """
    Returns:
        int: The effective level of the library root logger.
    """
    _set_library_root_logger()
    return _get_library_root_logger().getEffectiveLevel()


def set_verbosity(verbosity: int) -> None:
    """
    Set the level of the library root logger.

    Args:
        verbosity (int): A ``logging`` level.
    """
    _set_library_root_logger()
    _get_library_root_logger().setLevel(verbosity)


def set_verbosity_from_name(name: str) -> None:
    """
    Set the level from a case-insensitive name such as ``"info"``.

    Raises:
        ValueError: If the name is not a known level.
    """
    try:
        set_verbosity(_LEVELS[name.strip().lower()])
    except KeyError as e:
        raise ValueError(
            f"unknown verbosity '{name}', expected one of {sorted(_LEVELS)}"
        ) from e


def set_verbosity_debug() -> None:
    set_verbosity(logging.DEBUG)


def set_verbosity_info() -> None:
    set_verbosity(logging.INFO)


def set_verbosity_warning() -> None:
    set_verbosity(logging.WARNING)


def set_verbosity_error() -> None:
    set_verbosity(logging.ERROR)


def set_handler(handler: logging.Handler) -> None:
    """
    Add a handler to the library root logger.
    """
    _set_library_root_logger()

    assert handler is not None

    _get_library_root_logger().addHandler(handler)


def unset_handler(handler: logging.Handler) -> None:
    """
    Remove a handler from the library root logger.
    """
    _set_library_root_logger()

    assert handler is not None

    _get_library_root_logger().removeHandler(handler)


def color_enabled(stream=None) -> bool:
    """
    Colours are used only on a terminal and only while ``NO_COLOR`` is unset.
    """
    if "NO_COLOR" in os.environ:
        return False
    stream = stream if stream is not None else sys.stderr
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class _LevelFormatter(logging.Formatter):
    """
    Formatter that optionally wraps the level name in an ANSI colour.
    """

    def __init__(self, fmt: str, use_color: bool):
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        if not self.use_color:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{_COLORS.get(record.levelno, '')}{original}{_RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def set_formatting() -> None:
    """
    Set ``[levelname|filename:lineno] time >> message`` formatting on every
    handler bound to the library root logger.
    """
    _set_library_root_logger()
    use_color = color_enabled()
    formatter = _LevelFormatter(
        "[%(levelname)s|%(filename)s:%(lineno)s] %(asctime)s >> %(message)s",
        use_color,
    )

    for handler in _get_library_root_logger().handlers:
        handler.setFormatter(formatter)


def unset_formatting() -> None:
    for handler in _get_library_root_logger().handlers:
        handler.setFormatter(None)


@lru_cache(None)
def warning_once(self, *args, **kwargs):
    """
    Emit a warning with the same message only once per process.

    Installed as ``logging.Logger.warning_once``.
    """
    self.warning(*args, **kwargs)


logging.Logger.warning_once = warning_once
