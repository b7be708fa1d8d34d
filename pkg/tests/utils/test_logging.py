"""
Tests for the library logger.
"""

import io
import logging

import pytest

from langevingraph.utils import logging as lg_logging


@pytest.fixture
def captured():
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    lg_logging.set_handler(handler)
    previous = lg_logging.get_verbosity()
    yield stream
    lg_logging.set_verbosity(previous)
    lg_logging.unset_handler(handler)


def test_loggers_live_under_the_library_root():
    logger = lg_logging.get_logger("langevingraph.nodes.export_node")
    assert logger.name == "langevingraph.nodes.export_node"
    assert lg_logging.get_logger().name == "langevingraph"
    assert lg_logging.get_logger().propagate is False


def test_verbosity_by_name(captured):
    lg_logging.set_verbosity_from_name("INFO")
    assert lg_logging.get_verbosity() == logging.INFO
    lg_logging.get_logger("langevingraph.test").info("hello")
    assert "hello" in captured.getvalue()

    lg_logging.set_verbosity_error()
    lg_logging.get_logger("langevingraph.test").info("hidden")
    assert "hidden" not in captured.getvalue()


def test_unknown_verbosity_name():
    with pytest.raises(ValueError):
        lg_logging.set_verbosity_from_name("loud")


def test_warning_once(captured):
    logger = lg_logging.get_logger("langevingraph.test")
    for _ in range(3):
        logger.warning_once("fit window has too few points (unique message 1)")
    assert captured.getvalue().count("unique message 1") == 1


def test_color_disabled_by_no_color(monkeypatch):
    class Tty(io.StringIO):
        def isatty(self):
            return True

    monkeypatch.delenv("NO_COLOR", raising=False)
    assert lg_logging.color_enabled(Tty())
    monkeypatch.setenv("NO_COLOR", "1")
    assert not lg_logging.color_enabled(Tty())
    monkeypatch.delenv("NO_COLOR")
    assert not lg_logging.color_enabled(io.StringIO())
