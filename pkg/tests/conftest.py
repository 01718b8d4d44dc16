from __future__ import annotations

import logging

from misbench.graph import Graph

from graphs import claw, diamond
from loguru import logger
import pytest


@pytest.fixture
def caplog(caplog: pytest.LogCaptureFixture):
    """Route loguru records into pytest's ``caplog``."""

    class PropagateHandler(logging.Handler):
        def emit(self, record: logging.LogRecord) -> None:
            logging.getLogger(record.name).handle(record)

    handler_id = logger.add(PropagateHandler(), format="{message}")
    yield caplog
    logger.remove(handler_id)


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def diamond_graph() -> Graph:
    return diamond()


@pytest.fixture
def claw_graph() -> Graph:
    return claw()
