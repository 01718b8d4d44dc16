from __future__ import annotations

import re
from typing import Optional

from loguru import logger


def escape_tag(s: str) -> str:
    """Escape loguru color tags in user supplied text."""
    return re.sub(r"</?((?:[fb]g\s)?[^<>\s]*)>", r"\\\g<0>", s)


def logger_wrapper(logger_name: str):
    def log(level: str, message: str, exception: Optional[Exception] = None):
        logger.opt(colors=True, exception=exception).log(
            level, f"<m>{escape_tag(logger_name)}</m> | " + message
        )

    return log


log = logger_wrapper("misbench")
