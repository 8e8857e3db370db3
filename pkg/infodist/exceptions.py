from __future__ import annotations

from utils.logger import get_logger

logger = get_logger(__name__)


class InfodistError(Exception):
    """Base exception for all infodist domain errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)
        logger.warning(
            "infodist_error",
            error_type=self.__class__.__name__,
            message=message,
        )
