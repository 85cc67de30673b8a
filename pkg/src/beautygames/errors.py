"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` (``"PROBABILITY_SUM"``,
``"BAD_ACTION"``, ...) so callers such as the CLI can report it verbatim.
"""

from __future__ import annotations


class ModelError(ValueError):
    """A domain error with a stable error code."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class InvalidGame(ModelError):
    """Raised by :func:`beautygames.game.validate` with every violation found."""

    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations)
        super().__init__("INVALID_GAME", summary)


class NotAdditive(ModelError):
    """Raised when an operation needs an additive game and gets a witness instead."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__("NOT_ADDITIVE", f"payoff additivity fails at {witness}")
