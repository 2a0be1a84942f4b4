# SPDX-License-Identifier: MPL-2.0
"""Custom exception classes for the MeTTa-KB application."""


class MettaError(Exception):
    def __init__(
        self, message: str = "A MeTTa-KB error occurred.", code: int = 500
    ) -> None:
        self.message = message
        self.code = code
        super().__init__(self.message)

    def __str__(self) -> str:
        return f"MettaError (Code: {self.code}): {self.message}"


class ConfigurationError(MettaError):
    def __init__(self, message: str = "Configuration error.", code: int = 501) -> None:
        super().__init__(message, code)


class DataValidationError(MettaError):
    def __init__(
        self, message: str = "Data validation error.", code: int = 502
    ) -> None:
        super().__init__(message, code)


class ParseError(MettaError):
    """Malformed program text; ``line`` and ``column`` are 1-based."""

    def __init__(
        self,
        message: str = "Parse error.",
        line: int = 0,
        column: int = 0,
        code: int = 503,
    ) -> None:
        self.line = line
        self.column = column
        super().__init__(message, code)

    def __str__(self) -> str:
        return f"{self.message} at line {self.line}, column {self.column}"


class LexError(ParseError):
    def __init__(
        self, message: str = "Lexical error.", line: int = 0, column: int = 0
    ) -> None:
        super().__init__(message, line, column, code=504)


class UnterminatedStringError(LexError):
    def __init__(
        self,
        message: str = "Unterminated string literal.",
        line: int = 0,
        column: int = 0,
    ) -> None:
        super().__init__(message, line, column)


class EvaluationError(MettaError):
    def __init__(self, message: str = "Evaluation error.", code: int = 505) -> None:
        super().__init__(message, code)


class SpaceError(MettaError):
    def __init__(self, message: str = "Atomspace error.", code: int = 506) -> None:
        super().__init__(message, code)


class ProgramIOError(MettaError):
    def __init__(
        self, message: str = "Program file could not be read.", code: int = 507
    ) -> None:
        super().__init__(message, code)
