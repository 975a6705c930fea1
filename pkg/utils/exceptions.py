# utils/exceptions.py

class SimulationError(Exception):
    pass

class ConfigError(SimulationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

class NumericError(SimulationError):
    pass

class TruncationError(NumericError):
    pass

class EigensolverError(NumericError):
    pass

class PositivityError(NumericError):
    pass

class DegenerateStateError(NumericError):
    pass

class DomainError(SimulationError, ValueError):
    pass

class DimensionError(SimulationError, ValueError):
    pass

class TruncationWarning(UserWarning):
    pass
