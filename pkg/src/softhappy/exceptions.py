"""Exception types raised across the package."""


class ParameterError(ValueError):
    """Invalid model, solver or experiment parameters."""


class ContractViolation(ValueError):
    """An operation was called outside its precondition (e.g. on an uncoloured vertex)."""


class OracleRefusal(RuntimeError):
    """The exhaustive oracle refused an instance whose search space is too large."""


class InstanceFormatError(ValueError):
    """An instance file could not be parsed."""
