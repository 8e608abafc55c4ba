from GroupShifts.constants import EXIT_PARSE_ERROR, EXIT_RESOLVE_ERROR, EXIT_BUDGET_ERROR, \
    EXIT_VERIFICATION_FAILURE


class GroupShiftError(Exception):
    """
    Base class for every error raised by the library. ``exit_code`` is what the command line exits with.
    """
    exit_code = 1


class InvalidGroupError(GroupShiftError, ValueError):
    exit_code = EXIT_RESOLVE_ERROR


class SizeBudgetExceeded(GroupShiftError):
    """
    An enumeration or direct power would exceed the configured size budget.
    """
    exit_code = EXIT_BUDGET_ERROR

    def __init__(self, dimension: str, requested: int, budget: int) -> None:
        self.dimension = dimension
        self.requested = requested
        self.budget = budget
        super().__init__("Size budget exceeded for {}: {} > {}".format(dimension, requested, budget))


class AlphabetMismatchError(GroupShiftError, ValueError):
    pass


class ContainmentError(GroupShiftError, ValueError):
    pass


class NotNormalError(GroupShiftError, ValueError):
    pass


class PreconditionError(GroupShiftError, ValueError):
    pass


class CodeShapeError(GroupShiftError, ValueError):
    pass


class UnverifiedSeriesError(GroupShiftError):
    exit_code = EXIT_VERIFICATION_FAILURE


class VerificationFailure(GroupShiftError):
    exit_code = EXIT_VERIFICATION_FAILURE

    def __init__(self, failures: list) -> None:
        self.failures = failures
        super().__init__("Verification failed: {}".format("; ".join(failures)))


class ManifestParseError(GroupShiftError):
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, message: str, line: int = None) -> None:
        self.line = line
        prefix = "line {}: ".format(line) if line is not None else ""
        super().__init__(prefix + message)


class ManifestResolveError(ManifestParseError):
    exit_code = EXIT_RESOLVE_ERROR
