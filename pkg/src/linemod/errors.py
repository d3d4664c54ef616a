"""Exception types shared across the package."""


class LinemodError(Exception):
    """Base class for every error raised by this package."""


class UngradedAlphabetError(LinemodError):
    """A group degree was requested but some generator carries no label."""


class DegenerateRelationError(LinemodError):
    """A relation is zero, or reduces to a nonzero constant (inconsistent
    presentation), so it cannot be oriented into a rewrite rule."""


class OutOfCertifiedRangeError(LinemodError):
    """A normal form or membership query exceeds the certified degree bound."""


class InhomogeneousError(LinemodError):
    """A graded computation was requested for an inhomogeneous input."""


class OracleCapError(LinemodError):
    """The brute-force oracle would exceed its monomial cap.

    Raise the cap explicitly, or via the LINEMOD_ORACLE_CAP environment
    variable, to allow larger free-algebra slices.
    """


class RankDeficientError(LinemodError):
    """A subspace basis does not have the required rank."""


class SubalgebraFormError(LinemodError):
    """A subalgebra is not of the classified shape expected by the caller."""


class AdmissibilityError(LinemodError):
    """A linear functional does not define a one-dimensional module; the
    message names the violated condition."""


class RouteDisagreementError(LinemodError):
    """Two independent computational routes disagreed.  This is an internal
    inconsistency and is never caught inside the package."""


class UnknownPresetError(LinemodError):
    """No built-in object with the requested name."""


class DSLSyntaxError(LinemodError):
    """Parse failure in the algebra DSL, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
