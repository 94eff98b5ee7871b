"""Exception types shared across the package.

Every error that can surface from the public API lives here so callers can
catch one family of exceptions. Budget-style errors (SearchLimitExceeded,
SplitSpaceExceeded, CapExceeded) mean "undecided, raise the limit", never
"no".
"""

__all__ = [
    "DegbasisError",
    "DegreeExceedsCap",
    "CapMismatch",
    "NotGraphic",
    "NotBigraphic",
    "SearchLimitExceeded",
    "SplitSpaceExceeded",
    "NoRegularFound",
    "NotMember",
    "BasisIncomplete",
    "CapExceeded",
]


class DegbasisError(Exception):
    """Base class for all package errors."""


class DegreeExceedsCap(DegbasisError):
    """A degree sequence entry is larger than the requested degree cap k."""


class CapMismatch(DegbasisError):
    """Two regularity sequences with different caps were combined."""


class NotGraphic(DegbasisError):
    """No simple graph realizes the degree sequence."""


class NotBigraphic(DegbasisError):
    """No bipartite graph realizes the given side degree lists.

    ``index`` is 0 when the side sums differ, otherwise the 1-based index of
    the first violated Gale-Ryser inequality.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"not bigraphic (violation at index {index})")


class SearchLimitExceeded(DegbasisError):
    """A backtracking search ran out of its node-expansion budget.

    Distinct from a definitive negative answer: the search saw too much, not
    everything.
    """


class SplitSpaceExceeded(DegbasisError):
    """The bipartite side-split search exceeded its configured cap.

    Membership is undecided; it is reported, never guessed.
    """


class NoRegularFound(DegbasisError):
    """No regular member of the requested degree was found below the cap."""


class NotMember(DegbasisError):
    """The sequence is not a member of the structured family."""


class BasisIncomplete(DegbasisError):
    """No basis element covers the sequence; the search bound was too small."""

    def __init__(self, sequence, message: str | None = None):
        self.sequence = sequence
        super().__init__(message or f"no basis element covers {sequence}")


class CapExceeded(DegbasisError):
    """An exhaustive-enumeration helper was asked to go past its size cap."""
