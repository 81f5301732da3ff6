"""Exception hierarchy shared across the package.

Two broad families matter to callers: input/format problems (bad CSV,
unreadable files) and domain problems (unknown category, empty data,
incompatible histogram supports). The CLI maps the former to exit code 2
and the latter to exit code 3.
"""

from __future__ import annotations


class HeliobenchError(Exception):
    """Base class for all package-specific errors."""


class CorpusFormatError(HeliobenchError):
    """Malformed or invalid input data. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateRecordError(CorpusFormatError):
    """The same (journal, category) pair appeared twice."""


class CategoryNotFoundError(HeliobenchError):
    """A requested category is not present in the corpus."""

    def __init__(self, category: str):
        self.category = category
        super().__init__(f"unknown category: {category!r}")


class EmptyDataError(HeliobenchError):
    """An operation that needs at least one value received none."""


class IncompatibleSupportError(HeliobenchError):
    """Two histograms do not share the same bin specification."""


class AbsoluteContinuityError(HeliobenchError):
    """Q is zero in a bin where P is positive, so -log q is undefined."""

    def __init__(self, bin_index: int):
        self.bin_index = bin_index
        super().__init__(
            f"input distribution is zero in bin {bin_index} where the "
            f"reference is positive; smooth the histograms (alpha > 0)"
        )


class InvalidInputError(HeliobenchError):
    """Arguments that violate an operation's preconditions."""
