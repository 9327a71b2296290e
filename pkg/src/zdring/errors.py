"""Exception types shared across the package.

Two failure families matter to callers: inputs outside the mathematical
domain (DomainError) and inputs that are legal but would blow a
materialization budget (ResourceLimitError). The CLI maps both to exit
code 2; genuine result discrepancies use exit code 3 instead.
"""


class DomainError(ValueError):
    """The request is outside the defined domain (e.g. n < 2)."""


class ResourceLimitError(RuntimeError):
    """A configurable materialization limit would be exceeded.

    The message always names the limit that was hit so callers can raise
    it deliberately instead of guessing.
    """
