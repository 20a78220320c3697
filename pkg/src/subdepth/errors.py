"""Exception hierarchy shared across the package."""


class SubdepthError(Exception):
    """Base class for all errors raised by this package."""


class CycleParseError(SubdepthError, ValueError):
    """Malformed cycle notation, repeated point, or point out of range."""


class EnumerationCapExceeded(SubdepthError):
    """Group enumeration hit the element cap before closing.

    ``partial_count`` holds the number of distinct elements found so far.
    """

    def __init__(self, cap, partial_count):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"enumeration cap {cap} exceeded ({partial_count} elements found, closure incomplete)"
        )


class NotASubgroupError(SubdepthError, ValueError):
    """An operation that needs H <= G was handed something else."""


class GroupMismatchError(SubdepthError, ValueError):
    """Two class functions (or tables) do not live on the same group."""


class NotACharacterError(SubdepthError, ValueError):
    """A class function failed to decompose with nonnegative integer multiplicities."""


class TableConsistencyError(SubdepthError):
    """A produced character table failed an exact orthogonality check.

    This always signals a bug in the producing code path, never bad user input,
    so it is raised loudly instead of being returned.
    """


class InternalConsistencyError(SubdepthError):
    """Two independent computations of the same quantity disagreed."""


class CriterionMismatchError(InternalConsistencyError):
    """The matrix depth criterion and the character-distance criteria disagreed."""
