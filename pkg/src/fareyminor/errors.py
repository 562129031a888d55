"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class FareyMinorError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class InputError(FareyMinorError, ValueError):
    """Malformed or out-of-domain arguments."""


class PreconditionError(FareyMinorError):
    """An operation was handed a value violating its stated precondition."""


class ContractionError(FareyMinorError):
    """Attempt to contract a vertex set that does not induce a connected subgraph."""


class SupplyError(FareyMinorError):
    """A finite path supply could not deliver what a consumer asked for."""

    exit_code = 3


class ResourceError(FareyMinorError):
    """A documented size guard was exceeded."""

    exit_code = 3


class GrainingError(FareyMinorError):
    """No path of a grain-line prefix grains the requested vertex set."""

    def __init__(self, message, vertices=None, prefix=None):
        super().__init__(message)
        self.vertices = vertices
        self.prefix = prefix


class PipelineError(FareyMinorError):
    """A split step failed somewhere inside the foresighted pipeline."""

    def __init__(self, message, level=None, edge=None, achieved_depth=None):
        super().__init__(message)
        self.level = level
        self.edge = edge
        self.achieved_depth = achieved_depth

    @property
    def exit_code(self):
        cause = self.__cause__
        return getattr(cause, "exit_code", 2)
