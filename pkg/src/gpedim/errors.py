"""Exception hierarchy shared by every module."""


class GpedimError(Exception):
    """Base class; the CLI reports ``type(exc).__name__`` on failure."""


class InvalidSpec(GpedimError, ValueError):
    pass


class ParseError(GpedimError, ValueError):
    pass


class SelfLoop(GpedimError, ValueError):
    pass


class DuplicateEdge(GpedimError, ValueError):
    pass


class Disconnected(GpedimError, ValueError):
    pass


class TooSmall(GpedimError, ValueError):
    pass


class OutOfScope(GpedimError, ValueError):
    """No closed form or published value exists for the requested instance."""


class InternalCoverageError(GpedimError, RuntimeError):
    """A formula table has a gap or overlap for some edge index."""


class CardinalityCapExceeded(GpedimError, RuntimeError):
    pass
