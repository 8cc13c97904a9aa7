"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list text: bad header, bad line, loop, duplicate, or id out of range."""


class SizeCapExceeded(RuntimeError):
    """An exhaustive operation was asked to run above its configured size cap.

    The caps exist because several operations are deliberately desk-scale
    exhaustive searches. Set PATHPAIR_CAP_OVERRIDE to raise them at your
    own risk.
    """


class CertificationError(RuntimeError):
    """A self-check that must never fail has failed.

    Raised by routines whose output doubles as a machine-checked
    certificate (the hub router, matching extraction). If you see this,
    either the input violated a precondition or there is a bug.
    """
