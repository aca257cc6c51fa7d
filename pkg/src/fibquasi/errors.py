class SizeLimitError(ValueError):
    """An input exceeds a configured size guard.

    Raised by the materialization guard on Fibonacci indices, by the
    enumeration size refusals, and by verification caps. Callers that
    really want the big computation pass an explicit override (``force``
    or a larger limit).
    """
