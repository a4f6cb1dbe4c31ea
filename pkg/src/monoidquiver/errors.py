class SizeLimitError(ValueError):
    """Raised when a request exceeds a hard size cap of an exhaustive computation."""


def check_cap(what, value, cap):
    if value > cap:
        raise SizeLimitError(f"{what}={value} exceeds the cap of {cap}")
