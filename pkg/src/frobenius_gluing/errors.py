"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A configured size cap (simplices, compositions) was exceeded."""


class DescriptorError(ValueError):
    """Invalid monoid descriptor or element literal.

    ``path`` locates the offending node inside a JSON document (``$`` is
    the root) when the error comes from parsing.
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message
