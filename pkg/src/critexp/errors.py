"""Exception types shared across the package."""


class SizeError(Exception):
    """A word, length, or schedule exceeds a size limit or memory budget."""


class FormatError(ValueError):
    """Input bytes or text do not conform to a word serialization format."""
