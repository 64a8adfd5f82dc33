"""Exception types shared across the package."""


class EulerlabError(Exception):
    """Base class for every error raised by this package."""


class InputError(EulerlabError):
    """Malformed input: bad documents, mismatched ranks or fields, invalid parameters."""


class HypothesisError(EulerlabError):
    """A theorem hypothesis fails; the message names the violated condition."""


class ResourceLimitError(EulerlabError):
    """The requested computation exceeds the enforced desk-scale limits."""
