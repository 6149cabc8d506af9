"""Exception types shared across the toolkit."""


class EdgemorphError(Exception):
    """Base class for all toolkit errors."""


class ParseError(EdgemorphError):
    """Malformed input document (bad JSON, missing fields, wrong types)."""


class ValidationError(EdgemorphError):
    """A structurally parsed input violates a model invariant."""


class RangeError(EdgemorphError, ValueError):
    """A numeric argument lies outside its documented domain."""


class DegeneracyError(EdgemorphError):
    """Geometry too degenerate to resolve (collinear overlapping segments)."""


class ConfigError(EdgemorphError):
    """An animation configuration is unusable (bad parameter, non-monotone easing)."""


class UsageError(EdgemorphError):
    """An operation was called with arguments that make no sense together."""
