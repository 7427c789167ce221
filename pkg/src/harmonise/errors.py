"""Exception hierarchy shared by every layer of the toolkit."""


class HarmoniseError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidIri(HarmoniseError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"invalid IRI {text!r} at position {position}: {reason}")


class ConflictingQualifiers(HarmoniseError):
    """A literal was given both a datatype and a language tag."""


class InvalidTerm(HarmoniseError):
    """A term is used in a position it is not allowed in, or is malformed."""


class BadPrefix(HarmoniseError):
    pass


class UnboundPrefix(HarmoniseError):
    def __init__(self, prefix):
        self.prefix = prefix
        super().__init__(f"prefix {prefix!r} is not bound")


class HasBlankNodes(HarmoniseError):
    """Ground comparison was requested on a graph containing blank nodes."""


class MalformedResults(HarmoniseError):
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


# -- pattern layer ---------------------------------------------------------


class RecordError(HarmoniseError):
    """A source record (or one of its fields) is unusable.

    ``field`` names the offending record field so callers can report it.
    """

    field = None

    def __init__(self, message, field=None):
        if field is not None:
            self.field = field
        super().__init__(message)


class BadIdentifier(RecordError):
    field = "id"


class CoordinateOutOfRange(RecordError):
    field = "latitude"


class BadTimestamp(RecordError):
    field = "timestamp"


class NonNumericValue(RecordError):
    field = "value"


class UnknownAccessor(HarmoniseError, LookupError):
    def __init__(self, name, suggestion=None):
        self.name = name
        self.suggestion = suggestion
        msg = f"unknown accessor {name!r}"
        if suggestion:
            msg += f"; did you mean {suggestion!r}?"
        super().__init__(msg)

    # LookupError would otherwise repr the message in quotes
    __str__ = ValueError.__str__


class UnresolvedUnit(HarmoniseError):
    """A property spec names a unit IRI that the loaded catalog does not contain."""


# -- codegen ---------------------------------------------------------------


class UnmanglableName(HarmoniseError):
    pass


class UnknownPlaceholder(HarmoniseError):
    def __init__(self, path, offset):
        self.path = path
        self.offset = offset
        super().__init__(f"unknown placeholder {{{{ {path} }}}} at offset {offset}")


class MalformedManifest(HarmoniseError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"manifest line {line}: {reason}")


class ConfigError(HarmoniseError):
    pass
