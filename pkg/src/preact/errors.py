class PreactError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(PreactError, ValueError):
    pass


class RegexSyntaxError(PreactError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownStateError(PreactError, ValueError):
    pass


class NotAPrefixCodeError(PreactError, ValueError):
    pass


class SchemaError(PreactError, ValueError):
    """A machine or language description file does not follow the schema."""
