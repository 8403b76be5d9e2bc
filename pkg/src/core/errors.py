"""Exception hierarchy. Every input problem surfaces as an ArnoldError."""


class ArnoldError(ValueError):
    """Base class for errors caused by user input or configuration."""


class WordParseError(ArnoldError):
    """Word text is not a `0b...`/`0x...` token of power-of-two length."""


class DomainError(ArnoldError):
    """A rank, level, offset or complexity value is out of range."""


class ConfigError(ArnoldError):
    """The configuration file cannot be read or does not validate."""
