"""Exception hierarchy shared across the package.

Each error class carries the process exit code the CLI maps it to, so
failure classes stay distinguishable in scripts (see README, "Exit codes").
"""


class LexforgeError(Exception):
    """Base class for all expected failures."""

    exit_code = 1


class ConfigError(LexforgeError):
    """Bad run configuration: unknown key, out-of-range value, bad JSON."""

    exit_code = 2


class MissingInputError(LexforgeError):
    """A required input file does not exist."""

    exit_code = 3


class EmptyDataError(LexforgeError):
    """A class, corpus side, or vocabulary came out empty."""

    exit_code = 4


class ParseError(LexforgeError):
    """A data file is malformed or not valid UTF-8."""

    exit_code = 5

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)


class MissingArtifactError(LexforgeError):
    """A prerequisite artifact (split, model, lexicon) has not been built yet."""

    exit_code = 6


class DivergenceError(LexforgeError):
    """Training loss became non-finite."""

    exit_code = 7

    def __init__(self, message: str, epoch: int):
        self.epoch = epoch
        super().__init__(f"{message} (epoch {epoch})")


class ValidationError(LexforgeError):
    """A value violates a documented contract (range, pairing, word shape)."""

    exit_code = 8


class VocabMismatchError(ValidationError):
    """A model was paired with a vocabulary it was not trained against."""
