"""Exception hierarchy shared by all pipeline stages."""


class MMGenderError(Exception):
    """Base class for every error raised by this package."""


# --- corpus ingestion ---------------------------------------------------

class MissingTruthFile(MMGenderError):
    pass


class IntegrityError(MMGenderError):
    """Truth entry without a tweet document, or an unparseable document."""


class UnknownLabel(MMGenderError):
    pass


class MissingClassFolder(MMGenderError):
    pass


class EmptyClass(MMGenderError):
    pass


class EmptyTweetList(MMGenderError):
    pass


class InvalidSignal(MMGenderError):
    pass


# --- base models ---------------------------------------------------------

class DecodeError(MMGenderError):
    pass


class BackboneUnavailable(MMGenderError):
    pass


class EmptyText(MMGenderError):
    pass


class SingleClassData(MMGenderError):
    pass


class InvalidConfig(MMGenderError):
    """A model config violates its preconditions (e.g. epochs < 1)."""


# --- micronet ------------------------------------------------------------

class InvalidSpec(MMGenderError):
    pass


class DimensionError(MMGenderError):
    pass


# --- stacking ------------------------------------------------------------

class TooManyItems(MMGenderError):
    pass


class ArityMismatch(MMGenderError):
    pass


class UserMismatch(MMGenderError):
    pass


class EmptyList(MMGenderError):
    pass


# --- evaluation ----------------------------------------------------------

class LengthMismatch(MMGenderError):
    pass


class UnknownClass(MMGenderError):
    pass


class EmptyInput(MMGenderError):
    pass


class EmptyMatrix(MMGenderError):
    pass


class InconsistentClasses(MMGenderError):
    pass


class IoError(MMGenderError):
    pass


# --- pipeline ------------------------------------------------------------

class ConfigError(MMGenderError):
    pass


class StageDependencyError(MMGenderError):
    pass
