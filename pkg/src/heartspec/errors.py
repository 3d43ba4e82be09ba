"""Exception hierarchy shared by all heartspec modules."""


class HeartSpecError(Exception):
    """Base class for every error raised by this package."""


# audio_io
class WavError(HeartSpecError, ValueError):
    pass


class MalformedHeader(WavError):
    pass


class UnsupportedEncoding(WavError):
    pass


class TruncatedData(WavError):
    pass


# spectrogram
class ClipTooShort(HeartSpecError, ValueError):
    pass


# wavelet / features
class EmptyMatrix(HeartSpecError, ValueError):
    pass


class DimensionMismatch(HeartSpecError, ValueError):
    pass


class TooManyLevels(HeartSpecError, ValueError):
    pass


# matcher
class LengthMismatch(HeartSpecError, ValueError):
    pass


class EmptyDatabase(HeartSpecError, ValueError):
    pass


class TooFewRecords(HeartSpecError, ValueError):
    pass


# datastore
class DbFormatError(HeartSpecError, ValueError):
    pass


class BadMagic(DbFormatError):
    pass


class UnsupportedVersion(DbFormatError):
    pass


class Truncated(DbFormatError):
    pass


class CorruptRecord(DbFormatError):
    pass


class IoFailure(HeartSpecError, OSError):
    pass
