"""Exception types shared across pipeline stages."""


class UnrestcastError(Exception):
    """Base class for all library errors."""


class FeedFormatError(UnrestcastError):
    """Feed is not RSS 2.0 or Atom."""


class FeedParseError(UnrestcastError):
    """Malformed XML in a feed; carries the byte offset of the failure."""

    def __init__(self, message: str, byte_offset: int):
        super().__init__(f"{message} (byte offset {byte_offset})")
        self.byte_offset = byte_offset


class NetworkError(UnrestcastError):
    """A fetch failed after the configured number of retries."""


class ExtractionEmptyError(UnrestcastError):
    """No candidate text block found in a fetched page."""


class StorageError(UnrestcastError):
    """Corpus store could not be read or written."""


class EmptyVocabularyError(UnrestcastError):
    """No word survived the frequency threshold."""


class OutOfVocabularyError(UnrestcastError):
    """A query word is not in the trained vocabulary."""

    def __init__(self, word: str):
        super().__init__(f"word not in vocabulary: {word!r}")
        self.word = word


class DivergenceError(UnrestcastError):
    """Embedding vectors exceeded the norm bound during training."""


class EmptyMatrixError(UnrestcastError):
    """Term pruning removed every term or every document."""


class InvalidConfigError(UnrestcastError):
    """A model or pipeline configuration value is out of range."""


class PatternFileError(UnrestcastError):
    """Trigger-pattern file could not be parsed; carries the line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class GoldCoverageError(UnrestcastError):
    """Gold labels do not cover the evaluation universe."""

    def __init__(self, missing_ids):
        ids = sorted(missing_ids)
        super().__init__(f"gold labels missing for {len(ids)} item(s): {ids[:10]}")
        self.missing_ids = ids


class StageError(UnrestcastError):
    """A pipeline stage failed; partial outputs are kept for debugging."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause
