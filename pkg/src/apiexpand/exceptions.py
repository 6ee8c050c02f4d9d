"""Exception hierarchy shared by every stage of the pipeline."""


class ApiExpandError(Exception):
    """Base class for all errors raised by apiexpand."""


class CorpusFormatError(ApiExpandError):
    """A corpus, code or evaluation file could not be read or parsed."""


class EmptyQueryError(ApiExpandError, ValueError):
    def __init__(self, raw=""):
        super().__init__(f"empty query: {raw!r} has no keywords after preprocessing")
        self.raw = raw


class NoFeedbackError(ApiExpandError):
    def __init__(self, keywords=()):
        super().__init__(f"no feedback documents for query {list(keywords)}")
        self.keywords = tuple(keywords)


class StaleDocumentFrequencyError(ApiExpandError, ValueError):
    """An API class seen in feedback code has no document frequency entry."""


class EmptyVocabularyError(ApiExpandError, ValueError):
    def __init__(self, min_count):
        super().__init__(f"empty vocabulary: no token occurs at least {min_count} times")
        self.min_count = min_count


class VectorFormatError(ApiExpandError):
    """A text vector file is malformed."""


class IndexFormatError(ApiExpandError):
    """A persisted index is malformed or was written with other scoring constants."""


class ConfigError(ApiExpandError, ValueError):
    """Invalid engine configuration or sweep specification."""



class MissingArtifactError(ApiExpandError):
    """A configured artifact (corpus, index, vectors, ...) is absent."""
