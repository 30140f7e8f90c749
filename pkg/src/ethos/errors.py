"""Exception types shared across the toolkit."""


class EthosError(Exception):
    """Base class for all toolkit errors."""


# --- ingestion ---

class NetworkError(EthosError):
    """Transient transport or parse failure; safe to retry."""


class AppNotFound(EthosError):
    """The store does not know the requested app id."""


class RateLimited(EthosError):
    """The store asked us to back off."""


class FeedExhausted(EthosError):
    """The RSS feed has no more pages (recent-reviews-only limit)."""


class FormatError(EthosError):
    """No line of an input file could be parsed."""


# --- corpus / modeling ---

class EmptyCorpus(EthosError):
    pass


class EmptyVocabulary(EthosError):
    pass


class InvalidConfig(EthosError):
    pass


class VocabularyMismatch(EthosError):
    pass


class TopicOutOfRange(EthosError):
    pass


class TooFewTerms(EthosError):
    pass


# --- taxonomy / alignment ---

class SchemaError(EthosError):
    pass


class DuplicateId(EthosError):
    pass


class EmptyText(EthosError):
    pass


class ProviderError(EthosError):
    """An embedding or sentiment provider failed."""


class NoKnownWords(EthosError):
    """Static vector provider: every word was out of vocabulary."""


class DimensionMismatch(EthosError):
    pass


class ZeroVector(EthosError):
    pass


class UnknownTopic(EthosError):
    pass


class UnknownLabel(EthosError):
    pass


# --- sentiment ---

class EmptyTopic(EthosError):
    pass


# --- pipeline / server ---

class ConfigError(EthosError):
    """Bad configuration file or flag value (CLI exit code 2)."""


class StageFailed(EthosError):
    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


class IncompleteRun(EthosError):
    pass


class MissingArtifacts(EthosError):
    pass
