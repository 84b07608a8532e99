"""Exception types shared across the toolkit."""


class CommentumError(Exception):
    """Base class for all toolkit errors."""


# --- ingest ---

class AuthFailed(CommentumError):
    pass


class RateLimited(CommentumError):
    def __init__(self, retry_after: float, message: str = ""):
        super().__init__(message or f"rate limited, retry after {retry_after}s")
        self.retry_after = retry_after


class NetworkError(CommentumError):
    pass


class RepoNotFound(CommentumError):
    pass


class DirNotFound(CommentumError):
    pass


# --- dataset ---

class SchemaError(CommentumError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        loc = f" (line {line}" + (f", field {field!r}" if field else "") + ")" if line else ""
        super().__init__(message + loc)
        self.line = line
        self.field = field


class DuplicateId(CommentumError):
    def __init__(self, pair_id: str, line: int | None = None):
        super().__init__(f"duplicate pair id {pair_id!r}" + (f" at line {line}" if line else ""))
        self.pair_id = pair_id
        self.line = line


class InsufficientLabels(CommentumError):
    pass


class UnlabeledGenerated(CommentumError):
    def __init__(self, pair_id: str):
        super().__init__(f"generated pair {pair_id!r} has no label")
        self.pair_id = pair_id


# --- annotate ---

class UnknownPair(CommentumError):
    pass


class AlreadyLabeled(CommentumError):
    pass


class SessionComplete(CommentumError):
    pass


class StorageError(CommentumError):
    pass


# --- features ---

class EmptyVocabulary(CommentumError):
    pass


# --- models ---

class LengthMismatch(CommentumError):
    pass


class EmptyBatch(CommentumError):
    pass


class SingleClassTrainingSet(CommentumError):
    pass


class VocabularyMismatch(CommentumError):
    pass


class MissingPrediction(CommentumError):
    def __init__(self, pair_id: str):
        super().__init__(f"no stored prediction for pair {pair_id!r}")
        self.pair_id = pair_id


# --- eval ---

class UnlabeledTestPair(CommentumError):
    pass
