"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (bad word, bad JSON, mismatched fields)."""


class WordError(InputError):
    """A letter sequence violates the word rules of its algebra."""


class RelationError(InputError):
    """Action matrices do not satisfy a defining relation of the algebra."""

    def __init__(self, relation: str):
        super().__init__(f"relation violated: {relation}")
        self.relation = relation


class LocalityError(Exception):
    """The endomorphism ring of a supposedly indecomposable module is not local.

    Raised when the deterministic summand test detects a non-nilpotent,
    non-invertible endomorphism; any result computed from that module is
    unreliable.
    """
