"""Exception hierarchy for splicekit."""


class SpliceKitError(Exception):
    """Base class for all errors raised deliberately by this package."""


class RegexSyntaxError(SpliceKitError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class UnknownSymbolError(SpliceKitError):
    """A word contains a character outside the working alphabet."""


class AlphabetMismatchError(SpliceKitError):
    """Two automata were combined whose alphabets differ."""


class InfiniteAxiomLanguageError(SpliceKitError):
    """An axiom automaton accepts infinitely many words."""


class CandidateLimitExceededError(SpliceKitError):
    """The rule candidate space is too large to enumerate.

    Carries the exact candidate count and the limit that was in force so
    callers can report both.
    """

    def __init__(self, candidates: int, limit: int):
        super().__init__(
            f"rule candidate space has {candidates} elements, "
            f"exceeding the limit of {limit}"
        )
        self.candidates = candidates
        self.limit = limit


class IllegalExtensionError(SpliceKitError):
    """An extension pattern does not exist for the rule variant."""
