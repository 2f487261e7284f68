# -*- coding: utf-8 -*-


class PrefalError(Exception):
    """
    Base exception for prefal
    """
    pass


class WordSpecError(PrefalError):
    """
    Raised when a word, morphism, Sturmian or coloring
    specification cannot be parsed or fails validation
    """
    pass


class WordGenerationError(PrefalError):
    """
    Raised when a generator cannot produce the requested symbols
    or a degenerate morphism is rejected
    """
    pass


class BorderError(PrefalError):
    """
    Raised when border status of the empty word is requested
    """
    pass


class FactorizationStallError(PrefalError):
    """
    Raised when the greedy unbordered prefix factorization
    finds no matching piece
    """
    def __init__(self, position, message=None):
        self.position = position
        if message is None:
            message = 'factorization stalls at position ' + str(position)
        super().__init__(message)


class DecodingError(PrefalError):
    """
    Raised when a word has more than one parse over a code table
    """
    pass


class DerivedMorphismError(PrefalError):
    """
    Raised when the derived morphism does not close over the code table
    """
    pass


class NotSturmianError(PrefalError):
    """
    Raised when a word or spec fails Sturmian validation
    """
    pass


class BaseCaseError(PrefalError):
    """
    Raised when desubstitution is asked for a word with N(x) = 2
    """
    pass


class ReductionError(PrefalError):
    """
    Raised when Sturmian reduction fails to terminate
    """
    pass


class OracleSizeCapError(PrefalError):
    """
    Raised when an oracle input exceeds its size cap
    """
    pass


class CrossCheckError(PrefalError):
    """
    Raised when two independent pipelines disagree
    """
    pass
