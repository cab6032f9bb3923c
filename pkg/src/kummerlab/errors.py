"""Exception types shared across the package."""


class KummerlabError(Exception):
    """Base class for every error this library raises on purpose."""


class NotPrime(KummerlabError):
    pass


class NoRootOfUnity(KummerlabError):
    pass


class DivisionByZero(KummerlabError):
    pass


class NotInvertible(KummerlabError):
    pass


class BudgetExceeded(KummerlabError):
    pass


class NotKummerBase(KummerlabError):
    pass


class WrongWeight(KummerlabError):
    pass


class WrongDegree(KummerlabError):
    pass


class Exhausted(KummerlabError):
    """A sampler ran out of attempts before hitting the requested profile."""


# the harness surfaces sampler exhaustion under this name
SamplerExhausted = Exhausted


class NotWeightOne(KummerlabError):
    pass


class HypothesisFailed(KummerlabError):
    pass


class CertificationFailed(KummerlabError):
    """A constructed chain step failed its runtime certificate.

    Carries enough reproduction data to file as a potential erratum.
    """

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data or {}


class NotCovered(KummerlabError):
    pass


class UnknownSuite(KummerlabError):
    pass


class ParseError(KummerlabError):
    """Element-expression syntax error, with a 0-based source position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownSymbol(ParseError):
    pass
