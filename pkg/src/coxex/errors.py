"""Exception hierarchy shared by every module."""


class CoxexError(Exception):
    """Base class for all library errors."""


class RepeatedElements(CoxexError, ValueError):
    pass


class NotPresent(CoxexError, KeyError):
    pass


class Ambiguous(CoxexError, ValueError):
    pass


class UniverseTooLarge(CoxexError, ValueError):
    pass


class GroundSetError(CoxexError, ValueError):
    """Invalid ground set size or a member outside the ground set."""


class BadRank(CoxexError, ValueError):
    pass


class BadParams(CoxexError, ValueError):
    pass


class NonIntegralPairing(CoxexError, ArithmeticError):
    """A reflection produced a non-integral pairing; signals a scaling bug."""


class UnsupportedPolytope(CoxexError, ValueError):
    pass


class RankMismatch(CoxexError, ValueError):
    pass


class EmptySystem(CoxexError, ValueError):
    pass


class BadShape(CoxexError, ValueError):
    pass


class TooSmall(CoxexError, ValueError):
    pass


class BadParity(CoxexError, ValueError):
    pass


class NotInFace(CoxexError, ValueError):
    pass


class NotAdmissible(CoxexError, ValueError):
    pass


class NotDisjoint(CoxexError, ValueError):
    pass


class SNotLargeEnough(CoxexError, ValueError):
    pass


class NotSkew(CoxexError, ValueError):
    pass
