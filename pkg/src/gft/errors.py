"""Exception types shared across the toolkit."""


class GFTError(Exception):
    """Base class for toolkit errors."""


class ZeroConstantTerm(GFTError, ZeroDivisionError):
    pass


class NotUnitConstant(GFTError, ValueError):
    pass


class NonzeroInnerConstant(GFTError, ValueError):
    pass


class NotNormalized(GFTError, ValueError):
    pass


class ParamOutOfRange(GFTError, ValueError):
    pass


class NearSingularity(GFTError, ArithmeticError):
    pass


class BeyondTrustRadius(GFTError, ArithmeticError):
    """Series-only evaluation requested outside the radius where truncation is trusted."""


class InvalidBracket(GFTError, ValueError):
    pass


class NoRootInInterval(GFTError, ArithmeticError):
    pass


class MultipleRoots(GFTError, ArithmeticError):
    pass


class GridTooCoarse(GFTError, ArithmeticError):
    pass


class NewtonDiverged(GFTError, ArithmeticError):
    pass


class UnknownZooId(GFTError, KeyError):
    pass
