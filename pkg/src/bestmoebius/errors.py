"""Exception hierarchy shared by all modules."""


class BMAError(ValueError):
    """Base class for precondition and numerical failures."""


class OutOfDomain(BMAError):
    pass


class SingularPoint(BMAError):
    pass


class DivisionByZero(BMAError, ZeroDivisionError):
    pass


class BranchCut(BMAError):
    pass


class JetMismatch(BMAError):
    pass


class BadParameter(BMAError):
    pass


class DegenerateTransform(BMAError):
    pass


class CriticalPoint(BMAError):
    pass


class NotOnStraightEdge(BMAError):
    pass


class DenominatorZero(BMAError):
    pass


class SecondDerivativeNotZero(BMAError):
    pass


class ConvergenceFailure(BMAError):
    pass


class BadPolygonData(BMAError):
    pass


class BlaschkeNotVanishingAtZero(BMAError):
    pass


class BadAngles(BMAError):
    pass


class NoConvergence(BMAError):
    pass


class QuadratureFailure(BMAError):
    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ArcCrossesPrevertex(BMAError):
    pass


class NotATriangle(BMAError):
    pass
