"""Exception hierarchy shared by all modules."""


class KleinCurvesError(Exception):
    """Base class for every error raised by this package."""


class ZeroInputError(KleinCurvesError, ValueError):
    pass


class NonUniformLocusError(KleinCurvesError, ValueError):
    """The valuation differs between roots of an algebraic locus; refine the basis first."""


class AllZeroError(KleinCurvesError, ValueError):
    pass


class DegenerateCurveError(KleinCurvesError, ValueError):
    """The curve lies in a proper hyperplane of its ambient space."""


class IndexOutOfRangeError(KleinCurvesError, IndexError):
    pass


class IdentityViolated(KleinCurvesError, AssertionError):
    """A classical identity failed on valid input. Always an implementation bug."""


class NotContactError(KleinCurvesError, ValueError):
    pass


class DegenerateInputError(KleinCurvesError, ValueError):
    pass


class DegenerateFormBug(KleinCurvesError, AssertionError):
    pass


class BadParametersError(KleinCurvesError, ValueError):
    pass


class DegenerateFormError(KleinCurvesError, ValueError):
    pass


class LinearCurveError(KleinCurvesError, ValueError):
    pass


class NotNullError(KleinCurvesError, ValueError):
    pass


class NotDecomposableError(KleinCurvesError, ValueError):
    pass


class ConstantInputError(KleinCurvesError, ValueError):
    pass


class VerificationFailed(KleinCurvesError, AssertionError):
    """A classification check deviated from the expected closed form."""
