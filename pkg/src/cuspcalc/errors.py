"""Domain error types shared by every module of the package.

All errors raised on bad mathematical input derive from CuspError so the
command line front end can map them to a single exit code.  The class name
is the error name printed to the user.
"""


class CuspError(Exception):
    """Base class for domain errors."""


class ParabolicCycle(CuspError):
    """The cyclic word is all 2s, so the induced matrix is parabolic."""


class RationalInput(CuspError):
    """A quadratic irrational was required but a rational number was given."""


class NotHyperbolic(CuspError):
    """The matrix or sequence has |trace| <= 2."""


class NegativeTrace(CuspError):
    """Hyperbolic matrix with trace <= -3; negate it before converting."""


class TraceTooSmall(CuspError):
    """Trace below 3, so no one-vertex cusp cycle exists."""


class NotSL2(CuspError):
    """Integer matrix with determinant different from 1."""


class NotStable(CuspError):
    """Multiplication does not map the module into itself."""


class AllTwos(CuspError):
    """Cusp-cycle operation applied to a sequence with no entry >= 3."""


class IndexOutOfRange(CuspError):
    """Position argument outside the cyclic sequence."""


class NotExceptional(CuspError):
    """Corner blow-down requested at an entry that is not 1."""


class Degenerate(CuspError):
    """Blow-down chain left the valid range irrecoverably."""


class NotFound(CuspError):
    """Search exhausted its bounds without a witness (not a nonexistence proof)."""


class NonCyclicTorsion(CuspError):
    """Torsion group is not cyclic; an explicit generator is required."""


class BadOrder(CuspError):
    """Requested subgroup order does not divide the torsion order."""


class InvalidTriple(CuspError):
    """(p, q, r) violates 1/p + 1/q + 1/r < 1 or does not produce a cusp."""


class InvalidQuadruple(CuspError):
    """(p, q, r, s) violates (1/p + 1/r)(1/q + 1/s) < 1."""


class MalformedComplex(CuspError):
    """Input data does not describe a triangulated surface."""


class NotAutomorphism(CuspError):
    """Vertex permutation does not preserve the complex; message names the cell."""


class TooShort(CuspError):
    """Boundary operation needs a longer sequence."""
