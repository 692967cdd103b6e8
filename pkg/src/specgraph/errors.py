"""Exception types shared across the package.

Each error name mirrors the failure it reports; callers are expected to
catch the specific class (the CLI maps them to JSON error payloads).
"""


class SpecgraphError(Exception):
    """Base class for all package errors."""


# -- finite fields -----------------------------------------------------------

class NotPrime(SpecgraphError):
    pass


class SizeOverflow(SpecgraphError):
    pass


class SpecMismatch(SpecgraphError):
    """Operands belong to different field specs (or wrong field)."""


class DivisionByZero(SpecgraphError):
    pass


class EvenCharacteristic(SpecgraphError):
    """Operation requires odd field size."""


class ZeroCoefficient(SpecgraphError):
    pass


class BadResidueClass(SpecgraphError):
    """Field size fails a required congruence (e.g. q = 1 mod 4)."""


class ZeroElement(SpecgraphError):
    pass


class IndexOutOfRange(SpecgraphError):
    pass


class HypothesisViolated(SpecgraphError):
    """A testable precondition of a theorem fails on the given input."""


# -- graphs ------------------------------------------------------------------

class LoopEdge(SpecgraphError):
    pass


class Disconnected(SpecgraphError):
    pass


class CapExceeded(SpecgraphError):
    """Exact computation refused: instance over the size cap or time budget."""


class BadParameters(SpecgraphError):
    pass


class NotSymmetric(SpecgraphError):
    pass


class NotGenerating(SpecgraphError):
    pass


class ContainsIdentity(SpecgraphError):
    pass


class NotRegular(SpecgraphError):
    pass


class NotDesign(SpecgraphError):
    pass


class NotPartialDesign(SpecgraphError):
    pass


# -- spectra / bounds --------------------------------------------------------

class Mismatch(SpecgraphError):
    """Closed-form and numeric spectra disagree."""


class NoClosedForm(SpecgraphError):
    pass


class IdentityViolated(SpecgraphError):
    """Strongly-regular parameter identity fails."""


class ColorViolation(SpecgraphError):
    """Mixing query ignores the bipartition constraint."""


class InvalidOperation(SpecgraphError):
    pass


class BadWeights(SpecgraphError):
    pass
