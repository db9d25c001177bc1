"""Exception types shared across the package.

Every failure of a mathematical precondition raises one of these rather
than a bare AssertionError, so callers can tell invalid input apart from
an internal consistency violation.
"""


class AlgebraicError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AlgebraicError):
    """Malformed or out-of-range user input (CLI arguments, JSON specs)."""


class AlgebraAxiomError(AlgebraicError):
    """Structure constants violate the left Leibniz identity (or, for a
    Lie algebra, antisymmetry / Jacobi)."""


class ModuleAxiomError(AlgebraicError):
    """An action fails the left-module or bimodule compatibility axioms."""


class StabilityError(AlgebraicError):
    """A map does not preserve the subspace it was asked to act on."""


class DimensionError(AlgebraicError):
    """An operation that only makes sense in a fixed dimension was called
    with something else (e.g. the one-dimensional closed forms)."""


class NonIntegralWeightError(AlgebraicError):
    """An sl2 weight-space decomposition did not account for the whole
    module, so the h-eigenvalues cannot all be integers."""


class ComplexError(AlgebraicError):
    """A purported cochain complex fails d(n+1) . d(n) = 0 or has
    mismatched shapes."""


class UnsupportedDegreeError(AlgebraicError):
    """A closed-form Ext formula was requested outside its valid range."""


class VerificationError(AlgebraicError):
    """A cross-check between two independent computation routes failed."""


class CollapseNotCertifiedError(AlgebraicError):
    """A spectral-sequence page admits a potentially nonzero higher
    differential, so E2 dimensions cannot be reported as Ext dimensions.

    The offending differential is recorded as ``witness = (r, p, q)``:
    the page-r differential out of position (p, q).
    """

    def __init__(self, witness, message=None):
        self.witness = witness
        if message is None:
            r, p, q = witness
            message = (
                f"collapse not certified: potential nonzero d_{r} out of "
                f"E2^({p},{q})"
            )
        super().__init__(message)
