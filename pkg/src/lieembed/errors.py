"""Exception types shared across the package."""


class LieEmbedError(Exception):
    """Base class for all library errors."""


class ExtensionDegreeTooHigh(LieEmbedError):
    """Eigenvalues require an extension beyond a single quadratic field."""


class NotASubalgebra(LieEmbedError):
    """A subspace that was required to be bracket-closed is not."""


class NotATorus(LieEmbedError):
    """Input is not an abelian algebra of semisimple elements."""


class NotAbelianNilpotent(LieEmbedError):
    """Input is not an abelian algebra of ad-nilpotent elements."""


class NotNilpotent(LieEmbedError):
    """Input is not an algebra of ad-nilpotent elements."""


class NoRealSemisimpleFound(LieEmbedError):
    """Search budget exhausted without an all-real-eigenvalue element."""


class NoCompactFound(LieEmbedError):
    """Search budget exhausted without a compatible compact element."""


class NotSplit(LieEmbedError):
    """Algebra has no real torus to build simple-root circles from."""


class CenterObstruction(LieEmbedError):
    """Adjoint is not faithful and no preimage exists at all."""


class DegenerateRoot(LieEmbedError):
    """Bracket of opposite root spaces vanishes; no sl2 triple."""


class UnrecognizedBondPattern(LieEmbedError):
    """Integral combinations of two simple roots match no diagram rule."""


class UnrecognizedDiagram(LieEmbedError):
    """Bond graph matches no entry of the classification tables."""


class VariableMismatch(LieEmbedError):
    """Vector fields over different variable lists cannot be bracketed."""


class NotClosed(LieEmbedError):
    """A catalog bracket leaves the span of the generators."""

    def __init__(self, msg, pair=None, residual=None):
        super().__init__(msg)
        self.pair = pair
        self.residual = residual
