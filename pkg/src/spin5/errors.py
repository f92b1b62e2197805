"""Exception hierarchy for spin5.

Every failure mode that callers are expected to handle gets its own class so
that the CLI can map domain errors to exit codes without string matching.
"""


class Spin5Error(Exception):
    """Base class for all spin5 domain errors."""


class InputError(Spin5Error):
    """Malformed input payload (bad JSON, wrong shape, wrong field)."""


class NonUnitSpinor(Spin5Error):
    """Operation requires a unit spinor and the input is not one."""


class NumericalRankFailure(Spin5Error):
    """A matrix that must have a specific rank failed the rank test."""


class KernelDimensionError(Spin5Error):
    """A kernel whose dimension is pinned by theory came out wrong."""


class DegenerateSubspace(Spin5Error):
    """Supplied spanning set is numerically dependent."""


class NotAdmissible(Spin5Error):
    """Subspace failed the admissibility test where admissibility is required."""


class DerivationFailure(Spin5Error):
    """Solution space of a defining linear system has the wrong dimension."""


class NonUnitInput(Spin5Error):
    """Numeric input required to lie on a unit sphere does not."""


class OddWord(Spin5Error):
    """Spin group elements must be products of an even number of vectors."""


class NonUnitGenerator(Spin5Error):
    """Spin group generator words must consist of unit vectors."""


class ConjugationNotVector(Spin5Error):
    """Conjugation of a vector operator left the image of the vector map."""


class BasisDegeneracy(Spin5Error):
    """A derived basis that must be well conditioned is numerically singular."""


class NonOrthogonalDerivative(Spin5Error):
    """Derivative data is not tangent to the unit sphere at the base spinor."""


class NonUnitQuaternion(Spin5Error):
    """Quaternion parameter must be a unit quaternion."""
