"""Exception types raised by the library."""


class KauerError(ValueError):
    """Base class for precondition failures."""


class InvalidGraphError(KauerError):
    """A half-edge triple violates the Brauer graph axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class SubsetError(KauerError):
    """A half-edge subset is unknown or not stable under the pairing."""


class SectorError(KauerError):
    """A pair (h, r) is not a sector of the given subset."""


class GradingError(KauerError):
    """A grading is partial, not integer valued, or not 1-homogeneous."""


class CutError(KauerError):
    """A cut references unknown arrows or is not admissible."""
