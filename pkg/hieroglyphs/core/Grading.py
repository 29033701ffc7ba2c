"""
Positive multigradings of a polynomial ring.
"""
from typing import Sequence, Tuple

from .Errors import NonPositiveGrading


class Grading:
    """
    Assigns each variable a weight vector in Z^d.

    The grading is positive: every weight vector is nonzero with
    nonnegative entries, so no nonconstant monomial has weight zero.
    """

    def __init__(self, weights: Sequence[Sequence[int]], dim: int = None):
        """
        Initialize a grading and validate positivity.

        Args:
            weights: One weight vector per variable id
            dim: Length d of every weight vector (inferred when omitted)

        Raises:
            NonPositiveGrading: If a weight vector is zero, negative or of
                the wrong length
        """
        self.weights: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(a) for a in w) for w in weights)
        if dim is None:
            dim = len(self.weights[0]) if self.weights else 1
        if dim < 1:
            raise NonPositiveGrading(f"Grading dimension must be positive, got {dim}")
        self.dim = dim
        for var_id, weight in enumerate(self.weights):
            if len(weight) != dim:
                raise NonPositiveGrading(
                    f"Weight of variable {var_id} has length {len(weight)}, expected {dim}")
            if any(a < 0 for a in weight) or not any(weight):
                raise NonPositiveGrading(f"Weight of variable {var_id} is not positive: {list(weight)}")

    @classmethod
    def standard(cls, nvars: int) -> "Grading":
        """Every variable has degree 1."""
        return cls([(1,)] * nvars, dim=1)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def is_standard(self) -> bool:
        return self.dim == 1 and all(weight == (1,) for weight in self.weights)

    def weight(self, exponents: Sequence[int]) -> Tuple[int, ...]:
        """Multidegree of the monomial with the given exponent vector."""
        total = [0] * self.dim
        for var_id, exponent in enumerate(exponents):
            if exponent:
                for k, a in enumerate(self.weights[var_id]):
                    total[k] += exponent * a
        return tuple(total)

    def total_degrees(self) -> Tuple[int, ...]:
        return tuple(sum(weight) for weight in self.weights)

    def has_equal_total_degrees(self) -> bool:
        return len(set(self.total_degrees())) <= 1

    def lifted(self, sources: Sequence[int]) -> "Grading":
        """
        Grading of an enlarged ring where variable k copies variable sources[k].

        Args:
            sources: For every variable of the new ring, the id it inherits
                its weight from

        Returns:
            The transported grading
        """
        return Grading([self.weights[source] for source in sources], dim=self.dim)

    def __eq__(self, other):
        if not isinstance(other, Grading):
            return NotImplemented
        return self.dim == other.dim and self.weights == other.weights

    def __hash__(self):
        return hash((self.dim, self.weights))

    def __repr__(self):
        return f"Grading(dim={self.dim}, weights={[list(w) for w in self.weights]})"
