"""Weighted complete intersections: validation and certification.

A `WeightedCI` bundles weights W, degrees d and defining polynomials f_i
over a geometric variable table.  Certification is entirely ideal-
theoretic and exact:

* regular sequence: the Hilbert series of the coordinate ring, computed
  from the lead ideal of a Groebner basis, must equal
  prod(1 - t^{d_j}) / prod(1 - t^{W_i}) -- an equality that characterizes
  regularity for weighted-homogeneous sequences;
* quasi-smoothness: the punctured affine cone is smooth iff the ideal
  generated by the equations together with all maximal minors of their
  Jacobian matrix vanishes only at the origin, which the zero-
  dimensionality test on the lead ideal certifies.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Sequence, Tuple

from .errors import CertificationError
from .groebner import (
    GREVLEX,
    GroebnerBasis,
    HilbertSeries,
    buchberger,
    complete_intersection_numerator,
    cone_is_origin_only,
    quotient_hilbert_series,
    variables_without_pure_power,
)
from .poly import ANY_DEGREE, Polynomial, VariableTable

__all__ = ["WeightedCI", "CertificationReport", "validate"]


@dataclass
class CertificationReport:
    is_complete_intersection: bool
    is_quasi_smooth: bool
    details: List[str] = dataclass_field(default_factory=list)


class WeightedCI:
    """A weighted complete intersection V(f_1, ..., f_c) in P(W)."""

    def __init__(
        self,
        weights: Sequence[int],
        degrees: Sequence[int],
        equations: Sequence[Polynomial],
    ):
        weights = tuple(int(w) for w in weights)
        degrees = tuple(int(d) for d in degrees)
        if not weights or any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        if any(d < 1 for d in degrees):
            raise ValueError("degrees must be positive integers")
        if len(equations) != len(degrees):
            raise ValueError("one defining polynomial per degree required")
        if not equations:
            raise ValueError("at least one defining polynomial required")
        table = equations[0].table
        if table.auxiliary_indices:
            raise ValueError("defining polynomials must use geometric variables only")
        if len(table) != len(weights):
            raise ValueError("one weight per variable required")
        for f in equations:
            if f.table != table:
                raise ValueError("defining polynomials over different variable tables")
        n = len(weights) - 1
        c = len(degrees)
        if c > n:
            raise ValueError(f"codimension {c} exceeds the ambient dimension {n}")
        for f, d in zip(equations, degrees):
            wd = f.weighted_degree(weights)
            if wd is None:
                raise ValueError(f"equation is not weighted-homogeneous: {f}")
            if wd is not ANY_DEGREE and wd != d:
                raise ValueError(
                    f"equation has weighted degree {wd}, expected {d}: {f}"
                )
        self.table = table
        self.field = equations[0].field
        self.weights = weights
        self.degrees = degrees
        self.equations = tuple(equations)
        self.n = n
        self.c = c
        self.dim = n - c
        self.nu = sum(weights) - sum(degrees)
        self._coordinate_basis: Optional[GroebnerBasis] = None
        self._hilbert: Optional[HilbertSeries] = None
        self._regular: Optional[bool] = None
        self._report: Optional[CertificationReport] = None

    # ------------------------------------------------------------------

    def coordinate_ideal_basis(self) -> GroebnerBasis:
        """Groebner basis of (f_1, ..., f_c)."""
        if self._coordinate_basis is None:
            self._coordinate_basis = buchberger(
                list(self.equations), GREVLEX, grading=(self.weights, ())
            )
        return self._coordinate_basis

    def coordinate_ring_series(self) -> HilbertSeries:
        """Hilbert series of A = S_W / (f_1, ..., f_c)."""
        if self._hilbert is None:
            self._hilbert = quotient_hilbert_series(
                self.coordinate_ideal_basis(), self.weights
            )
        return self._hilbert

    def certify_regular_sequence(self) -> bool:
        """True iff the equations form a regular sequence.

        Certified by comparing the exact Hilbert series of the quotient
        with the complete-intersection series (full rational-function
        comparison, not finite-degree sampling).
        """
        if self._regular is None:
            expected = complete_intersection_numerator(self.degrees)
            self._regular = self.coordinate_ring_series().numerator == expected
        return self._regular

    def jacobian_minor_ideal(self) -> List[Polynomial]:
        """Equations plus all c x c minors of the Jacobian matrix d f_i / d x_j."""
        rows = [
            [f.partial_derivative(j) for j in range(len(self.table))]
            for f in self.equations
        ]
        minors = []
        for cols in itertools.combinations(range(len(self.table)), self.c):
            sub = [[row[j] for j in cols] for row in rows]
            det = _poly_det(sub)
            if not det.is_zero:
                minors.append(det)
        return list(self.equations) + minors

    def certify_quasi_smooth(self) -> CertificationReport:
        """Certification of Def-style quasi-smoothness via the Jacobian criterion.

        Builds the ideal of the equations and all maximal Jacobian minors,
        whose vanishing locus on the affine cone is the singular locus
        together with the origin; zero-dimensionality of its lead ideal
        certifies smoothness away from 0.
        """
        if self._report is not None:
            return self._report
        details: List[str] = []
        is_ci = self.certify_regular_sequence()
        if not is_ci:
            details.append(
                "Hilbert series of the quotient does not match the "
                "complete-intersection series; the equations are not a "
                "regular sequence"
            )
        gens = [g for g in self.jacobian_minor_ideal() if not g.is_zero]
        if not gens:
            qs = False
            details.append("all equations and Jacobian minors vanish identically")
        else:
            basis = buchberger(gens, GREVLEX, grading=(self.weights, ()))
            missing = variables_without_pure_power(basis)
            qs = not missing
            if missing:
                names = ", ".join(self.table.names[v] for v in missing)
                details.append(
                    "singular locus of the affine cone is positive-dimensional: "
                    f"no pure power of {names} in the lead ideal"
                )
        details.extend(self.well_formedness_warnings())
        report = CertificationReport(
            is_complete_intersection=is_ci,
            is_quasi_smooth=qs and is_ci,
            details=details,
        )
        if qs and not is_ci:
            report.details.append(
                "Jacobian test passed but the regular-sequence test failed; "
                "quasi-smoothness is reported as false"
            )
        self._report = report
        return report

    def well_formedness_warnings(self) -> List[str]:
        """Non-blocking diagnostics about the weight pattern.

        Weights are well-formed when any n of the n+1 weights are coprime;
        violations do not stop ring-side computations but the cohomological
        labels may lose their geometric meaning.
        """
        warnings = []
        for i in range(len(self.weights)):
            others = [w for j, w in enumerate(self.weights) if j != i]
            g = math.gcd(*others) if len(others) > 1 else others[0]
            if g > 1:
                warnings.append(
                    f"weights are not well-formed: gcd of all weights except "
                    f"{self.table.names[i]} is {g}"
                )
        return warnings

    def structure_sheaf_cohomology_dims(self, twist: int) -> Tuple[int, int]:
        """(h^0, h^top) of the twisted structure sheaf O_X(l).

        h^0(l) is the dimension of the coordinate ring in degree l, and
        the top cohomology is its dual in degree -l - nu; all intermediate
        cohomology vanishes.  Requires a certified complete intersection
        of dimension at least 1.
        """
        if self.dim < 1:
            raise CertificationError(
                "cohomology requires a positive-dimensional intersection"
            )
        if not self.certify_regular_sequence():
            raise CertificationError(
                "cohomology dimensions require a certified regular sequence"
            )
        series = self.coordinate_ring_series()
        return series.coefficient(twist), series.coefficient(-twist - self.nu)

    def __repr__(self):
        eqs = "; ".join(str(f) for f in self.equations)
        return f"WeightedCI(W={list(self.weights)}, d={list(self.degrees)}, [{eqs}])"


def validate(
    weights: Sequence[int],
    degrees: Sequence[int],
    equations: Sequence[Polynomial],
) -> WeightedCI:
    """Shape-check and degree-check the data of a weighted complete intersection."""
    return WeightedCI(weights, degrees, equations)


def _poly_det(matrix: List[List[Polynomial]]) -> Polynomial:
    """Determinant of a small square matrix of polynomials (Laplace expansion)."""
    size = len(matrix)
    first = matrix[0][0]
    if size == 1:
        return first
    table, coeff_field = first.table, first.field
    result = Polynomial.zero(table, coeff_field)
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [[matrix[i][k] for k in range(size) if k != j] for i in range(1, size)]
        term = entry * _poly_det(minor)
        result = result - term if j % 2 else result + term
    return result
