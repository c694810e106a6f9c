"""The bigraded Jacobi ring of a weighted complete intersection.

Given X = V(f_1, ..., f_c) in P(W), adjoin one auxiliary variable y_j per
equation with bidegree (1, -d_j), form

    F = y_1 f_1 + ... + y_c f_c        (bihomogeneous of degree (1, 0))

and quotient by all partial derivatives of F, geometric and auxiliary.
Note that dF/dy_j = f_j, so the equations themselves are among the
relations.  Component bases, multiplication matrices between components,
and diagonal variable-scaling actions are all computed exactly through
the Groebner machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner import (
    GREVLEX,
    GroebnerBasis,
    buchberger,
    graded_piece_basis,
    normal_form,
)
from .poly import BiDegree, Monomial, Polynomial, VariableTable
from .wci import WeightedCI

__all__ = ["JacobiRing", "ComponentMap", "build_jacobi", "auxiliary_names"]


def auxiliary_names(degrees: Sequence[int], existing: Sequence[str]) -> List[str]:
    """Names for the auxiliary variables, one per equation.

    Uses y{d_j} when the equation degrees are distinct (so the name shows
    the degree), else y{j}; falls back to suffixing underscores on a
    collision with an existing variable name.
    """
    if len(set(degrees)) == len(degrees):
        candidates = [f"y{d}" for d in degrees]
    else:
        candidates = [f"y{j + 1}" for j in range(len(degrees))]
    taken = set(existing)
    names = []
    for name in candidates:
        while name in taken:
            name += "_"
        taken.add(name)
        names.append(name)
    return names


@dataclass
class ComponentMap:
    """Matrix of multiplication by a fixed class between two components.

    ``matrix[i][j]`` is the coordinate on the i-th target basis monomial of
    the normal form of (multiplier * j-th source basis monomial).
    """

    source_bidegree: BiDegree
    target_bidegree: BiDegree
    matrix: List[List]
    multiplier: Polynomial

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.matrix), len(self.matrix[0]) if self.matrix else 0)


class JacobiRing:
    """Bigraded quotient by the partials of F, with cached component bases."""

    def __init__(self, source: WeightedCI, effective_bound: Optional[int] = None):
        if source.c < 1:
            raise ValueError("a complete intersection datum needs at least one equation")
        self.source = source
        self.weights = source.weights
        self.degrees = source.degrees
        self.field = source.field
        aux = auxiliary_names(source.degrees, source.table.names)
        self.table: VariableTable = source.table.extended(aux)
        self.auxiliary = tuple(aux)
        lifted = [f.extended_to(self.table) for f in source.equations]
        F = Polynomial.zero(self.table, self.field)
        for name, f in zip(aux, lifted):
            F = F + Polynomial.variable(self.table, self.field, self.table.index(name)) * f
        self.polynomial = F
        self.generators = tuple(
            F.partial_derivative(i) for i in range(len(self.table))
        )
        self.basis: GroebnerBasis = buchberger(
            list(self.generators),
            GREVLEX,
            grading=(self.weights, self.degrees),
            effective_bound=effective_bound,
        )
        self._components: Dict[BiDegree, Tuple[Monomial, ...]] = {}

    # ------------------------------------------------------------------

    def component_basis(self, bidegree: BiDegree) -> Tuple[Monomial, ...]:
        """Standard-monomial basis of the component, cached by bidegree.

        Queries are pure, so a concurrent duplicate insert writes the same
        value and is harmless.
        """
        bidegree = BiDegree(*bidegree)
        cached = self._components.get(bidegree)
        if cached is None:
            cached = tuple(
                graded_piece_basis(self.basis, bidegree, self.weights, self.degrees)
            )
            self._components[bidegree] = cached
        return cached

    def component_dim(self, bidegree: BiDegree) -> int:
        return len(self.component_basis(bidegree))

    def monomial(self, exponents: Monomial) -> Polynomial:
        return Polynomial.monomial(self.table, self.field, exponents)

    def class_of(self, p: Polynomial) -> Polynomial:
        """Canonical representative (normal form) of the residue class of p."""
        if p.table != self.table:
            p = p.extended_to(self.table)
        return normal_form(p, self.basis)

    def coordinates(self, p: Polynomial, bidegree: BiDegree) -> List:
        """Coordinates of the class of p in the component's standard basis."""
        nf = self.class_of(p)
        basis = self.component_basis(bidegree)
        index = {m: i for i, m in enumerate(basis)}
        coords = [self.field.zero] * len(basis)
        for m, c in nf.terms.items():
            if m not in index:
                raise ValueError(
                    f"class has a term of the wrong bidegree for component {bidegree}"
                )
            coords[index[m]] = c
        return coords

    # ------------------------------------------------------------------

    def multiplication_matrix(self, multiplier: Polynomial, source: BiDegree) -> ComponentMap:
        """Matrix of multiplication by a bihomogeneous class on a component.

        Column j holds the coordinates of NF(multiplier * basis_j) in the
        standard basis of the target component (source + deg multiplier).
        """
        if multiplier.table != self.table:
            multiplier = multiplier.extended_to(self.table)
        bd = multiplier.bidegree(self.weights, self.degrees)
        if bd is None:
            raise ValueError("multiplier is not bihomogeneous")
        if not isinstance(bd, BiDegree):
            raise ValueError("multiplier must be nonzero to fix a target component")
        source = BiDegree(*source)
        target = source + bd
        src_basis = self.component_basis(source)
        tgt_basis = self.component_basis(target)
        index = {m: i for i, m in enumerate(tgt_basis)}
        zero = self.field.zero
        matrix = [[zero] * len(src_basis) for _ in range(len(tgt_basis))]
        for j, mono in enumerate(src_basis):
            product = multiplier * self.monomial(mono)
            nf = normal_form(product, self.basis)
            for m, c in nf.terms.items():
                matrix[index[m]][j] = c
        return ComponentMap(source, target, matrix, self.class_of(multiplier))

    def diagonal_action(self, scalars: Sequence, bidegree: BiDegree) -> List[List]:
        """Matrix of the variable-scaling substitution on a component basis.

        The substitution x_i -> scalars[i] * x_i must map the ideal to
        itself: the image of every basis generator has to reduce to zero,
        which is checked before the matrix is formed.
        """
        if len(scalars) != len(self.table):
            raise ValueError("one scalar per variable (including auxiliary) required")
        for g in self.basis.generators:
            image = g.scale_variables(scalars)
            if not normal_form(image, self.basis).is_zero:
                raise ValueError("substitution does not preserve the ideal")
        basis = self.component_basis(BiDegree(*bidegree))
        index = {m: i for i, m in enumerate(basis)}
        zero = self.field.zero
        matrix = [[zero] * len(basis) for _ in range(len(basis))]
        for j, mono in enumerate(basis):
            image = self.monomial(mono).scale_variables(scalars)
            nf = normal_form(image, self.basis)
            for m, c in nf.terms.items():
                matrix[index[m]][j] = c
        return matrix

    def __repr__(self):
        return f"JacobiRing({self.source!r})"


def build_jacobi(source: WeightedCI, effective_bound: Optional[int] = None) -> JacobiRing:
    """Assemble the bigraded Jacobi ring of a validated complete intersection."""
    return JacobiRing(source, effective_bound=effective_bound)
