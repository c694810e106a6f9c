"""Hyperelliptic Fano threefolds of Picard rank 1, index 1, degree 4.

Such a threefold is a double cover of a smooth quadric Q in P^4 branched
along a smooth degree-8 surface; it is modeled as

    X = V(g, z^2 - f)  in  P(1, 1, 1, 1, 1, 2),

with g a quadric and f a quartic in x_0..x_4.  After a rational change of
coordinates the quadric is normalized to g = x_0^2 + ... + x_4^2.  The
deck involution  z -> -z  acts on every component of the Jacobi ring, and
this module computes its eigenspaces, the full and involution-invariant
infinitesimal Torelli data, and the Macaulay-type injectivity of
multiplication on the branch-surface coordinate ring B = k[x]/(f, g).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CertificationError
from .field import QQ
from .groebner import (
    GREVLEX,
    buchberger,
    graded_piece_basis,
    normal_form,
)
from .jacobi import JacobiRing, build_jacobi
from .linalg import (
    StackedKernel,
    identity_matrix,
    in_span,
    kernel_of_matrix,
    mat_sub,
    matrix_rank,
)
from .poly import BiDegree, Polynomial, VariableTable
from .torelli import TorelliReport, torelli_map
from .wci import WeightedCI, validate

__all__ = [
    "HyperellipticFano",
    "InvolutionReport",
    "InvariantTorelliReport",
    "MacaulayReport",
    "build_fano",
    "standard_quadric",
]

_COMPONENTS = (BiDegree(1, 0), BiDegree(1, -1), BiDegree(2, -1))


def standard_quadric(table: VariableTable, field) -> Polynomial:
    result = Polynomial.zero(table, field)
    for i in range(len(table)):
        result = result + Polynomial.variable(table, field, i) ** 2
    return result


@dataclass
class InvolutionReport:
    eigen_dims: Dict[BiDegree, Tuple[int, int]]  # bidegree -> (invariant, anti)
    matrices: Dict[BiDegree, List[List]]


@dataclass
class InvariantTorelliReport:
    full_kernel_dim: int
    invariant_dim: int
    invariant_rank: int
    invariant_restriction_injective: bool
    kernel_iota_stable: bool
    kernel_anti_invariant: bool
    torelli: TorelliReport


@dataclass
class MacaulayReport:
    injective: bool
    dims: Tuple[int, int, int]  # (dim B_4, dim B_3, dim B_7)
    rank: int


class HyperellipticFano:
    """The double-cover model with its weighted complete intersection."""

    def __init__(
        self,
        f: Polynomial,
        quadric: Polynomial,
        ci: WeightedCI,
        halved_partials: Sequence[Polynomial],
        coordinate_change: Optional[List[List[Fraction]]] = None,
        effective_bound: Optional[int] = None,
    ):
        self.f = f
        self.quadric = quadric  # over the x-variables only
        self.ci = ci
        self.halved_partials = tuple(halved_partials)  # h_i = (df/dx_i) / 2
        self.coordinate_change = coordinate_change
        self._effective_bound = effective_bound
        self._ring: Optional[JacobiRing] = None

    @property
    def x_table(self) -> VariableTable:
        return self.f.table

    @property
    def field(self):
        return self.f.field

    @property
    def ring(self) -> JacobiRing:
        if self._ring is None:
            self._ring = build_jacobi(self.ci, effective_bound=self._effective_bound)
        return self._ring

    # ------------------------------------------------------------------

    def presentation_relations(self) -> List[Polynomial]:
        """The closed-form relation list (f - z^2, g, y2*x_i - y4*h_i, y4*z)."""
        ring = self.ring
        table = ring.table
        field = ring.field
        z = Polynomial.variable(table, field, table.index("z"))
        y2 = Polynomial.variable(table, field, table.index(ring.auxiliary[0]))
        y4 = Polynomial.variable(table, field, table.index(ring.auxiliary[1]))
        f = self.f.extended_to(table)
        g = self.quadric.extended_to(table)
        relations = [f - z * z, g]
        for i in range(len(self.x_table)):
            xi = Polynomial.variable(table, field, i)
            hi = self.halved_partials[i].extended_to(table)
            relations.append(y2 * xi - y4 * hi)
        relations.append(y4 * z)
        return relations

    def presentation_matches(self, relations: Optional[Sequence[Polynomial]] = None) -> bool:
        """Two-sided ideal equality of the Jacobi ideal and a relation list.

        Every relation must reduce to zero against the computed basis and
        every computed generator must reduce to zero against a basis of
        the relation ideal.
        """
        ring = self.ring
        if relations is None:
            relations = self.presentation_relations()
        relations = [r if r.table == ring.table else r.extended_to(ring.table) for r in relations]
        for r in relations:
            if not normal_form(r, ring.basis).is_zero:
                return False
        other = buchberger(
            list(relations), GREVLEX, grading=(ring.weights, ring.degrees)
        )
        for gen in ring.generators:
            if not normal_form(gen, other).is_zero:
                return False
        return True

    # ------------------------------------------------------------------

    def involution_scalars(self) -> List:
        """Variable scalings of the deck involution: z -> -z, all else fixed.

        Both equations are involution-invariant, so the auxiliary
        variables carry the trivial scaling.
        """
        ring = self.ring
        one = ring.field.one
        scalars = [one] * len(ring.table)
        scalars[ring.table.index("z")] = -one
        return scalars

    def involution_report(self) -> InvolutionReport:
        """Eigenspace dimensions of the involution on the three components
        entering the Torelli map."""
        ring = self.ring
        scalars = self.involution_scalars()
        eigen: Dict[BiDegree, Tuple[int, int]] = {}
        matrices: Dict[BiDegree, List[List]] = {}
        for bd in _COMPONENTS:
            matrix = ring.diagonal_action(scalars, bd)
            n = len(matrix)
            anti = matrix_rank(mat_sub(matrix, identity_matrix(n, ring.field)), ring.field)
            eigen[bd] = (n - anti, anti)
            matrices[bd] = matrix
        return InvolutionReport(eigen_dims=eigen, matrices=matrices)

    def _invariant_vectors(self, matrix: List[List]) -> List[List]:
        """Basis of the +1 eigenspace of an involution matrix."""
        n = len(matrix)
        return kernel_of_matrix(mat_sub(matrix, identity_matrix(n, self.field)), n, self.field)

    def invariant_torelli_check(self) -> InvariantTorelliReport:
        """Full Torelli kernel and the rank of the involution-invariant restriction."""
        ring = self.ring
        action = ring.diagonal_action(self.involution_scalars(), BiDegree(1, 0))
        invariant = self._invariant_vectors(action)
        report = torelli_map(self.ci, ring=ring, restrictions={"invariant": invariant})
        kernel = report.kernel_vectors
        stable = True
        anti = True
        for vector in kernel:
            image = _mat_vec(action, vector, ring.field)
            if not in_span(kernel, image, ring.field):
                stable = False
            projected = [a + b for a, b in zip(vector, image)]  # 2 * invariant part
            if any(projected):
                anti = False
        invariant_rank = report.restriction_ranks["invariant"]
        return InvariantTorelliReport(
            full_kernel_dim=report.kernel_dim,
            invariant_dim=len(invariant),
            invariant_rank=invariant_rank,
            invariant_restriction_injective=invariant_rank == len(invariant),
            kernel_iota_stable=stable,
            kernel_anti_invariant=anti,
            torelli=report,
        )

    # ------------------------------------------------------------------

    def branch_ring_macaulay_check(self) -> MacaulayReport:
        """Injectivity of B_4 -> Hom(B_3, B_7) for B = k[x]/(f, g).

        The multiplication pairing of the Artinian complete-intersection
        quotient of the branch surface is checked by exact rank.
        """
        table = self.x_table
        field = self.field
        weights = (1,) * len(table)
        basis = buchberger([self.f, self.quadric], GREVLEX, grading=(weights, ()))
        b3 = graded_piece_basis(basis, BiDegree(0, 3), weights, ())
        b4 = graded_piece_basis(basis, BiDegree(0, 4), weights, ())
        b7 = graded_piece_basis(basis, BiDegree(0, 7), weights, ())
        index = {m: i for i, m in enumerate(b7)}
        zero = field.zero
        matrices = []
        for u in b4:
            u_poly = Polynomial.monomial(table, field, u)
            matrix = [[zero] * len(b3) for _ in range(len(b7))]
            for j, s in enumerate(b3):
                nf = normal_form(u_poly * Polynomial.monomial(table, field, s), basis)
                for m, c in nf.terms.items():
                    matrix[index[m]][j] = c
            matrices.append(matrix)
        stack = StackedKernel(len(b4), field)
        stack.add_block(matrices)
        return MacaulayReport(
            injective=stack.rank == len(b4),
            dims=(len(b4), len(b3), len(b7)),
            rank=stack.rank,
        )

    def __repr__(self):
        return f"HyperellipticFano(f = {self.f})"


def _mat_vec(matrix: List[List], vector: List, field) -> List:
    out = []
    zero = field.zero
    for row in matrix:
        total = zero
        for a, b in zip(row, vector):
            if a and b:
                total = total + a * b
        out.append(total)
    return out


def build_fano(
    f: Polynomial,
    g: Optional[Polynomial] = None,
    effective_bound: Optional[int] = None,
) -> HyperellipticFano:
    """Assemble and certify the double cover V(g, z^2 - f) in P(1,1,1,1,1,2).

    ``f`` must be a homogeneous quartic in five unit-weight variables.  If
    ``g`` is omitted it is the standard quadric; otherwise it must be
    congruent to the standard quadric over the rationals (the change of
    coordinates is applied to ``f``), else the input is rejected.
    Quasi-smoothness of the resulting intersection is certified and
    failures are reported with the offending diagnostic.
    """
    table = f.table
    field = f.field
    if len(table) != 5 or table.auxiliary_indices:
        raise ValueError("the quartic must live in five geometric variables")
    degree = f.weighted_degree((1,) * 5)
    if degree != 4:
        raise ValueError(f"the double cover needs a quartic; got degree {degree!r}")
    coordinate_change = None
    if g is not None:
        if g.table != table:
            raise ValueError("f and g must share a variable table")
        if g != standard_quadric(table, field):
            f, coordinate_change = _normalize_quadric(f, g)
    g_std = standard_quadric(table, field)
    if "z" in table.names:
        raise ValueError("the variable name 'z' is reserved for the double cover")
    full = VariableTable(table.names + ("z",))
    z = Polynomial.variable(full, field, full.index("z"))
    equations = [g_std.extended_to(full), z * z - f.extended_to(full)]
    ci = validate((1, 1, 1, 1, 1, 2), (2, 4), equations)
    report = ci.certify_quasi_smooth()
    if not report.is_quasi_smooth:
        raise CertificationError(
            "the double cover is not quasi-smooth: " + "; ".join(report.details)
        )
    two = field.one + field.one
    halved = [f.partial_derivative(i) * (field.one / two) for i in range(5)]
    return HyperellipticFano(
        f,
        g_std,
        ci,
        halved,
        coordinate_change=coordinate_change,
        effective_bound=effective_bound,
    )


def _normalize_quadric(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, List[List]]:
    """Diagonalize g to the standard quadric over the rationals when possible.

    Performs a congruence diagonalization of the Gram matrix; every
    diagonal entry must be a nonzero square of a rational, else the input
    is rejected with a message.  Returns the transformed quartic and the
    change-of-coordinates matrix N (columns are the new basis vectors, so
    x = N x' turns g into the standard quadric).
    """
    table = f.table
    field = f.field
    if field.characteristic != 0:
        raise ValueError("quadric normalization is supported over the rationals only")
    if g.weighted_degree((1,) * 5) != 2:
        raise ValueError("g must be a quadric")
    n = len(table)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for mono, coeff in g.terms.items():
        support = [i for i, e in enumerate(mono) if e]
        if len(support) == 1:
            i = support[0]
            gram[i][i] = Fraction(coeff)
        else:
            i, j = support
            gram[i][j] = gram[j][i] = Fraction(coeff) / 2
    basis = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def form(u, v):
        return sum(gram[i][j] * u[i] * v[j] for i in range(n) for j in range(n))

    for k in range(n):
        if form(basis[k], basis[k]) == 0:
            pivot = None
            for j in range(k + 1, n):
                if form(basis[j], basis[j]) != 0:
                    pivot = j
                    break
            if pivot is not None:
                basis[k], basis[pivot] = basis[pivot], basis[k]
            else:
                partner = None
                for j in range(k + 1, n):
                    if form(basis[k], basis[j]) != 0:
                        partner = j
                        break
                if partner is None:
                    raise CertificationError(
                        "the quadric is degenerate and cannot define a smooth cover"
                    )
                basis[k] = [a + b for a, b in zip(basis[k], basis[partner])]
        d = form(basis[k], basis[k])
        for j in range(k + 1, n):
            factor = form(basis[k], basis[j]) / d
            basis[j] = [b - factor * a for a, b in zip(basis[k], basis[j])]
    scaled = []
    for vector in basis:
        d = form(vector, vector)
        if d == 0:
            raise CertificationError(
                "the quadric is degenerate and cannot define a smooth cover"
            )
        root = _rational_sqrt(d)
        if root is None:
            raise CertificationError(
                f"the quadric is not equivalent to the standard one over the "
                f"rationals: diagonal entry {d} is not a rational square"
            )
        scaled.append([v / root for v in vector])
    # columns of N are the scaled basis vectors: substituting x_i -> sum_j N[i][j] x'_j
    images = []
    for i in range(n):
        image = Polynomial.zero(table, field)
        for j in range(n):
            value = scaled[j][i]
            if value:
                image = image + Polynomial.variable(table, field, j) * value
        images.append(image)
    # sanity: g must become the standard quadric under the substitution
    if g.substitute(images) != standard_quadric(table, field):
        raise CertificationError("quadric normalization failed internal verification")
    return f.substitute(images), [list(v) for v in scaled]


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value <= 0:
        return None
    num = _isqrt_exact(value.numerator)
    den = _isqrt_exact(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _isqrt_exact(n: int) -> Optional[int]:
    import math

    root = math.isqrt(n)
    return root if root * root == n else None
