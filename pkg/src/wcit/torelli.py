"""Middle-cohomology Hodge tables and the infinitesimal Torelli map.

For a quasi-smooth weighted complete intersection X of dimension n - c,
the middle Hodge numbers are read off the bigraded quotient ring: with
nu = sum(W) - sum(d), the group H^q(X, Omega^p) has dimension

    0                      if 0 < q < n-c-p and q != p,
    1                      if 0 < q < n-c-p and q  = p,
    dim R_{p,-nu}          if q = n-c-p and q != p,
    1 + dim R_{p,-nu}      if q = p = n-c-p,

for 0 < p < n-c, while h^{0,n-c} = h^{n-c,0} equals the coordinate-ring
dimension in degree -nu.  The differential of the period map is realized
on the same ring: a class alpha of bidegree (1, 0) acts on each component
R_{p-1,-nu} -> R_{p,-nu} by multiplication, and the map alpha -> (those
multiplications) has an exactly computable kernel.

The middle index p = n-c-p (even-dimensional X) carries an extra class
and is outside the multiplication description; it is skipped with a
warning, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence

from .errors import CertificationError
from .jacobi import JacobiRing, build_jacobi
from .linalg import StackedKernel
from .poly import BiDegree, Polynomial
from .wci import WeightedCI

__all__ = ["HodgeTable", "TorelliComponent", "TorelliReport", "hodge_table", "torelli_map"]

NOT_COMPUTED = "not computed"


@dataclass
class HodgeTable:
    dim: int
    nu: int
    entries: Dict  # (q, p) -> int
    notes: Dict  # (q, p) -> str

    def entry(self, q: int, p: int) -> Optional[int]:
        return self.entries.get((q, p))

    def pretty(self) -> str:
        lines = [f"h^(q,p) for a {self.dim}-dimensional intersection (nu = {self.nu})"]
        header = "q\\p |" + "".join(f"{p:>6}" for p in range(self.dim + 1))
        lines.append(header)
        lines.append("-" * len(header))
        for q in range(self.dim, -1, -1):
            cells = []
            for p in range(self.dim + 1):
                value = self.entries.get((q, p))
                cells.append(f"{value:>6}" if value is not None else f"{'.':>6}")
            lines.append(f"{q:>3} |" + "".join(cells))
        lines.append("('.' = outside the computed range)")
        return "\n".join(lines)


def hodge_table(X: WeightedCI, ring: Optional[JacobiRing] = None) -> HodgeTable:
    """Middle Hodge numbers of a quasi-smooth intersection of dimension >= 2."""
    dim = X.dim
    if dim < 2:
        raise CertificationError("Hodge table requires dimension at least 2")
    if ring is None:
        ring = build_jacobi(X)
    nu = X.nu
    entries: Dict = {}
    notes: Dict = {}
    for p in range(1, dim):
        for q in range(1, dim - p + 1):
            if q < dim - p:
                if q != p:
                    entries[(q, p)] = 0
                    notes[(q, p)] = "vanishing below the middle row"
                else:
                    entries[(q, p)] = 1
                    notes[(q, p)] = "diagonal hyperplane class"
            else:  # q == dim - p
                component = ring.component_dim(BiDegree(p, -nu))
                if q != p:
                    entries[(q, p)] = component
                    notes[(q, p)] = f"dual of ring component ({p}, {-nu})"
                else:
                    entries[(q, p)] = 1 + component
                    notes[(q, p)] = (
                        f"middle diagonal: hyperplane class plus ring component ({p}, {-nu})"
                    )
    h_end = X.coordinate_ring_series().coefficient(-nu)
    entries[(dim, 0)] = h_end
    notes[(dim, 0)] = f"coordinate ring in degree {-nu}"
    entries[(0, dim)] = h_end
    notes[(0, dim)] = f"coordinate ring in degree {-nu} (conjugate)"
    return HodgeTable(dim=dim, nu=nu, entries=entries, notes=notes)


@dataclass
class TorelliComponent:
    p: int
    dim_source: int  # dim R_{p-1,-nu}
    dim_target: int  # dim R_{p,-nu}
    status: str  # "contributing" | "vacuous" | "skipped-middle"


@dataclass
class TorelliReport:
    dim_h1_theta: int
    components: List[TorelliComponent]
    rank: int
    kernel_basis: List[Polynomial]
    injective: bool
    warnings: List[str] = dataclass_field(default_factory=list)
    restriction_ranks: Dict[str, int] = dataclass_field(default_factory=dict)
    kernel_vectors: List[List] = dataclass_field(default_factory=list)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis)


def torelli_map(
    X: WeightedCI,
    ring: Optional[JacobiRing] = None,
    restrictions: Optional[Dict[str, Sequence[Sequence]]] = None,
) -> TorelliReport:
    """Kernel of the differential of the period map, computed exactly.

    For every p with 0 < p < dim, p != dim - p and both components
    nonzero, the multiplication maps R_{p-1,-nu} -> R_{p,-nu} by all basis
    classes of R_{1,0} are stacked into one matrix with dim R_{1,0}
    columns; its kernel (exact elimination) is the Torelli kernel.

    ``restrictions`` optionally names subspaces of R_{1,0} (as lists of
    coordinate vectors); the rank of the stacked map restricted to each is
    computed in the same pass and reported in ``restriction_ranks``.
    """
    dim = X.dim
    if dim <= 2:
        raise CertificationError(
            "the multiplication description of the period-map differential "
            "requires dimension greater than 2"
        )
    if ring is None:
        ring = build_jacobi(X)
    nu = X.nu
    h1 = ring.component_basis(BiDegree(1, 0))
    ncols = len(h1)
    warnings: List[str] = []
    components: List[TorelliComponent] = []
    stack = StackedKernel(ncols, ring.field, restrictions)
    contributing = 0
    for p in range(1, dim):
        source = BiDegree(p - 1, -nu)
        target = BiDegree(p, -nu)
        dim_source = ring.component_dim(source)
        dim_target = ring.component_dim(target)
        if p == dim - p:
            warnings.append(
                f"middle index p = {p} skipped: the component carries an extra "
                "class and is outside the multiplication description"
            )
            components.append(TorelliComponent(p, dim_source, dim_target, "skipped-middle"))
            continue
        if dim_source == 0 or dim_target == 0:
            components.append(TorelliComponent(p, dim_source, dim_target, "vacuous"))
            continue
        matrices = [
            ring.multiplication_matrix(ring.monomial(u), source).matrix for u in h1
        ]
        stack.add_block(matrices)
        components.append(TorelliComponent(p, dim_source, dim_target, "contributing"))
        contributing += 1
    if contributing == 0:
        warnings.append("vacuous map: no component contributes any constraint")
    kernel_vectors = stack.kernel_basis()
    kernel_basis = []
    for vector in kernel_vectors:
        poly = Polynomial.zero(ring.table, ring.field)
        for coeff, mono in zip(vector, h1):
            if coeff:
                poly = poly + Polynomial.monomial(ring.table, ring.field, mono, coeff)
        kernel_basis.append(poly)
    report = TorelliReport(
        dim_h1_theta=ncols,
        components=components,
        rank=stack.rank,
        kernel_basis=kernel_basis,
        injective=stack.rank == ncols,
        warnings=warnings,
        kernel_vectors=kernel_vectors,
    )
    for name in restrictions or {}:
        report.restriction_ranks[name] = stack.restriction_rank(name)
    return report
