import pytest

from wcit.errors import CertificationError
from wcit.field import QQ
from wcit.jacobi import build_jacobi
from wcit.poly import BiDegree, Polynomial, VariableTable, parse_polynomial
from wcit.torelli import hodge_table, torelli_map
from wcit.wci import validate


def test_hodge_table_fermat(fermat_ci, fermat_ring):
    table = hodge_table(fermat_ci, ring=fermat_ring)
    assert table.entry(2, 1) == 30
    assert table.entry(1, 2) == 30
    assert table.entry(1, 1) == 1
    assert table.entry(3, 0) == 0
    assert table.entry(0, 3) == 0
    assert table.entry(2, 2) is None  # outside the computed range


def test_hodge_table_fano(fano_cover):
    table = hodge_table(fano_cover.ci, ring=fano_cover.ring)
    assert table.entry(2, 1) == 30
    assert table.entry(1, 1) == 1
    assert table.entry(0, 3) == 0


def test_hodge_symmetry_on_computed_middle_row(fermat_ci, fermat_ring, fano_cover):
    for variety, ring in ((fermat_ci, fermat_ring), (fano_cover.ci, fano_cover.ring)):
        table = hodge_table(variety, ring=ring)
        for (q, p), value in table.entries.items():
            mirror = table.entry(p, q)
            if mirror is not None:
                assert value == mirror


def test_hodge_table_positive_nu_forces_zero_ends(fermat_ci, fermat_ring):
    table = hodge_table(fermat_ci, ring=fermat_ring)
    assert fermat_ci.nu > 0
    assert table.entry(0, 3) == 0 and table.entry(3, 0) == 0


def test_hodge_table_refuses_low_dimension():
    t3 = VariableTable(["x0", "x1", "x2"])
    conic = parse_polynomial("x0^2 + x1^2 + x2^2", t3, QQ)
    curve = validate((1, 1, 1), (2,), [conic])
    with pytest.raises(CertificationError):
        hodge_table(curve)


def test_torelli_fermat_injective(fermat_ci, fermat_ring):
    report = torelli_map(fermat_ci, ring=fermat_ring)
    assert report.dim_h1_theta == 45
    assert report.rank == 45
    assert report.kernel_dim == 0
    assert report.injective
    statuses = {c.p: c.status for c in report.components}
    assert statuses[1] == "vacuous"  # source component A_{-1} = 0
    assert statuses[2] == "contributing"


def test_torelli_kernel_vectors_annihilate_all_components(fano_cover):
    report = fano_cover.invariant_torelli_check().torelli
    ring = fano_cover.ring
    nu = fano_cover.ci.nu
    for vector_poly in report.kernel_basis:
        for component in report.components:
            if component.status != "contributing":
                continue
            cmap = ring.multiplication_matrix(
                vector_poly, BiDegree(component.p - 1, -nu)
            )
            assert all(not any(row) for row in cmap.matrix)


def test_torelli_refuses_surfaces():
    t4 = VariableTable(["x0", "x1", "x2", "x3"])
    quartic = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4", t4, QQ)
    surface = validate((1,) * 4, (4,), [quartic])
    with pytest.raises(CertificationError):
        torelli_map(surface)


def test_torelli_skipped_middle_and_vacuous_map():
    # smooth quadric fourfold: the middle index is skipped with a warning and
    # every other component is vacuous, so the map is flagged vacuous
    t6 = VariableTable([f"x{i}" for i in range(6)])
    quadric = parse_polynomial(" + ".join(f"x{i}^2" for i in range(6)), t6, QQ)
    fourfold = validate((1,) * 6, (2,), [quadric])
    assert fourfold.certify_quasi_smooth().is_quasi_smooth
    report = torelli_map(fourfold)
    statuses = {c.p: c.status for c in report.components}
    assert statuses[2] == "skipped-middle"
    assert statuses[1] == "vacuous" and statuses[3] == "vacuous"
    assert any("middle index" in w for w in report.warnings)
    assert any("vacuous map" in w for w in report.warnings)
    # R_{1,0} = 0 here, so the kernel is the whole (zero) space
    assert report.dim_h1_theta == 0
    assert report.kernel_dim == 0
    assert report.injective


def test_torelli_kernel_scaling_invariance(fermat_ci):
    # scaling every equation by a nonzero rational leaves the kernel unchanged
    scaled_eqs = [f * QQ(3, 7) for f in fermat_ci.equations]
    scaled = validate(fermat_ci.weights, fermat_ci.degrees, scaled_eqs)
    a = torelli_map(fermat_ci)
    b = torelli_map(scaled)
    assert a.rank == b.rank
    assert a.kernel_dim == b.kernel_dim
    assert [str(p) for p in a.kernel_basis] == [str(p) for p in b.kernel_basis]


def test_torelli_restriction_ranks(fano_cover):
    ring = fano_cover.ring
    n = ring.component_dim(BiDegree(1, 0))
    whole = [[QQ.one if i == j else QQ.zero for i in range(n)] for j in range(n)]
    report = torelli_map(fano_cover.ci, ring=ring, restrictions={"all": whole})
    assert report.restriction_ranks["all"] == report.rank
