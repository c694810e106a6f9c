import pytest

from wcit.field import QQ, PrimeField
from wcit.fano import build_fano
from wcit.jacobi import build_jacobi
from wcit.poly import VariableTable, parse_polynomial
from wcit.wci import validate

FERMAT_QUARTIC = "x0^4 + x1^4 + x2^4 + x3^4 + x4^4"
STANDARD_QUADRIC = "x0^2 + x1^2 + x2^2 + x3^2 + x4^2"


def x_table():
    return VariableTable([f"x{i}" for i in range(5)])


def make_fermat_ci(field=QQ):
    table = x_table()
    f = parse_polynomial(FERMAT_QUARTIC, table, field)
    return validate((1, 1, 1, 1, 1), (4,), [f])


def make_fano_ci(field=QQ):
    table = VariableTable([f"x{i}" for i in range(5)] + ["z"])
    g = parse_polynomial(STANDARD_QUADRIC, table, field)
    zf = parse_polynomial(
        "z^2 - x0^4 - x1^4 - x2^4 - x3^4 - x4^4", table, field
    )
    return validate((1, 1, 1, 1, 1, 2), (2, 4), [g, zf])


@pytest.fixture(scope="session")
def fp65537():
    return PrimeField(65537)


@pytest.fixture(scope="session")
def fermat_ci():
    return make_fermat_ci()


@pytest.fixture(scope="session")
def fermat_ring(fermat_ci):
    return build_jacobi(fermat_ci)


@pytest.fixture(scope="session")
def fano_ci():
    return make_fano_ci()


@pytest.fixture(scope="session")
def fano_cover():
    table = x_table()
    f = parse_polynomial(FERMAT_QUARTIC, table, QQ)
    return build_fano(f)
