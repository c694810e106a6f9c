import random
from fractions import Fraction

import pytest

from wcit.field import QQ, PrimeField
from wcit.groebner import (
    GREVLEX,
    GroebnerBasis,
    buchberger,
    complete_intersection_numerator,
    cone_is_origin_only,
    graded_piece_basis,
    graded_piece_dim,
    monomial_ideal_hilbert_series,
    normal_form,
    quotient_hilbert_series,
    s_polynomial,
)
from wcit.poly import BiDegree, Polynomial, VariableTable, parse_polynomial

from oracle import fermat_quartic_jacobi_dims, series_coefficients

T2 = VariableTable(["x", "y"])
T5 = VariableTable([f"x{i}" for i in range(5)])


def P(text, table=T2, field=QQ):
    return parse_polynomial(text, table, field)


def fermat_partials(field=QQ):
    f = parse_polynomial(" + ".join(f"x{i}^4" for i in range(5)), T5, field)
    return [f.partial_derivative(i) for i in range(5)]


# ----------------------------------------------------------------------
# normal form


def test_normal_form_examples():
    basis = buchberger([P("x^2 - y"), P("y^2")])
    assert normal_form(P("x^4"), basis).is_zero
    zero_ideal = GroebnerBasis(T2, QQ, GREVLEX, [])
    p = P("x^3 + y")
    assert normal_form(p, zero_ideal) == p
    # ideal membership: NF(x^2*q + r) = NF(r)
    basis2 = buchberger([P("x^2")])
    q = P("x*y + 3")
    r = P("y^3 + x")
    assert normal_form(P("x^2") * q + r, basis2) == normal_form(r, basis2)


def test_normal_form_idempotent_and_linear_randomized():
    rng = random.Random(20240801)
    basis = buchberger([P("x^2 - y"), P("y^3 - x*y")])
    for _ in range(200):
        terms = lambda: {
            (rng.randrange(0, 5), rng.randrange(0, 5)): Fraction(rng.randrange(-4, 5))
            for _ in range(rng.randrange(1, 5))
        }
        p = Polynomial(T2, QQ, terms())
        q = Polynomial(T2, QQ, terms())
        a = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        nf_p = normal_form(p, basis)
        assert normal_form(nf_p, basis) == nf_p
        assert normal_form(p * a + q, basis) == nf_p * a + normal_form(q, basis)


# ----------------------------------------------------------------------
# buchberger


def test_buchberger_examples():
    basis = buchberger([P("x^2"), P("x*y")])
    assert sorted(str(g) for g in basis) == ["x*y", "x^2"]
    basis2 = buchberger([P("x^2 - y"), P("y^2")])
    assert sorted(str(g) for g in basis2) == ["x^2 - y", "y^2"]
    unit = buchberger([P("x"), P("x + 1")])
    assert [str(g) for g in unit] == ["1"]
    assert unit.contains_one


def test_buchberger_generator_order_independence():
    gens = [P("x^2 - y"), P("y^3 - x*y"), P("x*y^2 - x")]
    a = buchberger(gens)
    b = buchberger(list(reversed(gens)))
    assert [str(g) for g in a] == [str(g) for g in b]


def test_reduced_basis_properties():
    basis = buchberger([P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")])
    leads = basis.lead_exponents
    for i, g in enumerate(basis):
        lc = g.lead_coefficient()
        assert lc == QQ.one
        for m in g.terms:
            for j, lead in enumerate(leads):
                if i != j:
                    assert not all(a <= b for a, b in zip(lead, m))


def _random_ideal(rng, table, max_terms=3, max_gens=3, exp=3):
    gens = []
    for _ in range(rng.randrange(2, max_gens + 1)):
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            mono = tuple(rng.randrange(0, exp) for _ in range(len(table)))
            coeff = Fraction(rng.randrange(-3, 4))
            if coeff:
                terms[mono] = coeff
        poly = Polynomial(table, QQ, terms)
        if not poly.is_zero:
            gens.append(poly)
    return gens


def test_buchberger_spair_criterion_randomized():
    # every S-polynomial of a completed basis reduces to zero
    rng = random.Random(20240801)
    t3 = VariableTable(["x", "y", "z"])
    cases = 0
    while cases < 200:
        gens = _random_ideal(rng, t3)
        if not gens:
            continue
        basis = buchberger(gens)
        generators = list(basis)
        for i in range(len(generators)):
            for j in range(i + 1, len(generators)):
                s = s_polynomial(generators[i], generators[j])
                assert normal_form(s, basis).is_zero
        for g in gens:
            assert normal_form(g, basis).is_zero
        cases += 1
    assert cases == 200


# ----------------------------------------------------------------------
# zero-dimensionality


def test_cone_is_origin_only_examples():
    assert cone_is_origin_only(buchberger([P("x^2"), P("y^3")]))
    assert not cone_is_origin_only(buchberger([P("x*y")]))
    assert cone_is_origin_only(buchberger(fermat_partials()))
    assert cone_is_origin_only(buchberger([P("x"), P("x + 1")]))  # unit ideal


# ----------------------------------------------------------------------
# graded pieces


def test_graded_piece_fermat_jacobian():
    basis = buchberger(fermat_partials(), grading=((1,) * 5, ()))
    weights = (1,) * 5
    dims = [graded_piece_dim(basis, BiDegree(0, k), weights, ()) for k in range(11)]
    assert dims == fermat_quartic_jacobi_dims(10)
    piece = graded_piece_basis(basis, BiDegree(0, 0), weights, ())
    assert piece == [(0, 0, 0, 0, 0)]
    with pytest.raises(ValueError):
        graded_piece_basis(basis, BiDegree(-1, 3), weights, ())


def test_graded_piece_unit_ideal():
    unit = buchberger([P("x"), P("1")], grading=((1, 1), ()))
    assert unit.contains_one
    assert graded_piece_dim(unit, BiDegree(0, 0), (1, 1), ()) == 0
    assert graded_piece_dim(unit, BiDegree(0, 3), (1, 1), ()) == 0


def test_graded_piece_dims_match_hilbert_series():
    # single-graded case: piece dims agree with series coefficients in every degree
    basis = buchberger(
        [parse_polynomial("x0^2*x1 - x2^3", T5, QQ), parse_polynomial("x3^2 - x0*x4", T5, QQ)],
        grading=((1,) * 5, ()),
    )
    series = quotient_hilbert_series(basis, (1,) * 5)
    coeffs = series.coefficients(8)
    for k in range(9):
        assert graded_piece_dim(basis, BiDegree(0, k), (1,) * 5, ()) == coeffs[k]
    assert all(c >= 0 for c in coeffs)


def test_truncated_completion_matches_full():
    # effective-degree truncation computes the same bounded components
    table = VariableTable(
        ["x0", "x1", "x2", "y1", "y2"], ["geometric"] * 3 + ["auxiliary"] * 2
    )
    weights = (1, 1, 2)
    degrees = (2, 3)
    gens = [
        parse_polynomial("y1*x0 - y2*x1^2", table, QQ),
        parse_polynomial("x0^2 + x1^2 + x2", table, QQ),
        parse_polynomial("y2*x2 + y2*x0*x1", table, QQ),
    ]
    full = buchberger(gens, grading=(weights, degrees))
    truncated = buchberger(gens, grading=(weights, degrees), effective_bound=7)
    for d1 in range(0, 3):
        for d2 in range(-4, 2):
            if d2 + d1 * 3 > 7:
                continue
            bd = BiDegree(d1, d2)
            assert graded_piece_basis(truncated, bd, weights, degrees) == graded_piece_basis(
                full, bd, weights, degrees
            )
    with pytest.raises(ValueError):
        graded_piece_basis(truncated, BiDegree(3, 0), weights, degrees)


# ----------------------------------------------------------------------
# Hilbert series


def test_hilbert_series_zero_ideal():
    series = monomial_ideal_hilbert_series([], (1,) * 5)
    assert series.coefficient(4) == 70
    assert series.coefficients(4) == [1, 5, 15, 35, 70]


def test_hilbert_series_pure_cubes():
    gens = [tuple(3 if j == i else 0 for j in range(5)) for i in range(5)]
    series = monomial_ideal_hilbert_series(gens, (1,) * 5)
    assert series.coefficient(4) == 45
    assert series.coefficients(10) == fermat_quartic_jacobi_dims(10)


def test_hilbert_series_single_variable():
    series = monomial_ideal_hilbert_series([(1,)], (1,))
    assert series.coefficients(5) == [1, 0, 0, 0, 0, 0]


def test_hilbert_series_weighted_and_mixed():
    # quotient by (x*y) with weights (1, 2): standard monomials x^a, y^b
    series = monomial_ideal_hilbert_series([(1, 1)], (1, 2))
    # degree k: x^k always; y^(k/2) when k even: 2 for even, 1 for odd
    assert series.coefficients(6) == [1, 1, 2, 1, 2, 1, 2]


def test_hilbert_series_against_independent_expansion():
    rng = random.Random(11)
    for _ in range(50):
        nvars = rng.randrange(2, 5)
        weights = tuple(rng.choice([1, 1, 2]) for _ in range(nvars))
        gens = []
        for _ in range(rng.randrange(1, 4)):
            gens.append(tuple(rng.randrange(0, 4) for _ in range(nvars)))
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        series = monomial_ideal_hilbert_series(gens, weights)
        # brute-force count of standard monomials degree by degree
        from wcit.groebner import weighted_monomials
        from wcit.poly import mono_divides

        for degree in range(8):
            expected = sum(
                1
                for m in weighted_monomials(weights, degree)
                if not any(mono_divides(g, m) for g in gens)
            )
            assert series.coefficient(degree) == expected


def test_complete_intersection_numerator():
    assert complete_intersection_numerator((2, 4)) == {0: 1, 2: -1, 4: -1, 6: 1}
    series = series_coefficients([2, 4], [1] * 5, 7)
    assert series[3] == 30 and series[4] == 54 and series[7] == 174


def test_buchberger_over_prime_field_matches_rationals():
    F = PrimeField(65537)
    basis_q = buchberger(fermat_partials(QQ), grading=((1,) * 5, ()))
    basis_p = buchberger(fermat_partials(F), grading=((1,) * 5, ()))
    for k in range(11):
        assert graded_piece_dim(basis_q, BiDegree(0, k), (1,) * 5, ()) == graded_piece_dim(
            basis_p, BiDegree(0, k), (1,) * 5, ()
        )
