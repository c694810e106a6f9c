"""Independent oracles for the test suite.

Deliberately separate from the library under test: dimensions come from
power-series expansion by integer convolution, or from brute-force
standard-monomial enumeration with dense exact elimination over the
rationals.  No Groebner machinery, no shared code paths.
"""

from fractions import Fraction


def series_coefficients(numerator_degrees, denominator_weights, upto):
    """Coefficients of prod(1 - t^d) / prod(1 - t^w) up to the given degree."""
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for d in numerator_degrees:
        nxt = coeffs[:]
        for k in range(d, upto + 1):
            nxt[k] -= coeffs[k - d]
        coeffs = nxt
    for w in denominator_weights:
        for k in range(w, upto + 1):
            coeffs[k] += coeffs[k - w]
    return coeffs


def fermat_quartic_jacobi_dims(upto=10):
    """Coefficients of (1 + t + t^2)^5 = ((1 - t^3)/(1 - t))^5."""
    return series_coefficients([3] * 5, [1] * 5, upto)


def compositions(total, parts):
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            out.append((head,) + rest)
    return out


def weighted_exponents(weights, total):
    """All exponent tuples e with sum(e_i * w_i) = total."""
    if not weights:
        return [()] if total == 0 else []
    out = []
    w = weights[0]
    for e in range(total // w + 1):
        for rest in weighted_exponents(weights[1:], total - e * w):
            out.append((e,) + rest)
    return out


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _bidegree(mono, weights, degrees):
    ngeo = len(weights)
    d1 = sum(mono[ngeo:])
    d2 = sum(e * w for e, w in zip(mono[:ngeo], weights)) - sum(
        e * d for e, d in zip(mono[ngeo:], degrees)
    )
    return (d1, d2)


def _monomials_of_bidegree(weights, degrees, target):
    a, b = target
    out = []
    for lam in compositions(a, len(degrees)):
        m = b + sum(l * d for l, d in zip(lam, degrees))
        if m < 0:
            continue
        for mu in weighted_exponents(tuple(weights), m):
            out.append(mu + lam)
    return out


def dense_rank(rows):
    """Rank of a dense matrix of Fractions by Gaussian elimination."""
    if not rows:
        return 0
    matrix = [list(row) for row in rows]
    ncols = len(matrix[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(matrix)):
            if matrix[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        pivot_value = matrix[rank][col]
        for i in range(rank + 1, len(matrix)):
            if matrix[i][col] != 0:
                factor = matrix[i][col] / pivot_value
                row_i = matrix[i]
                row_p = matrix[rank]
                for j in range(col, ncols):
                    row_i[j] -= factor * row_p[j]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def bruteforce_quotient_dim(generators, weights, degrees, target):
    """Dimension of one bidegree piece of k[x, y]/(generators).

    ``generators`` are dicts mapping exponent tuples (geometric variables
    first, then auxiliary) to rational coefficients; each must be
    bihomogeneous.  The piece is computed as (number of ambient monomials)
    minus the rank of all generator multiples landing in the piece, by
    dense exact elimination.
    """
    ambient = _monomials_of_bidegree(weights, degrees, target)
    index = {m: i for i, m in enumerate(ambient)}
    rows = []
    for gen in generators:
        if not gen:
            continue
        gen_bd = _bidegree(next(iter(gen)), weights, degrees)
        need = (target[0] - gen_bd[0], target[1] - gen_bd[1])
        if need[0] < 0:
            continue
        for mult in _monomials_of_bidegree(weights, degrees, need):
            row = [Fraction(0)] * len(ambient)
            for mono, coeff in gen.items():
                row[index[_mono_mul(mono, mult)]] = Fraction(coeff)
            rows.append(row)
    return len(ambient) - dense_rank(rows)


def poly_to_dict(polynomial):
    """Adapter: a library polynomial as a plain {exponents: Fraction} dict."""
    return {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in polynomial.terms.items()}
