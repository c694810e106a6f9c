"""Sparse multivariate polynomials with weighted and bigraded degrees.

Monomials are plain exponent tuples aligned with a `VariableTable`.  Each
variable is either *geometric* (it carries a positive weight) or
*auxiliary* (it carries an equation degree); a monomial x^mu * y^lambda
then has bidegree

    deg1 = sum(lambda_j),    deg2 = sum(mu_i * W_i) - sum(lambda_j * d_j),

i.e. geometric variables have bidegree (0, W_i) and auxiliary variables
have bidegree (1, -d_j).

Polynomials are immutable once constructed: every arithmetic operation
returns a fresh value, so they are safe to share between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import FieldMismatchError, ParseError, TableMismatchError

__all__ = [
    "ANY_DEGREE",
    "BiDegree",
    "GEOMETRIC",
    "AUXILIARY",
    "Monomial",
    "Polynomial",
    "VariableTable",
    "bidegree_of",
    "grevlex_key",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_mul",
    "parse_polynomial",
]

Monomial = tuple  # exponent tuple, one entry per table variable

GEOMETRIC = "geometric"
AUXILIARY = "auxiliary"

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class _AnyDegree:
    """Degree of the zero polynomial: homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "any"


ANY_DEGREE = _AnyDegree()


class BiDegree(NamedTuple):
    d1: int  # auxiliary degree (deg1)
    d2: int  # weighted degree (deg2)

    def __add__(self, other):
        return BiDegree(self.d1 + other[0], self.d2 + other[1])

    def __sub__(self, other):
        return BiDegree(self.d1 - other[0], self.d2 - other[1])

    def __repr__(self):
        return f"({self.d1}, {self.d2})"


def grevlex_key(exponents: Monomial):
    """Sort key realizing graded reverse lexicographic order.

    ``grevlex_key(a) > grevlex_key(b)`` iff a > b in grevlex: first compare
    total degree, then the *last* variable with differing exponent decides,
    the smaller exponent winning.
    """
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent tuple of a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class VariableTable:
    """An ordered list of distinct variable names with geometric/auxiliary roles."""

    __slots__ = ("names", "roles", "_index")

    def __init__(self, names: Sequence[str], roles: Optional[Sequence[str]] = None):
        names = tuple(names)
        if not names:
            raise ValueError("variable table must not be empty")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _IDENT_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if roles is None:
            roles = (GEOMETRIC,) * len(names)
        roles = tuple(roles)
        if len(roles) != len(names):
            raise ValueError("one role per variable required")
        for role in roles:
            if role not in (GEOMETRIC, AUXILIARY):
                raise ValueError(f"unknown variable role {role!r}")
        self.names = names
        self.roles = roles
        self._index = {name: i for i, name in enumerate(names)}

    @classmethod
    def geometric(cls, names: Sequence[str]) -> "VariableTable":
        return cls(names)

    def extended(self, auxiliary_names: Sequence[str]) -> "VariableTable":
        """A new table with extra auxiliary variables appended."""
        return VariableTable(
            self.names + tuple(auxiliary_names),
            self.roles + (AUXILIARY,) * len(auxiliary_names),
        )

    @property
    def geometric_indices(self):
        return tuple(i for i, r in enumerate(self.roles) if r == GEOMETRIC)

    @property
    def auxiliary_indices(self):
        return tuple(i for i, r in enumerate(self.roles) if r == AUXILIARY)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, VariableTable)
            and self.names == other.names
            and self.roles == other.roles
        )

    def __hash__(self):
        return hash((self.names, self.roles))

    def __repr__(self):
        return f"VariableTable({', '.join(self.names)})"


def bidegree_of(
    monomial: Monomial,
    table: VariableTable,
    weights: Sequence[int],
    degrees: Sequence[int],
) -> BiDegree:
    """Bidegree of a monomial: (sum of auxiliary exponents, weighted degree)."""
    geo = table.geometric_indices
    aux = table.auxiliary_indices
    if len(weights) != len(geo) or len(degrees) != len(aux):
        raise ValueError("weights/degrees do not match the table roles")
    d1 = sum(monomial[i] for i in aux)
    d2 = sum(monomial[i] * w for i, w in zip(geo, weights)) - sum(
        monomial[i] * d for i, d in zip(aux, degrees)
    )
    return BiDegree(d1, d2)


class Polynomial:
    """A sparse polynomial: a finite map from exponent tuples to nonzero scalars."""

    __slots__ = ("table", "field", "terms")

    def __init__(self, table: VariableTable, field, terms: dict):
        self.table = table
        self.field = field
        self.terms = {m: c for m, c in terms.items() if c}

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, table, field) -> "Polynomial":
        return cls(table, field, {})

    @classmethod
    def constant(cls, table, field, value) -> "Polynomial":
        return cls(table, field, {(0,) * len(table): field(value) if isinstance(value, int) else value})

    @classmethod
    def variable(cls, table, field, index: int) -> "Polynomial":
        exps = [0] * len(table)
        exps[index] = 1
        return cls(table, field, {tuple(exps): field.one})

    @classmethod
    def monomial(cls, table, field, exponents: Monomial, coefficient=None) -> "Polynomial":
        if len(exponents) != len(table):
            raise ValueError("exponent tuple does not match the table")
        return cls(table, field, {tuple(exponents): coefficient if coefficient is not None else field.one})

    # ------------------------------------------------------------------
    # basic queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _compatible(self, other: "Polynomial"):
        if self.table != other.table:
            raise TableMismatchError("polynomials over different variable tables")
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.table == other.table
            and self.field == other.field
            and self.terms == other.terms
        )

    __hash__ = None

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.table, self.field, terms)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.table, self.field, {m: -c for m, c in self.terms.items()})

    def _coerce_scalar(self, value):
        if isinstance(value, int):
            return self.field(value)
        if isinstance(value, Fraction) and self.field.characteristic != 0:
            return self.field.from_fraction(value)
        return value

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._compatible(other)
            terms: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    c = c1 * c2
                    s = terms.get(m)
                    s = c if s is None else s + c
                    if s:
                        terms[m] = s
                    else:
                        terms.pop(m, None)
            return Polynomial(self.table, self.field, terms)
        scalar = self._coerce_scalar(other)
        return Polynomial(self.table, self.field, {m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.table, self.field, self.field.one)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # term access

    def lead_monomial(self, key=grevlex_key) -> Monomial:
        if self.is_zero:
            raise ValueError("zero polynomial has no lead term")
        return max(self.terms, key=key)

    def lead_coefficient(self, key=grevlex_key):
        return self.terms[self.lead_monomial(key)]

    def monic(self, key=grevlex_key) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.lead_coefficient(key)
        if lc == self.field.one:
            return self
        return Polynomial(self.table, self.field, {m: c / lc for m, c in self.terms.items()})

    # ------------------------------------------------------------------
    # calculus and degrees

    def partial_derivative(self, index: int) -> "Polynomial":
        terms: dict = {}
        for m, c in self.terms.items():
            e = m[index]
            if e == 0:
                continue
            lowered = list(m)
            lowered[index] = e - 1
            nc = c * e
            if nc:
                terms[tuple(lowered)] = nc
        return Polynomial(self.table, self.field, terms)

    def weighted_degree(self, weights: Sequence[int]):
        """Common weighted degree over geometric variables.

        Returns the degree, ANY_DEGREE for the zero polynomial, or None if
        the terms disagree.  Raises if the polynomial involves auxiliary
        variables.
        """
        aux = self.table.auxiliary_indices
        geo = self.table.geometric_indices
        if len(weights) != len(geo):
            raise ValueError("one weight per geometric variable required")
        if self.is_zero:
            return ANY_DEGREE
        degree = None
        for m in self.terms:
            if any(m[i] for i in aux):
                raise ValueError("polynomial involves auxiliary variables")
            d = sum(m[i] * w for i, w in zip(geo, weights))
            if degree is None:
                degree = d
            elif degree != d:
                return None
        return degree

    def bidegree(self, weights: Sequence[int], degrees: Sequence[int]):
        """Common bidegree; ANY_DEGREE for zero; None if not bihomogeneous."""
        if self.is_zero:
            return ANY_DEGREE
        result = None
        for m in self.terms:
            bd = bidegree_of(m, self.table, weights, degrees)
            if result is None:
                result = bd
            elif result != bd:
                return None
        return result

    # ------------------------------------------------------------------
    # substitutions

    def scale_variables(self, scalars: Sequence) -> "Polynomial":
        """Apply the diagonal substitution x_i -> scalars[i] * x_i."""
        if len(scalars) != len(self.table):
            raise ValueError("one scalar per variable required")
        scalars = [self._coerce_scalar(s) for s in scalars]
        terms: dict = {}
        for m, c in self.terms.items():
            factor = c
            for e, s in zip(m, scalars):
                if e:
                    factor = factor * s**e
            if factor:
                terms[m] = factor
        return Polynomial(self.table, self.field, terms)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at the given polynomials, one image per variable."""
        if len(images) != len(self.table):
            raise ValueError("one image per variable required")
        target = images[0]
        result = Polynomial.zero(target.table, target.field)
        powers: dict = {}

        def power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        for m, c in self.terms.items():
            piece = Polynomial.constant(target.table, target.field, target._coerce_scalar(c))
            for i, e in enumerate(m):
                if e:
                    piece = piece * power(i, e)
            result = result + piece
        return result

    def extended_to(self, table: VariableTable) -> "Polynomial":
        """Re-embed into a larger table containing this table's names."""
        positions = [table.index(name) for name in self.table.names]
        width = len(table)
        terms = {}
        for m, c in self.terms.items():
            exps = [0] * width
            for e, pos in zip(m, positions):
                exps[pos] = e
            terms[tuple(exps)] = c
        return Polynomial(table, self.field, terms)

    # ------------------------------------------------------------------
    # printing

    def _format_coefficient(self, c) -> str:
        return str(c)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.table.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            text = self._format_coefficient(c)
            negative = isinstance(c, Fraction) and c < 0
            if negative:
                text = self._format_coefficient(-c)
            if mono:
                body = mono if text == "1" else f"{text}*{mono}"
            else:
                body = text
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# ----------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^])"
)


class _Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list:
    tokens = []
    line, column = 1, 1
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup
        value = match.group()
        if kind != "ws":
            tokens.append(_Token(kind, value, line, column))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            column = len(value) - value.rfind("\n")
        else:
            column += len(value)
        pos = match.end()
    tokens.append(_Token("end", "", line, column))
    return tokens


class _Parser:
    """Recursive-descent parser for the polynomial expression grammar:

        poly   := ['+'|'-'] term (('+'|'-') term)*
        term   := coeff ('*' factor)* | factor ('*' factor)*
        factor := ident ('^' uint)?
        coeff  := uint ('/' uint)?

    An explicit '*' is required between factors; whitespace is ignored.
    """

    def __init__(self, text: str, table: VariableTable, field):
        if not text.strip():
            raise ParseError("empty polynomial expression", 1, 1)
        self.tokens = _tokenize(text)
        self.pos = 0
        self.table = table
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Optional[_Token] = None):
        token = token or self.peek()
        raise ParseError(message, token.line, token.column)

    def parse(self) -> Polynomial:
        result = Polynomial.zero(self.table, self.field)
        sign = 1
        token = self.peek()
        if token.kind == "op" and token.text in "+-":
            self.advance()
            sign = -1 if token.text == "-" else 1
        result = result + self.term(sign)
        while True:
            token = self.peek()
            if token.kind == "end":
                break
            if token.kind == "op" and token.text in "+-":
                self.advance()
                result = result + self.term(-1 if token.text == "-" else 1)
            else:
                self.error(f"expected '+' or '-' before {token.text!r}")
        return result

    def term(self, sign: int) -> Polynomial:
        token = self.peek()
        coefficient = self.field(sign)
        exponents = [0] * len(self.table)
        if token.kind == "int":
            coefficient = coefficient * self.coefficient()
            while self.peek().kind == "op" and self.peek().text == "*":
                self.advance()
                self.factor(exponents)
        elif token.kind == "ident":
            self.factor(exponents)
            while self.peek().kind == "op" and self.peek().text == "*":
                self.advance()
                self.factor(exponents)
        else:
            self.error(f"expected a coefficient or variable, found {token.text!r}")
        if not coefficient:
            return Polynomial.zero(self.table, self.field)
        return Polynomial(self.table, self.field, {tuple(exponents): coefficient})

    def coefficient(self):
        token = self.advance()
        numerator = int(token.text)
        if self.peek().kind == "op" and self.peek().text == "/":
            self.advance()
            den = self.peek()
            if den.kind != "int":
                self.error("expected an integer denominator", den)
            self.advance()
            if int(den.text) == 0:
                self.error("zero denominator", den)
            return self.field(numerator, int(den.text))
        return self.field(numerator)

    def factor(self, exponents: list):
        token = self.advance()
        if token.kind != "ident":
            self.error(f"expected a variable, found {token.text!r}", token)
        try:
            index = self.table.index(token.text)
        except ValueError:
            self.error(f"unknown identifier {token.text!r}", token)
        exponent = 1
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            exp_token = self.peek()
            if exp_token.kind != "int":
                self.error("malformed exponent: expected a non-negative integer", exp_token)
            self.advance()
            exponent = int(exp_token.text)
        exponents[index] += exponent


def parse_polynomial(text: str, table: VariableTable, field=None) -> Polynomial:
    """Parse an ASCII polynomial expression over the given variable table."""
    from .field import QQ  # local import to avoid cycle at module load

    return _Parser(text, table, QQ if field is None else field).parse()
