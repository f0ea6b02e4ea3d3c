"""Exact sparse bivariate polynomial arithmetic over Python integers.

A polynomial in the variables x and y is stored as a mapping from exponent
pairs ``(i, j)`` to nonzero integer coefficients, so ``3*x^2*y^2`` is the
entry ``(2, 2): 3``.  Coefficients are plain Python integers, which keeps
every operation exact; counting evaluations routinely reach values such as
2**n for moderately large n and must not overflow.

Values are immutable after construction and all operations are pure
functions, so polynomials can be shared freely between threads.

The canonical text form sorts terms by descending y-exponent, breaking ties
by descending x-exponent; a unit coefficient is omitted, an exponent of one
is written bare, and factors are joined with ``*``.  The zero polynomial
prints as ``"0"``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class BivariatePoly:
    """A sparse polynomial in x and y with exact integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                    raise ValueError(f"invalid exponent pair {(i, j)!r}")
                if not isinstance(c, int):
                    raise ValueError(f"coefficient {c!r} is not an integer")
                if c:
                    clean[(i, j)] = c
        self._terms = clean
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> BivariatePoly:
        return cls()

    @classmethod
    def one(cls) -> BivariatePoly:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, x_exp: int = 0, y_exp: int = 0) -> BivariatePoly:
        """Single-term polynomial coeff * x**x_exp * y**y_exp (zero if coeff is 0)."""
        return cls({(x_exp, y_exp): coeff})

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePoly(out)

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) - c
        return BivariatePoly(out)

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: BivariatePoly | int) -> BivariatePoly:
        if isinstance(other, int):
            return BivariatePoly({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePoly(out)

    def __rmul__(self, other: int) -> BivariatePoly:
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> BivariatePoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivariatePoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------------------------------------------------
    # evaluation and substitution

    def evaluate(self, x0: int, y0: int) -> int:
        """Exact value of the polynomial at the integer point (x0, y0)."""
        return sum(c * x0**i * y0**j for (i, j), c in self._terms.items())

    def specialize(self, x: int | None = None, y: int | None = None) -> BivariatePoly:
        """Substitute integers for one or both variables, collapsing terms."""
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            if x is not None:
                c, i = c * x**i, 0
            if y is not None:
                c, j = c * y**j, 0
            key = (i, j)
            out[key] = out.get(key, 0) + c
        return BivariatePoly(out)

    # ------------------------------------------------------------------
    # inspection and formatting

    @property
    def term_map(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def canonical_triples(self) -> list[tuple[int, int, int]]:
        """Terms as [coeff, x_exp, y_exp] triples in canonical print order."""
        items = sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
        return [(c, i, j) for (i, j), c in items]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for coeff, i, j in self.canonical_triples():
            factors: list[str] = []
            if i == 1:
                factors.append("x")
            elif i:
                factors.append(f"x^{i}")
            if j == 1:
                factors.append("y")
            elif j:
                factors.append(f"y^{j}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r})"


def poly_sum(polys: Iterable[BivariatePoly]) -> BivariatePoly:
    total = BivariatePoly.zero()
    for p in polys:
        total = total + p
    return total


def poly_product(polys: Iterable[BivariatePoly]) -> BivariatePoly:
    total = BivariatePoly.one()
    for p in polys:
        total = total * p
    return total


X = BivariatePoly.monomial(1, 1, 0)
Y = BivariatePoly.monomial(1, 0, 1)
