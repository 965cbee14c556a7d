"""Sparse integer polynomials in the entries ``(i|j)`` of a generic square matrix.

A monomial is a tuple of ``(row, col, exponent)`` triples sorted by
``(row, col)`` with no zero exponents; a polynomial maps monomials to nonzero
Python integers.  Both are canonical, so equality is dictionary equality.
"""

from __future__ import annotations

import json
import re
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Iterator, Sequence

from .tableaux import Tableau, column_permutations, permutation_sign

Monomial = tuple[tuple[int, int, int], ...]

ONE_MONOMIAL: Monomial = ()
ZERO_DEGREE = float("-inf")


def monomial(pairs: Iterable[tuple[int, int]]) -> Monomial:
    """Monomial from a list of variables ``(i, j)``, repeats allowed."""
    counts: dict[tuple[int, int], int] = {}
    for i, j in pairs:
        counts[(i, j)] = counts.get((i, j), 0) + 1
    return tuple((i, j, e) for (i, j), e in sorted(counts.items()))


def monomial_variables(m: Monomial) -> list[tuple[int, int]]:
    """Expand a monomial into its sorted list of variables with multiplicity."""
    return [(i, j) for i, j, e in m for _ in range(e)]


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, _, e in m)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    counts = {(i, j): e for i, j, e in a}
    for i, j, e in b:
        counts[(i, j)] = counts.get((i, j), 0) + e
    return tuple((i, j, e) for (i, j), e in sorted(counts.items()))


def _mono_replace(m: Monomial, pos: int, new: tuple[int, int]) -> Monomial:
    # lower the exponent at ``pos`` by one and raise the exponent of ``new``
    counts = {(i, j): e for i, j, e in m}
    i, j, e = m[pos]
    if e == 1:
        del counts[(i, j)]
    else:
        counts[(i, j)] = e - 1
    counts[new] = counts.get(new, 0) + 1
    return tuple((a, b, c) for (a, b), c in sorted(counts.items()))


class Poly:
    """Element of the integer polynomial ring in the variables ``(i|j)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> Poly:
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, i: int, j: int) -> Poly:
        return cls._wrap({((i, j, 1),): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: int = 1) -> Poly:
        return cls({m: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly.const(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return scale(other, self)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._wrap(out)

    def __rmul__(self, other: int) -> Poly:
        return scale(other, self)

    def __pow__(self, k: int) -> Poly:
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def degree(self) -> int | float:
        """Maximal total degree; ``ZERO_DEGREE`` (minus infinity) for the zero polynomial."""
        if not self.terms:
            return ZERO_DEGREE
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self.terms}) <= 1

    def items(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: monomial_variables(mc[0]))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def scale(c: int, p: Poly) -> Poly:
    if not c:
        return Poly()
    return Poly._wrap({m: c * v for m, v in p.terms.items()})


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def linear_combination(pairs: Iterable[tuple[int, Poly]]) -> Poly:
    out: dict[Monomial, int] = {}
    for c, p in pairs:
        if not c:
            continue
        for m, v in p.terms.items():
            s = out.get(m, 0) + c * v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Poly._wrap(out)


# -- determinants and permanents of generic submatrices ---------------------


def _check_words(omega: Sequence[int], varpi: Sequence[int]) -> None:
    if len(omega) != len(varpi):
        raise ValueError(f"words of different lengths: {tuple(omega)} vs {tuple(varpi)}")


def _minor(omega: Sequence[int], varpi: Sequence[int], signed: bool) -> Poly:
    out: dict[Monomial, int] = {}
    for perm in permutations(range(len(varpi))):
        m = monomial((omega[r], varpi[perm[r]]) for r in range(len(omega)))
        c = permutation_sign(perm) if signed else 1
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return Poly._wrap(out)


def determinant(omega: Sequence[int], varpi: Sequence[int]) -> Poly:
    """``det[(omega_r | varpi_s)]`` for two words of equal length."""
    _check_words(omega, varpi)
    if len(set(omega)) < len(omega) or len(set(varpi)) < len(varpi):
        return Poly()
    return _minor(omega, varpi, signed=True)


def biproduct(omega: Sequence[int], varpi: Sequence[int]) -> Poly:
    """Signed minor ``(-1)^C(p,2) det[(omega_r | varpi_s)]``."""
    p = len(omega)
    d = determinant(omega, varpi)
    return -d if (p * (p - 1) // 2) % 2 else d


def star_biproduct(omega: Sequence[int], varpi: Sequence[int]) -> Poly:
    """Permanent ``per[(omega_r | varpi_s)]``, no sign."""
    _check_words(omega, varpi)
    return _minor(omega, varpi, signed=False)


def crossing_sign(shape: Sequence[int]) -> int:
    """Sign of an equal-shape bitableau: exponent sum_k lam_k (lam_1 + ... + lam_{k-1})."""
    exponent, seen = 0, 0
    for lam in shape:
        exponent += lam * seen
        seen += lam
    return -1 if exponent % 2 else 1


def _check_shapes(s: Tableau, t: Tableau) -> None:
    if s.shape != t.shape:
        raise ValueError(f"tableaux of different shapes: {s.shape} vs {t.shape}")


def bitableau(s: Tableau, t: Tableau) -> Poly:
    """Determinantal bitableau: signed product of the row biproducts."""
    _check_shapes(s, t)
    result = Poly.const(crossing_sign(s.shape))
    for row_s, row_t in zip(s.rows, t.rows):
        result = result * biproduct(row_s, row_t)
        if not result:
            break
    return result


def star_bitableau(s: Tableau, t: Tableau) -> Poly:
    """Permanental bitableau: product of the row permanents."""
    _check_shapes(s, t)
    result = Poly.const(1)
    for row_s, row_t in zip(s.rows, t.rows):
        result = result * star_biproduct(row_s, row_t)
    return result


def symmetrized_bitableau(s: Tableau, t: Tableau) -> Poly:
    """Sum of ``bitableau(s, u)`` over every column permutation ``u`` of ``t``."""
    _check_shapes(s, t)
    counts: dict[Tableau, int] = {}
    for u in column_permutations(t):
        counts[u] = counts.get(u, 0) + 1
    return linear_combination((c, bitableau(s, u)) for u, c in counts.items())


# -- polarizations ------------------------------------------------------------


def polarize_left(i: int, j: int, p: Poly) -> Poly:
    """Left polarization: the derivation sending ``(h|k)`` to ``delta(j,h) (i|k)``."""
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        for pos, (h, k, e) in enumerate(m):
            if h != j:
                continue
            new = _mono_replace(m, pos, (i, k))
            s = out.get(new, 0) + c * e
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return Poly._wrap(out)


def polarize_right(j: int, i: int, p: Poly) -> Poly:
    """Right polarization: the derivation sending ``(h|k)`` to ``delta(i,k) (h|j)``."""
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        for pos, (h, k, e) in enumerate(m):
            if k != i:
                continue
            new = _mono_replace(m, pos, (h, j))
            s = out.get(new, 0) + c * e
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return Poly._wrap(out)


def rep_adjoint(i: int, j: int, p: Poly) -> Poly:
    """Adjoint action of ``e_ij``: left polarization minus right polarization."""
    return polarize_left(i, j, p) - polarize_right(j, i, p)


def rho(i: int, j: int, p: Poly) -> Poly:
    """``D^l_ij(p) + (i|j) p``."""
    return polarize_left(i, j, p) + Poly.var(i, j) * p


# -- enumeration, printing, serialization -------------------------------------


def monomials_of_degree(d: int, n: int) -> Iterator[Monomial]:
    """All monomials of total degree ``d`` in the n*n variables, in sorted order."""
    variables = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for combo in combinations_with_replacement(variables, d):
        yield monomial(combo)


def format_poly(p: Poly) -> str:
    """Canonical text: ``+(1|1)(2|2) -(1|2)(2|1)``; ``0`` for the zero polynomial."""
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.items():
        sign = "-" if c < 0 else "+"
        body = "".join(f"({i}|{j})" + (f"^{e}" if e > 1 else "") for i, j, e in m)
        mag = abs(c)
        if not body:
            parts.append(f"{sign}{mag}")
        elif mag == 1:
            parts.append(f"{sign}{body}")
        else:
            parts.append(f"{sign}{mag}{body}")
    return " ".join(parts)


def poly_to_json(p: Poly) -> list[dict]:
    return [{"coeff": str(c), "vars": [[i, j, e] for i, j, e in m]} for m, c in p.items()]


def poly_from_json(data: list[dict] | str) -> Poly:
    if isinstance(data, str):
        data = json.loads(data)
    out = Poly()
    for term in data:
        factors = [(int(i), int(j), int(e)) for i, j, e in term["vars"]]
        if any(e < 0 for _, _, e in factors):
            raise ValueError(f"negative exponent in {term!r}")
        out = out + Poly({_normalize(factors): int(term["coeff"])})
    return out


def _normalize(m: Iterable[tuple[int, int, int]]) -> Monomial:
    counts: dict[tuple[int, int], int] = {}
    for i, j, e in m:
        counts[(i, j)] = counts.get((i, j), 0) + e
    return tuple((i, j, e) for (i, j), e in sorted(counts.items()) if e)


_POLY_TERM = re.compile(r"([+-])(\d*)((?:\(\d+\|\d+\)(?:\^\d+)?)*)")
_POLY_FACTOR = re.compile(r"\((\d+)\|(\d+)\)(?:\^(\d+))?")


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`format_poly`; a leading ``+`` may be omitted."""
    text = "".join(text.replace("\u2212", "-").split())
    if text in ("", "0"):
        return Poly()
    if text[0] not in "+-":
        text = "+" + text
    out: dict[Monomial, int] = {}
    pos = 0
    while pos < len(text):
        match = _POLY_TERM.match(text, pos)
        if not match or match.end() == pos or not (match.group(2) or match.group(3)):
            raise ValueError(f"cannot parse polynomial text at {text[pos:]!r}")
        sign, mag, body = match.groups()
        coeff = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
        factors = [(int(i), int(j), int(e or 1)) for i, j, e in _POLY_FACTOR.findall(body)]
        key = _normalize(factors)
        out[key] = out.get(key, 0) + coeff
        pos = match.end()
    return Poly(out)
