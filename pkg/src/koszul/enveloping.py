"""The enveloping algebra of gl(n) in PBW normal form.

A PBW monomial is stored as a non-decreasing tuple of generators ``(i, j)``
under row-major order ``e_11 < e_12 < ... < e_nn``; ``((1, 2), (2, 1), (2, 1))``
is ``e_12 e_21^2``.  Products are normal-ordered by commuting adjacent
out-of-order generators, ``e_a e_b = e_b e_a + [e_a, e_b]``.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from itertools import combinations_with_replacement, groupby
from typing import Iterable

from .polynomials import Monomial, Poly, _mono_replace

Generator = tuple[int, int]
Word = tuple[Generator, ...]

UNIT_WORD: Word = ()


class UEAElement:
    """Integer combination of PBW monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}
        for w in self.terms:
            if list(w) != sorted(w):
                raise ValueError(f"word {w} is not in PBW order; use multiply() to normal-order")

    @classmethod
    def _wrap(cls, terms: dict[Word, int]) -> UEAElement:
        m = cls.__new__(cls)
        m.terms = terms
        return m

    @classmethod
    def unit(cls, c: int = 1) -> UEAElement:
        return cls({UNIT_WORD: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UEAElement.unit(other)
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: UEAElement | int) -> UEAElement:
        if isinstance(other, int):
            other = UEAElement.unit(other)
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return UEAElement._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> UEAElement:
        return UEAElement._wrap({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: UEAElement | int) -> UEAElement:
        if isinstance(other, int):
            other = UEAElement.unit(other)
        return self + (-other)

    def __rsub__(self, other: int) -> UEAElement:
        return UEAElement.unit(other) - self

    def __mul__(self, other: UEAElement | int) -> UEAElement:
        if isinstance(other, int):
            return UEAElement._wrap({w: other * c for w, c in self.terms.items()} if other else {})
        return multiply(self, other)

    def __rmul__(self, other: int) -> UEAElement:
        return self * other

    def degree(self) -> int:
        return degree(self)

    def items(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def __repr__(self) -> str:
        return f"UEAElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def _accumulate(out: dict, items: Iterable[tuple[object, int]], factor: int = 1) -> None:
    for key, c in items:
        s = out.get(key, 0) + factor * c
        if s:
            out[key] = s
        else:
            out.pop(key, None)


def gen(i: int, j: int, n: int | None = None) -> UEAElement:
    """The generator ``e_ij``."""
    if i < 1 or j < 1 or (n is not None and (i > n or j > n)):
        raise ValueError(f"generator index ({i}, {j}) out of range for n={n}")
    return UEAElement._wrap({((i, j),): 1})


def word_element(word: Iterable[Generator]) -> UEAElement:
    """Normal-ordered product of an arbitrary (not necessarily sorted) generator word."""
    terms: dict[Word, int] = {UNIT_WORD: 1}
    for g in word:
        terms = _times_generator(terms, g)
    return UEAElement._wrap(terms)


def bracket(a: Generator, b: Generator) -> dict[Word, int]:
    """``[e_ij, e_st] = delta(j,s) e_it - delta(i,t) e_sj`` as a term map."""
    (i, j), (s, t) = a, b
    out: dict[Word, int] = {}
    if j == s:
        out[((i, t),)] = 1
    if i == t:
        key = ((s, j),)
        v = out.get(key, 0) - 1
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _word_times_generator(word: Word, g: Generator) -> tuple[tuple[Word, int], ...]:
    # normal form of (sorted word) * g
    if not word or word[-1] <= g:
        return ((word + (g,), 1),)
    prefix, last = word[:-1], word[-1]
    out: dict[Word, int] = {}
    # prefix * last * g = (prefix * g) * last + prefix * [last, g]
    for w, c in _word_times_generator(prefix, g):
        _accumulate(out, _word_times_generator(w, last), c)
    for (h,), c in bracket(last, g).items():
        _accumulate(out, _word_times_generator(prefix, h), c)
    return tuple(out.items())


def _times_generator(terms: dict[Word, int], g: Generator) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for w, c in terms.items():
        _accumulate(out, _word_times_generator(w, g), c)
    return out


@lru_cache(maxsize=1 << 16)
def _word_product(left: Word, right: Word) -> tuple[tuple[Word, int], ...]:
    terms: dict[Word, int] = {left: 1}
    for g in right:
        terms = _times_generator(terms, g)
    return tuple(terms.items())


def multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    """Associative product, returned in PBW normal form."""
    out: dict[Word, int] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            if not wb:
                _accumulate(out, ((wa, 1),), ca * cb)
            elif not wa:
                _accumulate(out, ((wb, 1),), ca * cb)
            else:
                _accumulate(out, _word_product(wa, wb), ca * cb)
    return UEAElement._wrap(out)


def commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return multiply(a, b) - multiply(b, a)


def adjoint_T(h: int, k: int, m: UEAElement) -> UEAElement:
    """``e_hk m - m e_hk``."""
    g = gen(h, k)
    return multiply(g, m) - multiply(m, g)


def degree(m: UEAElement) -> int:
    """Filtration degree; the zero element has none."""
    if not m.terms:
        raise ValueError("the zero element has no filtration degree")
    return max(len(w) for w in m.terms)


# -- left polarization action on polynomials ----------------------------------


@lru_cache(maxsize=1 << 18)
def _polarize_monomial(i: int, j: int, m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    out: dict[Monomial, int] = {}
    for pos, (h, k, e) in enumerate(m):
        if h == j:
            _accumulate(out, ((_mono_replace(m, pos, (i, k)), e),))
    return tuple(out.items())


@lru_cache(maxsize=1 << 18)
def _act_word_monomial(word: Word, m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    # innermost (rightmost) generator acts first
    if not word:
        return ((m, 1),)
    (i, j), rest = word[0], word[1:]
    out: dict[Monomial, int] = {}
    for m2, c in _act_word_monomial(rest, m):
        _accumulate(out, _polarize_monomial(i, j, m2), c)
    return tuple(out.items())


def act_on_poly(m: UEAElement, p: Poly) -> Poly:
    """Action through ``e_ij -> D^l_ij`` (left polarization), extended to the algebra."""
    out: dict[Monomial, int] = {}
    for w, c in m.terms.items():
        for mono, v in p.terms.items():
            _accumulate(out, _act_word_monomial(w, mono), c * v)
    return Poly._wrap(out)


# -- enumeration, printing, serialization -------------------------------------


def pbw_words(d: int, n: int) -> list[Word]:
    """All PBW words of length exactly ``d`` over gl(n)."""
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return list(combinations_with_replacement(gens, d))


def word_factors(w: Word) -> list[tuple[Generator, int]]:
    """``((1,2),(2,1),(2,1))`` -> ``[((1,2),1), ((2,1),2)]``."""
    return [(g, len(list(grp))) for g, grp in groupby(w)]


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return "".join(f"e[{i},{j}]" + (f"^{k}" if k > 1 else "") for (i, j), k in word_factors(w))


def format_element(m: UEAElement) -> str:
    """Canonical text, e.g. ``+e[1,1]e[2,2] -e[1,2]e[2,1] +e[1,1]``."""
    if not m.terms:
        return "0"
    parts = []
    for w, c in m.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not w:
            parts.append(f"{sign}{mag}")
        elif mag == 1:
            parts.append(f"{sign}{format_word(w)}")
        else:
            parts.append(f"{sign}{mag}{format_word(w)}")
    return " ".join(parts)


def element_to_json(m: UEAElement) -> list[dict]:
    return [
        {"coeff": str(c), "gens": [[i, j, k] for (i, j), k in word_factors(w)]}
        for w, c in m.items()
    ]


def element_from_json(data: list[dict] | str) -> UEAElement:
    """Inverse of :func:`element_to_json`.

    Factor lists need not be in PBW order; they are multiplied out left to
    right, so ``[[2,1,1],[1,2,1]]`` reads as ``e_21 e_12``.
    """
    if isinstance(data, str):
        data = json.loads(data)
    out = UEAElement()
    for term in data:
        word = []
        for i, j, k in term["gens"]:
            if int(k) < 0:
                raise ValueError(f"negative exponent in {term!r}")
            word.extend([(int(i), int(j))] * int(k))
        out = out + word_element(word) * int(term["coeff"])
    return out


_ELEMENT_TERM = re.compile(r"([+-])(\d*)((?:e\[\d+,\d+\](?:\^\d+)?)*)")
_ELEMENT_FACTOR = re.compile(r"e\[(\d+),(\d+)\](?:\^(\d+))?")


def parse_element(text: str) -> UEAElement:
    """Inverse of :func:`format_element`.

    Factors are multiplied left to right, so non-normal-ordered input such as
    ``e[2,1]e[1,2]`` is accepted and normal-ordered.
    """
    text = "".join(text.replace("\u2212", "-").split())
    if text in ("", "0"):
        return UEAElement()
    if text[0] not in "+-":
        text = "+" + text
    out = UEAElement()
    pos = 0
    while pos < len(text):
        match = _ELEMENT_TERM.match(text, pos)
        if not match or match.end() == pos or not (match.group(2) or match.group(3)):
            raise ValueError(f"cannot parse element text at {text[pos:]!r}")
        sign, mag, body = match.groups()
        coeff = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
        word = []
        for i, j, k in _ELEMENT_FACTOR.findall(body):
            word.extend([(int(i), int(j))] * int(k or 1))
        out = out + word_element(word) * coeff
        pos = match.end()
    return out
