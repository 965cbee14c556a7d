"""Superpolarization oracle on the supersymmetric algebra with virtual symbols.

Symbols come in three kinds: positive virtual ``alpha_s`` (even), negative
virtual ``beta_t`` (odd) and proper letters ``i`` (odd).  A variable ``(a|j)``
has parity ``|a| + 1``, so ``(alpha|j)`` is odd and the others are even.
Odd variables anticommute and square to zero.

The oracle never normal-orders in the super enveloping algebra.  It applies
the balanced monomials that define Capelli, Capelli-* and right Young-Capelli
bitableaux as chains of superpolarizations to ordinary polynomials.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .polynomials import Poly, _normalize
from .tableaux import Tableau


class Symbol(NamedTuple):
    kind: str  # "a" positive virtual, "b" negative virtual, "p" proper
    index: int

    @property
    def parity(self) -> int:
        return 0 if self.kind == "a" else 1

    def __str__(self) -> str:
        return {"a": "alpha", "b": "beta", "p": ""}[self.kind] + str(self.index)


def alpha(s: int) -> Symbol:
    return Symbol("a", s)


def beta(t: int) -> Symbol:
    return Symbol("b", t)


def proper(i: int) -> Symbol:
    return Symbol("p", i)


Variable = tuple[Symbol, int]
# odd part: strictly increasing tuple of odd variables; even part: sorted ((var, exp), ...)
SuperMonomial = tuple[tuple[Variable, ...], tuple[tuple[Variable, int], ...]]
OperatorWord = list[tuple[Symbol, Symbol]]


def variable_parity(v: Variable) -> int:
    return (v[0].parity + 1) % 2


class SuperPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[SuperMonomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: SuperPoly) -> SuperPoly:
        out = dict(self.terms)
        _acc(out, other.terms.items())
        return SuperPoly(out)

    def __repr__(self) -> str:
        return f"SuperPoly({self.terms!r})"


def _acc(out: dict, items, factor: int = 1) -> None:
    for key, c in items:
        s = out.get(key, 0) + factor * c
        if s:
            out[key] = s
        else:
            out.pop(key, None)


def _insert_odd(odd: tuple[Variable, ...], v: Variable, pos: int) -> tuple[int, tuple[Variable, ...]]:
    """Sign and sorted tuple after placing ``v`` at index ``pos`` of ``odd``.

    Returns sign 0 when ``v`` is already present (odd squares vanish).
    """
    if v in odd:
        return 0, ()
    target = sum(1 for u in odd if u < v)
    sign = -1 if abs(target - pos) % 2 else 1
    return sign, odd[:target] + (v,) + odd[target:]


def _even_add(even: tuple[tuple[Variable, int], ...], v: Variable, delta: int):
    counts = dict(even)
    counts[v] = counts.get(v, 0) + delta
    return tuple((u, e) for u, e in sorted(counts.items()) if e)


def super_monomial(odd: Sequence[Variable] = (), even: Sequence[Variable] = ()) -> tuple[int, SuperMonomial]:
    """Sign and canonical form of the product ``odd[0] odd[1] ... * even``."""
    sign, placed = 1, ()
    for v in odd:
        if variable_parity(v) != 1:
            raise ValueError(f"{v} is not an odd variable")
        s, placed = _insert_odd(placed, v, len(placed))
        sign *= s
        if not sign:
            return 0, ((), ())
    counts: dict[Variable, int] = {}
    for v in even:
        if variable_parity(v) != 0:
            raise ValueError(f"{v} is not an even variable")
        counts[v] = counts.get(v, 0) + 1
    return sign, (placed, tuple(sorted(counts.items())))


def superpolarize(a: Symbol, b: Symbol, p: SuperPoly) -> SuperPoly:
    """Left superpolarization: annihilate ``b``, create ``a``, with super Leibniz signs."""
    d = (a.parity + b.parity) % 2
    out: dict[SuperMonomial, int] = {}
    for (odd, even), c in p.terms.items():
        r = len(odd)
        for pos, v in enumerate(odd):
            if v[0] != b:
                continue
            new = (a, v[1])
            sign = -1 if d and pos % 2 else 1
            rest = odd[:pos] + odd[pos + 1:]
            if variable_parity(new):
                s, new_odd = _insert_odd(rest, new, pos)
                if s:
                    _acc(out, (((new_odd, even), c * sign * s),))
            else:
                _acc(out, (((rest, _even_add(even, new, 1)), c * sign),))
        for v, e in even:
            if v[0] != b:
                continue
            new = (a, v[1])
            sign = -1 if d and r % 2 else 1
            lowered = _even_add(even, v, -1)
            if variable_parity(new):
                s, new_odd = _insert_odd(odd, new, r)
                if s:
                    _acc(out, (((new_odd, lowered), c * e * sign * s),))
            else:
                _acc(out, (((odd, _even_add(lowered, new, 1)), c * e * sign),))
    return SuperPoly(out)


def apply_word(word: OperatorWord, p: SuperPoly) -> SuperPoly:
    """Apply ``D_{a_m b_m} ... D_{a_1 b_1}``: the rightmost pair acts first."""
    for a, b in reversed(word):
        if not p:
            break
        p = superpolarize(a, b, p)
    return p


def is_irregular(word: OperatorWord) -> bool:
    """Does some right subword annihilate a virtual symbol more often than it created it?"""
    created: dict[Symbol, int] = {}
    annihilated: dict[Symbol, int] = {}
    for a, b in reversed(word):
        if b.kind != "p":
            annihilated[b] = annihilated.get(b, 0) + 1
            if annihilated[b] > created.get(b, 0):
                return True
        if a.kind != "p":
            created[a] = created.get(a, 0) + 1
    return False


def embed(p: Poly) -> SuperPoly:
    return SuperPoly(
        {((), tuple(((proper(i), j), e) for i, j, e in m)): c for m, c in p.terms.items()}
    )


def project(p: SuperPoly) -> Poly:
    """Back to ordinary polynomials; any virtual residue is an internal fault."""
    out = {}
    for (odd, even), c in p.terms.items():
        if odd or any(v[0].kind != "p" for v, _ in even):
            raise RuntimeError("virtual variables survived a balanced monomial")
        out[_normalize((v[0].index, v[1], e) for v, e in even)] = c
    return Poly(out)


# -- balanced monomials -------------------------------------------------------


def _cells(t: Tableau):
    for k, row in enumerate(t.rows):
        for c, x in enumerate(row):
            yield k, c, x


def _check_pair(s: Tableau, t: Tableau) -> None:
    if s.shape != t.shape:
        raise ValueError(f"tableaux of different shapes: {s.shape} vs {t.shape}")


def capelli_word(s: Tableau, t: Tableau) -> OperatorWord:
    """``e_{S,C} e_{C,T}`` with the Coderuyts tableau ``C`` (row k filled by alpha_k)."""
    _check_pair(s, t)
    create = [(proper(x), alpha(k + 1)) for k, _, x in _cells(s)]
    annihilate = [(alpha(k + 1), proper(x)) for k, _, x in _cells(t)]
    return create + annihilate


def star_word(s: Tableau, t: Tableau) -> OperatorWord:
    """``e_{S,D'} e_{D',T}`` where ``D'``, the conjugate Deruyts tableau of the conjugate shape,
    has row k filled by beta_k."""
    _check_pair(s, t)
    create = [(proper(x), beta(k + 1)) for k, _, x in _cells(s)]
    annihilate = [(beta(k + 1), proper(x)) for k, _, x in _cells(t)]
    return create + annihilate


def young_word(s: Tableau, t: Tableau) -> OperatorWord:
    """``e_{S,C} e_{C,D} e_{D,T}`` with Coderuyts ``C`` (rows of alpha_k) and
    Deruyts ``D`` (columns of beta_c)."""
    _check_pair(s, t)
    create = [(proper(x), alpha(k + 1)) for k, _, x in _cells(s)]
    middle = [(alpha(k + 1), beta(c + 1)) for k, c, _ in _cells(s)]
    annihilate = [(beta(c + 1), proper(x)) for _, c, x in _cells(t)]
    return create + middle + annihilate


def _oracle(word: OperatorWord, p: Poly) -> Poly:
    return project(apply_word(word, embed(p)))


def oracle_capelli_action(s: Tableau, t: Tableau, p: Poly) -> Poly:
    return _oracle(capelli_word(s, t), p)


def oracle_star_action(s: Tableau, t: Tableau, p: Poly) -> Poly:
    return _oracle(star_word(s, t), p)


def oracle_young_action(s: Tableau, t: Tableau, p: Poly) -> Poly:
    return _oracle(young_word(s, t), p)


def oracle_column_action(left: Sequence[int], right: Sequence[int], p: Poly, star: bool = False) -> Poly:
    """Column bitableau with distinct virtual symbols, one per row."""
    s = Tableau(tuple((x,) for x in left))
    t = Tableau(tuple((x,) for x in right))
    return oracle_star_action(s, t, p) if star else oracle_capelli_action(s, t, p)
