"""The Koszul map from the enveloping algebra to matrix polynomials, and its inverse."""

from __future__ import annotations

from functools import lru_cache

from .capelli import column_capelli
from .enveloping import UEAElement, Word, _accumulate, adjoint_T
from .polynomials import Monomial, Poly, monomial_variables, rep_adjoint, rho


@lru_cache(maxsize=None)
def _koszul_word(word: Word) -> Poly:
    if not word:
        return Poly.const(1)
    i, j = word[0]
    return rho(i, j, _koszul_word(word[1:]))


def koszul(m: UEAElement) -> Poly:
    """``e_{i1 j1} ... e_{ih jh}  ->  rho_{i1 j1}( ... rho_{ih jh}(1))``, extended linearly."""
    out: dict[Monomial, int] = {}
    for w, c in m.terms.items():
        _accumulate(out, _koszul_word(w).terms.items(), c)
    return Poly._wrap(out)


def _monomial_preimage(m: Monomial) -> UEAElement:
    pairs = monomial_variables(m)
    h = len(pairs)
    col = column_capelli([i for i, _ in pairs], [j for _, j in pairs])
    return -col if (h * (h - 1) // 2) % 2 else col


def inverse_koszul(p: Poly) -> UEAElement:
    """Each degree-h monomial maps to ``(-1)^C(h,2)`` times its column Capelli bitableau."""
    out: dict[Word, int] = {}
    for m, c in p.terms.items():
        _accumulate(out, _monomial_preimage(m).terms.items(), c)
    return UEAElement._wrap(out)


def check_equivariance(h: int, k: int, m: UEAElement) -> bool:
    """Does the map intertwine ``T_hk`` upstairs with ``D^l_hk - D^r_kh`` downstairs?"""
    return koszul(adjoint_T(h, k, m)) == rep_adjoint(h, k, koszul(m))
