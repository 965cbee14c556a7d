"""Capelli bitableaux and central elements of the enveloping algebra.

Column Capelli bitableaux come from the first-row expansion recursions;
Capelli bitableaux of arbitrary shape are their Laplace sums over per-row
permutations of the left tableau.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Sequence

from .enveloping import UEAElement, Word, _accumulate, adjoint_T, gen, multiply
from .polynomials import Poly, determinant
from .tableaux import (
    Tableau,
    column_permutations,
    enumerate_row_increasing,
    partition,
    permutation_sign,
)

Column = tuple[int, ...]


def _check_column(left: Sequence[int], right: Sequence[int]) -> tuple[Column, Column]:
    left, right = tuple(left), tuple(right)
    if len(left) != len(right):
        raise ValueError(f"column pair of unequal depths: {left} vs {right}")
    return left, right


def _times_gen(i: int, j: int, terms: dict[Word, int]) -> dict[Word, int]:
    return multiply(gen(i, j), UEAElement._wrap(terms)).terms


@lru_cache(maxsize=None)
def _column(left: Column, right: Column, star: bool) -> tuple[tuple[Word, int], ...]:
    h = len(left)
    if h == 0:
        return (((), 1),)
    i1, j1 = left[0], right[0]
    out: dict[Word, int] = {}
    head = _times_gen(i1, j1, dict(_column(left[1:], right[1:], star)))
    _accumulate(out, head.items(), 1 if star or h % 2 == 1 else -1)
    # (-1)^(h-2) for the determinantal recursion, -1 for the permanental one
    tail_sign = -1 if star or h % 2 == 1 else 1
    for k in range(1, h):
        if left[k] != j1:
            continue
        swapped = left[1:k] + (i1,) + left[k + 1:]
        _accumulate(out, _column(swapped, right[1:], star), tail_sign)
    return tuple(out.items())


def column_capelli_raw(left: Sequence[int], right: Sequence[int]) -> UEAElement:
    """Column Capelli bitableau straight from the recursion, rows in the given order."""
    left, right = _check_column(left, right)
    return UEAElement._wrap(dict(_column(left, right, False)))


def column_capelli_star_raw(left: Sequence[int], right: Sequence[int]) -> UEAElement:
    left, right = _check_column(left, right)
    return UEAElement._wrap(dict(_column(left, right, True)))


def _canonical(left: Column, right: Column) -> tuple[Column, Column]:
    rows = sorted(zip(left, right))
    return tuple(r[0] for r in rows), tuple(r[1] for r in rows)


def column_capelli(left: Sequence[int], right: Sequence[int]) -> UEAElement:
    """Column Capelli bitableau ``[i_1..i_h | j_1..j_h]``.

    Rows are sorted before recursing, which is sound because column Capelli
    bitableaux are row-commutative; ``column_capelli_raw`` skips the sort.
    """
    left, right = _canonical(*_check_column(left, right))
    return UEAElement._wrap(dict(_column(left, right, False)))


def column_capelli_star(left: Sequence[int], right: Sequence[int]) -> UEAElement:
    """Column Capelli *-bitableau ``[i_1..i_h | j_1..j_h]*``."""
    left, right = _canonical(*_check_column(left, right))
    return UEAElement._wrap(dict(_column(left, right, True)))


def _check_pair(s: Tableau, t: Tableau) -> None:
    if s.shape != t.shape:
        raise ValueError(f"tableaux of different shapes: {s.shape} vs {t.shape}")


def _laplace(s: Tableau, t: Tableau, star: bool) -> UEAElement:
    _check_pair(s, t)
    right = t.reading_word()
    out: dict[Word, int] = {}
    row_perms = [list(permutations(range(len(row)))) for row in s.rows]
    for sigmas in product(*row_perms):
        left: list[int] = []
        sign = 1
        for row, sigma in zip(s.rows, sigmas):
            left.extend(row[x] for x in sigma)
            if not star:
                sign *= permutation_sign(sigma)
        pair = _canonical(tuple(left), right)
        _accumulate(out, _column(pair[0], pair[1], star), sign)
    return UEAElement._wrap(out)


def capelli_bitableau(s: Tableau, t: Tableau) -> UEAElement:
    """Capelli bitableau ``[S|T]`` as a signed Laplace sum of column bitableaux."""
    return _laplace(s, t, star=False)


def star_capelli_bitableau(s: Tableau, t: Tableau) -> UEAElement:
    """Capelli *-bitableau ``[S|T]*``: the unsigned Laplace sum."""
    return _laplace(s, t, star=True)


def right_young_capelli(s: Tableau, t: Tableau) -> UEAElement:
    """Right Young-Capelli bitableau: sum of ``[S|U]`` over column permutations ``U`` of ``T``."""
    _check_pair(s, t)
    counts: dict[Tableau, int] = {}
    for u in column_permutations(t):
        counts[u] = counts.get(u, 0) + 1
    out: dict[Word, int] = {}
    for u, c in counts.items():
        _accumulate(out, capelli_bitableau(s, u).terms.items(), c)
    return UEAElement._wrap(out)


# -- central elements ---------------------------------------------------------


def capelli_cdet(n: int) -> UEAElement:
    """Column determinant of ``[e_ij + (n - i) delta_ij]``, factors multiplied left to right."""
    if n < 1:
        raise ValueError("n must be positive")
    out = UEAElement()
    for tau in permutations(range(1, n + 1)):
        term = UEAElement.unit(permutation_sign(tau))
        for col in range(1, n + 1):
            row = tau[col - 1]
            entry = gen(row, col)
            if row == col:
                entry = entry + (n - col)
            term = multiply(term, entry)
        out = out + term
    return out


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")


def capelli_H(k: int, n: int) -> UEAElement:
    """k-th Capelli element: sum over k-subsets of ``[i_k..i_1 | i_1..i_k]``."""
    _check_k(k, n)
    out: dict[Word, int] = {}
    for subset in combinations(range(1, n + 1), k):
        s = Tableau((tuple(reversed(subset)),))
        t = Tableau((subset,))
        _accumulate(out, capelli_bitableau(s, t).terms.items())
    return UEAElement._wrap(out)


def poly_h(k: int, n: int) -> Poly:
    """Sum of the principal k x k minors of the generic n x n matrix."""
    _check_k(k, n)
    out = Poly()
    for subset in combinations(range(1, n + 1), k):
        out = out + determinant(subset, subset)
    return out


def capelli_K(shape: Sequence[int], n: int) -> UEAElement:
    """Shaped Capelli element: sum of ``[S|S]`` over row-increasing ``S`` of the shape."""
    shape = partition(shape)
    out: dict[Word, int] = {}
    for s in enumerate_row_increasing(shape, n):
        _accumulate(out, capelli_bitableau(s, s).terms.items())
    return UEAElement._wrap(out)


def char_poly_check(n: int) -> bool:
    """Compare ``det(tI - M)`` with ``t^n + sum (-1)^i h_i(n) t^(n-i)``."""
    if n < 1:
        raise ValueError("n must be positive")
    # entries are polynomials in t with Poly coefficients: {power: Poly}
    det: dict[int, Poly] = {}
    for tau in permutations(range(1, n + 1)):
        term: dict[int, Poly] = {0: Poly.const(permutation_sign(tau))}
        for r in range(1, n + 1):
            c = tau[r - 1]
            entry = {0: -Poly.var(r, c)}
            if r == c:
                entry[1] = Poly.const(1)
            nxt: dict[int, Poly] = {}
            for a, pa in term.items():
                for b, pb in entry.items():
                    nxt[a + b] = nxt.get(a + b, Poly()) + pa * pb
            term = nxt
        for power, coeff in term.items():
            det[power] = det.get(power, Poly()) + coeff
    expected = {n: Poly.const(1)}
    for i in range(1, n + 1):
        h = poly_h(i, n)
        expected[n - i] = -h if i % 2 else h
    return all(det.get(p, Poly()) == expected.get(p, Poly()) for p in range(n + 1))


def is_central(m: UEAElement, n: int) -> bool:
    """True iff every ``T_hk`` kills ``m``."""
    return all(
        not adjoint_T(h, k, m) for h in range(1, n + 1) for k in range(1, n + 1)
    )
