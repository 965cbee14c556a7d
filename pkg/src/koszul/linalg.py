"""Exact integer rank and determinant, via sympy's domain matrices over ZZ."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix


def _domain_matrix(rows: Sequence[Sequence[int]], ncols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (len(rows), ncols), ZZ)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix given as a list of rows."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return _domain_matrix(rows, len(rows[0])).rank()


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    return int(_domain_matrix(matrix, n).det())


def coordinate_rows(vectors: Iterable[Mapping[Hashable, int]]) -> list[list[int]]:
    """Sparse term maps -> dense rows over the union of their supports."""
    vectors = list(vectors)
    keys = sorted({k for v in vectors for k in v}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return rows
