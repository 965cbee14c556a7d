"""Partitions, Young tableaux and the enumerations built on them.

Tableau entries are 1-based letters of the alphabet ``{1, ..., n}``.  The
bound ``n`` is not stored on the tableau; it is passed to every enumeration
so that one filling can be reused for several alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple."""
    parts = tuple(int(p) for p in parts)
    for k, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        if k and parts[k - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def conjugate(shape: Sequence[int]) -> Partition:
    """The conjugate partition: part ``s`` counts the rows of length >= s."""
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part >= s) for s in range(1, shape[0] + 1))


def partitions_of(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``d`` in reverse lexicographic order, e.g. (2,), (1, 1)."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - first, first):
            yield (first,) + rest


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


@dataclass(frozen=True, order=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        partition(len(row) for row in rows)
        for row in rows:
            for x in row:
                if x < 1:
                    raise ValueError(f"tableau entries must be positive letters: {rows}")

    @classmethod
    def of(cls, *rows: Sequence[int]) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return conjugate_tableau(self).rows

    def reading_word(self) -> tuple[int, ...]:
        """Row-major reading word."""
        return tuple(x for row in self.rows for x in row)

    def max_entry(self) -> int:
        return max(self.reading_word(), default=0)

    def check_alphabet(self, n: int) -> None:
        if self.max_entry() > n:
            raise ValueError(f"tableau {format_tableau(self)} has entries outside 1..{n}")

    def __str__(self) -> str:
        return format_tableau(self)


def conjugate_tableau(t: Tableau) -> Tableau:
    """Transpose: the rows of the result are the columns of ``t``."""
    shape = t.shape
    return Tableau(
        tuple(tuple(t.rows[r][c] for r in range(lam)) for c, lam in enumerate(conjugate(shape)))
    )


def is_standard(t: Tableau) -> bool:
    """Rows strictly increasing, columns weakly increasing downwards."""
    for row in t.rows:
        if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
            return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(upper[c] > lower[c] for c in range(len(lower))):
            return False
    return True


def is_costandard(t: Tableau) -> bool:
    return is_standard(conjugate_tableau(t))


def _rows_with(shape: Sequence[int], n: int, below=None) -> Iterator[tuple[tuple[int, ...], ...]]:
    # rows in lexicographic order; ``below`` enforces weakly increasing columns
    if not shape:
        yield ()
        return
    for row in combinations(range(1, n + 1), shape[0]):
        if below is not None and any(below[c] > row[c] for c in range(len(row))):
            continue
        for rest in _rows_with(shape[1:], n, row):
            yield (row,) + rest


def enumerate_standard(shape: Sequence[int], n: int) -> list[Tableau]:
    """All standard tableaux of ``shape`` on ``{1..n}``, lexicographic in the reading word."""
    shape = partition(shape)
    return [Tableau(rows) for rows in _rows_with(shape, n)]


def enumerate_costandard(shape: Sequence[int], n: int) -> list[Tableau]:
    """All costandard tableaux of ``shape`` on ``{1..n}``, lexicographic in the reading word."""
    shape = partition(shape)
    found = [conjugate_tableau(t) for t in enumerate_standard(conjugate(shape), n)]
    return sorted(found, key=Tableau.reading_word)


def enumerate_row_increasing(shape: Sequence[int], n: int) -> list[Tableau]:
    """All tableaux of ``shape`` on ``{1..n}`` with strictly increasing rows."""
    shape = partition(shape)
    if shape and shape[0] > n:
        raise ValueError(f"first row of {shape} is longer than the alphabet 1..{n}")
    choices = [list(combinations(range(1, n + 1), lam)) for lam in shape]
    return [Tableau(rows) for rows in product(*choices)]


def enumerate_fillings(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """Every filling of ``shape`` with letters from ``{1..n}``."""
    shape = partition(shape)
    size = sum(shape)
    for word in product(range(1, n + 1), repeat=size):
        rows, pos = [], 0
        for lam in shape:
            rows.append(word[pos:pos + lam])
            pos += lam
        yield Tableau(tuple(rows))


def column_permutations(t: Tableau) -> list[Tableau]:
    """Every tableau obtained by permuting each column of ``t`` independently.

    Repeated entries in a column give repeated tableaux, so the result always
    has ``prod(len(column)!)`` members.
    """
    cols = t.columns()
    shape = t.shape
    result = []
    for choice in product(*(permutations(col) for col in cols)):
        rows = tuple(tuple(choice[c][r] for c in range(lam)) for r, lam in enumerate(shape))
        result.append(Tableau(rows))
    return result


def parse_tableau(text: str) -> Tableau:
    """Parse ``"1 2 / 2 4"`` into a tableau; the empty string is the empty tableau."""
    text = text.strip()
    if not text:
        return Tableau(())
    rows = []
    for chunk in text.split("/"):
        entries = chunk.split()
        if not entries:
            raise ValueError(f"empty row in tableau text {text!r}")
        try:
            rows.append(tuple(int(x) for x in entries))
        except ValueError:
            raise ValueError(f"non-integer entry in tableau text {text!r}") from None
    return Tableau(tuple(rows))


def format_tableau(t: Tableau) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in t.rows)
