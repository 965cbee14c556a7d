"""Named verification suites over exhaustive desk-scale test sets.

Each suite takes ``n`` and ``max_degree`` and returns a :class:`SuiteResult`
carrying a check count and the first counterexample found, if any.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Callable, Iterator

from .capelli import (
    capelli_bitableau,
    capelli_H,
    capelli_K,
    char_poly_check,
    column_capelli,
    column_capelli_star,
    is_central,
    poly_h,
    right_young_capelli,
    star_capelli_bitableau,
)
from .enveloping import UEAElement, act_on_poly, adjoint_T, pbw_words
from .koszul_map import inverse_koszul, koszul
from .linalg import coordinate_rows, integer_det, integer_rank
from .polynomials import (
    Poly,
    bitableau,
    monomial,
    monomials_of_degree,
    rep_adjoint,
    star_bitableau,
    symmetrized_bitableau,
)
from .tableaux import (
    Tableau,
    enumerate_costandard,
    enumerate_standard,
    partitions_of,
)
from .virtual import oracle_capelli_action, oracle_star_action, oracle_young_action


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: str | None = None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checks} checks"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        return line


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failure: str | None = None

    def check(self, ok: bool, describe: Callable[[], str]) -> bool:
        self.checks += 1
        if not ok and self.failure is None:
            self.failure = describe()
        return ok

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.failure is None, self.checks, self.failure)


# -- enumeration helpers ------------------------------------------------------


def shapes_up_to(max_size: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonempty partitions of size 1..max_size, optionally with bounded first part."""
    for d in range(1, max_size + 1):
        yield from partitions_of(d, max_part)


def _restricted_growth(length: int, max_letter: int) -> Iterator[tuple[int, ...]]:
    # words where each letter is at most one more than the largest letter so far
    def grow(prefix: tuple[int, ...], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for x in range(1, min(top + 1, max_letter) + 1):
            yield from grow(prefix + (x,), max(top, x))

    yield from grow((), 0)


def _split(word: tuple[int, ...], shape: tuple[int, ...]) -> Tableau:
    rows, pos = [], 0
    for lam in shape:
        rows.append(word[pos:pos + lam])
        pos += lam
    return Tableau(tuple(rows))


def canonical_pairs(shape: tuple[int, ...], n: int) -> Iterator[tuple[Tableau, Tableau]]:
    """One pair ``(S, T)`` per orbit of letter relabelings.

    The joint reading word of ``S`` then ``T`` is a restricted growth string,
    so every same-shape pair on ``{1..n}`` is a relabeling of exactly one of these.
    """
    size = sum(shape)
    for word in _restricted_growth(2 * size, n):
        yield _split(word[:size], shape), _split(word[size:], shape)


def random_pairs(shape: tuple[int, ...], n: int, count: int, rng: random.Random):
    size = sum(shape)
    for _ in range(count):
        word = tuple(rng.randint(1, n) for _ in range(2 * size))
        yield _split(word[:size], shape), _split(word[size:], shape)


def multilinear_monomials(max_degree: int, n: int) -> Iterator[Poly]:
    """``(r_1|1)(r_2|2)...(r_d|d)`` with non-decreasing rows, ``d <= max_degree``.

    Left polarizations commute with column substitutions, so an identity
    between two operators built from them holds on every monomial of degree
    ``d`` once it holds on these.
    """
    for d in range(max_degree + 1):
        for rows in combinations_with_replacement(range(1, n + 1), d):
            yield Poly.from_monomial(monomial((r, c + 1) for c, r in enumerate(rows)))


def all_monomials(max_degree: int, n: int) -> Iterator[Poly]:
    for d in range(max_degree + 1):
        for m in monomials_of_degree(d, n):
            yield Poly.from_monomial(m)


def standard_pairs(shape: tuple[int, ...], n: int) -> list[tuple[Tableau, Tableau]]:
    tabs = enumerate_standard(shape, n)
    return [(s, t) for s in tabs for t in tabs]


def costandard_pairs(shape: tuple[int, ...], n: int) -> list[tuple[Tableau, Tableau]]:
    tabs = enumerate_costandard(shape, n)
    return [(s, t) for s in tabs for t in tabs]


# -- suites -------------------------------------------------------------------


def roundtrip_suite(n: int, max_degree: int) -> SuiteResult:
    tally = _Tally("roundtrip")
    for d in range(max_degree + 1):
        for m in monomials_of_degree(d, n):
            p = Poly.from_monomial(m)
            back = koszul(inverse_koszul(p))
            tally.check(back == p, lambda: f"K(B({p})) = {back}")
        for w in pbw_words(d, n):
            e = UEAElement({w: 1})
            back_e = inverse_koszul(koszul(e))
            tally.check(back_e == e, lambda: f"B(K({e})) = {back_e}")
    return tally.result()


def equivariance_suite(n: int, max_degree: int) -> SuiteResult:
    tally = _Tally("equivariance")
    for d in range(max_degree + 1):
        for w in pbw_words(d, n):
            e = UEAElement({w: 1})
            image = koszul(e)
            for h, k in product(range(1, n + 1), repeat=2):
                lhs = koszul(adjoint_T(h, k, e))
                rhs = rep_adjoint(h, k, image)
                tally.check(lhs == rhs, lambda: f"h,k={h},{k} m={e}: {lhs} != {rhs}")
    return tally.result()


def centrality_suite(n: int, max_degree: int) -> SuiteResult:
    tally = _Tally("centrality")
    for k in range(1, n + 1):
        tally.check(is_central(capelli_H(k, n), n), lambda: f"H_{k}({n}) not central")
        for h, j in product(range(1, n + 1), repeat=2):
            inv = rep_adjoint(h, j, poly_h(k, n))
            tally.check(not inv, lambda: f"ad(e_{h}{j}) h_{k}({n}) = {inv}")
    tally.check(char_poly_check(n), lambda: f"characteristic polynomial mismatch at n={n}")
    for shape in shapes_up_to(max_degree, n):
        element = capelli_K(shape, n)
        tally.check(is_central(element, n), lambda: f"K_{shape}({n}) not central")
        size = sum(shape)
        expected = Poly.const(-1 if comb(size, 2) % 2 else 1)
        for part in shape:
            expected = expected * poly_h(part, n)
        image = koszul(element)
        tally.check(image == expected, lambda: f"K(K_{shape}({n})) = {image}, expected {expected}")
    return tally.result()


ORACLE_FLAVORS = (
    ("capelli", capelli_bitableau, oracle_capelli_action),
    ("star", star_capelli_bitableau, oracle_star_action),
    ("young", right_young_capelli, oracle_young_action),
)


def oracle_check_pair(s: Tableau, t: Tableau, polys: list[Poly], tally: _Tally, flavors=ORACLE_FLAVORS) -> None:
    for name, build, oracle in flavors:
        element = build(s, t)
        for p in polys:
            got = act_on_poly(element, p)
            want = oracle(s, t, p)
            tally.check(
                got == want,
                lambda: f"{name} S=[{s}] T=[{t}] p={p}: expansion gives {got}, oracle gives {want}",
            )


def oracle_suite(
    n: int,
    max_degree: int,
    max_size: int | None = None,
    samples: int = 0,
    seed: int = 0,
) -> SuiteResult:
    """Laplace-expansion elements against the superpolarization oracle.

    All pairs up to letter relabeling with ``|shape| <= max_size``, acting on
    the multilinear monomials of degree ``<= max_degree``; ``samples`` extra
    random pairs per shape guard the relabeling reduction itself.
    """
    tally = _Tally("oracle")
    if max_size is None:
        max_size = max_degree
    polys = list(multilinear_monomials(max_degree, n))
    rng = random.Random(seed)
    for shape in shapes_up_to(max_size):
        for s, t in canonical_pairs(shape, n):
            oracle_check_pair(s, t, polys, tally)
        for s, t in random_pairs(shape, n, samples, rng):
            oracle_check_pair(s, t, polys, tally)
    return tally.result()


def _rank_check(tally: _Tally, label: str, vectors: list[dict], expected: int) -> None:
    rank = integer_rank(coordinate_rows(vectors)) if vectors else 0
    tally.check(rank == expected, lambda: f"{label}: rank {rank}, expected {expected}")


def bases_suite(n: int, max_degree: int) -> SuiteResult:
    """Standard (co)standard pair counts and exact ranks, degree by degree."""
    tally = _Tally("bases")
    for d in range(1, max_degree + 1):
        dim = comb(n * n + d - 1, d)
        shapes = list(partitions_of(d, n))
        std = [pair for shape in shapes for pair in standard_pairs(shape, n)]
        co_shapes = [shape for shape in partitions_of(d) if len(shape) <= n]
        co = [pair for shape in co_shapes for pair in costandard_pairs(shape, n)]
        tally.check(len(std) == dim, lambda: f"d={d}: {len(std)} standard pairs, expected {dim}")
        tally.check(len(co) == dim, lambda: f"d={d}: {len(co)} costandard pairs, expected {dim}")
        _rank_check(tally, f"d={d} bitableaux", [bitableau(s, t).terms for s, t in std], dim)
        _rank_check(tally, f"d={d} *-bitableaux", [star_bitableau(s, t).terms for s, t in co], dim)
        _rank_check(
            tally, f"d={d} Capelli bitableaux", [capelli_bitableau(s, t).terms for s, t in std], dim
        )
        _rank_check(
            tally,
            f"d={d} Capelli *-bitableaux",
            [star_capelli_bitableau(s, t).terms for s, t in co],
            dim,
        )
    return tally.result()


def _columns(h: int, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for left in product(range(1, n + 1), repeat=h):
        for right in product(range(1, n + 1), repeat=h):
            yield left, right


def signs_suite(n: int, max_degree: int) -> SuiteResult:
    """``[c] = (-1)^C(h,2) [c]*`` for every column pair of depth ``h <= max_degree``."""
    tally = _Tally("signs")
    for h in range(max_degree + 1):
        sign = -1 if comb(h, 2) % 2 else 1
        for left, right in _columns(h, n):
            a = column_capelli(left, right)
            b = column_capelli_star(left, right) * sign
            tally.check(a == b, lambda: f"h={h} [{left}|{right}]: {a} != {sign} * {b * sign}")
    return tally.result()


def action_matrix(
    shape: tuple[int, ...], s: Tableau, v: Tableau, n: int
) -> tuple[list[list[int]], str | None]:
    """Coefficients ``A[T][U]`` with ``[S|#T](U|#V) = A[T][U] (S|#V)`` over standard T, U.

    Returns the matrix and a description of the first action that is not a
    multiple of ``(S|#V)``, if any.
    """
    tabs = enumerate_standard(shape, n)
    target = symmetrized_bitableau(s, v)
    if not target:
        return [], f"({s}|#{v}) vanishes"
    key, base = next(iter(target.terms.items()))
    matrix = []
    for t in tabs:
        element = right_young_capelli(s, t)
        row = []
        for u in tabs:
            result = act_on_poly(element, symmetrized_bitableau(u, v))
            coeff, rem = divmod(result.terms.get(key, 0), base)
            if rem or result != target * coeff:
                return matrix, f"[{s}|#{t}] on ({u}|#{v}) = {result} is not a multiple of {target}"
            row.append(coeff)
        matrix.append(row)
    return matrix, None


def action_suite(n: int, max_degree: int) -> SuiteResult:
    """Vanishing on lower degrees and other shapes; nonsingular same-shape action."""
    tally = _Tally("action")
    shapes = list(shapes_up_to(max_degree, n))
    sym = {
        shape: {(u, v): symmetrized_bitableau(u, v) for u, v in standard_pairs(shape, n)}
        for shape in shapes
    }
    for shape in shapes:
        for s, t in standard_pairs(shape, n):
            element = right_young_capelli(s, t)
            for other in shapes:
                if sum(other) > sum(shape) or other == shape:
                    continue
                for (u, v), p in sym[other].items():
                    result = act_on_poly(element, p)
                    tally.check(
                        not result,
                        lambda: f"[{s}|#{t}] on ({u}|#{v}) = {result}, expected 0",
                    )
        tabs = enumerate_standard(shape, n)
        for s in tabs:
            for v in tabs:
                matrix, problem = action_matrix(shape, s, v, n)
                if not tally.check(problem is None, lambda: problem):
                    continue
                det = integer_det(matrix)
                tally.check(det != 0, lambda: f"shape {shape} S=[{s}] V=[{v}]: singular {matrix}")
    return tally.result()


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "roundtrip": roundtrip_suite,
    "centrality": centrality_suite,
    "equivariance": equivariance_suite,
    "oracle": oracle_suite,
    "bases": bases_suite,
    "signs": signs_suite,
    "action": action_suite,
}


def run_suites(names: list[str], n: int, max_degree: int) -> list[SuiteResult]:
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name](n, max_degree) for name in names]
