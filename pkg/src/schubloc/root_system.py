"""
Cartan data for the finite crystallographic types and the action of simple
reflections on the root lattice.

Vectors are integer tuples in the simple-root basis, so ``alpha_i`` is the
``i``-th standard basis vector.  Indices of simple roots are 1-based
throughout the package, matching the way words are written.

>>> A2 = CartanType.parse("A2")
>>> cartan_matrix(A2)
((2, -1), (-1, 2))
>>> reflect_simple(A2, 1, (0, 1))
(1, 1)
>>> sorted(positive_roots(A2))
[(0, 1), (1, 0), (1, 1)]
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "InvalidCartanType",
    "CartanType",
    "RootVector",
    "cartan_matrix",
    "reflect_simple",
    "positive_roots",
    "is_positive",
    "is_negative",
    "simple_root",
    "group_order",
]

RootVector = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise InvalidCartanType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise InvalidCartanType(f"rank {self.rank} out of range for type {self.family}")

    @classmethod
    def parse(cls, text: str | CartanType) -> CartanType:
        if isinstance(text, CartanType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if m is None:
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _dynkin_data(ct: CartanType) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Squared root lengths and off-diagonal inner products (0-based nodes).

    Scaled so every entry is an integer.  Non-simply-laced orientation:
    B_n has alpha_n short, C_n has alpha_n long, F4 has alpha_1, alpha_2
    long, G2 has alpha_1 long.
    """
    n = ct.rank
    chain = {(i, i + 1): -1 for i in range(n - 1)}
    if ct.family == "A":
        return [2] * n, chain
    if ct.family == "B":
        return [2] * (n - 1) + [1], chain
    if ct.family == "C":
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        bonds[(n - 2, n - 1)] = -2
        return [2] * (n - 1) + [4], bonds
    if ct.family == "D":
        bonds = {(i, i + 1): -1 for i in range(n - 2)}
        bonds[(n - 3, n - 1)] = -1
        return [2] * n, bonds
    if ct.family == "E":
        # Bourbaki numbering: 1-3-4-5-...-n with 2 hanging off 4
        bonds = {(0, 2): -1, (1, 3): -1}
        bonds.update({(i, i + 1): -1 for i in range(2, n - 1)})
        return [2] * n, bonds
    if ct.family == "F":
        return [4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    # G2
    return [6, 2], {(0, 1): -3}


@lru_cache(maxsize=None)
def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """``A[i][j] = <alpha_j, alpha_i^vee>``, so ``r_i(alpha_j) = alpha_j - A[i][j] alpha_i``.

    Returned 0-based as nested tuples.
    """
    lengths, bonds = _dynkin_data(ct)
    n = ct.rank
    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for (i, j), b in bonds.items():
        form[i][j] = form[j][i] = b
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            a = Fraction(2 * form[i][j], lengths[i])
            assert a.denominator == 1
            row.append(int(a))
        rows.append(tuple(row))
    return tuple(rows)


def simple_root(ct: CartanType, i: int) -> RootVector:
    _check_index(ct, i)
    return tuple(int(k == i - 1) for k in range(ct.rank))


def _check_index(ct: CartanType, i: int) -> None:
    if not 1 <= i <= ct.rank:
        raise IndexError(f"simple index {i} out of range 1..{ct.rank} for {ct}")


def reflect_simple(ct: CartanType, i: int, x: RootVector) -> RootVector:
    _check_index(ct, i)
    row = cartan_matrix(ct)[i - 1]
    pairing = sum(a * c for a, c in zip(row, x))
    if pairing == 0:
        return tuple(x)
    out = list(x)
    out[i - 1] -= pairing
    return tuple(out)


def is_positive(x: RootVector) -> bool:
    return any(x) and all(c >= 0 for c in x)


def is_negative(x: RootVector) -> bool:
    return any(x) and all(c <= 0 for c in x)


@lru_cache(maxsize=None)
def positive_roots(ct: CartanType) -> frozenset[RootVector]:
    """Closure of the simple roots under all simple reflections, positive part."""
    frontier = [simple_root(ct, i) for i in range(1, ct.rank + 1)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, ct.rank + 1):
                y = reflect_simple(ct, i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(x for x in seen if is_positive(x))


_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def _degrees(ct: CartanType) -> tuple[int, ...]:
    n = ct.rank
    if ct.family == "A":
        return tuple(range(2, n + 2))
    if ct.family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if ct.family == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    return _DEGREES[str(ct)]


def group_order(ct: CartanType) -> int:
    """Order of the Weyl group as the product of its fundamental degrees."""
    return math.prod(_degrees(ct))
