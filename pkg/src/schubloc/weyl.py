"""
Weyl group elements as integer matrices on the root lattice.

An element is stored as the tuple of its columns: column ``j`` is the image
of ``alpha_j``.  Elements are hashable and compare equal iff their matrices
agree.  All multiplication conventions are right-handed: ``from_word``
multiplies left to right, descents are right descents ``v r_i < v``, and the
Demazure product folds letters in from the right.

>>> W = WeylGroup("A2")
>>> w0 = W.from_word((1, 2, 1))
>>> w0 == W.from_word((2, 1, 2))
True
>>> w0.length, sorted(w0.descents())
(3, [1, 2])
>>> W.canonical_reduced_word(w0)
(1, 2, 1)
>>> W.demazure_product((1, 2, 1, 2)) == w0
True
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .root_system import (
    CartanType,
    RootVector,
    cartan_matrix,
    group_order,
    is_negative,
    is_positive,
    positive_roots,
    reflect_simple,
)

__all__ = [
    "Word",
    "NotReducedError",
    "GroupTooLarge",
    "WeylElement",
    "WeylGroup",
    "parse_word",
    "format_word",
    "DEFAULT_MAX_SIZE",
]

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_MAX_SIZE = 50_000


class NotReducedError(ValueError):
    pass


class GroupTooLarge(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse ``"1,2,1"``; the empty string (or ``"e"``) is the identity.

    >>> parse_word("1,2,1"), parse_word("")
    ((1, 2, 1), ())
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad word {text!r}: expected comma-separated indices") from None


def format_word(q: Iterable[int]) -> str:
    return ",".join(str(i) for i in q)


class WeylElement:
    __slots__ = ("group", "matrix", "_hash", "_up")

    def __init__(self, group: WeylGroup, matrix: Matrix):
        self.group = group
        self.matrix = matrix
        self._hash = hash(matrix)
        self._up = None

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix and self.group.cartan_type == other.group.cartan_type

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElement({self.group.cartan_type}, [{format_word(self.group.canonical_reduced_word(self))}])"

    def __mul__(self, other: WeylElement) -> WeylElement:
        cols = tuple(self.act(c) for c in other.matrix)
        return WeylElement(self.group, cols)

    def act(self, x: Sequence[int]) -> RootVector:
        """Image of a root-lattice vector."""
        n = len(x)
        out = [0] * n
        for c, xc in zip(self.matrix, x):
            if xc:
                for r in range(n):
                    out[r] += xc * c[r]
        return tuple(out)

    def is_identity(self) -> bool:
        return self.matrix == self.group.identity.matrix

    def right_mult(self, i: int) -> WeylElement:
        """``self * r_i``; column j becomes ``col_j - A[i][j] col_i``."""
        cache = self.group._right
        key = (self.matrix, i)
        hit = cache.get(key)
        if hit is not None:
            return hit
        row = self.group.cartan[i - 1]
        ci = self.matrix[i - 1]
        cols = []
        for j, (a, cj) in enumerate(zip(row, self.matrix)):
            if j == i - 1:
                cols.append(tuple(-t for t in ci))
            elif a:
                cols.append(tuple(s - a * t for s, t in zip(cj, ci)))
            else:
                cols.append(cj)
        out = WeylElement(self.group, tuple(cols))
        cache[key] = out
        return out

    def left_mult(self, i: int) -> WeylElement:
        """``r_i * self``."""
        ct = self.group.cartan_type
        return WeylElement(self.group, tuple(reflect_simple(ct, i, c) for c in self.matrix))

    def goes_up(self, i: int) -> bool:
        """Whether ``self * r_i > self``, i.e. ``self . alpha_i`` is positive."""
        if self._up is None:
            self._up = tuple(is_positive(c) for c in self.matrix)
        return self._up[i - 1]

    def descents(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.matrix, 1) if is_negative(c))

    def left_descents(self) -> frozenset[int]:
        # r_i w < w iff w^{-1} alpha_i < 0 iff -alpha_i = w(beta) for some beta > 0
        n = self.group.rank
        found = set()
        for beta in self.group.positive_roots:
            y = self.act(beta)
            if sum(y) == -1 and is_negative(y):
                found.add(next(k for k in range(n) if y[k]) + 1)
        return frozenset(found)

    @property
    def length(self) -> int:
        return self.group.length(self)

    def inverse(self) -> WeylElement:
        return self.group.from_word(reversed(self.group.canonical_reduced_word(self)))

    def bruhat_le(self, other: WeylElement) -> bool:
        return self.group.bruhat_leq(self, other)


class WeylGroup:
    """A finite Weyl group with per-group memo tables.

    ``max_size`` guards :meth:`all_elements` only; single elements and
    words work in any finite type.
    """

    def __init__(self, cartan_type: CartanType | str, max_size: int = DEFAULT_MAX_SIZE):
        self.cartan_type = CartanType.parse(cartan_type)
        self.rank = self.cartan_type.rank
        self.cartan = cartan_matrix(self.cartan_type)
        self.max_size = max_size
        roots = sorted(positive_roots(self.cartan_type))
        self.positive_roots: tuple[RootVector, ...] = tuple(roots)
        n = self.rank
        self.identity = WeylElement(self, tuple(tuple(int(r == c) for r in range(n)) for c in range(n)))
        self._length: dict[Matrix, int] = {}
        self._bruhat: dict[tuple[Matrix, Matrix], bool] = {}
        self._canonical: dict[Matrix, Word] = {}
        self._right: dict[tuple[Matrix, int], WeylElement] = {}
        self._elements: list[WeylElement] | None = None
        # restriction memo tables live here so they are cleared with the group
        self.memo: dict[str, dict] = {}

    def __repr__(self):
        return f"WeylGroup({str(self.cartan_type)!r})"

    def __getstate__(self):
        return {"cartan_type": self.cartan_type, "max_size": self.max_size}

    def __setstate__(self, state):
        self.__init__(state["cartan_type"], state["max_size"])

    # -- words ---------------------------------------------------------------

    def check_word(self, q: Iterable[int]) -> Word:
        q = tuple(q)
        for i in q:
            if not isinstance(i, int) or not 1 <= i <= self.rank:
                raise IndexError(f"letter {i!r} out of range 1..{self.rank} for {self.cartan_type}")
        return q

    def simple_reflection(self, i: int) -> WeylElement:
        self.check_word((i,))
        return self.identity.right_mult(i)

    def from_word(self, q: Iterable[int]) -> WeylElement:
        u = self.identity
        for i in self.check_word(q):
            u = u.right_mult(i)
        return u

    def length(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        n = self._length.get(w.matrix)
        if n is None:
            n = sum(1 for beta in self.positive_roots if is_negative(w.act(beta)))
            self._length[w.matrix] = n
        return n

    def is_reduced(self, q: Iterable[int]) -> bool:
        u = self.identity
        for i in self.check_word(q):
            if not u.goes_up(i):
                return False
            u = u.right_mult(i)
        return True

    def demazure_product(self, q: Iterable[int]) -> WeylElement:
        u = self.identity
        for i in self.check_word(q):
            if u.goes_up(i):
                u = u.right_mult(i)
        return u

    def beta_sequence(self, q: Iterable[int]) -> list[RootVector]:
        """``beta_j = (r_{q_1} ... r_{q_{j-1}}) . alpha_{q_j}`` for a reduced word."""
        q = self.check_word(q)
        out = []
        u = self.identity
        for i in q:
            beta = u.matrix[i - 1]
            if not is_positive(beta):
                raise NotReducedError(f"word {format_word(q)} is not reduced in {self.cartan_type}")
            out.append(beta)
            u = u.right_mult(i)
        return out

    def inversion_set(self, v: WeylElement) -> frozenset[RootVector]:
        """``{gamma > 0 : v^{-1} gamma < 0}``, computed from images of positive roots."""
        out = set()
        for beta in self.positive_roots:
            y = v.act(beta)
            if is_negative(y):
                out.add(tuple(-t for t in y))
        return frozenset(out)

    # -- order -----------------------------------------------------------------

    def bruhat_leq(self, w: WeylElement, v: WeylElement) -> bool:
        """Bruhat comparison ``w <= v`` by the lifting property.

        Pick the smallest descent ``i`` of ``v``; then ``w <= v`` iff
        ``min(w, w r_i) <= v r_i``.
        """
        key = (w.matrix, v.matrix)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        trail = []
        while True:
            k = (w.matrix, v.matrix)
            hit = self._bruhat.get(k)
            if hit is not None:
                result = hit
                break
            trail.append(k)
            if self.length(w) > self.length(v):
                result = False
                break
            if v.is_identity():
                result = w.is_identity()
                break
            i = min(v.descents())
            if not w.goes_up(i):
                w = w.right_mult(i)
            v = v.right_mult(i)
        for k in trail:
            self._bruhat[k] = result
        return result

    def canonical_reduced_word(self, v: WeylElement) -> Word:
        """Lexicographically least reduced word: strip the smallest left descent."""
        word = self._canonical.get(v.matrix)
        if word is not None:
            return word
        out = []
        u = v
        while not u.is_identity():
            i = min(u.left_descents())
            out.append(i)
            u = u.left_mult(i)
        word = tuple(out)
        self._canonical[v.matrix] = word
        return word

    def iter_reduced_words(self, v: WeylElement) -> Iterator[Word]:
        """All reduced words of ``v`` in lexicographic order."""
        if v.is_identity():
            yield ()
            return
        for i in sorted(v.left_descents()):
            for tail in self.iter_reduced_words(v.left_mult(i)):
                yield (i,) + tail

    def all_reduced_words(self, v: WeylElement, cap: int | None = None) -> list[Word]:
        out = []
        for q in self.iter_reduced_words(v):
            if cap is not None and len(out) >= cap:
                break
            out.append(q)
        return out

    def order(self) -> int:
        return group_order(self.cartan_type)

    def all_elements(self) -> list[WeylElement]:
        """Every element once, ordered by length then canonical reduced word."""
        if self._elements is not None:
            return list(self._elements)
        if self.order() > self.max_size:
            raise GroupTooLarge(
                f"|W({self.cartan_type})| = {self.order()} exceeds the cap {self.max_size}"
            )
        layers = [[self.identity]]
        seen = {self.identity}
        while layers[-1]:
            nxt = []
            for u in layers[-1]:
                for i in range(1, self.rank + 1):
                    if u.goes_up(i):
                        x = u.right_mult(i)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
            nxt.sort(key=self.canonical_reduced_word)
            layers.append(nxt)
        self._elements = [u for layer in layers for u in layer]
        return list(self._elements)

    def long_element(self) -> WeylElement:
        """The unique element with no ascents."""
        u = self.identity
        while True:
            up = [i for i in range(1, self.rank + 1) if u.goes_up(i)]
            if not up:
                return u
            u = u.right_mult(up[0])

    def interval(self, v: WeylElement) -> list[WeylElement]:
        return [w for w in self.all_elements() if self.bruhat_leq(w, v)]
