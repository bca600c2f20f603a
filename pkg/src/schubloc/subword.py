"""
Subword complexes ``Delta(Q, w)`` on the positions ``1..|Q|`` of a reduced word.

A set ``F`` of positions is a facet iff the letters of ``Q`` outside ``F``
(read in order) form a reduced word for ``w``.  Faces are frozensets of
1-based positions.  The void complex (no faces at all, when ``w`` is not
below ``v = prod Q``) is a legal value and is different from ``{emptyset}``.

>>> W = WeylGroup("A2")
>>> D = build_complex(W, (1, 2, 1), W.from_word((1,)))
>>> sorted(sorted(F) for F in D.facets)
[[1, 2], [2, 3]]
>>> sorted(sorted(F) for F in D.interior_faces_demazure())
[[1, 2], [2], [2, 3]]
>>> D.euler_characteristic()
1
"""
from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .polynomial import HilbertSeries, QPolynomial
from .weyl import NotReducedError, WeylElement, WeylGroup, Word, format_word

__all__ = [
    "Face",
    "SubwordComplex",
    "build_complex",
    "reduced_subwords",
    "k_polynomial_of_faces",
    "VertexDecomposition",
    "verify_vertex_decomposition",
]

Face = frozenset


def _sorted_faces(faces: Iterable[frozenset]) -> list[list[int]]:
    return sorted(sorted(F) for F in faces)


def reduced_subwords(W: WeylGroup, Q: Word, w: WeylElement) -> list[tuple[int, ...]]:
    """Position sets ``S`` (ascending tuples) such that ``Q|_S`` is a reduced word for ``w``.

    Depth-first over positions, keeping only letters that raise the length
    and pruning when too few positions remain.
    """
    target = w.length
    n = len(Q)
    out = []

    def walk(pos: int, u: WeylElement, kept: tuple[int, ...]):
        need = target - len(kept)
        if need == 0:
            if u == w:
                out.append(kept)
            return
        if n - pos < need:
            return
        i = Q[pos]
        if u.goes_up(i):
            walk(pos + 1, u.right_mult(i), kept + (pos + 1,))
        walk(pos + 1, u, kept)

    walk(0, W.identity, ())
    return sorted(out)


@dataclass(frozen=True)
class SubwordComplex:
    group: WeylGroup = field(compare=False, repr=False)
    Q: Word
    w: WeylElement
    facets: frozenset[frozenset[int]]

    @property
    def n(self) -> int:
        return len(self.Q)

    @cached_property
    def v(self) -> WeylElement:
        return self.group.from_word(self.Q)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def faces(self) -> frozenset[frozenset[int]]:
        """Downward closure of the facets."""
        out = set()
        for F in self.facets:
            items = sorted(F)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return frozenset(out)

    def all_faces(self) -> frozenset[frozenset[int]]:
        return self.faces

    @property
    def facet_size(self) -> int | None:
        return self.n - self.w.length if self.facets else None

    def _check_positions(self, F: Iterable[int]) -> frozenset[int]:
        F = frozenset(F)
        bad = [p for p in F if not 1 <= p <= self.n]
        if bad:
            raise IndexError(f"positions {sorted(bad)} out of range 1..{self.n}")
        return F

    def complement_word(self, F: Iterable[int]) -> Word:
        F = self._check_positions(F)
        return tuple(q for p, q in enumerate(self.Q, 1) if p not in F)

    def demazure_of_complement(self, F: Iterable[int]) -> WeylElement:
        return self.group.demazure_product(self.complement_word(F))

    def is_face(self, F: Iterable[int]) -> bool:
        """Face test via the Demazure product of the complement being ``>= w``."""
        return self.group.bruhat_leq(self.w, self.demazure_of_complement(F))

    def interior_faces_demazure(self) -> frozenset[frozenset[int]]:
        return self._interior

    @cached_property
    def _interior(self) -> frozenset[frozenset[int]]:
        return frozenset(F for F in self.faces if self.demazure_of_complement(F) == self.w)

    # -- topology --------------------------------------------------------------

    @cached_property
    def ridge_incidence(self) -> dict[frozenset[int], int]:
        """Number of facets containing each ridge (codimension-one face)."""
        counts: Counter = Counter()
        for F in self.facets:
            for p in F:
                counts[F - {p}] += 1
        return dict(counts)

    def ridges(self) -> frozenset[frozenset[int]]:
        return frozenset(self.ridge_incidence)

    def boundary_ridges(self) -> frozenset[frozenset[int]]:
        return frozenset(R for R, c in self.ridge_incidence.items() if c == 1)

    def boundary_faces(self) -> frozenset[frozenset[int]]:
        """Faces lying in some boundary ridge; a subcomplex."""
        out = set()
        for R in self.boundary_ridges():
            items = sorted(R)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return frozenset(out)

    def interior_faces_topological(self) -> frozenset[frozenset[int]]:
        return self.faces - self.boundary_faces()

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic (the empty face is not counted)."""
        return sum((-1) ** (len(F) - 1) for F in self.faces if F)

    # -- vertex decomposition ----------------------------------------------------

    def _check_vertex(self, p: int) -> None:
        if not 1 <= p <= self.n:
            raise IndexError(f"vertex {p} out of range 1..{self.n}")

    def deletion(self, p: int) -> frozenset[frozenset[int]]:
        self._check_vertex(p)
        return frozenset(F for F in self.faces if p not in F)

    def star(self, p: int) -> frozenset[frozenset[int]]:
        self._check_vertex(p)
        return frozenset(F for F in self.faces if F | {p} in self.faces)

    def link(self, p: int) -> frozenset[frozenset[int]]:
        return frozenset(F for F in self.star(p) if p not in F)

    def is_cone_point(self, p: int) -> bool:
        self._check_vertex(p)
        return bool(self.facets) and all(p in F for F in self.facets)

    # -- K-polynomials -------------------------------------------------------------

    def k_polynomial(self) -> QPolynomial:
        return k_polynomial_of_faces(self.faces, self.n)

    def interior_sign(self, F: frozenset[int]) -> int:
        return -1 if (self.n - len(F) - self.w.length) % 2 else 1

    def k_polynomial_interior(self) -> QPolynomial:
        """Alternating sum over interior faces of ``prod_{j not in F} (1 - q_j)``."""
        out = QPolynomial.zero(self.n)
        for F in self.interior_faces_demazure():
            comp = [j for j in range(1, self.n + 1) if j not in F]
            out = out + QPolynomial.one_minus_product(self.n, comp) * self.interior_sign(F)
        return out

    def hilbert_series(self) -> HilbertSeries:
        """Sum of the open faces ``prod_{j in F} q_j/(1-q_j)``, summed directly."""
        total = HilbertSeries.zero(self.n)
        for F in sorted(self.faces, key=sorted):
            total = total + HilbertSeries.open_face(self.n, F)
        return total

    def hilbert_series_interior(self) -> HilbertSeries:
        """Alternating sum of closed interior faces ``prod_{j in F} 1/(1-q_j)``."""
        total = HilbertSeries.zero(self.n)
        for F in sorted(self.interior_faces_demazure(), key=sorted):
            total = total + HilbertSeries.closed_face(self.n, F, self.interior_sign(F))
        return total

    # -- export ----------------------------------------------------------------

    def to_json(self) -> dict:
        W = self.group
        return {
            "Q": list(self.Q),
            "w_word": list(W.canonical_reduced_word(self.w)),
            "facets": _sorted_faces(self.facets),
            "interior": _sorted_faces(self.interior_faces_demazure()),
        }


def build_complex(W: WeylGroup, Q: Iterable[int], w: WeylElement) -> SubwordComplex:
    Q = W.check_word(Q)
    if not W.is_reduced(Q):
        raise NotReducedError(f"word {format_word(Q)} is not reduced in {W.cartan_type}")
    n = len(Q)
    everything = frozenset(range(1, n + 1))
    facets = frozenset(everything - frozenset(S) for S in reduced_subwords(W, Q, w))
    return SubwordComplex(W, Q, w, facets)


def k_polynomial_of_faces(faces: Iterable[Iterable[int]], n: int) -> QPolynomial:
    """``sum_F prod_{j in F} q_j prod_{j not in F} (1 - q_j)``, expanded over bitmasks."""
    acc: dict[int, int] = defaultdict(int)
    full = (1 << n) - 1
    for F in faces:
        fm = 0
        for p in F:
            fm |= 1 << (p - 1)
        comp = full & ~fm
        sub = comp
        while True:
            acc[fm | sub] += -1 if bin(sub).count("1") % 2 else 1
            if not sub:
                break
            sub = (sub - 1) & comp
    return QPolynomial(n, {tuple((m >> k) & 1 for k in range(n)): c for m, c in acc.items() if c})


@dataclass
class VertexDecomposition:
    case: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_vertex_decomposition(W: WeylGroup, Q: Iterable[int], w: WeylElement) -> VertexDecomposition:
    """Decompose ``Delta(Q, w)`` at its last vertex and check the three-case rule.

    With ``a`` the last letter of ``Q`` and ``Q'`` the rest:
    (1) ``w r_a > w``: the last vertex is a cone point and link = del = ``Delta(Q', w)``;
    (2) ``w r_a < w``, ``w`` not ``<= v r_a``: no face uses it and
    ``Delta = Delta(Q', w r_a)``; (3) otherwise link = ``Delta(Q', w)`` and
    del = ``Delta(Q', w r_a)``.
    """
    D = build_complex(W, Q, w)
    if not D.Q:
        raise ValueError("vertex decomposition needs v != 1 (nonempty Q)")
    if not W.bruhat_leq(w, D.v):
        raise ValueError("vertex decomposition needs w <= v")
    p = D.n
    alpha = D.Q[-1]
    Qp = D.Q[:-1]
    vr = D.v.right_mult(alpha)
    wr = w.right_mult(alpha)
    dele, star, link = D.deletion(p), D.star(p), D.link(p)
    checks = {
        "union": D.faces == dele | star,
        "intersection": dele & star == link,
    }
    if w.goes_up(alpha):
        case = 1
        same_w = build_complex(W, Qp, w).faces
        checks["cone_point"] = D.is_cone_point(p)
        checks["link_eq_del"] = link == dele
        checks["del_eq_Qprime_w"] = dele == same_w
    elif not W.bruhat_leq(w, vr):
        case = 2
        checks["vertex_unused"] = all(p not in F for F in D.faces)
        checks["complex_eq_Qprime_wr"] = D.faces == build_complex(W, Qp, wr).faces
    else:
        case = 3
        checks["link_eq_Qprime_w"] = link == build_complex(W, Qp, w).faces
        checks["del_eq_Qprime_wr"] = dele == build_complex(W, Qp, wr).faces
    return VertexDecomposition(case, checks)
