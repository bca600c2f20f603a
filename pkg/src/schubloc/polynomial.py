"""
Exact sparse polynomials over the integers.

``LaurentPolynomial`` lives in ``Z[T*]`` with exponents in root-lattice
coordinates (so ``e^lambda`` is a monomial).  ``QPolynomial`` lives in
``Z[q_1, ..., q_k]``, the face variables of a subword complex, and
``CohomologyPolynomial`` in ``Z[alpha_1, ..., alpha_r]``.  All three share
one implementation; they differ in their JSON key and text rendering.

>>> a1 = LaurentPolynomial.exp_of((1, 0))
>>> a2 = LaurentPolynomial.exp_of((0, 1))
>>> (a1 * a2).to_json()
[{'exp': [1, 1], 'coeff': 1}]
>>> print(LaurentPolynomial.one(2) - LaurentPolynomial.exp_of((-1, -1)))
1 - e^{-a1-a2}
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import ClassVar

__all__ = [
    "LaurentPolynomial",
    "QPolynomial",
    "CohomologyPolynomial",
    "HilbertSeries",
    "specialize",
]

Exponent = tuple[int, ...]


class _SparsePolynomial:
    json_key: ClassVar[str] = "exp"
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: dict[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        self.nvars = nvars
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        clean: dict[Exponent, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1):
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]):
        # terms already canonical: right lengths, no zeros
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- ring structure --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self).constant(self.nvars, other)
        if type(other) is type(self):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return type(self)._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self).zero(self.nvars)
            return type(self)._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = type(self).one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(self.nvars, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms())

    def terms(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def evaluate_at_one(self) -> int:
        """Image under every variable (or character) ``-> 1``."""
        return sum(self._terms.values())

    def map_exponents(self, f):
        """Apply a linear map on exponents; for torus characters this is the Weyl action."""
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            e2 = tuple(f(e))
            out[e2] = out.get(e2, 0) + c
        return type(self)(self.nvars, out)

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{self.json_key: list(e), "coeff": c} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict], nvars: int | None = None):
        if nvars is None:
            if not data:
                raise ValueError("cannot infer the variable count of an empty polynomial")
            nvars = len(data[0][cls.json_key])
        return cls(nvars, [(tuple(t[cls.json_key]), int(t["coeff"])) for t in data])

    # -- text ----------------------------------------------------------------

    def _format_monomial(self, e: Exponent) -> str:
        raise NotImplementedError

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms()):
            mono = self._format_monomial(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


def _linear_text(e: Exponent, var: str) -> str:
    out = ""
    for k, c in enumerate(e, 1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        out += f"{sign}{mag}{var}{k}"
    return out


class LaurentPolynomial(_SparsePolynomial):
    """Element of ``Z[T*]``; the monomial with exponent ``lambda`` is ``e^lambda``."""

    __slots__ = ()
    json_key = "exp"

    @classmethod
    def exp_of(cls, weight: Sequence[int]):
        return cls.monomial(weight)

    def _format_monomial(self, e):
        if not any(e):
            return ""
        return "e^{" + _linear_text(e, "a") + "}"


class QPolynomial(_SparsePolynomial):
    """Polynomial in the face variables ``q_1 .. q_k`` (1-based in text)."""

    __slots__ = ()
    json_key = "qexp"

    @classmethod
    def variable(cls, nvars: int, j: int):
        """``q_j`` with ``1 <= j <= nvars``."""
        if not 1 <= j <= nvars:
            raise IndexError(f"variable q{j} out of range 1..{nvars}")
        return cls.monomial(tuple(int(k == j - 1) for k in range(nvars)))

    @classmethod
    def face_monomial(cls, nvars: int, face: Iterable[int]):
        face = set(face)
        return cls._raw(nvars, {tuple(int(k + 1 in face) for k in range(nvars)): 1})

    @classmethod
    def one_minus_product(cls, nvars: int, indices: Iterable[int]):
        """Expanded ``prod_{j in indices} (1 - q_j)``."""
        idx = sorted(set(indices))
        out = {}
        for r in range(len(idx) + 1):
            sign = -1 if r % 2 else 1
            for sub in combinations(idx, r):
                s = set(sub)
                out[tuple(int(k + 1 in s) for k in range(nvars))] = sign
        return cls._raw(nvars, out)

    def _format_monomial(self, e):
        parts = []
        for k, c in enumerate(e, 1):
            if c == 1:
                parts.append(f"q{k}")
            elif c:
                parts.append(f"q{k}^{c}")
        return "*".join(parts)


class CohomologyPolynomial(_SparsePolynomial):
    """Polynomial in the simple-root symbols ``alpha_1 .. alpha_r``."""

    __slots__ = ()
    json_key = "exp"

    @classmethod
    def linear_form(cls, root: Sequence[int]):
        """``sum_i root[i] * alpha_i`` as a degree-one polynomial."""
        n = len(root)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(root) if c})

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def _format_monomial(self, e):
        parts = []
        for k, c in enumerate(e, 1):
            if c == 1:
                parts.append(f"a{k}")
            elif c:
                parts.append(f"a{k}^{c}")
        return "*".join(parts)


def specialize(p: QPolynomial, images: Sequence[_SparsePolynomial]):
    """Ring homomorphism ``q_j -> images[j-1]``.

    The target ring is that of ``images``.  Monomial images (the usual
    ``q_j -> e^{-beta_j}``) take a fast path that just adds exponents.
    """
    if len(images) != p.nvars:
        raise ValueError(f"{len(images)} images for {p.nvars} variables")
    if not images:
        raise ValueError("cannot infer the target ring from zero images")
    target = type(images[0])
    nv = images[0].nvars
    if all(len(im) == 1 for im in images):
        mono = [next(iter(im._terms.items())) for im in images]
        out: dict[Exponent, int] = {}
        for e, c in p._terms.items():
            exp = [0] * nv
            coeff = c
            for (me, mc), k in zip(mono, e):
                if k:
                    coeff *= mc**k
                    for t in range(nv):
                        exp[t] += k * me[t]
            key = tuple(exp)
            out[key] = out.get(key, 0) + coeff
        return target(nv, out)
    out_poly = target.zero(nv)
    for e, c in p._terms.items():
        term = target.constant(nv, c)
        for im, k in zip(images, e):
            if k:
                term = term * im**k
        out_poly = out_poly + term
    return out_poly


class HilbertSeries:
    """``numerator / prod_{j in denominator} (1 - q_j)``, a multiset of factors.

    Equality is tested after clearing denominators.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: QPolynomial, denominator: Iterable[int] = ()):
        self.numerator = numerator
        self.denominator = tuple(sorted(denominator))

    @property
    def nvars(self):
        return self.numerator.nvars

    @classmethod
    def zero(cls, nvars: int):
        return cls(QPolynomial.zero(nvars))

    @classmethod
    def open_face(cls, nvars: int, face: Iterable[int]):
        """``prod_{j in face} q_j / (1 - q_j)``."""
        face = sorted(face)
        return cls(QPolynomial.face_monomial(nvars, face), face)

    @classmethod
    def closed_face(cls, nvars: int, face: Iterable[int], sign: int = 1):
        """``sign * prod_{j in face} 1 / (1 - q_j)``."""
        return cls(QPolynomial.constant(nvars, sign), sorted(face))

    def _lift(self, denom: tuple[int, ...]) -> QPolynomial:
        # multiply the numerator by the factors of denom missing from ours
        mine = list(self.denominator)
        missing = []
        for j in denom:
            if j in mine:
                mine.remove(j)
            else:
                missing.append(j)
        out = self.numerator
        for j in missing:
            out = out * QPolynomial.one_minus_product(self.nvars, [j])
        return out

    @staticmethod
    def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        out = []
        for j in sorted(set(a) | set(b)):
            out.extend([j] * max(a.count(j), b.count(j)))
        return tuple(out)

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        d = self._lcm(self.denominator, other.denominator)
        return HilbertSeries(self._lift(d) + other._lift(d), d)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        d = self._lcm(self.denominator, other.denominator)
        return self._lift(d) == other._lift(d)

    __hash__ = None

    def cleared(self) -> QPolynomial:
        """Numerator over the full denominator ``prod_{j=1..k} (1 - q_j)``.

        Only defined when no factor repeats.
        """
        full = tuple(range(1, self.nvars + 1))
        if len(set(self.denominator)) != len(self.denominator):
            raise ValueError("repeated denominator factor")
        return self._lift(full)

    def __repr__(self):
        return f"HilbertSeries({self.numerator}, denominator={list(self.denominator)})"
