"""
Restrictions ``S_w|_v`` of equivariant Schubert classes to torus-fixed points.

Three K-theoretic routes are provided and are expected to agree exactly:

* :func:`restrict_kk`, the recursion in ``v`` along a right descent;
* :func:`restrict_subword`, the K-polynomial of ``Delta(Q, w)`` under
  ``q_j -> e^{-beta_j}``;
* :func:`restrict_graham_willems`, the signed sum over interior faces.

Characters follow the convention under which ``S_{s2}|_{s1 s2} = 1 -
e^{-(a1+a2)}`` in type A2.  The cohomological limit is given both as a sum
over facets (:func:`billey_restriction`) and as a recursion
(:func:`restrict_cohomology_recursion`).
"""
from __future__ import annotations

from collections.abc import Iterable

from .polynomial import CohomologyPolynomial, LaurentPolynomial, specialize
from .root_system import RootVector, is_negative, is_positive
from .subword import SubwordComplex, build_complex, k_polynomial_of_faces
from .weyl import NotReducedError, WeylElement, WeylGroup, Word, format_word

__all__ = [
    "DESCENT_POLICIES",
    "restrict_kk",
    "restrict_subword",
    "restrict_graham_willems",
    "billey_restriction",
    "restrict_cohomology_recursion",
    "boundary_ideal_class",
    "boundary_class_from_k",
    "cell_weights",
    "one_minus_exp",
    "restriction_json",
]

DESCENT_POLICIES = ("smallest", "largest")


def _pick_descent(v: WeylElement, policy: str) -> int:
    if policy == "smallest":
        return min(v.descents())
    if policy == "largest":
        return max(v.descents())
    raise ValueError(f"unknown descent policy {policy!r}; expected one of {DESCENT_POLICIES}")


def one_minus_exp(weight: Iterable[int]) -> LaurentPolynomial:
    """``1 - e^{weight}``."""
    weight = tuple(weight)
    n = len(weight)
    return LaurentPolynomial.one(n) - LaurentPolynomial.exp_of(weight)


def _neg(x: RootVector) -> RootVector:
    return tuple(-t for t in x)


def restrict_kk(W: WeylGroup, w: WeylElement, v: WeylElement, policy: str = "smallest") -> LaurentPolynomial:
    """``S_w|_v`` by recursion on ``v``; zero unless ``w <= v``. Memoized per group."""
    memo = W.memo.setdefault(f"kk:{policy}", {})
    return _kk(W, w, v, policy, memo)


def _kk(W, w, v, policy, memo):
    key = (w.matrix, v.matrix)
    hit = memo.get(key)
    if hit is not None:
        return hit
    n = W.rank
    if not W.bruhat_leq(w, v):
        result = LaurentPolynomial.zero(n)
    elif v.is_identity():
        result = LaurentPolynomial.one(n)
    else:
        i = _pick_descent(v, policy)
        vr = v.right_mult(i)
        factor = one_minus_exp(v.matrix[i - 1])  # 1 - e^{v . alpha}
        if w.goes_up(i):
            result = _kk(W, w, vr, policy, memo)
        else:
            wr = w.right_mult(i)
            lower = _kk(W, wr, vr, policy, memo)
            if not W.bruhat_leq(w, vr):
                result = factor * lower
            else:
                same = _kk(W, w, vr, policy, memo)
                result = same + factor * lower - factor * same
    memo[key] = result
    return result


def _complex_for(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> SubwordComplex:
    Q = W.check_word(Q)
    if not W.is_reduced(Q):
        raise NotReducedError(f"word {format_word(Q)} is not reduced in {W.cartan_type}")
    if W.from_word(Q) != v:
        raise ValueError(f"word {format_word(Q)} is not a word for v")
    return build_complex(W, Q, w)


def _face_images(W: WeylGroup, Q: Word) -> list[LaurentPolynomial]:
    # q_j -> e^{-beta_j}
    return [LaurentPolynomial.exp_of(_neg(b)) for b in W.beta_sequence(Q)]


def restrict_subword(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> LaurentPolynomial:
    D = _complex_for(W, w, v, Q)
    if D.is_void:
        return LaurentPolynomial.zero(W.rank)
    if not D.Q:
        return LaurentPolynomial.one(W.rank)
    return specialize(D.k_polynomial(), _face_images(W, D.Q))


def _signed_complement_sum(D: SubwordComplex, faces, beta: list[RootVector], rank: int) -> LaurentPolynomial:
    """``sum_F (-1)^{|Q\\F| - l(w)} prod_{j in Q\\F} (1 - e^{-beta_j})``."""
    factors = [one_minus_exp(_neg(b)) for b in beta]
    cache: dict[frozenset, LaurentPolynomial] = {frozenset(): LaurentPolynomial.one(rank)}

    def product(comp: frozenset) -> LaurentPolynomial:
        hit = cache.get(comp)
        if hit is None:
            j = max(comp)
            hit = product(comp - {j}) * factors[j - 1]
            cache[comp] = hit
        return hit

    everything = frozenset(range(1, D.n + 1))
    total = LaurentPolynomial.zero(rank)
    for F in sorted(faces, key=sorted):
        total = total + product(everything - F) * D.interior_sign(F)
    return total


def restrict_graham_willems(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> LaurentPolynomial:
    D = _complex_for(W, w, v, Q)
    if D.is_void:
        return LaurentPolynomial.zero(W.rank)
    beta = W.beta_sequence(D.Q)
    return _signed_complement_sum(D, D.interior_faces_demazure(), beta, W.rank)


def boundary_ideal_class(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> LaurentPolynomial:
    """The same signed sum as Graham/Willems, taken over all faces."""
    D = _complex_for(W, w, v, Q)
    if D.is_void:
        raise ValueError("boundary class needs w <= v")
    beta = W.beta_sequence(D.Q)
    return _signed_complement_sum(D, D.faces, beta, W.rank)


def boundary_class_from_k(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> LaurentPolynomial:
    """Specialized ``k(Delta) - k(boundary of Delta)``."""
    D = _complex_for(W, w, v, Q)
    if D.is_void:
        raise ValueError("boundary class needs w <= v")
    if not D.Q:
        return LaurentPolynomial.one(W.rank)
    boundary = D.faces - D.interior_faces_demazure()
    diff = D.k_polynomial() - k_polynomial_of_faces(boundary, D.n)
    return specialize(diff, _face_images(W, D.Q))


def billey_restriction(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Iterable[int]) -> CohomologyPolynomial:
    """``sum over facets F of prod_{j in Q\\F} beta_j``."""
    D = _complex_for(W, w, v, Q)
    beta = W.beta_sequence(D.Q)
    forms = [CohomologyPolynomial.linear_form(b) for b in beta]
    total = CohomologyPolynomial.zero(W.rank)
    for F in sorted(D.facets, key=sorted):
        term = CohomologyPolynomial.one(W.rank)
        for j in range(1, D.n + 1):
            if j not in F:
                term = term * forms[j - 1]
        total = total + term
    return total


def restrict_cohomology_recursion(W: WeylGroup, w: WeylElement, v: WeylElement, policy: str = "smallest") -> CohomologyPolynomial:
    """Recursion with multiplier ``-v.alpha`` in place of ``1 - e^{v.alpha}``.

    Case (3) loses its last term: it is of higher degree in the limit.
    """
    memo = W.memo.setdefault(f"coh:{policy}", {})
    return _coh(W, w, v, policy, memo)


def _coh(W, w, v, policy, memo):
    key = (w.matrix, v.matrix)
    hit = memo.get(key)
    if hit is not None:
        return hit
    n = W.rank
    if not W.bruhat_leq(w, v):
        result = CohomologyPolynomial.zero(n)
    elif v.is_identity():
        result = CohomologyPolynomial.one(n)
    else:
        i = _pick_descent(v, policy)
        vr = v.right_mult(i)
        if w.goes_up(i):
            result = _coh(W, w, vr, policy, memo)
        else:
            factor = CohomologyPolynomial.linear_form(_neg(v.matrix[i - 1]))
            result = factor * _coh(W, w.right_mult(i), vr, policy, memo)
            if W.bruhat_leq(w, vr):
                result = result + _coh(W, w, vr, policy, memo)
    memo[key] = result
    return result


def cell_weights(W: WeylGroup, v: WeylElement) -> tuple[list[RootVector], list[RootVector]]:
    """Weights of the cell ``N_- v B/B`` and the Hilbert-series conversion weights.

    Returns ``({b < 0 : v.b < 0}, {-v.b : b > 0, v.b > 0})`` as sorted lists;
    each has ``|positive roots| - l(v)`` entries.
    """
    cell = []
    conversion = []
    for beta in W.positive_roots:
        y = v.act(beta)
        if is_positive(y):
            # -beta < 0 and v.(-beta) = -y < 0
            cell.append(_neg(beta))
            conversion.append(_neg(y))
        else:
            assert is_negative(y)
    return sorted(cell), sorted(conversion)


def restriction_json(W: WeylGroup, w: WeylElement, v: WeylElement, Q: Word | None, method: str, value) -> dict:
    return {
        "type": str(W.cartan_type),
        "w_word": list(W.canonical_reduced_word(w)),
        "v_word": list(W.canonical_reduced_word(v)),
        "Q": list(Q) if Q is not None else None,
        "method": method,
        "value": value.to_json(),
    }
