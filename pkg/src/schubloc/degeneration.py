"""
The chain of pair sets ``C_0, ..., C_l`` interpolating between the datum
``(w, emptyset)`` and the reduced subwords of ``Q`` for ``w``.

``C_i`` holds the pairs ``(w', S)`` with ``S`` a set of positions in
``{i+1, ..., l}``, ``w' <= v_i`` (the product of the first ``i`` letters),
``l(w') + |S| = l(w)`` and ``w' * prod_S = w``, where ``prod_S`` multiplies
the letters at ``S`` in increasing position order.  Forgetting position
``i`` maps ``C_{i-1}`` onto ``C_i``, with fibers of size one or two.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations

from .restriction import restrict_kk, restrict_subword
from .subword import build_complex
from .weyl import NotReducedError, WeylElement, WeylGroup, Word, format_word

__all__ = [
    "ChainPair",
    "stage",
    "step_map",
    "fiber_trichotomy",
    "ChainReport",
    "verify_chain",
    "pair_sort_key",
]


@dataclass(frozen=True)
class ChainPair:
    wprime: WeylElement
    S: frozenset[int]

    def to_json(self) -> dict:
        W = self.wprime.group
        return {"wprime_word": list(W.canonical_reduced_word(self.wprime)), "S": sorted(self.S)}


def pair_sort_key(pair: ChainPair):
    return (pair.wprime.group.canonical_reduced_word(pair.wprime), sorted(pair.S))


def _setup(W: WeylGroup, Q: Iterable[int], w: WeylElement) -> tuple[Word, WeylElement]:
    Q = W.check_word(Q)
    if not W.is_reduced(Q):
        raise NotReducedError(f"word {format_word(Q)} is not reduced in {W.cartan_type}")
    v = W.from_word(Q)
    if not W.bruhat_leq(w, v):
        raise ValueError("the degeneration chain needs w <= v")
    return Q, v


def _check_stage_index(Q: Word, i: int, lo: int = 0) -> None:
    if not lo <= i <= len(Q):
        raise IndexError(f"stage {i} out of range {lo}..{len(Q)}")


def stage(W: WeylGroup, Q: Iterable[int], w: WeylElement, i: int) -> frozenset[ChainPair]:
    """Every pair satisfying the defining conditions of ``C_i``.

    Exhaustive over ``S``; ``w'`` is then forced to be ``w prod_S^{-1}``.
    """
    Q, _ = _setup(W, Q, w)
    _check_stage_index(Q, i)
    vi = W.demazure_product(Q[:i])
    lw = w.length
    out = set()
    tail = range(i + 1, len(Q) + 1)
    for r in range(min(lw, len(tail)) + 1):
        for S in combinations(tail, r):
            letters = [Q[p - 1] for p in S]
            wp = w
            for a in reversed(letters):
                wp = wp.right_mult(a)
            if wp.length + r != lw:
                continue
            if not W.bruhat_leq(wp, vi):
                continue
            if wp * W.from_word(letters) != w:
                continue
            out.add(ChainPair(wp, frozenset(S)))
    return frozenset(out)


def step_map(W: WeylGroup, Q: Iterable[int], w: WeylElement, i: int) -> Callable[[ChainPair], ChainPair]:
    """The forgetful map ``C_{i-1} -> C_i`` at position ``i``."""
    Q = W.check_word(Q)
    _check_stage_index(Q, i, lo=1)
    alpha = Q[i - 1]

    def forget(pair: ChainPair) -> ChainPair:
        if i not in pair.S:
            return pair
        return ChainPair(pair.wprime.right_mult(alpha), pair.S - {i})

    return forget


def fiber_trichotomy(
    W: WeylGroup, Q: Iterable[int], w: WeylElement, i: int, pair: ChainPair, current: frozenset[ChainPair] | None = None
) -> tuple[int, frozenset[ChainPair]]:
    """Predicted fiber over ``pair`` in ``C_{i-1}`` and which case produced it."""
    Q, _ = _setup(W, Q, w)
    _check_stage_index(Q, i, lo=1)
    if current is None:
        current = stage(W, Q, w, i)
    if pair not in current:
        raise ValueError(f"pair {pair.to_json()} is not in stage {i}")
    alpha = Q[i - 1]
    v_prev = W.demazure_product(Q[: i - 1])
    wp = pair.wprime
    lifted = ChainPair(wp.right_mult(alpha), pair.S | {i})
    if wp.goes_up(alpha):
        return 1, frozenset([pair])
    if not W.bruhat_leq(wp, v_prev):
        return 2, frozenset([lifted])
    return 3, frozenset([pair, lifted])


@dataclass
class ChainReport:
    type: str
    Q: Word
    w_word: Word
    stages: list[list[ChainPair]]
    surjections: list[dict] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(self.checks.values())

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.stages]

    def fail(self, check: str, stage_index: int | None = None, pair: ChainPair | None = None, detail: str = ""):
        self.checks[check] = False
        rec = {"check": check, "stage": stage_index, "detail": detail}
        if pair is not None:
            rec["pair"] = pair.to_json()
        self.failures.append(rec)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "Q": list(self.Q),
            "w_word": list(self.w_word),
            "stages": [{"i": i, "pairs": [p.to_json() for p in pairs]} for i, pairs in enumerate(self.stages)],
            "surjections": self.surjections,
            "checks": dict(sorted(self.checks.items())),
            "failures": self.failures,
        }


def _pair_invariants(W: WeylGroup, Q: Word, w: WeylElement, i: int, pair: ChainPair) -> list[str]:
    broken = []
    vi = W.demazure_product(Q[:i])
    if not W.bruhat_leq(pair.wprime, vi):
        broken.append("wprime_below_vi")
    if not all(i < p <= len(Q) for p in pair.S):
        broken.append("S_range")
    if pair.wprime.length + len(pair.S) != w.length:
        broken.append("length_sum")
    letters = [Q[p - 1] for p in sorted(pair.S)]
    if pair.wprime * W.from_word(letters) != w:
        broken.append("product")
    if not W.is_reduced(letters) or W.from_word(letters) != pair.wprime.inverse() * w:
        broken.append("S_reduced_for_quotient")
    return broken


def verify_chain(W: WeylGroup, Q: Iterable[int], w: WeylElement) -> ChainReport:
    Q, v = _setup(W, Q, w)
    n = len(Q)
    stages = [stage(W, Q, w, i) for i in range(n + 1)]
    report = ChainReport(
        type=str(W.cartan_type),
        Q=Q,
        w_word=W.canonical_reduced_word(w),
        stages=[sorted(s, key=pair_sort_key) for s in stages],
    )
    for check in ("invariants", "well_defined", "surjective", "fibers", "fiber_size"):
        report.checks[check] = True

    for i, s in enumerate(stages):
        for pair in s:
            for name in _pair_invariants(W, Q, w, i, pair):
                report.fail("invariants", i, pair, name)

    for i in range(1, n + 1):
        forget = step_map(W, Q, w, i)
        preimages: dict[ChainPair, set[ChainPair]] = {}
        mapping = []
        for pair in sorted(stages[i - 1], key=pair_sort_key):
            image = forget(pair)
            mapping.append({"from": pair.to_json(), "to": image.to_json()})
            if image not in stages[i]:
                report.fail("well_defined", i, pair, "image not in next stage")
                continue
            preimages.setdefault(image, set()).add(pair)
        fibers = []
        for pair in sorted(stages[i], key=pair_sort_key):
            actual = frozenset(preimages.get(pair, ()))
            if not actual:
                report.fail("surjective", i, pair, "empty fiber")
            if len(actual) not in (1, 2):
                report.fail("fiber_size", i, pair, f"fiber of size {len(actual)}")
            case, predicted = fiber_trichotomy(W, Q, w, i, pair, current=stages[i])
            if predicted != actual:
                report.fail("fibers", i, pair, f"case {case} predicts {len(predicted)} elements, found {len(actual)}")
            fibers.append({
                "pair": pair.to_json(),
                "case": case,
                "fiber": [p.to_json() for p in sorted(actual, key=pair_sort_key)],
            })
        report.surjections.append({"i": i, "map": mapping, "fibers": fibers})

    report.checks["top_endpoint"] = stages[n] == frozenset([ChainPair(w, frozenset())])
    if not report.checks["top_endpoint"]:
        report.fail("top_endpoint", n, detail="C_l is not {(w, {})}")
    everything = frozenset(range(1, n + 1))
    D = build_complex(W, Q, w)
    bottom_ok = all(p.wprime.is_identity() for p in stages[0]) and (
        frozenset(everything - p.S for p in stages[0]) == D.facets
    )
    report.checks["bottom_endpoint"] = bottom_ok
    if not bottom_ok:
        report.fail("bottom_endpoint", 0, detail="C_0 complements differ from the facets")
    class_ok = restrict_subword(W, w, v, Q) == restrict_kk(W, w, v)
    report.checks["endpoint_class"] = class_ok
    if not class_ok:
        report.fail("endpoint_class", detail="subword K-class differs from the recursion")
    return report
