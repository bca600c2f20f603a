"""
Exhaustive cross-validation over a Weyl group.

The work list is every ordered pair ``(w, v)`` in the deterministic element
order, and for ``w <= v`` every reduced word ``Q`` of ``v`` up to a cap.
Each pair is one work unit; with ``jobs > 1`` units are dealt round-robin
to worker processes and results are merged back in work-list order, so the
report does not depend on the worker count.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .degeneration import verify_chain
from .restriction import (
    billey_restriction,
    boundary_class_from_k,
    boundary_ideal_class,
    restrict_cohomology_recursion,
    restrict_graham_willems,
    restrict_kk,
    restrict_subword,
)
from .subword import build_complex, verify_vertex_decomposition
from .weyl import WeylGroup, format_word

__all__ = ["Failure", "SweepReport", "sweep", "check_pair", "CHECKS"]

CHECKS = (
    "restriction.three_way",
    "restriction.descent_policy",
    "restriction.q_independence",
    "restriction.vanishing",
    "restriction.evaluation",
    "topology.purity",
    "topology.ridges",
    "topology.euler",
    "topology.interior",
    "topology.is_face",
    "vertex_decomposition",
    "k_polynomial.interior",
    "chain",
    "cohomology.agreement",
    "cohomology.q_independence",
    "cohomology.homogeneous",
    "boundary",
)

# which subcommand reproduces a failing check
_REPRODUCER = {
    "restriction": "restrict",
    "cohomology": "billey",
    "topology": "complex",
    "vertex_decomposition": "complex",
    "k_polynomial": "complex",
    "chain": "chain",
    "boundary": "complex",
}


@dataclass
class Failure:
    check: str
    w_word: tuple[int, ...]
    v_word: tuple[int, ...]
    Q: tuple[int, ...] | None
    detail: str
    reproducer: str

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "w_word": list(self.w_word),
            "v_word": list(self.v_word),
            "Q": list(self.Q) if self.Q is not None else None,
            "detail": self.detail,
            "reproducer": self.reproducer,
        }


@dataclass
class SweepReport:
    group: str
    max_words_per_v: int | None
    pairs: int = 0
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)
    checks: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def failures_for(self, prefix: str) -> list[Failure]:
        return [f for f in self.failures if f.check == prefix or f.check.startswith(prefix + ".")]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "type": self.group,
            "max_words_per_v": self.max_words_per_v,
            "pairs": self.pairs,
            "instances": self.instances,
            "checks": dict(sorted(self.checks.items())),
            "failures": [f.to_json() for f in self.failures],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _reproducer(type_name: str, check: str, w_word, v_word, Q) -> str:
    cmd = _REPRODUCER[check.split(".")[0]]
    w_arg = format_word(w_word)
    if cmd in ("complex", "chain"):
        return f'schubloc {cmd} --type {type_name} --word "{format_word(Q)}" --w "{w_arg}"'
    out = f'schubloc {cmd} --type {type_name} --w "{w_arg}" --v "{format_word(v_word)}"'
    if Q is not None:
        out += f' --word "{format_word(Q)}"'
    return out


class _PairRun:
    """Accumulates checks and failures for one ``(w, v)`` unit."""

    def __init__(self, W: WeylGroup, w, v):
        self.W = W
        self.w_word = W.canonical_reduced_word(w)
        self.v_word = W.canonical_reduced_word(v)
        self.checks: Counter = Counter()
        self.failures: list[Failure] = []
        self.instances = 0

    def expect(self, check: str, ok: bool, Q=None, detail: str = ""):
        self.checks[check] += 1
        if not ok:
            t = str(self.W.cartan_type)
            self.failures.append(
                Failure(check, self.w_word, self.v_word, Q, detail, _reproducer(t, check, self.w_word, self.v_word, Q))
            )


def check_pair(W: WeylGroup, w, v, max_words: int | None) -> _PairRun:
    """Run every check on the pair ``(w, v)``."""
    run = _PairRun(W, w, v)
    n = W.rank
    kk = restrict_kk(W, w, v)
    run.expect("restriction.descent_policy", kk == restrict_kk(W, w, v, policy="largest"))
    coh = restrict_cohomology_recursion(W, w, v)
    run.expect("cohomology.agreement", coh == restrict_cohomology_recursion(W, w, v, policy="largest"),
               detail="recursion depends on the descent policy")

    if not W.bruhat_leq(w, v):
        Q = W.canonical_reduced_word(v)
        zero_ok = (
            not kk
            and not restrict_subword(W, w, v, Q)
            and not restrict_graham_willems(W, w, v, Q)
            and not billey_restriction(W, w, v, Q)
            and not coh
        )
        run.expect("restriction.vanishing", zero_ok, Q, "nonzero restriction for w not <= v")
        return run

    run.expect("restriction.vanishing", bool(kk), detail="zero restriction for w <= v")
    at_one = kk.evaluate_at_one()
    run.expect("restriction.evaluation", at_one == (1 if w.is_identity() else 0), detail=f"S(e->1) = {at_one}")
    run.expect("cohomology.homogeneous", coh.degrees() == {w.length}, detail=f"degrees {sorted(coh.degrees())}")

    subword_values, billey_values = set(), set()
    for Q in W.all_reduced_words(v, max_words):
        run.instances += 1
        sub = restrict_subword(W, w, v, Q)
        gw = restrict_graham_willems(W, w, v, Q)
        run.expect("restriction.three_way", sub == kk and gw == kk, Q,
                   f"kk={kk} subword={sub} graham_willems={gw}")
        subword_values.add(sub)

        bil = billey_restriction(W, w, v, Q)
        run.expect("cohomology.agreement", bil == coh, Q, f"facets={bil} recursion={coh}")
        billey_values.add(bil)

        D = build_complex(W, Q, w)
        size = len(Q) - w.length
        run.expect("topology.purity", all(len(F) == size for F in D.facets), Q)
        run.expect("topology.ridges", all(c in (1, 2) for c in D.ridge_incidence.values()), Q)
        chi = D.euler_characteristic()
        run.expect("topology.euler", chi == (1 if w != v else 0), Q, f"euler characteristic {chi}")
        run.expect("topology.interior", D.interior_faces_demazure() == D.interior_faces_topological(), Q)
        faces = D.faces
        is_face_ok = all(D.is_face(F) for F in faces)
        # non-faces: minimal additions of one vertex to a face that leave the complex
        for F in faces:
            for p in range(1, D.n + 1):
                if p not in F and (F | {p}) not in faces and D.is_face(F | {p}):
                    is_face_ok = False
        run.expect("topology.is_face", is_face_ok, Q)

        if Q:
            vd = verify_vertex_decomposition(W, Q, w)
            run.expect("vertex_decomposition", vd.ok, Q, f"case {vd.case}: {vd.checks}")
        run.expect("k_polynomial.interior", D.k_polynomial_interior() == D.k_polynomial(), Q)

        report = verify_chain(W, Q, w)
        run.expect("chain", report.ok, Q, "; ".join(f"{f['check']}@{f['stage']}" for f in report.failures))

        run.expect("boundary", boundary_ideal_class(W, w, v, Q) == boundary_class_from_k(W, w, v, Q), Q)

    run.expect("restriction.q_independence", len(subword_values) == 1)
    run.expect("cohomology.q_independence", len(billey_values) == 1)
    return run


def _work_list(W: WeylGroup):
    elements = W.all_elements()
    return [(w, v) for v in elements for w in elements]


def _worker(type_name: str, max_words: int | None, max_size: int, jobs: int, k: int):
    W = WeylGroup(type_name, max_size=max_size)
    out = []
    for idx, (w, v) in enumerate(_work_list(W)):
        if idx % jobs == k:
            run = check_pair(W, w, v, max_words)
            out.append((idx, run.instances, run.checks, run.failures, W.bruhat_leq(w, v)))
    return out


def sweep(type_name: str, max_words_per_v: int | None = 5, jobs: int = 1, max_size: int = 50_000) -> SweepReport:
    """Cross-validate every method on every pair of the group."""
    start = time.perf_counter()
    W = WeylGroup(type_name, max_size=max_size)
    W.all_elements()  # raise early if over the cap
    report = SweepReport(str(W.cartan_type), max_words_per_v)
    if jobs <= 1:
        results = _worker(str(W.cartan_type), max_words_per_v, max_size, 1, 0)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_worker, str(W.cartan_type), max_words_per_v, max_size, jobs, k) for k in range(jobs)
            ]
            results = [r for f in futures for r in f.result()]
        results.sort(key=lambda r: r[0])
    for _, instances, checks, failures, below in results:
        report.pairs += int(below)
        report.instances += instances
        report.checks.update(checks)
        report.failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    return report
