"""Property suites behind `verify`: oracle equivalences, complexity laws and the n = 4 reference values."""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from src.core.engines import (
    check_scheme_equivalence,
    complexity_fast,
    complexity_naive_count,
    random_word,
    run_scheme,
    synthesize_word,
)
from src.core.planner import (
    bfs_min_ops,
    finals_set,
    is_final,
    min_ops,
    plan_ranks,
    shannon_exhaustive,
    value_step,
)
from src.core.thinning import detect_final, parity_tree, thin, union_thinned
from src.core.words import apply_operator, iterate_rank1, parity, reduce_to_minimal_period
from src.models.config import VerifyConfig
from src.models.enums import CheckStatus, Parity, Subcase, Terminal
from src.models.records import Certificate, PropertyResult
from src.models.word import PeriodicWord

MAX_WITNESSES = 5
HEAVY_SAMPLES = 1000
LIGHT_SAMPLES = 100
DETECTION_MAX_N = 10

# Reference values at n = 4: A -> (width, rank) for values one operator away from a final
SINGLE_STEP_PLANS = {14: (4, 1), 12: (4, 4), 11: (4, 2), 10: (4, 1), 6: (3, 1)}
FINALS_AT_FOUR = [16, 15, 13, 9, 8, 7, 5, 4, 3, 2, 1]


@dataclass(frozen=True)
class Oracles:
    naive: Callable[[PeriodicWord], int] = complexity_naive_count
    fast: Callable[[PeriodicWord], tuple[int, Certificate]] = complexity_fast


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, witness: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    def result(self, detail: str = "") -> PropertyResult:
        if self.failures:
            return PropertyResult(
                name=self.name,
                status=CheckStatus.FAIL,
                checked=self.checked,
                detail=f"{len(self.failures)} of {self.checked} cases failed",
                witnesses=self.failures[:MAX_WITNESSES],
            )
        return PropertyResult(
            name=self.name,
            status=CheckStatus.OK,
            checked=self.checked,
            detail=detail or f"{self.checked} cases",
        )


class VerificationSuite:
    """Runs every property once; sampled words are shared across properties."""

    def __init__(self, settings: VerifyConfig, seed: int, oracles: Oracles | None = None):
        self.settings = settings
        self.seed = seed
        self.oracles = oracles or Oracles()
        self._naive: dict[PeriodicWord, int] = {}
        rng = random.Random(f"verify:{seed}")
        self._samples = [
            random_word(n, rng) for n in settings.sampled_levels for _ in range(settings.samples)
        ]
        rng = random.Random(f"equivalence:{seed}")
        self._equivalence_samples = [
            random_word(n, rng)
            for n in settings.equivalence_levels
            for _ in range(settings.equivalence_samples)
        ]

    # ── Word sources ──

    def exhaustive_words(self) -> Iterator[PeriodicWord]:
        for n in range(self.settings.exhaustive_max_n + 1):
            for value in range(1 << (1 << n)):
                yield PeriodicWord(value, n)

    def equivalence_words(self) -> list[PeriodicWord]:
        return list(self._equivalence_samples)

    def sampled_words(self, *, max_n: int | None = None, limit: int | None = None) -> list[PeriodicWord]:
        words = [w for w in self._samples if max_n is None or w.n <= max_n]
        if limit is None:
            return words
        per_level: dict[int, int] = {}
        picked = []
        for w in words:
            if per_level.get(w.n, 0) < limit:
                per_level[w.n] = per_level.get(w.n, 0) + 1
                picked.append(w)
        return picked

    def naive(self, word: PeriodicWord) -> int:
        if word not in self._naive:
            self._naive[word] = self.oracles.naive(word)
        return self._naive[word]

    # ── Properties ──

    def run(self) -> list[PropertyResult]:
        checks = [
            self.scheme_equivalence,
            self.nilpotency,
            self.period_invariance,
            self.oracle_equivalence,
            self.rank_subtraction,
            self.nonperiodic_range,
            self.certificate_audit,
            self.permutation_invariance,
            self.parity_tree_budget,
            self.reconstruction,
            self.final_detection,
            self.synthesized_finals,
            self.value_model_fidelity,
            self.reference_values,
            self.worked_example,
            self.plan_soundness,
            self.shannon,
            self.finals_count_note,
        ]
        return [check() for check in checks]

    def scheme_equivalence(self) -> PropertyResult:
        tally = _Tally("2^k rank-1 steps equal one rank-2^k step")
        words = itertools.chain(self.exhaustive_words(), self._equivalence_samples)
        for w in words:
            for k in range(w.n + 1):
                tally.check(check_scheme_equivalence(w, k), f"{w} k={k}")
        return tally.result()

    def nilpotency(self) -> PropertyResult:
        tally = _Tally("rank 2^n and 2^n rank-1 steps reach zero")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words(limit=LIGHT_SAMPLES)):
            tally.check(apply_operator(w, w.length).is_zero, f"{w} rank {w.length}")
            tally.check(iterate_rank1(w, w.length).is_zero, f"{w} iterated {w.length}")
        return tally.result()

    def period_invariance(self) -> PropertyResult:
        tally = _Tally("doubling a word keeps its minimal period")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words(limit=LIGHT_SAMPLES)):
            reduced, factor = reduce_to_minimal_period(w)
            tally.check(reduce_to_minimal_period(w.doubled()) == (reduced, 2 * factor), str(w))
        return tally.result()

    def oracle_equivalence(self) -> PropertyResult:
        tally = _Tally("fast engine equals brute-force oracle")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words()):
            fast, _ = self.oracles.fast(w)
            naive = self.naive(w)
            tally.check(fast == naive, f"{w} fast={fast} naive={naive}")
        return tally.result()

    def rank_subtraction(self) -> PropertyResult:
        """Exhaustive leg uses the oracle on both sides; the sampled leg measures
        the image with the fast engine, whose agreement is checked above."""
        tally = _Tally("A(F(w, 2^k)) = max(A(w) - 2^k, 0)")
        for w in self.exhaustive_words():
            a = self.naive(w)
            for k in range(w.n + 1):
                got = self.naive(apply_operator(w, 1 << k))
                tally.check(got == max(a - (1 << k), 0), f"{w} k={k} got {got} from A={a}")
        for w in self.sampled_words(limit=LIGHT_SAMPLES):
            a = self.naive(w)
            for k in range(w.n + 1):
                got, _ = self.oracles.fast(apply_operator(w, 1 << k))
                tally.check(got == max(a - (1 << k), 0), f"{w} k={k} got {got} from A={a}")
        return tally.result()

    def nonperiodic_range(self) -> PropertyResult:
        tally = _Tally("minimal period 2^n gives 2^(n-1) < A <= 2^n")
        for w in self.exhaustive_words():
            if w.n == 0 or w.is_periodic():
                continue
            a = self.naive(w)
            tally.check(w.length // 2 < a <= w.length, f"{w} A={a}")
        return tally.result()

    def certificate_audit(self) -> PropertyResult:
        tally = _Tally("certificates replay to their final value")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words(limit=HEAVY_SAMPLES)):
            a, cert = self.oracles.fast(w)
            trace = run_scheme(w, cert.ranks)
            if cert.final_complexity == 0:
                ok = trace.terminal == Terminal.ZERO
            else:
                ok = trace.detection is not None and trace.detection.complexity == cert.final_complexity
            tally.check(ok and cert.total == a and len(cert.ranks) <= w.n, f"{w} cert={cert.ranks}")
        return tally.result()

    def permutation_invariance(self) -> PropertyResult:
        tally = _Tally("rank order does not change the scheme's last word")
        rng = random.Random(f"permutations:{self.seed}")
        for w in self.sampled_words(limit=LIGHT_SAMPLES):
            ranks = [1 << rng.randrange(w.n + 1) for _ in range(3)]
            ends = {run_scheme(w, order).end for order in itertools.permutations(ranks)}
            tally.check(len(ends) == 1, f"{w} ranks={ranks}")
        return tally.result()

    def parity_tree_budget(self) -> PropertyResult:
        tally = _Tally("parity tree spends 2^n - 1 XORs and matches its levels")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words(limit=HEAVY_SAMPLES)):
            reference = parity_tree(w, reference=True)
            packed = parity_tree(w)
            ok = (
                reference.xor_count == w.length - 1
                and reference.levels == packed.levels
                and reference.level(0)[0] == (parity(w) == Parity.ODD)
                and len(reference.odd_levels()) <= 1
            )
            tally.check(ok, f"{w} xor_count={reference.xor_count}")
        return tally.result()

    def reconstruction(self) -> PropertyResult:
        tally = _Tally("union of thinned-out words rebuilds the word")
        for w in itertools.chain(self.exhaustive_words(), self.sampled_words(limit=LIGHT_SAMPLES)):
            tree = parity_tree(w)
            for m in range(w.n + 1):
                parts = [(i, thin(w, m, i)) for i in range(1 << m)]
                same_parities = all(
                    (parity(part) == Parity.ODD) == bool(tree.level(m)[i]) for i, part in parts
                )
                tally.check(union_thinned(parts, m) == w and same_parities, f"{w} m={m}")
        return tally.result()

    def final_detection(self) -> PropertyResult:
        tally = _Tally("final-word detector agrees with the oracle")
        words = itertools.chain(self.exhaustive_words(), self.sampled_words(max_n=DETECTION_MAX_N))
        for w in words:
            a = self.naive(w)
            detection = detect_final(w)
            if a > 0 and is_final(a, w.n):
                ok = detection is not None and detection.complexity == a
            else:
                ok = detection is None
            tally.check(ok, f"{w} A={a} detection={detection}")
        return tally.result()

    def synthesized_finals(self) -> PropertyResult:
        tally = _Tally("synthesized final words detect at their level")
        rng = random.Random(f"finals:{self.seed}")
        top = min(max(self.settings.sampled_levels, default=0), DETECTION_MAX_N)
        for n in range(1, top + 1):
            size = 1 << n
            for m in range(n):
                a = size - (1 << m) + 1
                for _ in range(self.settings.detection_samples):
                    w = synthesize_word(n, a, rng.getrandbits(32))
                    d = detect_final(w)
                    tally.check(d is not None and d.level == m and d.complexity == a, f"n={n} m={m} {w}")
            nonfinal = [a for a in range(size // 2 + 1, size + 1) if not is_final(a, n)]
            for _ in range(self.settings.detection_samples if nonfinal else 0):
                a = rng.choice(nonfinal)
                w = synthesize_word(n, a, rng.getrandbits(32))
                tally.check(detect_final(w) is None, f"n={n} A={a} {w}")
        return tally.result()

    def value_model_fidelity(self) -> PropertyResult:
        tally = _Tally("word-level operators follow value_step")
        for w in self.exhaustive_words():
            a = self.naive(w)
            for k in range(w.n + 1):
                expected, _ = value_step(a, k, w.n)
                got = self.naive(apply_operator(w, 1 << k))
                tally.check(got == expected, f"{w} k={k}")
        return tally.result()

    def reference_values(self) -> PropertyResult:
        tally = _Tally("finals and single-step plans at n = 4")
        tally.check(finals_set(4) == FINALS_AT_FOUR, f"finals_set(4)={finals_set(4)}")
        for a in FINALS_AT_FOUR:
            tally.check(min_ops(a, 4) == 0, f"A={a} is not final")
        for a, (width, rank) in SINGLE_STEP_PLANS.items():
            plan = plan_ranks(a, width)
            tally.check(plan.ranks == [rank], f"A={a} width={width} ranks={plan.ranks}")
        return tally.result()

    def worked_example(self) -> PropertyResult:
        tally = _Tally("worked example A = 101110100")
        plan = plan_ranks(372, 9)
        tally.check(plan.subcase == Subcase.EVEN_SHIFT, f"subcase {plan.subcase}")
        tally.check(plan.ranks == [1, 256, 2], f"ranks {plan.ranks}")
        tally.check(plan.trajectory[:1] == [371] and plan.final_value == 113, f"trajectory {plan.trajectory}")
        return tally.result()

    def plan_soundness(self) -> PropertyResult:
        tally = _Tally("plans are minimal and land on final values")
        for n in range(1, self.settings.shannon_max_n + 1):
            size = 1 << n
            for a in range(size // 2 + 1, size + 1):
                plan = plan_ranks(a, n)
                ok = plan.count == bfs_min_ops(a, n) and is_final(plan.final_value, n)
                if plan.subcase == Subcase.ODD:
                    ok = ok and len(set(plan.ranks)) == plan.count and 1 not in plan.ranks
                tally.check(ok, f"n={n} A={a} ranks={plan.ranks}")
        return tally.result()

    def shannon(self) -> PropertyResult:
        tally = _Tally("Shannon maxima within bounds, formula equals BFS")
        for n in range(1, self.settings.shannon_max_n + 1):
            report = shannon_exhaustive(n)
            tally.check(report.consistent, f"n={n} mismatches={report.mismatches[:MAX_WITNESSES]}")
            if n >= 5:
                tally.check(
                    report.within_bounds,
                    f"n={n} odd {report.max_odd}>{report.bound_odd} or even {report.max_even}>{report.bound_even}",
                )
        return tally.result()

    def finals_count_note(self) -> PropertyResult:
        n = 4
        found = len(finals_set(n))
        stated = n * (n + 1) // 2
        detail = (
            f"a length-2^{n} complexity scheme passes {found} final values; "
            f"n+(n-1)+...+1 = {stated} (the extra one is A = 1)"
        )
        status = CheckStatus.OK if found == stated else CheckStatus.WARN
        return PropertyResult(name="final words per complexity scheme", status=status, checked=1, detail=detail)


def run_verification(
    settings: VerifyConfig, seed: int, oracles: Oracles | None = None
) -> list[PropertyResult]:
    return VerificationSuite(settings, seed, oracles).run()
