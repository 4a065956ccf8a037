"""Executable desk-scale checkers for the facts the construction relies on.

Each checker runs a family of concrete instances and returns a CheckReport;
an empty failure list means every instance passed.  Randomized checkers are
deterministic for a fixed seed.  Private keyword arguments (underscored)
inject mutations so the test suite can confirm each checker actually fails
on corrupted instances.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .construction import (
    DEFAULT_MAX_LETTERS,
    ObtainableParams,
    build_schedule,
    build_word,
    _nested_words,
    phi,
)
from .repetitions import (
    Run,
    find_power_in_runs,
    find_power_with_period,
    find_violation,
    has_period,
    is_power_free,
    matching_positions,
    max_exponent,
    maximal_repetitions,
    naive_runs,
)
from .words import Word, in_language_L, mu, mu_pow, occurrences_00, zeros


@dataclass
class CheckReport:
    """Outcome of one checker: instance count and counterexample records."""

    name: str
    instances_tested: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add_failure(self, inputs: Any, observed: Any, expected: Any) -> None:
        self.failures.append(
            {"inputs": inputs, "observed": observed, "expected": expected}
        )

    def render(self) -> str:
        if self.passed:
            return f"{self.name}: PASS ({self.instances_tested} instances)"
        lines = [
            f"{self.name}: FAIL "
            f"({len(self.failures)} failures out of {self.instances_tested} instances)"
        ]
        for rec in self.failures[:5]:
            lines.append(
                f"  inputs={rec['inputs']} observed={rec['observed']} "
                f"expected={rec['expected']}"
            )
        if len(self.failures) > 5:
            lines.append(f"  ... {len(self.failures) - 5} more")
        return "\n".join(lines)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "instances_tested": self.instances_tested,
            "passed": self.passed,
            "failures": [
                {k: repr(v) for k, v in rec.items()} for rec in self.failures
            ],
        }


def _flip(w: Word, i: int) -> Word:
    return Word.from_bits(w._bits ^ (1 << i), len(w))


def check_lemma1(s_max: int) -> CheckReport:
    """No subword of the s-fold image of 01 longer than 2**s has period 2**s.

    A subword of length over 2**s with that period would contain one of
    length exactly 2**s + 1 with it, so scanning the 2**s positions j and
    requiring w[j] != w[j + 2**s] covers every subword.
    """
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    report = CheckReport("lemma1")
    for s in range(1, s_max + 1):
        image = mu_pow(Word("01"), s)
        block = 1 << s
        report.instances_tested += len(image) - block
        for j in matching_positions(image, block):
            report.add_failure(
                inputs={"s": s, "position": j},
                observed=f"letters {j} and {j + block} agree",
                expected=f"all letters at distance {block} differ",
            )
    return report


def check_theorem2(
    sample_count: int, max_len: int, alpha: Fraction, seed: int = 0
) -> CheckReport:
    """A word and its morphism image are alpha-power-free together.

    Exhaustive over all words of length <= min(max_len, 14), plus
    sample_count random words of length <= max_len.
    """
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("freeness analysis requires alpha > 2")
    report = CheckReport("theorem2")

    def probe(w: Word) -> None:
        report.instances_tested += 1
        lhs = is_power_free(w, alpha)
        rhs = is_power_free(mu(w), alpha)
        if lhs != rhs:
            report.add_failure(
                inputs={"word": w.to_text(), "alpha": str(alpha)},
                observed={"word_free": lhs, "image_free": rhs},
                expected="both sides agree",
            )

    for length in range(0, min(max_len, 14) + 1):
        for bits in range(1 << length):
            probe(Word.from_bits(bits, length))
    rng = random.Random(seed)
    for _ in range(sample_count):
        length = rng.randint(0, max_len)
        probe(Word.from_bits(rng.getrandbits(length) if length else 0, length))
    return report


def check_theorem3(
    sample_count: int, max_len: int, seed: int = 0, _extra_length: int = 0
) -> CheckReport:
    """Every repetition of exponent over 2 in a morphism image has even
    period 2q, and the preimage holds half its length at period q."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    report = CheckReport("theorem3")
    rng = random.Random(seed)
    samples = [zeros(k) for k in range(2, min(8, max_len) + 1)]
    samples += [mu_pow(Word("0"), s) for s in range(2, 7) if (1 << s) <= max_len]
    for _ in range(sample_count):
        length = rng.randint(1, max_len)
        samples.append(Word.from_bits(rng.getrandbits(length), length))

    for w in samples:
        report.instances_tested += 1
        image = mu(w)
        image_runs = maximal_repetitions(image)
        w_runs = maximal_repetitions(w)
        for run in image_runs:
            if run.length <= 2 * run.period:
                continue
            if run.period % 2 != 0:
                report.add_failure(
                    inputs={"word": w.to_text(), "run": run},
                    observed=f"odd period {run.period} at exponent over 2",
                    expected="even period",
                )
                continue
            need = (run.length + 1) // 2 + _extra_length
            half_p = run.period // 2
            found = find_power_in_runs(w_runs, Fraction(need, half_p), half_p)
            if found is None:
                report.add_failure(
                    inputs={"word": w.to_text(), "run": run},
                    observed="no matching repetition in the preimage",
                    expected=f"subword of length >= {need} with period {half_p}",
                )
    return report


def sample_anchored_factors(
    alpha: Fraction, count: int, max_len: int, seed: int = 0
) -> List[Word]:
    """Reproducible alpha-power-free words that start with 00 and are
    factors of morphism images.

    Short random words are filtered for freeness, pumped through the
    morphism until long enough (freeness and membership both survive), and
    cut at a random 00 occurrence.
    """
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("freeness analysis requires alpha > 2")
    rng = random.Random(seed)
    out: List[Word] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * (count + 10):
            raise RuntimeError("anchored factor sampling failed to converge")
        length = rng.randint(1, 12)
        u = Word.from_bits(rng.getrandbits(length), length)
        if not is_power_free(u, alpha):
            continue
        image = mu(u)
        while 2 * len(image) <= max_len + 2:
            image = mu(image)
        occ = occurrences_00(image)
        if not occ:
            continue
        i = rng.choice(occ)
        top = min(len(image), i + max_len)
        if top < i + 2:
            continue
        j = rng.randint(i + 2, top)
        candidate = image[i:j]
        if is_power_free(candidate, alpha):
            out.append(candidate)
    return out


def check_lemma4(
    alpha: Fraction, sample_count: int, max_len: int = 128, seed: int = 0
) -> CheckReport:
    """Prepending ceil(alpha) zeros to an anchored free factor creates
    exactly one repetition at or above alpha: the zero block itself.

    Repetition occurrences are enumerated with the naive per-period scan;
    any occurrence of exponent >= alpha other than the leading zero block
    (start 0, period 1, length r) is a counterexample.
    """
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("freeness analysis requires alpha > 2")
    r = math.ceil(alpha)
    report = CheckReport("lemma4")
    samples = [Word("00")] + sample_anchored_factors(
        alpha, sample_count, max_len, seed
    )
    expected = Run(0, 1, r)
    for anchored in samples:
        report.instances_tested += 1
        v = anchored[2:]
        padded = zeros(r) + v
        offenders = [
            run for run in naive_runs(padded) if run.length >= alpha * run.period
        ]
        if offenders != [expected]:
            report.add_failure(
                inputs={"v": v.to_text(), "alpha": str(alpha)},
                observed=offenders,
                expected=[expected],
            )
    return report


def check_lemma5(
    params: ObtainableParams,
    alpha: Fraction,
    sample_count: int,
    seed: int = 0,
    max_len: int = 128,
    _beta: Optional[Fraction] = None,
    _flip_letter: Optional[int] = None,
) -> CheckReport:
    """The three construction-step guarantees on anchored free factors:
    a leading beta power of period 2**s, transported powers at periods
    scaled by 2**s, and alpha-power-freeness of the image."""
    alpha = Fraction(alpha)
    beta = params.beta if _beta is None else Fraction(_beta)
    if not 2 < params.beta < alpha:
        raise ValueError("params do not target this alpha")
    if params.r != math.ceil(alpha):
        raise ValueError("params r must equal ceil(alpha)")
    report = CheckReport("lemma5")
    samples = [Word("00")] + sample_anchored_factors(
        alpha, sample_count, max_len, seed
    )
    block = params.block
    prefix_len = params.r * block - params.t
    for anchored in samples:
        report.instances_tested += 1
        v = anchored[2:]
        image = phi(params, v)
        if _flip_letter is not None:
            image = _flip(image, _flip_letter % len(image))

        if not (image.startswith(Word("00")) and in_language_L(image)):
            report.add_failure(
                inputs={"v": v.to_text()},
                observed="image not an anchored morphism factor",
                expected="image starts 00 and parses into 01/10 blocks",
            )
        lead = find_power_with_period(image, beta, block)
        if (
            lead is None
            or lead.start != 0
            or lead.length < math.ceil(beta * block)
            or not has_period(image[:prefix_len], block)
        ):
            report.add_failure(
                inputs={"v": v.to_text(), "beta": str(beta)},
                observed=lead,
                expected=f"prefix power of period {block} and exponent >= {beta}",
            )
        for run in naive_runs(anchored):
            k = 1
            while 2 * k * run.period <= run.length:
                period = k * run.period
                exponent = Fraction(run.length, period)
                lifted = find_power_with_period(image, exponent, block * period)
                if lifted is None:
                    report.add_failure(
                        inputs={"v": v.to_text(), "source_run": run, "k": k},
                        observed=None,
                        expected=(
                            f"power of period {block * period} and exponent "
                            f">= {exponent} in the image"
                        ),
                    )
                k += 1
        offender = find_violation(image, alpha)
        if offender is not None:
            report.add_failure(
                inputs={"v": v.to_text(), "alpha": str(alpha)},
                observed=offender,
                expected="image is alpha-power-free",
            )
    return report


def verify_construction(
    alpha: Fraction,
    levels: int,
    max_letters: int = DEFAULT_MAX_LETTERS,
    _flip_letter: Optional[int] = None,
) -> CheckReport:
    """End-to-end check of the built word: freeness below alpha, presence of
    every scheduled witness, the exponent squeeze, the prefix chain, and the
    anchored-factor shape of every intermediate word."""
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("target exponent must exceed 2")
    if levels < 1:
        raise ValueError("need at least one level")
    report = CheckReport(f"construction alpha={alpha} levels={levels}")
    schedule = build_schedule(alpha, levels)
    word, witnesses = build_word(schedule, max_letters)
    if _flip_letter is not None:
        word = _flip(word, _flip_letter % len(word))

    report.instances_tested += 1
    offender = find_violation(word, alpha)
    if offender is not None:
        report.add_failure(
            inputs={"alpha": str(alpha), "levels": levels},
            observed=offender,
            expected="built word is alpha-power-free",
        )

    beta_n = schedule.params[-1].beta
    top = max_exponent(word)
    report.instances_tested += 1
    if top is None or not beta_n <= top < alpha:
        report.add_failure(
            inputs={"alpha": str(alpha), "levels": levels},
            observed=str(top),
            expected=f"max exponent in [{beta_n}, {alpha})",
        )

    for witness in witnesses:
        report.instances_tested += 1
        found = find_power_with_period(word, witness.beta, witness.period)
        if found is None or found.length < witness.min_length:
            report.add_failure(
                inputs={"level": witness.level},
                observed=found,
                expected=(
                    f"power of period {witness.period} and length "
                    f">= {witness.min_length}"
                ),
            )

    previous = None
    for i in range(1, levels + 1):
        prefix_word, _ = build_word(schedule[:i], max_letters)
        report.instances_tested += 1
        if previous is not None and not previous.is_prefix_of(prefix_word):
            report.add_failure(
                inputs={"levels": i},
                observed=f"{len(previous)}-letter word is not a prefix",
                expected="each scheduled word extends the previous one",
            )
        previous = prefix_word

    for i, stage in enumerate(_nested_words(schedule, max_letters), start=1):
        report.instances_tested += 1
        if not (stage.startswith(Word("00")) and in_language_L(stage)):
            report.add_failure(
                inputs={"stage": i},
                observed="intermediate word not an anchored morphism factor",
                expected="starts 00 and parses into 01/10 blocks",
            )
    return report
