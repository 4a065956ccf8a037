"""Building words whose repetition exponents squeeze up to a target alpha.

A target rational alpha > 2 is approached from below through exponents of
the form beta = r - t/2**s, where r = ceil(alpha), s >= 3, and dropping the
first t letters of the s-fold doubling image of 0 leaves a word that starts
with 00.  Each schedule entry yields a map

    step(w) = delete_prefix(mu_pow(zeros(r) + w, s), t)

and nesting the maps innermost-to-outermost over the empty word produces a
chain of prefixes of one infinite word whose exponents reach every scheduled
beta but never alpha.

Every step's output starts with 00, and the freeness argument requires the
next zero block to replace that anchor rather than pile on top of it (r + 2
leading zeros would blow the exponent past alpha).  The nesting therefore
feeds each output minus its leading 00 into the next step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .errors import SizeError
from .words import Word, ZERO, mu_pow, delete_prefix, occurrences_00, zeros

#: Default cap on letters materialized for a single constructed word.
DEFAULT_MAX_LETTERS = 1 << 28

# Occurrence scans materialize mu_pow(0, s) up to this s; beyond it, letters
# of the doubling fixed point are evaluated on demand via bit-count parity.
_MATERIALIZE_LIMIT = 22

_SCHEDULE_S_LIMIT = 64


@dataclass(frozen=True)
class ObtainableParams:
    """One schedule entry: beta = r - t/2**s with t a 00-occurrence of the
    s-fold image of 0."""

    r: int
    s: int
    t: int
    beta: Fraction

    def __post_init__(self):
        if self.s < 3:
            raise ValueError("obtainable exponents require s >= 3")
        if self.r < 3:
            raise ValueError("obtainable exponents require r >= 3")
        if not 0 <= self.t < (self.r - 2) << self.s:
            raise ValueError("deletion count t out of range")
        if self.beta != self.r - Fraction(self.t, 1 << self.s):
            raise ValueError("beta does not equal r - t/2**s")

    @property
    def block(self) -> int:
        return 1 << self.s


@dataclass(frozen=True)
class Schedule:
    """Entries with strictly increasing s and nondecreasing beta < alpha,
    ordered outermost first."""

    target_alpha: Fraction
    params: Tuple[ObtainableParams, ...]

    def __post_init__(self):
        alpha = Fraction(self.target_alpha)
        object.__setattr__(self, "target_alpha", alpha)
        object.__setattr__(self, "params", tuple(self.params))
        if alpha <= 2:
            raise ValueError("target exponent must exceed 2")
        r = math.ceil(alpha)
        prev = None
        for entry in self.params:
            if entry.r != r:
                raise ValueError(f"entry r={entry.r} differs from ceil(alpha)={r}")
            if not entry.beta < alpha:
                raise ValueError(f"beta {entry.beta} is not below alpha {alpha}")
            if prev is not None:
                if entry.s <= prev.s:
                    raise ValueError("entry s values must strictly increase")
                if entry.beta < prev.beta:
                    raise ValueError("entry betas must be nondecreasing")
            prev = entry

    def __len__(self) -> int:
        return len(self.params)

    def __getitem__(self, idx) -> Union[ObtainableParams, "Schedule"]:
        if isinstance(idx, slice):
            return Schedule(self.target_alpha, self.params[idx])
        return self.params[idx]


@dataclass(frozen=True)
class PredictedWitness:
    """A repetition guaranteed in the built word: at `level` i the word
    contains a beta_i power whose period is the product of all blocks down
    to that level."""

    level: int
    period: int
    min_length: int
    beta: Fraction


def _fixed_point_letter(j: int) -> int:
    # Letter j of the doubling fixed point starting from 0.
    return j.bit_count() & 1


def _occurrence_in_window(s: int, low: Fraction, high: Fraction) -> Optional[int]:
    """Smallest t with low < t < high such that letters t, t+1 of
    mu_pow(0, s) are both 0, or None."""
    size = 1 << s
    if s <= _MATERIALIZE_LIMIT:
        for t in occurrences_00(mu_pow(ZERO, s)):
            if t >= high:
                return None
            if t > low:
                return t
        return None
    t = math.floor(low) + 1
    while t < high:
        if t + 1 < size and _fixed_point_letter(t) == 0 and _fixed_point_letter(t + 1) == 0:
            return t
        t += 1
    return None


def find_obtainable(alpha: Fraction, s: int) -> Optional[ObtainableParams]:
    """The largest beta = r - t/2**s strictly between 2 and alpha that is
    realizable at this s, i.e. the smallest admissible deletion count t; None
    when no 00-occurrence falls in the admissible window."""
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("target exponent must exceed 2")
    if s < 3:
        raise ValueError("obtainable exponents require s >= 3")
    r = math.ceil(alpha)
    low = (r - alpha) * (1 << s)
    high = (r - 2) * Fraction(1 << s)
    t = _occurrence_in_window(s, low, high)
    if t is None:
        return None
    return ObtainableParams(r=r, s=s, t=t, beta=r - Fraction(t, 1 << s))


def build_schedule(alpha: Fraction, n: int, s_start: Optional[int] = None) -> Schedule:
    """A schedule of n entries found greedily from s_start (default 3)
    upward, skipping s values with no admissible entry and entries that
    would lower beta."""
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("target exponent must exceed 2")
    if n < 1:
        raise ValueError("schedule needs at least one entry")
    s = 3 if s_start is None else s_start
    if s < 3:
        raise ValueError("schedule search starts at s >= 3")
    picked: List[ObtainableParams] = []
    while len(picked) < n:
        if s > _SCHEDULE_S_LIMIT:
            raise SizeError(
                f"schedule search for alpha={alpha} exceeded s={_SCHEDULE_S_LIMIT}"
            )
        entry = find_obtainable(alpha, s)
        if entry is not None and (not picked or entry.beta >= picked[-1].beta):
            picked.append(entry)
        s += 1
    return Schedule(alpha, tuple(picked))


def phi(params: ObtainableParams, w: Word) -> Word:
    """One construction step: prepend r zeros, apply the doubling morphism
    s times, then drop the first t letters.  The result has length
    2**s * (r + len(w)) - t, starts with 00, and is a factor of a morphism
    image whenever 00 + w is."""
    return delete_prefix(mu_pow(zeros(params.r) + w, params.s), params.t)


def _level_lengths(schedule: Schedule) -> List[int]:
    # lengths[i] = length of the word produced by entry i (0-based, outermost
    # first) applied to everything inside it.  Each inner word hands over all
    # but its 2-letter anchor.
    lengths = [0] * len(schedule.params)
    inner = 0
    for i in range(len(schedule.params) - 1, -1, -1):
        entry = schedule.params[i]
        inner = ((entry.r + inner) << entry.s) - entry.t
        lengths[i] = inner
        inner -= 2
    return lengths


def predicted_length(schedule: Union[Schedule, Iterable[ObtainableParams]]) -> int:
    """Length of build_word's output without materializing it."""
    params = schedule.params if isinstance(schedule, Schedule) else tuple(schedule)
    length = 0
    arg = 0
    for entry in reversed(params):
        length = ((entry.r + arg) << entry.s) - entry.t
        arg = length - 2
    return length


def _nested_words(schedule: Schedule, max_letters: int) -> List[Word]:
    """Intermediate words of the nesting, innermost application first."""
    lengths = _level_lengths(schedule)
    for i in range(len(lengths) - 1, -1, -1):
        if lengths[i] > max_letters:
            raise SizeError(
                f"level {i + 1} of the schedule needs {lengths[i]} letters, "
                f"over the {max_letters} letter budget"
            )
    out: List[Word] = []
    arg = Word()
    for entry in reversed(schedule.params):
        word = phi(entry, arg)
        out.append(word)
        arg = word[2:]
    return out


def build_word(
    schedule: Schedule, max_letters: int = DEFAULT_MAX_LETTERS
) -> Tuple[Word, List[PredictedWitness]]:
    """Materialize the nested word of a schedule along with one predicted
    repetition witness per level."""
    if len(schedule) == 0:
        raise ValueError("cannot build a word from an empty schedule")
    word = _nested_words(schedule, max_letters)[-1]
    witnesses = []
    period = 1
    for i, entry in enumerate(schedule.params, start=1):
        period <<= entry.s
        witnesses.append(
            PredictedWitness(
                level=i,
                period=period,
                min_length=math.ceil(entry.beta * period),
                beta=entry.beta,
            )
        )
    return word, witnesses


def word_prefix(
    alpha: Fraction, target_len: int, max_letters: int = DEFAULT_MAX_LETTERS
) -> Word:
    """The first target_len letters of the limit word for alpha, built by
    growing the automatic schedule until it covers the target."""
    alpha = Fraction(alpha)
    if target_len < 1:
        raise ValueError("prefix length must be positive")
    if target_len > max_letters:
        raise SizeError(
            f"prefix of {target_len} letters is over the {max_letters} letter budget"
        )
    levels = 1
    while True:
        schedule = build_schedule(alpha, levels)
        if predicted_length(schedule) >= target_len:
            word, _ = build_word(schedule, max_letters)
            return word[:target_len]
        levels += 1
