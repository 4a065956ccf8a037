"""Exact repetition analysis: periods, runs, maximal exponents, freeness.

Every verdict is exact.  Vectorized comparisons use 64-bit cross
multiplication, and the one vectorized max-exponent search uses 80-bit
extended floats only where the integer bounds make their ordering provably
exact; outside those bounds the code falls back to arbitrary-precision
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Optional

import numpy as np

from . import _mainlorentz
from .errors import SizeError
from .words import Word, _mask

#: Exact rational numbers; exponents and thresholds are always this type.
Rational = Fraction

NAIVE_LENGTH_BOUND = 4096

# Words at or below this length are analyzed with the bit-parallel scan
# instead of the divide-and-conquer kernel; verdicts are identical.
_SMALL_LIMIT = 48

# Vectorized exponent comparisons stay in these bounds (see module docstring).
# With lengths and periods below 2**28, distinct exponents differ relatively
# by at least 2**-56 while extended-float division errs by under 2**-62, so
# ordering by longdouble ratio is exact; cross multiplications fit in int64.
_VECTOR_LIMIT = 1 << 28
_LONGDOUBLE_OK = np.finfo(np.longdouble).nmant >= 60

# The kernel's extension arrays are 32-bit; beyond this length they could
# wrap, so analysis refuses instead of answering wrong.
_KERNEL_LENGTH_LIMIT = 6 * 10**8


class Run(NamedTuple):
    """A maximal repetition: w[start : start+length) has minimal period
    `period`, exponent length/period >= 2, and extending the interval by one
    letter on either side breaks that period."""

    start: int
    period: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


def has_period(w: Word, p: int) -> bool:
    """Whether w[j] = w[j+p] for all valid j (vacuously true for p >= len)."""
    if p < 1:
        raise ValueError("period must be positive")
    n = len(w)
    if p >= n:
        return True
    bits = w._bits
    return (bits ^ (bits >> p)) & _mask(n - p) == 0


def matching_positions(w: Word, p: int) -> List[int]:
    """All j with w[j] = w[j+p], ascending."""
    if p < 1:
        raise ValueError("period must be positive")
    n = len(w)
    if p >= n:
        return []
    bits = w._bits
    m = ~(bits ^ (bits >> p)) & _mask(n - p)
    out = []
    while m:
        j = (m & -m).bit_length() - 1
        out.append(j)
        m &= m - 1
    return out


def _runs_small(w: Word) -> List[Run]:
    # Bit-parallel per-period scan; periods ascend so the first record of an
    # interval carries its minimal period.
    n = len(w)
    x = w._bits
    best = {}
    for p in range(1, n // 2 + 1):
        m = ~(x ^ (x >> p)) & _mask(n - p)
        while m:
            low = (m & -m).bit_length() - 1
            tail = m >> low
            run = ((~tail) & (tail + 1)).bit_length() - 1
            if run >= p:
                iv = (low, low + run + p)
                if iv not in best:
                    best[iv] = p
            m &= ~_mask(low + run)
    runs = [Run(s, p, e - s) for (s, e), p in best.items()]
    runs.sort()
    return runs


def _runs_array(w: Word) -> np.ndarray:
    """Deduplicated (start, period, length) rows sorted by (start, period);
    cached on the word."""
    cached = w._runs_cache
    if cached is not None:
        return cached
    n = len(w)
    if n > _KERNEL_LENGTH_LIMIT:
        raise SizeError(
            f"repetition analysis supports at most {_KERNEL_LENGTH_LIMIT} letters"
        )
    cand = _mainlorentz.collect_candidates(w.to_array())
    if cand.shape[0] == 0:
        arr = cand
    else:
        starts = cand[:, 0]
        periods = cand[:, 1]
        interval = starts * np.int64(n + 1) + (starts + cand[:, 2])
        order = np.lexsort((periods, interval))
        keep = np.ones(order.size, dtype=bool)
        keep[1:] = interval[order[1:]] != interval[order[:-1]]
        sel = order[keep]
        arr = cand[sel]
        arr = arr[np.lexsort((arr[:, 1], arr[:, 0]))]
    w._runs_cache = arr
    return arr


def maximal_repetitions(w: Word) -> List[Run]:
    """All maximal repetitions of exponent >= 2, each with its minimal
    period, sorted by start position then period."""
    n = len(w)
    if n < 2:
        return []
    if n <= _SMALL_LIMIT:
        return _runs_small(w)
    return [Run(s, p, l) for s, p, l in _runs_array(w).tolist()]


def _best_of(runs: List[Run]) -> Optional[Run]:
    # Highest exponent; ties broken by smallest start, then smallest period.
    best = None
    for r in runs:
        if best is None or r.length * best.period > best.length * r.period:
            best = r
    return best


def _best_row(arr: np.ndarray, rows: np.ndarray) -> Run:
    # Exact argmax of length/period over arr[rows]; first (start, period) on
    # ties because rows ascend in that order and argmax takes the first max.
    if _LONGDOUBLE_OK and int(arr[:, 2].max(initial=0)) < _VECTOR_LIMIT:
        ratios = arr[rows, 2].astype(np.longdouble) / arr[rows, 1].astype(
            np.longdouble
        )
        i = int(rows[int(np.argmax(ratios))])
        return Run(int(arr[i, 0]), int(arr[i, 1]), int(arr[i, 2]))
    return _best_of([Run(int(arr[i, 0]), int(arr[i, 1]), int(arr[i, 2])) for i in rows])


def max_exponent(w: Word) -> Optional[Fraction]:
    """The largest exponent among repetitions of exponent >= 2, or None."""
    if len(w) <= _SMALL_LIMIT:
        best = _best_of(_runs_small(w))
        return None if best is None else best.exponent
    arr = _runs_array(w)
    if arr.shape[0] == 0:
        return None
    return _best_row(arr, np.arange(arr.shape[0])).exponent


def find_violation(w: Word, alpha: Fraction) -> Optional[Run]:
    """The strongest repetition with exponent >= alpha, or None if w is
    alpha-power-free.  Requires alpha > 2."""
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError("freeness analysis requires alpha > 2")
    if len(w) <= _SMALL_LIMIT:
        best = _best_of(_runs_small(w))
        if best is not None and best.exponent >= alpha:
            return best
        return None
    arr = _runs_array(w)
    if arr.shape[0] == 0:
        return None
    num, den = alpha.numerator, alpha.denominator
    if max(num, den) < _VECTOR_LIMIT and len(w) < _VECTOR_LIMIT:
        rows = np.flatnonzero(arr[:, 2] * den >= num * arr[:, 1])
    else:
        rows = np.array(
            [i for i, (s, p, l) in enumerate(arr.tolist()) if l * den >= num * p],
            dtype=np.int64,
        )
    if rows.size == 0:
        return None
    return _best_row(arr, rows)


def is_power_free(w: Word, alpha: Fraction) -> bool:
    """Whether no subword of w has exponent >= alpha (alpha > 2)."""
    return find_violation(w, alpha) is None


def find_power_in_runs(runs: List[Run], beta: Fraction, p: int) -> Optional[Run]:
    """Locate a repetition of period exactly p and exponent >= beta inside a
    precomputed run list.

    A subword with period p and length >= beta*p exists iff some run whose
    minimal period divides p spans at least beta*p letters; the returned
    record reports the requested period p (the run's minimal period may be a
    proper divisor of it).
    """
    beta = Fraction(beta)
    if beta < 2:
        raise ValueError("only repetitions of exponent >= 2 are materialized")
    if p < 1:
        raise ValueError("period must be positive")
    for r in runs:
        if p % r.period == 0 and r.length >= beta * p:
            return Run(r.start, p, r.length)
    return None


def find_power_with_period(w: Word, beta: Fraction, p: int) -> Optional[Run]:
    """A repetition of period exactly p with exponent >= beta, or None."""
    beta = Fraction(beta)
    if beta < 2:
        raise ValueError("only repetitions of exponent >= 2 are materialized")
    if p < 1:
        raise ValueError("period must be positive")
    if len(w) <= _SMALL_LIMIT:
        return find_power_in_runs(_runs_small(w), beta, p)
    arr = _runs_array(w)
    if arr.shape[0] == 0:
        return None
    num, den = beta.numerator, beta.denominator
    if max(num, den, p) < _VECTOR_LIMIT and len(w) < _VECTOR_LIMIT:
        rows = np.flatnonzero((p % arr[:, 1] == 0) & (arr[:, 2] * den >= num * p))
        if rows.size == 0:
            return None
        i = int(rows[0])
        return Run(int(arr[i, 0]), p, int(arr[i, 2]))
    return find_power_in_runs(
        [Run(s, p_, l) for s, p_, l in arr.tolist()], beta, p
    )


def _letters(w: Word) -> List[int]:
    if len(w) == 0:
        return []
    return w.to_array().tolist()


def naive_max_exponent(w: Word, bound: int = NAIVE_LENGTH_BOUND) -> Optional[Fraction]:
    """Independent oracle for max_exponent: exhaustive extension of every
    (start, period) pair in O(n^2) time.  Refuses words longer than `bound`."""
    n = len(w)
    if n > bound:
        raise SizeError(f"naive analysis refuses words longer than {bound} letters")
    letters = _letters(w)
    best = None
    for p in range(1, n // 2 + 1):
        run = 0
        longest = 0
        for i in range(n - p - 1, -1, -1):
            if letters[i] == letters[i + p]:
                run += 1
                if run > longest:
                    longest = run
            else:
                run = 0
        if longest >= p:
            cand = Fraction(p + longest, p)
            if best is None or cand > best:
                best = cand
    return best


def naive_runs(w: Word, bound: int = NAIVE_LENGTH_BOUND) -> List[Run]:
    """Independent oracle enumerating all maximal repetitions by per-period
    letter scans.  Refuses words longer than `bound`."""
    n = len(w)
    if n > bound:
        raise SizeError(f"naive analysis refuses words longer than {bound} letters")
    letters = _letters(w)
    best = {}
    for p in range(1, n // 2 + 1):
        i = 0
        limit = n - p
        while i < limit:
            if letters[i] == letters[i + p]:
                j = i + 1
                while j < limit and letters[j] == letters[j + p]:
                    j += 1
                if j - i >= p:
                    iv = (i, j + p)
                    if iv not in best:
                        best[iv] = p
                i = j + 1
            else:
                i += 1
    runs = [Run(s, p, e - s) for (s, e), p in best.items()]
    runs.sort()
    return runs
