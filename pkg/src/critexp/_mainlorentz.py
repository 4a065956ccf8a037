"""Divide-and-conquer enumeration of maximal repetitions (jitted kernels).

The driver splits the word in half, recurses, and finds the repetitions
whose interval contains one of the two period-length anchor blocks touching
the split position.  Every maximal repetition of exponent >= 2 contains such
a block at the deepest node that contains its interval, so after filtering
each candidate for global maximality (its interval cannot be extended in the
full word) the collected rows cover every run, each interval appearing with
its minimal period among others.  The wrapper in `repetitions` deduplicates
intervals and keeps the smallest period per interval.
"""

import numpy as np
from numba import njit

_SEP = np.uint8(2)


@njit(cache=True)
def _zfill(s, lo, hi, z):
    # Z-array of s[lo:hi] written to z[lo:hi]: z[lo+i] = lcp(s[lo:hi], s[lo+i:hi]).
    n = hi - lo
    if n <= 0:
        return
    z[lo] = n
    left = 0
    right = 0
    for i in range(1, n):
        k = 0
        if i < right:
            k = min(right - i, z[lo + i - left])
        while i + k < n and s[lo + k] == s[lo + i + k]:
            k += 1
        z[lo + i] = k
        if i + k > right:
            left = i
            right = i + k


@njit(cache=True)
def _emit(out, cnt, s0, p, length):
    if cnt == out.shape[0]:
        grown = np.empty((2 * cnt, 3), np.int64)
        grown[:cnt] = out
        out = grown
    out[cnt, 0] = s0
    out[cnt, 1] = p
    out[cnt, 2] = length
    return out, cnt + 1


@njit(cache=True)
def collect_candidates(w):
    """Maximal repetitions of w as (start, period, length) rows, with possible
    duplicates and non-minimal periods; every row is globally maximal."""
    n = w.shape[0]
    out = np.empty((256, 3), np.int64)
    cnt = 0
    if n < 2:
        return out[:cnt]

    # Workspace layout per node (u = left half, v = right half):
    #   [0, ul)                      reversed u
    #   [ul, 2*ul + 2*vl + 1)        s2 = v SEP u v      (left case, forward)
    #   [ul, 3*ul + vl + 1)         s3 = ru SEP rv ru   (right case, backward)
    #   [3*ul + vl + 1, +vl)        v                    (right case, forward)
    # s2 and s3 share a region; they are used in separate phases.
    buf = np.empty(3 * n + 2, np.uint8)
    z = np.empty(3 * n + 2, np.int32)
    stack = np.empty((130, 2), np.int64)
    top = 0
    stack[top, 0] = 0
    stack[top, 1] = n
    top += 1

    while top > 0:
        top -= 1
        lo = stack[top, 0]
        hi = stack[top, 1]
        if hi - lo < 2:
            continue
        h = (lo + hi) // 2
        ul = h - lo
        vl = hi - h

        # --- left case: repetitions containing the block [h-p, h) ---
        for i in range(ul):
            buf[i] = w[h - 1 - i]
        _zfill(buf, 0, ul, z)

        base2 = ul
        pos = base2
        for i in range(vl):
            buf[pos + i] = w[h + i]
        pos += vl
        buf[pos] = _SEP
        pos += 1
        for i in range(ul):
            buf[pos + i] = w[lo + i]
        pos += ul
        for i in range(vl):
            buf[pos + i] = w[h + i]
        pos += vl
        _zfill(buf, base2, pos, z)

        for p in range(1, ul + 1):
            b = z[p] if p < ul else 0
            f = z[base2 + vl + 1 + ul - p]
            if b + f >= p:
                s0 = h - p - b
                e0 = h + f
                if s0 > 0 and w[s0 - 1] == w[s0 - 1 + p]:
                    continue
                if e0 < n and w[e0] == w[e0 - p]:
                    continue
                out, cnt = _emit(out, cnt, s0, p, e0 - s0)

        # --- right case: repetitions containing the block [h, h+p) ---
        base3 = ul
        pos = base3
        for i in range(ul):
            buf[pos + i] = w[h - 1 - i]
        pos += ul
        buf[pos] = _SEP
        pos += 1
        for i in range(vl):
            buf[pos + i] = w[hi - 1 - i]
        pos += vl
        for i in range(ul):
            buf[pos + i] = w[h - 1 - i]
        pos += ul
        _zfill(buf, base3, pos, z)

        basev = pos
        for i in range(vl):
            buf[basev + i] = w[h + i]
        _zfill(buf, basev, basev + vl, z)

        for p in range(1, vl + 1):
            f = z[basev + p] if p < vl else 0
            b = z[base3 + ul + 1 + vl - p]
            if b + f >= p:
                s0 = h - b
                e0 = h + p + f
                if s0 > 0 and w[s0 - 1] == w[s0 - 1 + p]:
                    continue
                if e0 < n and w[e0] == w[e0 - p]:
                    continue
                out, cnt = _emit(out, cnt, s0, p, e0 - s0)

        stack[top, 0] = lo
        stack[top, 1] = h
        top += 1
        stack[top, 0] = h
        stack[top, 1] = hi
        top += 1

    return out[:cnt]
