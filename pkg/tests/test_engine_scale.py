"""Large-word validation of the repetition engine beyond the oracle bound:
metamorphic symmetries, an independent capped-period enumeration, and direct
verification of reported runs on constructed words."""

import random
from fractions import Fraction

import numpy as np
import pytest

from critexp import (
    Run,
    Word,
    complement,
    max_exponent,
    maximal_repetitions,
    mu,
    mu_pow,
    word_prefix,
    zeros,
)


def reversed_word(w):
    return Word(w.to_text()[::-1])


def big_samples():
    rng = random.Random(99)
    samples = {
        "construction": word_prefix(Fraction(7, 3), 60_000),
        "near_periodic": Word(("0110100110010110" * 5000)[:70_000]),
        "random": Word.from_bits(rng.getrandbits(50_000), 50_000),
        "sparse_ones": Word.from_bits(
            sum(1 << i for i in range(0, 50_000, 997)), 50_000
        ),
        "zero_heavy": zeros(20_000) + Word.from_bits(rng.getrandbits(999), 999) + zeros(5_000),
    }
    return samples


@pytest.fixture(scope="module")
def samples():
    return big_samples()


def capped_period_runs(w, p_max):
    """Independent enumeration of all runs with minimal period <= p_max,
    via vectorized per-period match arrays."""
    arr = w.to_array().astype(np.int16)
    n = len(w)
    best = {}
    for p in range(1, min(p_max, n // 2) + 1):
        m = arr[:-p] == arr[p:]
        if not m.any():
            continue
        padded = np.empty(m.size + 2, dtype=np.int8)
        padded[0] = 0
        padded[-1] = 0
        padded[1:-1] = m
        d = np.diff(padded)
        starts = np.flatnonzero(d == 1)
        ends = np.flatnonzero(d == -1)
        for s, e in zip(starts.tolist(), ends.tolist()):
            if e - s >= p:
                iv = (s, e + p)
                if iv not in best:
                    best[iv] = p
    return sorted(Run(s, p, e - s) for (s, e), p in best.items())


class TestMetamorphic:
    def test_complement_invariance(self, samples):
        for name, w in samples.items():
            assert maximal_repetitions(complement(w)) == maximal_repetitions(w), name

    def test_reversal_mirrors_runs(self, samples):
        for name, w in samples.items():
            n = len(w)
            forward = maximal_repetitions(w)
            backward = maximal_repetitions(reversed_word(w))
            mirrored = sorted(
                Run(n - r.start - r.length, r.period, r.length) for r in backward
            )
            assert forward == mirrored, name

    def test_morphism_image_scales_max_exponent_site(self, samples):
        # the image of a run of period p is periodic at 2p and at least twice
        # as long, so the image's max exponent is at least the original's
        for name, w in samples.items():
            top = max_exponent(w)
            if top is None:
                continue
            image_top = max_exponent(mu(w))
            assert image_top >= top, name


class TestIndependentCappedEnumeration:
    @pytest.mark.parametrize("p_max", [1, 2, 3, 8, 32])
    def test_agrees_on_big_words(self, samples, p_max):
        for name, w in samples.items():
            expected = capped_period_runs(w, p_max)
            got = sorted(r for r in maximal_repetitions(w) if r.period <= p_max)
            assert got == expected, (name, p_max)


class TestReportedRunsDirectly:
    def test_runs_hold_on_big_words(self, samples):
        rng = random.Random(5)
        for name, w in samples.items():
            n = len(w)
            runs = maximal_repetitions(w)
            assert len(set((r.start, r.length) for r in runs)) == len(runs)
            for r in rng.sample(runs, min(len(runs), 300)):
                assert r.length >= 2 * r.period
                # periodicity at sampled offsets plus both maximality borders
                span = r.length - r.period
                for k in {0, 1, span - 1, span // 2}:
                    if 0 <= k < span:
                        assert w[r.start + k] == w[r.start + k + r.period]
                if r.start > 0:
                    assert w[r.start - 1] != w[r.start - 1 + r.period]
                if r.end < n:
                    assert w[r.end] != w[r.end - r.period]

    def test_constructed_word_run_census(self):
        # the two-level 7/3 word: its strongest repetitions are exactly the
        # two scheduled witnesses, nothing stronger hides anywhere
        from critexp import build_schedule, build_word

        word, _ = build_word(build_schedule(Fraction(7, 3), 2))
        runs = maximal_repetitions(word)
        strongest = sorted(
            (r for r in runs if r.exponent > 2), key=lambda r: r.exponent
        )
        assert strongest[-1] == Run(9, 2048, 4704)
        assert Run(0, 32, 73) in strongest
        assert max(r.exponent for r in runs) == Fraction(147, 64)


class TestMorphismPathBoundaries:
    @pytest.mark.parametrize("n", [4095, 4096, 4097, 8192])
    def test_mu_paths_agree_with_table(self, n):
        rng = random.Random(n)
        w = Word.from_bits(rng.getrandbits(n), n)
        from critexp import THUE_MORSE

        assert mu(w) == THUE_MORSE.apply(w)

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_mu_pow_block_path_on_long_words(self, s):
        rng = random.Random(s)
        n = 5000
        w = Word.from_bits(rng.getrandbits(n), n)
        expected = w
        for _ in range(s):
            expected = mu(expected)
        assert mu_pow(w, s) == expected

    def test_serialization_round_trip_at_scale(self):
        w = word_prefix(Fraction(5, 2), 300_000)
        assert Word.from_text(w.to_text() + "\n") == w
        assert Word.from_packed(w.to_packed()) == w
