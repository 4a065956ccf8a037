"""Binary words and the word-building primitives.

Words are immutable sequences over {0, 1}, bit-packed LSB-first into a
single Python integer so that slicing, concatenation, complementation and
periodicity checks are bulk integer operations.  A lazily cached numpy
uint8 view backs the heavy array algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Union

import numpy as np

from .errors import FormatError, SizeError

# Lengths stay well inside signed 64-bit so numpy index math never wraps.
MAX_LETTERS = 1 << 62


def _mask(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


def _int_from_array(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    packed = np.packbits(arr, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


class Word:
    """An immutable finite word over the alphabet {0, 1}."""

    __slots__ = ("_bits", "_n", "_arr", "_hash", "_runs_cache")

    def __init__(self, letters: Union[str, "Word", Iterable[int]] = ""):
        if isinstance(letters, Word):
            bits, n = letters._bits, letters._n
        elif isinstance(letters, str):
            n = len(letters)
            if n and letters.strip("01"):
                bad = letters.strip("01")[0]
                raise FormatError(f"invalid letter {bad!r}; words use only '0' and '1'")
            bits = int(letters[::-1], 2) if n else 0
        else:
            vals = list(letters)
            n = len(vals)
            bits = 0
            for i, v in enumerate(vals):
                if v == 1:
                    bits |= 1 << i
                elif v != 0:
                    raise FormatError(f"invalid letter {v!r}; words use only 0 and 1")
        if n > MAX_LETTERS:
            raise SizeError(f"word length {n} exceeds the {MAX_LETTERS} letter limit")
        self._bits = bits
        self._n = n
        self._arr = None
        self._hash = None
        self._runs_cache = None

    @classmethod
    def from_bits(cls, value: int, length: int) -> "Word":
        """Build a word of `length` letters from an integer whose bit i is letter i."""
        if length < 0 or not 0 <= value < (1 << length):
            raise ValueError(f"value {value} does not fit in {length} letters")
        return cls._raw(value, length)

    @classmethod
    def _raw(cls, bits: int, n: int) -> "Word":
        w = cls.__new__(cls)
        w._bits = bits
        w._n = n
        w._arr = None
        w._hash = None
        w._runs_cache = None
        return w

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            start, stop, step = idx.indices(self._n)
            if step != 1:
                raise ValueError("words only support contiguous slices")
            if stop <= start:
                return Word._raw(0, 0)
            m = stop - start
            return Word._raw((self._bits >> start) & _mask(m), m)
        i = int(idx)
        if i < 0:
            i += self._n
        if not 0 <= i < self._n:
            raise IndexError("letter index out of range")
        return (self._bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self._n):
            yield bits & 1
            bits >>= 1

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        n = self._n + other._n
        if n > MAX_LETTERS:
            raise SizeError(f"concatenation of {n} letters exceeds the size limit")
        return Word._raw(self._bits | (other._bits << self._n), n)

    def __mul__(self, k: int) -> "Word":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("repeat count must be nonnegative")
        if self._n * k > MAX_LETTERS:
            raise SizeError("repetition exceeds the size limit")
        bits = 0
        for i in range(k):
            bits |= self._bits << (i * self._n)
        return Word._raw(bits, self._n * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._bits))
        return self._hash

    def __repr__(self) -> str:
        if self._n <= 64:
            return f"Word('{self.to_text()}')"
        head = self[:48].to_text()
        return f"Word('{head}...', length={self._n})"

    # -- views ---------------------------------------------------------------

    def to_array(self) -> np.ndarray:
        """Letters as a read-only numpy uint8 array (cached)."""
        if self._arr is None:
            if self._n == 0:
                arr = np.zeros(0, dtype=np.uint8)
            else:
                nbytes = (self._n + 7) // 8
                raw = np.frombuffer(self._bits.to_bytes(nbytes, "little"), np.uint8)
                arr = np.unpackbits(raw, bitorder="little")[: self._n]
            arr.setflags(write=False)
            self._arr = arr
        return self._arr

    def to_text(self) -> str:
        if self._n == 0:
            return ""
        return (self.to_array() + ord("0")).astype(np.uint8).tobytes().decode("ascii")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse the text format: one line of '0'/'1', optional trailing newline."""
        if text.endswith("\n"):
            text = text[:-1]
        return cls(text)

    def to_packed(self) -> bytes:
        """Packed format: 8-byte little-endian bit count, then MSB-first bytes."""
        header = self._n.to_bytes(8, "little")
        if self._n == 0:
            return header
        return header + np.packbits(self.to_array(), bitorder="big").tobytes()

    @classmethod
    def from_packed(cls, data: bytes) -> "Word":
        if len(data) < 8:
            raise FormatError("packed word is shorter than its 8-byte length header")
        n = int.from_bytes(data[:8], "little")
        if n > MAX_LETTERS:
            raise SizeError(f"packed length {n} exceeds the {MAX_LETTERS} letter limit")
        payload = data[8:]
        if len(payload) != (n + 7) // 8:
            raise FormatError(
                f"packed word of {n} letters needs {(n + 7) // 8} payload bytes, "
                f"found {len(payload)}"
            )
        if n == 0:
            return cls._raw(0, 0)
        bits = np.unpackbits(np.frombuffer(payload, np.uint8), bitorder="big")
        if bits[n:].any():
            raise FormatError("packed word has nonzero padding bits")
        return cls._raw(_int_from_array(bits[:n]), n)

    # -- helpers used throughout -------------------------------------------

    def startswith(self, prefix: "Word") -> bool:
        return (
            prefix._n <= self._n
            and (self._bits & _mask(prefix._n)) == prefix._bits
        )

    def is_prefix_of(self, other: "Word") -> bool:
        return other.startswith(self)


EMPTY = Word._raw(0, 0)
ZERO = Word._raw(0, 1)
ONE = Word._raw(1, 1)


@dataclass(frozen=True)
class MorphismTable:
    """Letter images of a binary morphism, kept explicit for testing."""

    image_of_0: Word
    image_of_1: Word

    def apply(self, w: Word) -> Word:
        """Reference letter-by-letter substitution (slow path)."""
        out = EMPTY
        for letter in w:
            out = out + (self.image_of_1 if letter else self.image_of_0)
        return out


#: The doubling morphism 0 -> 01, 1 -> 10 that drives every construction here.
THUE_MORSE = MorphismTable(Word("01"), Word("10"))

# 16-bit images of whole bytes under the doubling morphism: bit 2i of the
# image is bit i of the byte, bit 2i+1 its negation.
_MU_BYTE: List[int] = []
for _b in range(256):
    _img = 0
    for _i in range(8):
        bit = (_b >> _i) & 1
        _img |= bit << (2 * _i)
        _img |= (1 - bit) << (2 * _i + 1)
    _MU_BYTE.append(_img)

_MU_ARRAY_CUTOVER = 4096


def mu(w: Word) -> Word:
    """Apply the doubling morphism 0 -> 01, 1 -> 10 once."""
    n = len(w)
    if 2 * n > MAX_LETTERS:
        raise SizeError(f"morphism image of {n} letters exceeds the size limit")
    if n == 0:
        return EMPTY
    if n <= _MU_ARRAY_CUTOVER:
        bits = w._bits
        out = 0
        for k in range((n + 7) // 8):
            out |= _MU_BYTE[(bits >> (8 * k)) & 0xFF] << (16 * k)
        return Word._raw(out & _mask(2 * n), 2 * n)
    arr = w.to_array()
    out = np.empty(2 * n, dtype=np.uint8)
    out[0::2] = arr
    out[1::2] = arr ^ 1
    return Word._raw(_int_from_array(out), 2 * n)


def _letter_image_bits(letter: int, s: int) -> int:
    # Doubling identity: image(s) = image(s-1) followed by its complement.
    bits = letter
    length = 1
    for _ in range(s):
        bits |= (bits ^ _mask(length)) << length
        length *= 2
    return bits


def mu_pow(w: Word, s: int) -> Word:
    """Apply the doubling morphism s times; output length is 2**s * len(w)."""
    if s < 0:
        raise ValueError("iteration count must be nonnegative")
    n = len(w)
    if n << s > MAX_LETTERS:
        raise SizeError(
            f"iterated image of {n} letters under {s} doublings exceeds the size limit"
        )
    if s == 0 or n == 0:
        return w
    if n == 1:
        return Word._raw(_letter_image_bits(w._bits, s), 1 << s)
    if s < 3:
        for _ in range(s):
            w = mu(w)
        return w
    # Block substitution: each letter becomes a whole-byte-aligned block.
    block_len = 1 << s
    b0 = _letter_image_bits(0, s)
    b1 = b0 ^ _mask(block_len)
    nbytes = block_len // 8
    blocks = np.empty((2, nbytes), dtype=np.uint8)
    blocks[0] = np.frombuffer(b0.to_bytes(nbytes, "little"), np.uint8)
    blocks[1] = np.frombuffer(b1.to_bytes(nbytes, "little"), np.uint8)
    out = blocks[w.to_array()]
    return Word._raw(int.from_bytes(out.tobytes(), "little"), n << s)


def delete_prefix(w: Word, t: int) -> Word:
    """Drop the first t letters."""
    if t < 0 or t > len(w):
        raise ValueError(f"cannot delete {t} letters from a word of length {len(w)}")
    return Word._raw(w._bits >> t, len(w) - t)


def zeros(r: int) -> Word:
    """The word consisting of r zeros."""
    if r < 0:
        raise ValueError("length must be nonnegative")
    if r > MAX_LETTERS:
        raise SizeError(f"word length {r} exceeds the {MAX_LETTERS} letter limit")
    return Word._raw(0, r)


def complement(w: Word) -> Word:
    """Swap 0 and 1 letterwise."""
    return Word._raw(w._bits ^ _mask(len(w)), len(w))


def occurrences_00(w: Word) -> List[int]:
    """Sorted 0-indexed positions t with w[t] = w[t+1] = 0."""
    n = len(w)
    if n < 2:
        return []
    a = w.to_array()
    z = a == 0
    return np.flatnonzero(z[:-1] & z[1:]).tolist()


def _alternating_mask(count: int) -> int:
    # count ones at bit offsets 0, 2, 4, ...
    return (4**count - 1) // 3


def in_language_L(w: Word) -> bool:
    """Whether w is a factor of some image of the doubling morphism.

    w qualifies iff for some alignment d in {0, 1} every complete 2-letter
    block of w starting at positions d, d+2, ... is 01 or 10; the partial
    blocks cut off at the ends are unconstrained.
    """
    n = len(w)
    if n <= 1:
        return True
    diff = (w._bits ^ (w._bits >> 1)) & _mask(n - 1)
    for d in (0, 1):
        count = (n - d) // 2
        sel = _alternating_mask(count) << d
        if diff & sel == sel:
            return True
    return False
