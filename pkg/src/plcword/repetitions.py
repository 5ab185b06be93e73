"""Repetition structures in finite words.

Detects overlaps u X u X u (u a letter), fractional squares v^r v[:f], the
complement variant v v~ v[:f] over a digit alphabet, and longest
overlap-free subwords.  The detectors below are the plain quadratic scans
over (position, period); ``first_overlap`` is the optimised existence scan
used on long words and must stay result-identical to the naive path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .words import complement

__all__ = [
    "RepetitionOccurrence",
    "OverlapOccurrence",
    "ComplementOccurrence",
    "SubwordSpan",
    "find_overlaps",
    "first_overlap",
    "is_overlap_free",
    "find_fractional_squares",
    "find_complement_squares",
    "longest_overlap_free_subword",
]


@dataclass(frozen=True)
class RepetitionOccurrence:
    """A located v^r v[:f] with r whole copies and a proper fractional tail.

    Stored normalised: 0 <= frac_len < |period_word|, extra whole copies go
    into whole_repeats.  The exponent is whole_repeats + frac_len/|v|.
    """

    position: int
    period_word: str
    whole_repeats: int
    frac_len: int

    @property
    def period(self) -> int:
        return len(self.period_word)

    @property
    def window_len(self) -> int:
        return self.whole_repeats * len(self.period_word) + self.frac_len

    def pattern(self) -> str:
        return self.period_word * self.whole_repeats + self.period_word[: self.frac_len]

    def matches(self, word: str) -> bool:
        end = self.position + self.window_len
        return end <= len(word) and word[self.position : end] == self.pattern()


@dataclass(frozen=True)
class OverlapOccurrence:
    """A located u X u X u with u a single letter."""

    position: int
    u: str
    x: str

    def pattern(self) -> str:
        return self.u + self.x + self.u + self.x + self.u

    def matches(self, word: str) -> bool:
        end = self.position + 2 * len(self.x) + 3
        return end <= len(word) and word[self.position : end] == self.pattern()


@dataclass(frozen=True)
class ComplementOccurrence:
    """A located v v~ v[:f] where v~ is the digitwise complement of v.

    Unlike a plain repetition the fractional part may reach the full period
    (f <= |v|); the window is v followed by its complement followed by the
    first f letters of v.
    """

    position: int
    period_word: str
    frac_len: int

    def pattern(self, base: int) -> str:
        v = self.period_word
        return v + complement(v, base) + v[: self.frac_len]


class SubwordSpan(NamedTuple):
    position: int
    length: int


def find_overlaps(word: str, limit: int | None = None) -> list[OverlapOccurrence]:
    """All overlaps, in left-to-right then shortest-X order, up to ``limit``.

    Empty result iff the word is overlap-free.
    """
    n = len(word)
    found: list[OverlapOccurrence] = []
    for pos in range(n):
        max_xlen = (n - pos - 3) // 2
        for xlen in range(max_xlen + 1):
            u = word[pos]
            if word[pos + xlen + 1] != u or word[pos + 2 * xlen + 2] != u:
                continue
            if word[pos + 1 : pos + xlen + 1] == word[pos + xlen + 2 : pos + 2 * xlen + 2]:
                found.append(OverlapOccurrence(pos, u, word[pos + 1 : pos + xlen + 1]))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def first_overlap(word: str) -> OverlapOccurrence | None:
    """One overlap occurrence, or None when the word is overlap-free.

    Scans period lengths in increasing order; an overlap with period m is a
    run of m+1 consecutive positions i with word[i] == word[i+m].  Returns
    the leftmost occurrence of the smallest period.
    """
    n = len(word)
    if n < 3:
        return None
    arr = np.frombuffer(word.encode("ascii"), dtype=np.uint8)
    for m in range(1, (n - 1) // 2 + 1):
        eq = arr[: n - m] == arr[m:]
        padded = np.empty(len(eq) + 2, dtype=bool)
        padded[0] = padded[-1] = False
        padded[1:-1] = eq
        delta = np.diff(padded.astype(np.int8))
        starts = np.flatnonzero(delta == 1)
        ends = np.flatnonzero(delta == -1)
        hits = np.flatnonzero(ends - starts >= m + 1)
        if hits.size:
            i = int(starts[hits[0]])
            return OverlapOccurrence(i, word[i], word[i + 1 : i + m])
    return None


def is_overlap_free(word: str) -> bool:
    """True iff the word contains no subword u X u X u."""
    return first_overlap(word) is None


def _period_extension(word: str, pos: int, m: int) -> int:
    """Length of the longest prefix of word[pos:] with period m (>= m)."""
    n = len(word)
    t = m
    while pos + t < n and word[pos + t] == word[pos + t - m]:
        t += 1
    return t


def find_fractional_squares(
    word: str, min_frac: int, squares: int
) -> list[RepetitionOccurrence]:
    """Fractional square occurrences, ordered by position then period.

    With squares=3 only occurrences with at least two whole copies are
    reported; with squares=2 one copy suffices.  For each (position, period)
    the extension is maximal, and the fractional length after normalisation
    must reach ``min_frac``.
    """
    if min_frac < 1:
        raise ValueError("min_frac must be at least 1")
    if squares not in (2, 3):
        raise ValueError("squares must be 2 or 3")
    min_repeats = 2 if squares == 3 else 1
    n = len(word)
    found: list[RepetitionOccurrence] = []
    for pos in range(n):
        max_m = (n - pos) // min_repeats
        for m in range(1, max_m + 1):
            t = _period_extension(word, pos, m)
            repeats, frac = divmod(t, m)
            if repeats >= min_repeats and frac >= min_frac:
                occ = RepetitionOccurrence(pos, word[pos : pos + m], repeats, frac)
                assert occ.matches(word)
                found.append(occ)
    return found


def find_complement_squares(
    word: str, base: int, min_frac: int
) -> list[ComplementOccurrence]:
    """Occurrences of v v~ v[:f] with f >= min_frac, by position then period."""
    if min_frac < 1:
        raise ValueError("min_frac must be at least 1")
    n = len(word)
    found: list[ComplementOccurrence] = []
    for pos in range(n):
        for m in range(1, (n - pos) // 2 + 1):
            v = word[pos : pos + m]
            if word[pos + m : pos + 2 * m] != complement(v, base):
                continue
            f = 0
            while f < m and pos + 2 * m + f < n and word[pos + 2 * m + f] == v[f]:
                f += 1
            if f >= min_frac:
                found.append(ComplementOccurrence(pos, v, f))
    return found


def longest_overlap_free_subword(word: str) -> SubwordSpan:
    """The leftmost longest contiguous overlap-free subword.

    Sliding window: overlap-freeness is closed under taking subwords, so the
    right end moves once per letter and the left end only ever advances past
    the start of an overlap that would end at the new letter.
    """
    n = len(word)
    if n == 0:
        return SubwordSpan(0, 0)
    best_pos, best_len = 0, 1
    left = 0
    for right in range(n):
        cut = -1
        for m in range(1, (right - left) // 2 + 1):
            start = right - 2 * m
            if start < left:
                break
            if all(word[j] == word[j + m] for j in range(start, right - m + 1)):
                cut = max(cut, start)
        if cut >= 0:
            left = cut + 1
        if right - left + 1 > best_len:
            best_pos, best_len = left, right - left + 1
    return SubwordSpan(best_pos, best_len)
