"""Independent oracles and enumeration helpers shared by the test modules.

Everything here recomputes expectations from first principles (literal
pattern matching, exhaustive enumeration) and deliberately avoids the code
paths under test.
"""

from __future__ import annotations

import random
from itertools import product

from plcword import Morphism


def is_overlap_pattern(sub: str) -> bool:
    """Literal test: is this exact string of the form u X u X u?"""
    length = len(sub)
    if length < 3 or length % 2 == 0:
        return False
    x_len = (length - 3) // 2
    u = sub[0]
    return (
        sub[x_len + 1] == u
        and sub[2 * x_len + 2] == u
        and sub[1 : x_len + 1] == sub[x_len + 2 : 2 * x_len + 2]
    )


def naive_find_overlaps(word: str) -> list[tuple[int, str, str]]:
    """All-substrings oracle, in (position, pattern length) order."""
    found = []
    n = len(word)
    for i in range(n):
        for length in range(3, n - i + 1, 2):
            if is_overlap_pattern(word[i : i + length]):
                x_len = (length - 3) // 2
                found.append((i, word[i], word[i + 1 : i + 1 + x_len]))
    return found


def naive_is_overlap_free(word: str) -> bool:
    n = len(word)
    return not any(
        is_overlap_pattern(word[i : i + length])
        for i in range(n)
        for length in range(3, n - i + 1, 2)
    )


def naive_fractional_squares(
    word: str, min_frac: int, squares: int
) -> list[tuple[int, str, int, int]]:
    """Quadruple oracle: literal period-copy comparison, maximal window."""
    n = len(word)
    min_repeats = 2 if squares == 3 else 1
    out = []
    for pos in range(n):
        for m in range(1, n - pos + 1):
            v = word[pos : pos + m]
            best = 0
            for total in range(m, n - pos + 1):
                repeats, frac = divmod(total, m)
                if word[pos : pos + total] == v * repeats + v[:frac]:
                    best = total
                else:
                    break
            repeats, frac = divmod(best, m)
            if repeats >= min_repeats and frac >= min_frac:
                out.append((pos, v, repeats, frac))
    return out


def naive_longest_overlap_free(word: str) -> tuple[int, int]:
    """Exhaustive window scan for the leftmost longest overlap-free subword."""
    n = len(word)
    for length in range(n, 0, -1):
        for pos in range(n - length + 1):
            if naive_is_overlap_free(word[pos : pos + length]):
                return pos, length
    return 0, 0


def overlap_free_census(max_len: int) -> dict[int, list[str]]:
    """All overlap-free binary words, by length, via suffix backtracking."""
    by_len: dict[int, list[str]] = {0: [""]}
    frontier = [""]
    for length in range(1, max_len + 1):
        grown = []
        for word in frontier:
            for ch in "01":
                cand = word + ch
                if _suffix_overlap_free(cand):
                    grown.append(cand)
        by_len[length] = grown
        frontier = grown
    return by_len


def _suffix_overlap_free(word: str) -> bool:
    """No overlap ending at the last letter (the prefix is known clean)."""
    n = len(word)
    for m in range(1, (n - 1) // 2 + 1):
        start = n - (2 * m + 1)
        if start < 0:
            break
        if all(word[j] == word[j + m] for j in range(start, n - m)):
            return False
    return True


def extend_overlap_free(word: str, target_len: int, rng: random.Random) -> str | None:
    """Random overlap-free extension via depth-first backtracking."""
    if len(word) >= target_len:
        return word[:target_len]
    letters = ["0", "1"]
    rng.shuffle(letters)
    for ch in letters:
        cand = word + ch
        if _suffix_overlap_free(cand):
            deeper = extend_overlap_free(cand, target_len, rng)
            if deeper is not None:
                return deeper
    return None


def binary_words_upto(max_len: int) -> list[str]:
    out = [""]
    for length in range(1, max_len + 1):
        out.extend("".join(bits) for bits in product("01", repeat=length))
    return out


def prolongable_binary_morphisms(max_image_len: int = 3):
    """All (morphism, start) pairs over {0,1} with image lengths <= 3 where
    the start image begins with the start letter and has length >= 2."""
    images = binary_words_upto(max_image_len)
    pairs = []
    for start in "01":
        other = "1" if start == "0" else "0"
        starts = [w for w in images if len(w) >= 2 and w[0] == start]
        for img_start in starts:
            for img_other in images:
                pairs.append(
                    (Morphism({start: img_start, other: img_other}), start)
                )
    return pairs


def random_morphism(rng: random.Random, max_letters: int = 3, max_image_len: int = 3):
    letters = "012"[: rng.randint(1, max_letters)]
    images = {
        a: "".join(rng.choice(letters) for _ in range(rng.randint(0, max_image_len)))
        for a in letters
    }
    return Morphism(images)


def iterated_lengths(m: Morphism, letter: str, steps: int) -> list[int]:
    """|phi^n(letter)| for n = 0..steps, via exact letter-count vectors."""
    counts = dict.fromkeys(m.alphabet, 0)
    counts[letter] = 1
    lengths = [1]
    for _ in range(steps):
        grown = dict.fromkeys(m.alphabet, 0)
        for a, c in counts.items():
            if c:
                for b in m.images[a]:
                    grown[b] += c
        counts = grown
        lengths.append(sum(counts.values()))
    return lengths


def random_digit_word(rng: random.Random, length: int, base: int) -> str:
    return "".join(str(rng.randrange(base)) for _ in range(length))
