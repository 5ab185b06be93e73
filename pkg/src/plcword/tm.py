"""Thue-Morse machinery: overlap-free decomposition and coded constants.

Every overlap-free binary word x factors as u mu(y) v with |u|, |v| <= 2,
where mu is the Thue-Morse morphism 0 -> 01, 1 -> 10, and y is again
overlap-free.  Iterating the factorisation to depth d exhibits mu^d(a) for
a single letter a inside x, i.e. a prefix of the Thue-Morse word M (a = 0)
or of its complement (a = 1) of length 2**d >= (|x| + 4) / 8.

``tm_constant`` evaluates truncations of the real numbers whose base-n
digits are a two-letter coding of M, and ``tm_identity_suite`` checks the
digitwise affine identities between those constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import prefix_value
from .repetitions import is_overlap_free
from .words import FixedPointStream, Morphism, complement

__all__ = [
    "MU",
    "thue_morse_prefix",
    "Decomposition",
    "decompose",
    "OverlapFreePair",
    "mu_preserves_overlap_free",
    "DecompositionChain",
    "extract_tm_prefix",
    "tm_digit_word",
    "tm_constant",
    "IdentityCheck",
    "tm_identity_suite",
]

MU = Morphism({"0": "01", "1": "10"})

_TM_STREAMS = {"0": FixedPointStream(MU, "0"), "1": FixedPointStream(MU, "1")}

_PAIR_PREIMAGE = {"01": "0", "10": "1"}


def thue_morse_prefix(n: int, start: str = "0") -> str:
    """First n letters of the Thue-Morse word (start '0') or its complement."""
    return _TM_STREAMS[start].prefix(n)


@dataclass(frozen=True)
class Decomposition:
    """x = u + mu(y) + v with |u|, |v| <= 2."""

    u: str
    y: str
    v: str

    def reassemble(self) -> str:
        return self.u + MU.apply(self.y) + self.v


def _mu_preimage(word: str) -> str | None:
    if len(word) % 2:
        return None
    letters = []
    for i in range(0, len(word), 2):
        letter = _PAIR_PREIMAGE.get(word[i : i + 2])
        if letter is None:
            return None
        letters.append(letter)
    return "".join(letters)


def decompose(x: str) -> Decomposition:
    """Factor an overlap-free binary word as u mu(y) v, maximising |y|.

    Ties are broken by the smallest |u|.  Words containing an overlap are
    rejected: the factorisation is only guaranteed without overlaps.
    """
    if not x:
        raise ValueError("word must be non-empty")
    if set(x) - {"0", "1"}:
        raise ValueError("word must be over the alphabet {0, 1}")
    if not is_overlap_free(x):
        raise ValueError("word contains an overlap")
    n = len(x)
    for total in range(n % 2, min(n, 4) + 1, 2):
        for ulen in range(total + 1):
            vlen = total - ulen
            if ulen > 2 or vlen > 2:
                continue
            y = _mu_preimage(x[ulen : n - vlen])
            if y is not None:
                return Decomposition(x[:ulen], y, x[n - vlen :])
    raise AssertionError(f"no factorisation for overlap-free word {x!r}")


@dataclass(frozen=True)
class OverlapFreePair:
    y_free: bool
    mu_y_free: bool


def mu_preserves_overlap_free(y: str) -> OverlapFreePair:
    """Overlap-freeness of y and of mu(y); the two flags always agree."""
    return OverlapFreePair(is_overlap_free(y), is_overlap_free(MU.apply(y)))


@dataclass(frozen=True)
class DecompositionChain:
    """Iterated factorisation x = u1 mu(u2) ... mu^d(core) ... mu(v2) v1.

    ``letter`` is the leftmost letter of the deepest core; mu^depth(letter)
    is the length-2**depth prefix of M ('0') or of its complement ('1') and
    occurs in x at ``offset``.
    """

    levels: tuple[tuple[str, str], ...]
    core: str
    depth: int
    tm_prefix_len: int
    offset: int
    letter: str
    target: str

    def reassemble(self) -> str:
        word = self.core
        for u, v in reversed(self.levels):
            word = u + MU.apply(word) + v
        return word


def extract_tm_prefix(x: str) -> DecompositionChain:
    """Locate a long Thue-Morse (or complement) prefix inside an
    overlap-free word.

    Factorises to depth max(0, floor(log2(K+4)) - 2) for K = |x|, stopping
    early only when the core would empty, which can happen only once the
    core has at most 4 letters; either way 2**depth >= (K + 4) / 8.
    """
    if not x:
        raise ValueError("word must be non-empty")
    target_depth = max(0, (len(x) + 4).bit_length() - 3)
    levels: list[tuple[str, str]] = []
    core = x
    while len(levels) < target_depth:
        step = decompose(core)
        if not step.y:
            break
        levels.append((step.u, step.v))
        core = step.y
    depth = len(levels)
    length = 2**depth
    assert 8 * length >= len(x) + 4, "factorisation depth fell short"
    offset = sum(len(u) << i for i, (u, _) in enumerate(levels))
    letter = core[0]
    target = "M" if letter == "0" else "M~"
    prefix = thue_morse_prefix(length, start=letter)
    assert x[offset : offset + length] == prefix, "extracted window mismatch"
    return DecompositionChain(
        levels=tuple(levels),
        core=core,
        depth=depth,
        tm_prefix_len=length,
        offset=offset,
        letter=letter,
        target=target,
    )


def tm_digit_word(a: int, b: int, length: int) -> str:
    """Digits of the coding of the Thue-Morse word sending 0 -> a, 1 -> b."""
    if not 0 <= a <= 9 or not 0 <= b <= 9:
        raise ValueError("coded digits must be single decimal digits")
    table = {"0": str(a), "1": str(b)}
    return "".join(table[ch] for ch in thue_morse_prefix(length))


def tm_constant(a: int, b: int, base: int, length: int) -> Fraction:
    """Truncated value of the coded Thue-Morse constant in the given base."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if a >= base or b >= base:
        raise ValueError(f"coded digits must be below the base {base}")
    return prefix_value(tm_digit_word(a, b, length), base)


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    params: dict
    ok: bool


def tm_identity_suite(base: int, length: int) -> list[IdentityCheck]:
    """Exact truncation-level checks of the coded-constant identities.

    No digitwise carries occur in any of them: r*s(i) and k*s(i) + l stay
    below the base under the stated ranges, and the complement identity is
    the digit map b -> base-1-b.

    * scaling: r * TM(0,1) = TM(0,r) for 0 <= r < base;
    * complement: the digit word of TM(0,base-1) complemented is the digit
      word of TM(base-1,0), and 1 - X - base**-L equals the complement value;
    * shift: TM(0,k) + 0.lll... = TM(l,l+k) and TM(k,0) + 0.lll... =
      TM(k+l,l) for l <= base-1-k.
    """
    checks: list[IdentityCheck] = []
    unit = tm_constant(0, 1, base, length)
    for r in range(base):
        ok = r * unit == tm_constant(0, r, base, length)
        checks.append(IdentityCheck("scaling", {"r": r}, ok))

    top = base - 1
    word_down = tm_digit_word(0, top, length)
    word_up = tm_digit_word(top, 0, length)
    digit_ok = complement(word_down, base) == word_up
    value_ok = (
        1 - tm_constant(0, top, base, length) - Fraction(1, base**length)
        == tm_constant(top, 0, base, length)
    )
    checks.append(IdentityCheck("complement", {}, digit_ok and value_ok))

    for k in range(base):
        for ell in range(base - k):
            run = prefix_value(str(ell) * length, base)
            ok = (
                tm_constant(0, k, base, length) + run
                == tm_constant(ell, ell + k, base, length)
            ) and (
                tm_constant(k, 0, base, length) + run
                == tm_constant(k + ell, ell, base, length)
            )
            checks.append(IdentityCheck("shift", {"k": k, "l": ell}, ok))
    return checks
