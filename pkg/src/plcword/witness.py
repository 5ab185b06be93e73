"""Certificates forcing small values of the functional q * ||q p^k x||.

A repetition window v^r v[:f] starting after k digits of the base-p
expansion of x pins x' = {p^k x} to within p**-(r*m + f) of the rational
r/q whose expansion repeats v forever, where m = |v| and q is the reduced
denominator (p**m - 1) / gcd(p**m - 1, value(v)).  Since q * (r/q) is an
integer,

    q * ||q p^k x|| <= q**2 * |x' - r/q| < q**2 * p**-(r*m + f),

and the right-hand side is below p**-s for an exponent s read off the
window alone:

* kind "square3" (needs r >= 2): q <= p**m - 1 gives s = m*(r-2) + f,
  the length of the window beyond two whole copies;
* kind "gcd" (any r >= 1): q <= p**ell, with ell the power bound of
  ``gcd_bound``, gives s = m*(r-1) + f - 2*ell.

s may be zero or negative, in which case the certificate is valid but
vacuous (its bound is >= 1) and is flagged rather than dropped.

Verification is purely combinatorial: re-reading the claimed digit window
from a prefix is enough, because the inequality then holds for every real
number whose expansion extends that prefix.  ``brute_force_min`` is the
independent cross-check: an exact interval minimisation of the functional
over small q and k that knows nothing about periods or gcds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import format_rational, gcd_bound, word_value
from .repetitions import (
    ComplementOccurrence,
    RepetitionOccurrence,
    find_complement_squares,
    find_fractional_squares,
)
from .words import WordStream, complement

__all__ = [
    "PlcCertificate",
    "PrefixTooShortError",
    "VerificationResult",
    "BruteForceResult",
    "certificate_from_occurrence",
    "verify_certificate",
    "brute_force_min",
    "scan_and_certify",
    "complement_to_gcd_occurrence",
]

KIND_SQUARE3 = "square3"
KIND_GCD = "gcd"


class PrefixTooShortError(ValueError):
    """The digit prefix does not cover the certificate window."""

    def __init__(self, required: int, available: int):
        super().__init__(f"need {required} letters, prefix has {available}")
        self.required = required
        self.available = available


@dataclass(frozen=True)
class PlcCertificate:
    """A verified-window approximation certificate (p, kind, k, q, bound).

    The window is occurrence.pattern() read at position k; whenever a digit
    word begins with k arbitrary digits followed by that window, every real
    x extending it satisfies q * ||q p^k x|| < bound = p**-s.
    """

    p: int
    kind: str
    k: int
    q: int
    occurrence: RepetitionOccurrence
    s: int
    bound: Fraction

    @property
    def vacuous(self) -> bool:
        return self.s <= 0

    @property
    def window_len(self) -> int:
        return self.occurrence.window_len

    def to_json(self) -> dict:
        occ = self.occurrence
        return {
            "p": self.p,
            "kind": self.kind,
            "k": self.k,
            "q": self.q,
            "period": occ.period_word,
            "repeats": occ.whole_repeats,
            "frac_len": occ.frac_len,
            "s": self.s,
            "bound": format_rational(self.bound),
            "vacuous": self.vacuous,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlcCertificate":
        occ = RepetitionOccurrence(
            data["k"], data["period"], data["repeats"], data["frac_len"]
        )
        return cls(
            p=data["p"],
            kind=data["kind"],
            k=data["k"],
            q=data["q"],
            occurrence=occ,
            s=data["s"],
            bound=Fraction(data["bound"]),
        )


def certificate_from_occurrence(
    word: str, occ: RepetitionOccurrence, base: int, kind: str
) -> PlcCertificate:
    """Build a certificate from a genuine occurrence (re-verified in word).

    k is the occurrence start; an all-zero period gives gcd = p**m - 1 and
    q = 1, the certificate of an exactly rational tail.
    """
    if kind not in (KIND_SQUARE3, KIND_GCD):
        raise ValueError(f"unknown certificate kind {kind!r}")
    if not occ.matches(word):
        raise ValueError("occurrence does not match the word")
    if kind == KIND_SQUARE3 and occ.whole_repeats < 2:
        raise ValueError("square3 certificates need at least two whole copies")
    m = occ.period
    bound_data = gcd_bound(occ.period_word, base)
    q = bound_data.q_max
    if kind == KIND_SQUARE3:
        s = m * (occ.whole_repeats - 2) + occ.frac_len
    else:
        s = m * (occ.whole_repeats - 1) + occ.frac_len - 2 * bound_data.ell
    return PlcCertificate(
        p=base,
        kind=kind,
        k=occ.position,
        q=q,
        occurrence=occ,
        s=s,
        bound=Fraction(base) ** (-s),
    )


@dataclass(frozen=True)
class VerificationResult:
    combinatorial_ok: bool
    window_checked: int
    guaranteed_bound: Fraction | None


def verify_certificate(
    prefix: str, cert: PlcCertificate, base: int
) -> VerificationResult:
    """Check the certificate window digit-for-digit against a prefix.

    Needs k + window letters.  No numeric error analysis is involved: when
    the window matches, the bound holds for every continuation of the
    prefix, so digits after the window can never change the outcome.
    """
    if base != cert.p:
        raise ValueError(f"certificate is for base {cert.p}, got {base}")
    window = cert.window_len
    required = cert.k + window
    if len(prefix) < required:
        raise PrefixTooShortError(required, len(prefix))
    ok = prefix[cert.k : required] == cert.occurrence.pattern()
    return VerificationResult(ok, window, cert.bound if ok else None)


@dataclass(frozen=True)
class BruteForceResult:
    q: int
    k: int
    value_lo: Fraction
    value_hi: Fraction


def _dist_interval(a: int, b: int, den: int) -> tuple[Fraction, Fraction]:
    """Exact range of ||y|| for y in [a/den, b/den], a <= b."""
    if b - a >= den:
        return Fraction(0), Fraction(1, 2)
    ra = a % den
    rb = b % den
    if ra == 0 or rb == 0 or a // den != b // den:
        lo = Fraction(0)
    else:
        lo = Fraction(min(ra, den - rb), den)
    # a half-integer in the interval means some odd multiple of den in [2a, 2b]
    c = -((-2 * a) // den)
    f = (2 * b) // den
    if f >= c and (c % 2 == 1 or f > c):
        hi = Fraction(1, 2)
    else:
        hi = Fraction(max(min(ra, den - ra), min(rb, den - rb)), den)
    return lo, hi


def brute_force_min(
    prefix: str, base: int, max_q: int, max_k: int
) -> BruteForceResult:
    """Exact interval minimisation of q * ||q p^k x|| over small q and k.

    x is only known to lie in [prefix_value, prefix_value + p**-len], so
    each candidate gets a closed enclosure; the reported pair minimises the
    upper bound, ties broken by smaller k then smaller q.
    """
    if max_q < 1:
        raise ValueError("max_q must be at least 1")
    if max_k < 0:
        raise ValueError("max_k must be non-negative")
    length = len(prefix)
    value = word_value(prefix, base) if prefix else 0
    best: tuple[Fraction, int, int] | None = None
    best_lo = Fraction(0)
    for k in range(max_k + 1):
        if k >= length:
            shifted, den = 0, 1
        else:
            den = base ** (length - k)
            shifted = value % den
        for q in range(1, max_q + 1):
            a = q * shifted
            lo, hi = _dist_interval(a, a + q, den)
            q_lo, q_hi = q * lo, q * hi
            key = (q_hi, k, q)
            if best is None or key < best:
                best = key
                best_lo = q_lo
    assert best is not None
    return BruteForceResult(q=best[2], k=best[1], value_lo=best_lo, value_hi=best[0])


def complement_to_gcd_occurrence(
    occ: ComplementOccurrence, base: int
) -> RepetitionOccurrence:
    """Recast v v~ v[:f] as one copy of the period u = v v~ plus u[:f].

    Valid because f <= |v|, so v[:f] is also a prefix of u; the complement
    structure then pays off through gcd(p**(2m) - 1, value(u)), which the
    divisibility identity makes at least p**m - 1.
    """
    u = occ.period_word + complement(occ.period_word, base)
    return RepetitionOccurrence(occ.position, u, 1, occ.frac_len)


def scan_and_certify(
    stream: WordStream, base: int, depth: int, target_s: int
) -> list[PlcCertificate]:
    """Scan a prefix for repetitions and return certificates with s >= target_s.

    Builds gcd-kind certificates from every fractional square and every
    complement square, square3-kind certificates where two whole copies are
    present, and sorts by decreasing score (then position, period, kind).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    prefix = stream.prefix(depth)
    seen: dict[tuple, PlcCertificate] = {}

    def add(occ: RepetitionOccurrence, kind: str) -> None:
        cert = certificate_from_occurrence(prefix, occ, base, kind)
        key = (kind, occ.position, occ.period_word, occ.whole_repeats, occ.frac_len)
        if cert.s >= target_s and key not in seen:
            seen[key] = cert

    for occ in find_fractional_squares(prefix, 1, 2):
        add(occ, KIND_GCD)
        if occ.whole_repeats >= 2:
            add(occ, KIND_SQUARE3)
    for comp in find_complement_squares(prefix, base, 1):
        add(complement_to_gcd_occurrence(comp, base), KIND_GCD)

    return sorted(
        seen.values(),
        key=lambda c: (-c.s, c.k, c.occurrence.period, c.kind),
    )
