"""Classification of binary pure morphic words and growth predicates.

``classify_binary`` decides, for a binary morphism phi with phi(z) = z + u
prolongable on the start letter z, which of three structural properties its
fixed point w satisfies:

* P1 - w is the Thue-Morse word or its complement (depth-bounded claim:
  the generated prefix matches and carries no overlap);
* P2 - some non-trivial block v has every power v^n occurring in w;
* P3 - w contains an overlap a X a X a on a letter a whose iterated images
  grow without bound.

The detectors follow the exhaustive case analysis on the image of the other
letter o: empty image, a pure power of o, or an image containing z (which
forces primitivity).  P1/UNRESOLVED are depth-bounded outcomes; everything
returned as P2 or P3 is confirmed against a generated prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .repetitions import OverlapOccurrence, first_overlap
from .tm import thue_morse_prefix
from .words import (
    FixedPointStream,
    Morphism,
    PeriodicStream,
    WordStream,
    mortal_letters,
)

__all__ = [
    "grows_unboundedly",
    "growth_classes",
    "Classification",
    "classify_binary",
    "restrict_to_subalphabet",
    "RecurrenceResult",
    "empirical_recurrence",
    "word_distance",
]

_SEARCH_CAP = 1 << 20


def _reduced_images(m: Morphism) -> dict[str, str]:
    """Images with mortal letters erased, for non-mortal letters only."""
    mortal = mortal_letters(m)
    return {
        a: "".join(ch for ch in img if ch not in mortal)
        for a, img in m.images.items()
        if a not in mortal
    }


def grows_unboundedly(m: Morphism, letter: str) -> bool:
    """True iff the lengths |phi^n(letter)| tend to infinity.

    After erasing mortal letters every surviving letter keeps at least one
    successor, so it reaches a cycle in the reduced letter graph.  If every
    reachable cycle letter has a reduced image of length one, counts along
    cycles are conserved and lengths stay bounded; a reachable cycle letter
    with reduced image length >= 2 spawns an extra never-vanishing letter on
    each traversal, forcing the lengths to infinity.
    """
    reduced = _reduced_images(m)
    if letter not in reduced:
        return False
    reach = {letter}
    frontier = [letter]
    while frontier:
        nxt = []
        for a in frontier:
            for b in reduced[a]:
                if b not in reach:
                    reach.add(b)
                    nxt.append(b)
        frontier = nxt
    for c in reach:
        if len(reduced[c]) < 2:
            continue
        # is c on a cycle, i.e. reachable from itself in >= 1 steps?
        seen = set(reduced[c])
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                for b in reduced[a]:
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        if c in seen:
            return True
    return False


def growth_classes(m: Morphism) -> dict[str, str]:
    """Partition of the alphabet into mortal, bounded, and growing letters."""
    mortal = mortal_letters(m)
    out = {}
    for a in sorted(m.alphabet):
        if a in mortal:
            out[a] = "mortal"
        elif grows_unboundedly(m, a):
            out[a] = "growing"
        else:
            out[a] = "bounded"
    return out


@dataclass(frozen=True)
class Classification:
    """Outcome tag plus the evidence backing it."""

    tag: str
    matched: str | None = None
    depth_checked: int | None = None
    witness: str | None = None
    case_label: str | None = None
    confirmed_power: int | None = None
    overlap: OverlapOccurrence | None = None
    growing_letter: str | None = None

    def to_json(self) -> dict:
        data: dict = {"tag": self.tag}
        if self.matched is not None:
            data["matched"] = self.matched
        if self.depth_checked is not None:
            data["depth_checked"] = self.depth_checked
        if self.witness is not None:
            data["witness"] = self.witness
        if self.case_label is not None:
            data["case_label"] = self.case_label
        if self.confirmed_power is not None:
            data["confirmed_power"] = self.confirmed_power
        if self.overlap is not None:
            data["overlap"] = {
                "pos": self.overlap.position,
                "u": self.overlap.u,
                "x": self.overlap.x,
            }
        if self.growing_letter is not None:
            data["growing_letter"] = self.growing_letter
        return data


def _find_in_stream(stream: WordStream, target: str, depth: int) -> int:
    """Index of the first occurrence of target, extending the prefix as
    needed (the callers only search for patterns certain to occur)."""
    size = max(depth, 4 * len(target) + 64)
    while size <= _SEARCH_CAP:
        idx = stream.prefix(size).find(target)
        if idx >= 0:
            return idx
        size *= 2
    raise AssertionError(f"pattern {target!r} not found within {_SEARCH_CAP} letters")


def classify_binary(
    m: Morphism, start: str, depth: int = 4096, confirm_power: int = 3
) -> Classification:
    """Decide P1/P2/P3 for the fixed point of a binary morphism at ``start``.

    The morphism must satisfy phi(start) = start + u with u non-empty.  When
    the other letter is erased and u carries no second copy of start, the
    iteration stalls on a finite word; the classified object is then the
    periodic word (phi(start)) repeated, which is what the erased-image case
    yields in general anyway.

    P2 returns only after the witness power v**confirm_power is found in a
    generated prefix; P3 only with a located overlap whose letter passes
    ``grows_unboundedly``.  P1 and UNRESOLVED are claims about the first
    ``depth`` letters.
    """
    if m.alphabet != frozenset({"0", "1"}):
        raise ValueError("classification needs the alphabet {0, 1}")
    if confirm_power < 3:
        raise ValueError("confirm_power must be at least 3")
    z = start
    o = "1" if z == "0" else "0"
    image = m.images[z]
    if len(image) < 2 or image[0] != z:
        raise ValueError(f"morphism is not prolongable on {z!r}")
    u = image[1:]
    v = m.images[o]

    def confirmed_p2(stream: WordStream, witness: str, label: str) -> Classification:
        _find_in_stream(stream, witness * confirm_power, depth)
        return Classification(
            tag="P2",
            witness=witness,
            case_label=label,
            confirmed_power=confirm_power,
        )

    # u made of the start letter alone: the fixed point is z z z ...
    if set(u) == {z}:
        return confirmed_p2(FixedPointStream(m, z), z, "u=0^n")

    # Case I: the other letter is erased, so w = (phi(z)) repeated.
    if v == "":
        return confirmed_p2(PeriodicStream(image), image, "CaseI")

    if set(v) == {o}:
        stream = FixedPointStream(m, z)
        if len(v) >= 2:
            # powers of o pump through phi^k(o) = o**(n**k)
            return confirmed_p2(stream, o, "CaseII-1^n")
        if z not in u:
            # u = o^k and phi(o) = o: the word is z followed by o forever
            return confirmed_p2(stream, o, "CaseII-1^n")
        if u.endswith(o):
            # u = u' z o^k: each application stretches the trailing o-run
            return confirmed_p2(stream, o, "CaseII-tail")
        # u ends in z and contains o: phi^2(z) already carries the overlap
        # z o^k z o^k z, with k the o-run just before the final z of u.
        body = u[:-1]
        run = len(body) - len(body.rstrip(o))
        pattern = z + o * run + z + o * run + z
        pos = _find_in_stream(stream, pattern, depth)
        occ = OverlapOccurrence(pos, z, o * run)
        assert grows_unboundedly(m, z)
        return Classification(tag="P3", overlap=occ, growing_letter=z)

    # Case III: the other letter's image contains z, making phi primitive,
    # so both letters grow; search the generated prefix for an overlap.
    stream = FixedPointStream(m, z)
    prefix = stream.prefix(depth)
    occ = first_overlap(prefix)
    if occ is not None:
        letter = occ.u
        if grows_unboundedly(m, letter):
            return Classification(tag="P3", overlap=occ, growing_letter=letter)
    else:
        for name, head in (("M", "0"), ("M~", "1")):
            if prefix == thue_morse_prefix(depth, start=head):
                return Classification(tag="P1", matched=name, depth_checked=depth)
    return Classification(tag="UNRESOLVED", depth_checked=depth)


def restrict_to_subalphabet(m: Morphism, letters) -> Morphism | None:
    """The restriction of the morphism to a sub-alphabet it preserves,
    or None when some image escapes the sub-alphabet."""
    sub = frozenset(letters)
    if not sub <= m.alphabet:
        raise ValueError("letters must form a sub-alphabet")
    if not sub:
        return None
    restricted = {a: m.images[a] for a in sub}
    for image in restricted.values():
        if any(ch not in sub for ch in image):
            return None
    return Morphism(restricted)


@dataclass(frozen=True)
class RecurrenceResult:
    window: int | None
    witness_gap: tuple[str, int] | None = None


def empirical_recurrence(prefix: str, n: int) -> RecurrenceResult:
    """Smallest N such that every length-N window of the prefix contains
    every length-n subword occurring in the prefix.

    Computed from the occurrence gaps of each subword.  A finite prefix is
    itself a window, so N = len(prefix) always works; the absent branch
    (with its witnessing subword and window start) is kept for the schema.
    """
    if n < 1 or n > len(prefix):
        raise ValueError("need 1 <= n <= len(prefix)")
    length = len(prefix)
    positions: dict[str, list[int]] = {}
    for i in range(length - n + 1):
        positions.setdefault(prefix[i : i + n], []).append(i)
    needed = n
    worst: tuple[str, int] | None = None
    for sub, occs in positions.items():
        cand = max(n + occs[0], length - occs[-1])
        for prev, nxt in zip(occs, occs[1:]):
            cand = max(cand, n - 1 + nxt - prev)
        if cand > needed:
            needed = cand
            worst = (sub, occs[0])
    if needed > length:
        return RecurrenceResult(None, worst)
    return RecurrenceResult(needed)


def word_distance(x: str, y: str) -> Fraction:
    """2**-(length of the longest common prefix); 0 for identical words."""
    if x == y:
        return Fraction(0)
    shared = 0
    for a, b in zip(x, y):
        if a != b:
            break
        shared += 1
    return Fraction(1, 2**shared)
