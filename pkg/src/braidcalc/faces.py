"""Strand deletion (faces) and trivial-strand insertion (cofaces).

Deleting strand i from an n-strand braid word walks the word once,
tracking the deleted strand's current position p: a crossing involving
the tracked strand is dropped (and p updated), any other crossing is
kept with its index shifted down when it sits above the tracked strand.

Inserting a trivial strand at position i maps letterwise:

    s_j -> s_j              (j < i-1)
    s_{i-1} -> s_i s_{i-1} s_i^{-1}
    s_j -> s_{j+1}          (j > i-1)

Both maps are homomorphisms on words by construction; the simplicial-
style identities they satisfy are exercised by the test suite through
the equality oracle.
"""

from __future__ import annotations

from .braids import BraidWord, Perm
from .words import GroupWord, a_alphabet, a_sym

__all__ = [
    "coface_on_pure_gen",
    "delete_strand",
    "face_on_pure_gen",
    "insert_strand",
    "perm_face",
]


def delete_strand(braid: BraidWord, i: int) -> BraidWord:
    """Remove the strand starting at position i; result lives in B_{n-1}."""
    n = braid.strands
    if not 1 <= i <= n:
        raise ValueError(f"strand {i} out of range for {n} strands")
    p = i
    out = []
    for j, sign in braid.letters:
        if j == p:
            p += 1
        elif j == p - 1:
            p -= 1
        elif j > p:
            out.append((j - 1, sign))
        else:
            out.append((j, sign))
    return BraidWord(n - 1, tuple(out))


def insert_strand(braid: BraidWord, i: int) -> BraidWord:
    """Insert a trivial strand at position i (1 <= i <= n+1)."""
    n = braid.strands
    if not 1 <= i <= n + 1:
        raise ValueError(f"insertion position {i} out of range for {n} strands")
    out = []
    for j, sign in braid.letters:
        if j < i - 1:
            out.append((j, sign))
        elif j == i - 1:
            # s_{i-1} -> s_i s_{i-1} s_i^{-1}, respecting the letter sign
            out.extend([(i, 1), (i - 1, sign), (i, -1)])
        else:
            out.append((j + 1, sign))
    return BraidWord(n + 1, tuple(out))


def perm_face(perm: Perm, i: int) -> Perm:
    """Delete i from the domain and perm(i) from the codomain, renumbering."""
    n = perm.size
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for size {n}")
    removed = perm(i)
    images = []
    for k in range(1, n):
        source = k if k < i else k + 1
        value = perm(source)
        images.append(value if value < removed else value - 1)
    return Perm(tuple(images))


def face_on_pure_gen(i: int, pair: tuple[int, int], n: int) -> GroupWord:
    """Image of the band symbol A_{s,t} under strand-i deletion.

    The band dies when the deleted strand is one of its two ends and is
    renumbered otherwise.  Output is a word over the (n-1)-strand band
    alphabet: empty or a single symbol.
    """
    s, t = pair
    if not 1 <= s < t <= n:
        raise ValueError(f"band A_{s},{t} out of range for {n} strands")
    if not 1 <= i <= n:
        raise ValueError(f"strand {i} out of range for {n} strands")
    if i in (s, t):
        return GroupWord.identity(a_alphabet(n - 1))
    s2 = s - 1 if s > i else s
    t2 = t - 1 if t > i else t
    return GroupWord.single(a_sym(s2, t2, n - 1))


def coface_on_pure_gen(i: int, pair: tuple[int, int]) -> tuple[int, int]:
    """Image index pair of A_{s,t} under trivial-strand insertion at i."""
    s, t = pair
    if not 1 <= s < t:
        raise ValueError(f"band A_{s},{t} is malformed")
    if i < 1:
        raise ValueError("insertion position must be >= 1")
    if i <= s:
        return (s + 1, t + 1)
    if i <= t:
        return (s, t + 1)
    return (s, t)
