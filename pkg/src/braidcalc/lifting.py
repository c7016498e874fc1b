"""Raising Brunnian braids to Cohen braids on more strands.

The constructions here all follow one mechanism: push a word in the
last-column bands of P_m through strand-insertion index maps and
multiply the images in a fixed order.  One insertion gives the
one-strand lift whose every face is the original word; iterating over
all index combinations gives the multi-strand spread and the full lift;
the James-Hopf product plays the same game with coface maps on whole
braids.  On top of these sit the Hopf decomposition of a pure Cohen
braid into Brunnian layers and the solver for the face system
d_1(beta) = ... = d_n(beta) = alpha.

Order conventions (pinned by worked examples in the test suite):
  - spread multi-indices are enumerated lexicographically, leftmost
    position most significant, and the leftmost index is applied first;
  - James-Hopf multi-indices are enumerated colexicographically,
    rightmost position most significant.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .braids import (
    DEFAULT_LETTER_BUDGET,
    BraidWord,
    Perm,
    compose,
    half_twist,
    invert_braid,
    is_pure,
    perm_of,
)
from .cohen import Braidlike, common_face, is_brunnian
from .combing import PureAWord, coface_on_aword
from .faces import insert_strand
from .words import GroupWord, a_sym

__all__ = [
    "apply_skip",
    "cohen_lift",
    "full_lift",
    "hopf_decompose",
    "james_hopf",
    "reassemble",
    "skip_map",
    "solve_cohen_system",
    "tau_spread",
]


def skip_map(i: int, n: int) -> tuple[int, ...]:
    """The injection {1..n} -> {1..n+1} that skips the value i."""
    if not 1 <= i <= n:
        raise ValueError(f"skip index {i} out of range for {n}")
    return tuple(k if k < i else k + 1 for k in range(1, n + 1))


def _require_last_column(word: GroupWord, n: int) -> None:
    for sym, _ in word.syllables:
        if sym.index[1] != n:
            raise ValueError(
                f"expected a word in the bands A_(.,{n}), found {sym}"
            )


def apply_skip(word: GroupWord, i: int, n: int) -> GroupWord:
    """Substitute A_(k,n) by A_(f(k),n+1) for the skip map f omitting i.

    Defined for words in the last-column bands of P_n; the image lives
    in the last-column bands of P_{n+1}.
    """
    _require_last_column(word, n)
    f = skip_map(i, n)
    letters = [
        (a_sym(f[sym.index[0] - 1], n + 1, n + 1), exp)
        for sym, exp in word.syllables
    ]
    return GroupWord.from_letters(f"A{n + 1}", letters)


def cohen_lift(w: PureAWord, check: bool = True) -> PureAWord:
    """One-strand lift w w^(f_1) .. w^(f_n); every face equals w.

    Input must be a Brunnian word in the last-column bands of P_n.
    """
    n = w.strands
    _require_last_column(w.word, n)
    if check and not is_brunnian(w):
        raise ValueError("cohen_lift requires a Brunnian input")
    word = w.embed(n + 1).word
    for i in range(1, n + 1):
        word = word * apply_skip(w.word, i, n)
    return PureAWord(n + 1, word)


def tau_spread(m: int, k: int, w: PureAWord, check: bool = True) -> PureAWord:
    """Product of iterated skip images of w over index combinations.

    Factors run over 1 <= i_1 < ... < i_(k-m) <= k-1 in lexicographic
    order (leftmost most significant); within a factor the leftmost
    index is applied first.  The result is a word in the last-column
    bands of P_k.
    """
    if w.strands != m:
        raise ValueError("strand count disagrees with m")
    if m > k:
        raise ValueError("target rank must be at least the source rank")
    _require_last_column(w.word, m)
    if check and not is_brunnian(w):
        raise ValueError("tau_spread requires a Brunnian input")
    result = GroupWord.identity(f"A{k}")
    for indices in combinations(range(1, k), k - m):
        factor = w.word
        rank = m
        for i in indices:
            factor = apply_skip(factor, i, rank)
            rank += 1
        result = result * factor
    return PureAWord(k, result)


def full_lift(m: int, n: int, w: PureAWord, check: bool = True) -> PureAWord:
    """Product of the spreads tau_(m,k)(w) for k = m .. n, ascending.

    Sends a Brunnian word in P_m to a Cohen braid in P_n whose faces
    are all the full lift one rank down.
    """
    if not 2 <= m <= n:
        raise ValueError("need 2 <= m <= n")
    if check and not is_brunnian(w):
        raise ValueError("full_lift requires a Brunnian input")
    word = GroupWord.identity(f"A{n}")
    for k in range(m, n + 1):
        word = word * tau_spread(m, k, w, check=False).embed(n).word
    return PureAWord(n, word)


def james_hopf(k: int, n: int, b: Braidlike, check: bool = True) -> Braidlike:
    """Ordered product of coface images d^(i_(n-k)) .. d^(i_1) of b.

    Multi-indices 1 <= i_1 < ... < i_(n-k) <= n are enumerated
    colexicographically (rightmost most significant); inside a factor
    the leftmost (smallest) insertion applies first.
    """
    if k != b.strands:
        raise ValueError("strand count disagrees with k")
    if k > n:
        raise ValueError("target rank must be at least the source rank")
    if check and not is_brunnian(b):
        raise ValueError("james_hopf requires a Brunnian input")
    ordered = sorted(
        combinations(range(1, n + 1), n - k), key=lambda t: tuple(reversed(t))
    )
    if isinstance(b, PureAWord):
        word = GroupWord.identity(f"A{n}")
        for indices in ordered:
            factor = b
            for i in indices:
                factor = coface_on_aword(factor, i)
            word = word * factor.word
        return PureAWord(n, word)
    letters: list[tuple[int, int]] = []
    for indices in ordered:
        factor = b
        for i in indices:
            factor = insert_strand(factor, i)
        letters.extend(factor.letters)
    return BraidWord(n, tuple(letters))


def _identity_like(b: Braidlike, strands: int) -> Braidlike:
    if isinstance(b, PureAWord):
        return PureAWord.identity(strands)
    return BraidWord(strands, ())


def _mul(a: Braidlike, b: Braidlike) -> Braidlike:
    if isinstance(a, PureAWord):
        return a * b
    return compose(a, b)


def _inv(a: Braidlike) -> Braidlike:
    if isinstance(a, PureAWord):
        return a.inverse()
    return invert_braid(a)


def reassemble(
    deltas: Sequence[Braidlike], n: int
) -> Braidlike:
    """Product of james_hopf(k, n, delta_k) for k = 1 .. len(deltas)."""
    result = _identity_like(deltas[0], n)
    for k, d in enumerate(deltas, start=1):
        result = _mul(result, james_hopf(k, n, d, check=False))
    return result


def hopf_decompose(
    a: Braidlike, budget: int = DEFAULT_LETTER_BUDGET
) -> tuple[Braidlike, ...]:
    """Split a pure Cohen braid into Brunnian layers delta_1 .. delta_n.

    Recursion on the common face: the layers of the face determine
    delta_1 .. delta_(n-1), and the top layer is what remains of a
    after dividing out their James-Hopf images.  Reassembling the
    layers reproduces a, and each layer is Brunnian (asserted).
    """
    if isinstance(a, BraidWord) and not is_pure(a):
        raise ValueError("hopf_decompose requires a pure braid")
    n = a.strands
    if n <= 1:
        return (a,)
    if n == 2:
        return (_identity_like(a, 1), a)
    shared = common_face(a, budget=budget)
    lower = hopf_decompose(shared, budget=budget)
    partial = reassemble(lower, n)
    top = _mul(_inv(partial), a)
    if not is_brunnian(top, budget=budget):
        raise AssertionError("residual top layer is not Brunnian")
    return (*lower, top)


def solve_cohen_system(
    a: Braidlike, n: int, budget: int = DEFAULT_LETTER_BUDGET
) -> Braidlike:
    """A braid on n strands whose every face equals the given a.

    Requires all faces of a to agree (NotCohenError with a witness pair
    otherwise).  Pure inputs are rebuilt from their Brunnian layers one
    rank up; a non-pure input is reduced to the pure case by a half
    twist, whose own faces are again half twists.
    """
    if n != a.strands + 1:
        raise ValueError("can only solve one strand up")
    common_face(a, budget=budget)  # raises NotCohenError on disagreement
    if isinstance(a, PureAWord) or is_pure(a):
        deltas = hopf_decompose(a, budget=budget)
        return reassemble(deltas, n)
    pm = perm_of(a)
    if pm != Perm.order_reversal(a.strands):
        raise AssertionError(
            "a Cohen braid permutation must be the identity or the reversal"
        )
    gamma = solve_cohen_system(compose(half_twist(a.strands), a), n, budget=budget)
    return compose(invert_braid(half_twist(n)), gamma)
