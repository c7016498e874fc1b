"""Cohen, Brunnian, generalized Cohen and unary braid predicates.

A braid is Cohen when all of its strand-deletion faces agree, and
Brunnian when every face is trivial.  The predicates here accept either
a BraidWord (faces via delete_strand, equality via the Artin-image
oracle) or a PureAWord (faces letterwise on bands, equality via combing,
which is complete and far cheaper on commutator-heavy words).

Also provided: the generator families used throughout the test suite
(band commutators, conjugated iterated commutators, full-twist product
words) and the structure certificates for pure Cohen braids (the P3
normal form and the commutator-component necessary condition).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .braids import (
    DEFAULT_LETTER_BUDGET,
    BraidWord,
    braid_pow,
    braids_equal,
    compose,
    invert_braid,
    is_pure,
    perm_of,
)
from .combing import (
    PureAWord,
    aword_equal,
    aword_trivial,
    comb,
    face_on_aword,
)
from .faces import delete_strand
from .words import GroupWord, a_sym, commutator

__all__ = [
    "Braidlike",
    "CommutatorTree",
    "NotCohenError",
    "NotUnaryError",
    "P3CohenForm",
    "P3Refusal",
    "StrandPartition",
    "all_faces",
    "all_indices_commutator_check",
    "band_commutator",
    "brunnian_generator",
    "cohen_commutator_certificate",
    "cohen_p3_decompose",
    "common_face",
    "delta_square_word",
    "is_brunnian",
    "is_cohen",
    "is_generalized_cohen",
    "is_trivial",
    "is_unary",
    "same_braid",
    "split_power_word",
    "unary_factor",
]

Braidlike = Union[BraidWord, PureAWord]


class NotCohenError(ValueError):
    """Raised when an operation requires a Cohen braid and the faces differ.

    Carries the indices and the two disagreeing face words as a witness.
    """

    def __init__(self, i: int, j: int, face_i: Braidlike, face_j: Braidlike):
        self.witness_indices = (i, j)
        self.witness_faces = (face_i, face_j)
        super().__init__(f"faces d_{i} and d_{j} differ")


class NotUnaryError(ValueError):
    pass


def same_braid(a: Braidlike, b: Braidlike, budget: int = DEFAULT_LETTER_BUDGET) -> bool:
    """Equality dispatch: combing for A-words, Artin oracle for letter words."""
    if isinstance(a, PureAWord) and isinstance(b, PureAWord):
        return aword_equal(a, b)
    if isinstance(a, PureAWord):
        a = a.to_braid()
    if isinstance(b, PureAWord):
        b = b.to_braid()
    return braids_equal(a, b, budget=budget)


def is_trivial(b: Braidlike, budget: int = DEFAULT_LETTER_BUDGET) -> bool:
    if isinstance(b, PureAWord):
        return aword_trivial(b)
    return braids_equal(b, BraidWord(b.strands, ()), budget=budget)


def all_faces(b: Braidlike) -> list[Braidlike]:
    """The strand-deletion images d_1(b), ..., d_n(b)."""
    if isinstance(b, PureAWord):
        return [face_on_aword(b, i) for i in range(1, b.strands + 1)]
    return [delete_strand(b, i) for i in range(1, b.strands + 1)]


def is_cohen(b: Braidlike, budget: int = DEFAULT_LETTER_BUDGET) -> bool:
    """All faces of b agree.  Vacuously true for fewer than two strands."""
    if b.strands <= 1:
        return True
    faces = all_faces(b)
    return all(same_braid(faces[0], f, budget=budget) for f in faces[1:])


def common_face(b: Braidlike, budget: int = DEFAULT_LETTER_BUDGET) -> Braidlike:
    """The shared face of a Cohen braid; raises NotCohenError with a witness."""
    faces = all_faces(b)
    for k, f in enumerate(faces[1:], start=2):
        if not same_braid(faces[0], f, budget=budget):
            raise NotCohenError(1, k, faces[0], f)
    if faces:
        return faces[0]
    raise ValueError("a braid on zero strands has no faces")


def is_brunnian(b: Braidlike, budget: int = DEFAULT_LETTER_BUDGET) -> bool:
    """Every face of b is trivial."""
    return all(is_trivial(f, budget=budget) for f in all_faces(b))


@dataclass(frozen=True)
class StrandPartition:
    """Pairwise disjoint nonempty blocks of strand indices in {1..n}."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            for i in block:
                if not 1 <= i <= self.n:
                    raise ValueError(f"strand {i} out of range for n={self.n}")
                if i in seen:
                    raise ValueError(f"strand {i} appears in two blocks")
                seen.add(i)

    @classmethod
    def from_lists(cls, n: int, blocks: Sequence[Sequence[int]]) -> StrandPartition:
        return cls(n, tuple(frozenset(b) for b in blocks))


def is_generalized_cohen(
    b: Braidlike, partition: StrandPartition, budget: int = DEFAULT_LETTER_BUDGET
) -> bool:
    """Within each block of strand indices, all faces of b agree."""
    if partition.n != b.strands:
        raise ValueError("partition is for a different strand count")
    faces = all_faces(b)
    for block in partition.blocks:
        indices = sorted(block)
        first = faces[indices[0] - 1]
        for i in indices[1:]:
            if not same_braid(first, faces[i - 1], budget=budget):
                return False
    return True


def is_unary(b: BraidWord, budget: int = DEFAULT_LETTER_BUDGET) -> bool:
    """Strand 1 ends at position n and deleting it leaves the trivial braid."""
    n = b.strands
    if perm_of(b)(1) != n:
        return False
    return is_trivial(delete_strand(b, 1), budget=budget)


def unary_factor(b: BraidWord, budget: int = DEFAULT_LETTER_BUDGET) -> BraidWord:
    """The pure part b0 with b = b0 sigma_1 sigma_2 .. sigma_{n-1}."""
    if not is_unary(b, budget=budget):
        raise NotUnaryError("not a unary braid")
    n = b.strands
    staircase = BraidWord(n, tuple((i, 1) for i in range(1, n)))
    factor = compose(b, invert_braid(staircase))
    if not is_pure(factor):
        raise AssertionError("unary factor failed the purity check")
    return factor


def band_commutator(l: int, m: int) -> PureAWord:
    """[A_13^l, A_23^m] on three strands; Brunnian whenever l, m != 0."""
    x = GroupWord.single(a_sym(1, 3, 3), l) if l else GroupWord.identity("A3")
    y = GroupWord.single(a_sym(2, 3, 3), m) if m else GroupWord.identity("A3")
    return PureAWord(3, commutator(x, y))


def brunnian_generator(
    n: int,
    perm: Sequence[int] | None = None,
    conjugators: Sequence[GroupWord] | None = None,
) -> PureAWord:
    """Left-normed commutator of conjugated last-column bands.

    Builds [g_1, g_2, ..., g_{n-1}] with g_t the band A_{perm(t),n}
    conjugated by the t-th conjugator (a word in the bands A_{.,n}).
    Every face of the result is trivial, which the test suite checks
    rather than assumes.
    """
    if n < 2:
        raise ValueError("need at least two strands")
    order = tuple(perm) if perm is not None else tuple(range(1, n))
    if sorted(order) != list(range(1, n)):
        raise ValueError(f"{order} is not a permutation of 1..{n - 1}")
    alphabet = f"A{n}"
    if conjugators is None:
        conjugators = [GroupWord.identity(alphabet)] * (n - 1)
    if len(conjugators) != n - 1:
        raise ValueError("need one conjugator per band")
    leaves = []
    for t, u in zip(order, conjugators):
        if u.alphabet != alphabet:
            raise ValueError("conjugator alphabet mismatch")
        for sym, _ in u.syllables:
            if sym.index[1] != n:
                raise ValueError(f"conjugator uses {sym}, not a last-column band")
        leaves.append(GroupWord.single(a_sym(t, n, n)).conjugate(u))
    acc = leaves[0]
    for g in leaves[1:]:
        acc = commutator(acc, g)
    return PureAWord(n, acc)


@dataclass(frozen=True)
class CommutatorTree:
    """Formal commutator over band-power leaves, for the covering test.

    A leaf is (i, j, exp); an inner node holds two subtrees and denotes
    the commutator of their values.
    """

    leaf: tuple[int, int, int] | None = None
    left: "CommutatorTree | None" = None
    right: "CommutatorTree | None" = None

    def __post_init__(self) -> None:
        if (self.leaf is None) == (self.left is None or self.right is None):
            raise ValueError("node must be either a leaf or have two children")

    @classmethod
    def band(cls, i: int, j: int, exp: int = 1) -> CommutatorTree:
        return cls(leaf=(i, j, exp))

    @classmethod
    def bracket(cls, left: CommutatorTree, right: CommutatorTree) -> CommutatorTree:
        return cls(left=left, right=right)

    def index_set(self) -> frozenset[int]:
        if self.leaf is not None:
            return frozenset(self.leaf[:2])
        return self.left.index_set() | self.right.index_set()

    def evaluate(self, n: int) -> PureAWord:
        return PureAWord(n, self._word(n))

    def _word(self, n: int) -> GroupWord:
        if self.leaf is not None:
            i, j, exp = self.leaf
            if exp == 0:
                return GroupWord.identity(f"A{n}")
            return GroupWord.single(a_sym(i, j, n), exp)
        return commutator(self.left._word(n), self.right._word(n))


def all_indices_commutator_check(tree: CommutatorTree, n: int) -> bool:
    """Brunnian test for a formal commutator, with the covering guarantee.

    When the leaf indices cover {1..n} the evaluated braid must be
    Brunnian; that implication is asserted.  Returns is_brunnian of the
    evaluated word either way.
    """
    value = is_brunnian(tree.evaluate(n))
    if tree.index_set() == frozenset(range(1, n + 1)) and not value:
        raise AssertionError(
            "a commutator whose indices cover every strand must be Brunnian"
        )
    return value


def delta_square_word(n: int, k: int) -> PureAWord:
    """A_12^k (A_13 A_23)^k ... (A_1n .. A_{n-1,n})^k, the full twist to the k."""
    if n < 2:
        raise ValueError("need at least two strands")
    word = GroupWord.identity(f"A{n}")
    for j in range(2, n + 1):
        block = GroupWord.from_letters(
            f"A{n}", [(a_sym(i, j, n), 1) for i in range(1, j)]
        )
        word = word * block ** k
    return PureAWord(n, word)


def split_power_word(n: int, k: int) -> PureAWord:
    """A_12^k (A_13^k A_23^k) ... : each band powered separately."""
    if n < 2:
        raise ValueError("need at least two strands")
    letters = [
        (a_sym(i, j, n), k) for j in range(2, n + 1) for i in range(1, j)
    ]
    return PureAWord(n, GroupWord.from_letters(f"A{n}", letters))


@dataclass(frozen=True)
class P3CohenForm:
    """A pure Cohen 3-braid written as (full twist)^k times gamma.

    gamma lies in the commutator subgroup of the free group on A_13,
    A_23; k is the exponent of the central full twist.
    """

    k: int
    gamma: GroupWord


@dataclass(frozen=True)
class P3Refusal:
    """Diagnosis for a pure 3-braid that is not Cohen.

    violations maps band labels to the leftover abelianized exponents
    after the central part is removed.
    """

    k: int
    violations: dict[str, int]


def cohen_p3_decompose(b: PureAWord) -> P3CohenForm | P3Refusal:
    """Normal form for pure Cohen 3-braids; refusal for non-Cohen input.

    Combing gives u_2 = A_12^k and u_3 in the free group on A_13, A_23.
    The braid is Cohen exactly when u_3 abelianizes to (k, k), i.e. the
    word is the k-th full twist times a commutator-subgroup element.
    """
    if b.strands != 3:
        raise ValueError("this normal form is specific to three strands")
    form = comb(b)
    u2, u3 = form.component(2), form.component(3)
    k = 0
    for sym, exp in u2.syllables:
        k += exp
    counts = u3.abelianize()
    leftovers = {
        "A1,3": counts.get(a_sym(1, 3, 3), 0) - k,
        "A2,3": counts.get(a_sym(2, 3, 3), 0) - k,
    }
    if any(leftovers.values()):
        return P3Refusal(k, {s: v for s, v in leftovers.items() if v})
    twist_tail = GroupWord.from_letters(
        "A3", [(a_sym(1, 3, 3), 1), (a_sym(2, 3, 3), 1)]
    ) ** k
    gamma = twist_tail.inverse() * u3
    return P3CohenForm(k, gamma)


def cohen_commutator_certificate(b: PureAWord) -> bool:
    """Necessary condition for a pure braid to be Cohen.

    After combing and removing the central full-twist contribution
    (read off u_2 = A_12^k), every component must abelianize to zero.
    This is necessary but not assumed sufficient.
    """
    form = comb(b)
    n = b.strands
    if n < 2:
        return True
    k = sum(exp for _, exp in form.component(2).syllables)
    for j in range(3, n + 1):
        counts = form.component(j).abelianize()
        for i in range(1, j):
            if counts.get(a_sym(i, j, n), 0) != k:
                return False
    return True
