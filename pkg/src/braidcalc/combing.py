"""Combing pure braid words into the iterated semidirect normal form.

A pure braid on n strands factors uniquely as u_2 u_3 .. u_n where u_k
is a word in the free group U_k generated by the bands A_{1,k} ..
A_{k-1,k}.  Combing processes an A-word right to left: to prepend a
letter A_{i,j}^e to an accumulated form, conjugate it through the
components u_2 .. u_{j-1} (staying inside U_j, which is normal in P_j)
and multiply the result onto u_j.

The conjugation of a band A_{i,j} by A_{r,s}^{+-1} with s < j depends
only on the order pattern of (r, s, i); the case table below was
derived by scripts/derive_conj_rules.py (Artin-action computation
cross-checked by bounded brute-force search, every entry verified
against the braid equality oracle) and then frozen.  Entries are
written over the roles r, s, i and instantiated with second index j.

Combed components are canonical: since each U_k is free, two pure
braids are equal iff their combed components agree syllable by
syllable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braids import (
    DEFAULT_LETTER_BUDGET,
    BraidWord,
    BudgetExceededError,
    band_power_letters,
    braids_equal,
)
from .faces import coface_on_pure_gen, face_on_pure_gen
from .words import GenSym, GroupWord, a_alphabet, a_sym, alphabet_rank

__all__ = [
    "DEFAULT_COMPONENT_BUDGET",
    "CombedForm",
    "PureAWord",
    "aword_equal",
    "aword_trivial",
    "coface_on_aword",
    "comb",
    "conj_rule",
    "face_on_aword",
    "is_harmonic",
    "same_band_word",
]

DEFAULT_COMPONENT_BUDGET = 10**5

# g^{-1} A_{i,j} g for g = A_{r,s}^{eps}, keyed by (pattern, eps); the
# value is the reduced U_j word as (role, exponent) syllables.
_CONJ_TEMPLATES: dict[tuple[str, int], tuple[tuple[str, int], ...]] = {
    ("disjoint", 1): (("i", 1),),
    ("disjoint", -1): (("i", 1),),
    ("r=i", 1): (("r", 1), ("s", 1), ("r", 1), ("s", -1), ("r", -1)),
    ("r=i", -1): (("s", -1), ("r", 1), ("s", 1)),
    ("s=i", 1): (("r", 1), ("s", 1), ("r", -1)),
    ("s=i", -1): (("s", -1), ("r", -1), ("s", 1), ("r", 1), ("s", 1)),
    ("linked", 1): (
        ("r", 1), ("s", 1), ("r", -1), ("s", -1),
        ("i", 1),
        ("s", 1), ("r", 1), ("s", -1), ("r", -1),
    ),
    ("linked", -1): (
        ("s", -1), ("r", -1), ("s", 1), ("r", 1),
        ("i", 1),
        ("r", -1), ("s", -1), ("r", 1), ("s", 1),
    ),
}


def _pattern(r: int, s: int, i: int) -> str:
    if s < i or i < r:
        return "disjoint"
    if i == r:
        return "r=i"
    if i == s:
        return "s=i"
    return "linked"


@lru_cache(maxsize=None)
def conj_rule(g_sym: GenSym, g_sign: int, h_sym: GenSym) -> GroupWord:
    """Reduced U_j word equal to g^{-1} h g for g = A_{r,s}^{g_sign}.

    Requires r < s < j and i < j where h = A_{i,j}.
    """
    r, s = g_sym.index
    i, j = h_sym.index
    if g_sign not in (1, -1):
        raise ValueError("conjugator sign must be +1 or -1")
    if not (r < s < j and i < j):
        raise ValueError(
            f"conj_rule needs r < s < j and i < j, got A_{r},{s} acting on A_{i},{j}"
        )
    rank = alphabet_rank(h_sym.alphabet)
    template = _CONJ_TEMPLATES[(_pattern(r, s, i), g_sign)]
    slots = {"r": r, "s": s, "i": i}
    return GroupWord.from_letters(
        h_sym.alphabet,
        [(a_sym(slots[role], j, rank), exp) for role, exp in template],
    )


@dataclass(frozen=True)
class PureAWord:
    """A word over the band alphabet of B_n, representing a pure braid."""

    strands: int
    word: GroupWord

    def __post_init__(self) -> None:
        if self.word.alphabet != a_alphabet(self.strands):
            raise ValueError(
                f"word alphabet {self.word.alphabet} does not match {self.strands} strands"
            )
        for sym, _ in self.word.syllables:
            i, j = sym.index
            if not 1 <= i < j <= self.strands:
                raise ValueError(f"band {sym} out of range for {self.strands} strands")

    @classmethod
    def identity(cls, strands: int) -> PureAWord:
        return cls(strands, GroupWord.identity(a_alphabet(strands)))

    @classmethod
    def from_pairs(cls, strands: int, pairs: list[tuple[int, int, int]]) -> PureAWord:
        """Build from (i, j, exponent) triples."""
        letters = [(a_sym(i, j, strands), e) for i, j, e in pairs]
        return cls(strands, GroupWord.from_letters(a_alphabet(strands), letters))

    def is_identity(self) -> bool:
        return self.word.is_identity()

    def to_braid(self) -> BraidWord:
        letters: list[tuple[int, int]] = []
        for sym, exp in self.word.syllables:
            letters.extend(band_power_letters(sym.index[0], sym.index[1], exp))
        return BraidWord(self.strands, tuple(letters))

    def __mul__(self, other: PureAWord) -> PureAWord:
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        return PureAWord(self.strands, self.word * other.word)

    def inverse(self) -> PureAWord:
        return PureAWord(self.strands, self.word.inverse())

    def embed(self, strands: int) -> PureAWord:
        """The same bands read in a larger braid group."""
        if strands < self.strands:
            raise ValueError("cannot embed into fewer strands")
        alphabet = a_alphabet(strands)
        letters = [
            (a_sym(sym.index[0], sym.index[1], strands), exp)
            for sym, exp in self.word.syllables
        ]
        return PureAWord(strands, GroupWord.from_letters(alphabet, letters))


def face_on_aword(w: PureAWord, i: int) -> PureAWord:
    """Delete strand i, letterwise on bands."""
    n = w.strands
    target = a_alphabet(n - 1)
    stack_letters: list[tuple[GenSym, int]] = []
    for sym, exp in w.word.syllables:
        image = face_on_pure_gen(i, (sym.index[0], sym.index[1]), n)
        if image.syllables:
            stack_letters.append((image.syllables[0][0], exp))
    return PureAWord(n - 1, GroupWord.from_letters(target, stack_letters))


def coface_on_aword(w: PureAWord, i: int) -> PureAWord:
    """Insert a trivial strand at position i, letterwise on bands."""
    n = w.strands
    if not 1 <= i <= n + 1:
        raise ValueError(f"insertion position {i} out of range for {n} strands")
    target = a_alphabet(n + 1)
    letters = []
    for sym, exp in w.word.syllables:
        s2, t2 = coface_on_pure_gen(i, (sym.index[0], sym.index[1]))
        letters.append((a_sym(s2, t2, n + 1), exp))
    return PureAWord(n + 1, GroupWord.from_letters(target, letters))


def same_band_word(a: PureAWord, b: PureAWord) -> bool:
    """Syllable equality by band indices, ignoring the ambient strand count."""
    if len(a.word.syllables) != len(b.word.syllables):
        return False
    return all(
        sa.index == sb.index and ea == eb
        for (sa, ea), (sb, eb) in zip(a.word.syllables, b.word.syllables)
    )


@dataclass(frozen=True)
class CombedForm:
    """Components u_2 .. u_n of the iterated semidirect normal form."""

    strands: int
    components: tuple[GroupWord, ...]

    def __post_init__(self) -> None:
        if len(self.components) != max(self.strands - 1, 0):
            raise ValueError("expected one component per k in 2..n")
        for k, comp in enumerate(self.components, start=2):
            if comp.alphabet != a_alphabet(self.strands):
                raise ValueError("component alphabet mismatch")
            for sym, _ in comp.syllables:
                if sym.index[1] != k:
                    raise ValueError(
                        f"component u_{k} contains the foreign band {sym}"
                    )

    def component(self, k: int) -> GroupWord:
        """u_k for 2 <= k <= n."""
        return self.components[k - 2]

    def as_single_word(self) -> PureAWord:
        word = GroupWord.identity(a_alphabet(self.strands))
        for comp in self.components:
            word = word * comp
        return PureAWord(self.strands, word)

    def expand(self) -> BraidWord:
        return self.as_single_word().to_braid()


def comb(
    w: PureAWord,
    component_budget: int | None = DEFAULT_COMPONENT_BUDGET,
    verify: bool = False,
    oracle_budget: int = DEFAULT_LETTER_BUDGET,
) -> CombedForm:
    """Comb an A-word; processes letters right to left by prepending.

    With verify=True every conjugation template instantiation and the
    final expansion are checked against the braid equality oracle.
    Oracle work on long words can need far more than the default letter
    budget (reduced Artin images grow exponentially), hence the
    separate oracle_budget knob.
    """
    n = w.strands
    comps: list[GroupWord] = [
        GroupWord.identity(a_alphabet(n)) for _ in range(max(n - 1, 0))
    ]
    for sym, exp in reversed(w.word.syllables):
        j = sym.index[1]
        c = GroupWord.single(sym, exp)
        # conjugate through u_2 .. u_{j-1}, leftmost conjugator first
        for k in range(2, j):
            for h_sym, h_exp in comps[k - 2].syllables:
                sign = 1 if h_exp > 0 else -1
                for _ in range(abs(h_exp)):
                    mapping = {
                        t_sym: conj_rule(h_sym, sign, t_sym)
                        for t_sym, _ in c.syllables
                    }
                    if verify:
                        for t_sym, image in mapping.items():
                            _verify_conj(h_sym, sign, t_sym, image, n, oracle_budget)
                    c = c.substitute(mapping, alphabet=c.alphabet)
                    if component_budget is not None and c.letter_count() > component_budget:
                        raise BudgetExceededError(
                            f"combing blew past {component_budget} letters in one component"
                        )
        comps[j - 2] = c * comps[j - 2]
        if component_budget is not None and comps[j - 2].letter_count() > component_budget:
            raise BudgetExceededError(
                f"combing blew past {component_budget} letters in component u_{j}"
            )
    result = CombedForm(n, tuple(comps))
    if verify and not braids_equal(result.expand(), w.to_braid(), budget=oracle_budget):
        raise AssertionError("combing verification failed: expansion differs")
    return result


@lru_cache(maxsize=None)
def _verify_conj(
    g_sym: GenSym, g_sign: int, h_sym: GenSym, image: GroupWord, n: int, budget: int
) -> None:
    from .braids import compose, invert_braid  # local import keeps startup light

    g_letters = band_power_letters(g_sym.index[0], g_sym.index[1], g_sign)
    g = BraidWord(n, g_letters)
    h = BraidWord(n, band_power_letters(h_sym.index[0], h_sym.index[1], 1))
    target = compose(compose(invert_braid(g), h), g)
    got = PureAWord(n, image).to_braid()
    if not braids_equal(got, target, budget=budget):
        raise AssertionError(f"conj_rule image for {g_sym}^{g_sign} on {h_sym} is wrong")


def aword_trivial(
    w: PureAWord, component_budget: int | None = DEFAULT_COMPONENT_BUDGET
) -> bool:
    """Decide whether an A-word represents the trivial braid.

    Free reduction is tried first; otherwise the word is combed and
    triviality read off the components.  Unlike the Artin-image oracle
    this stays small on words such as long commutators whose images
    explode, and it is complete because the combed form is unique.
    """
    if w.word.is_identity():
        return True
    form = comb(w, component_budget=component_budget)
    return all(c.is_identity() for c in form.components)


def aword_equal(
    a: PureAWord,
    b: PureAWord,
    component_budget: int | None = DEFAULT_COMPONENT_BUDGET,
) -> bool:
    """Complete equality test for pure braids given as A-words."""
    if a.strands != b.strands:
        raise ValueError("strand mismatch")
    return aword_trivial(
        PureAWord(a.strands, a.word * b.word.inverse()),
        component_budget=component_budget,
    )


def is_harmonic(w: PureAWord, component_budget: int | None = DEFAULT_COMPONENT_BUDGET) -> bool:
    """Combed components must satisfy d_1(u_i) = u_{i-1} for 3 <= i <= n.

    Both sides live in free groups, so syllable comparison of the faced
    word with the lower component is a complete equality test.
    """
    form = comb(w, component_budget=component_budget)
    n = w.strands
    for i in range(3, n + 1):
        upper = PureAWord(n, form.component(i))
        faced = face_on_aword(upper, 1)
        lower = PureAWord(n, form.component(i - 1))
        if not same_band_word(faced, lower):
            return False
    return True
