"""Strand deletion and insertion maps."""

import pytest
from hypothesis import given, strategies as st

from braidcalc.braids import BraidWord, a_gen, braids_equal, compose, invert_braid, perm_of
from braidcalc.faces import (
    coface_on_pure_gen,
    delete_strand,
    face_on_pure_gen,
    insert_strand,
    perm_face,
)
from braidcalc.words import GroupWord

braid_letters = st.lists(
    st.tuples(st.integers(1, 4), st.sampled_from([1, -1])), max_size=16
)


def braid5(pairs):
    return BraidWord(5, tuple(pairs))


def realize_bands(word: GroupWord, n: int) -> BraidWord:
    """Play a word over the band alphabet back into crossings."""
    out = BraidWord(n, ())
    for sym, exp in word.syllables:
        band = a_gen(*sym.index, n)
        piece = band if exp > 0 else invert_braid(band)
        for _ in range(abs(exp)):
            out = compose(out, piece)
    return out


class TestDelete:
    def test_uninvolved_strand_shifts_indices(self):
        b = BraidWord(3, ((2, 1), (2, 1)))
        assert delete_strand(b, 1).letters == ((1, 1), (1, 1))

    def test_involved_strand_drops_crossings(self):
        b = BraidWord(2, ((1, 1),))
        assert delete_strand(b, 1).letters == ()
        assert delete_strand(b, 2).letters == ()

    def test_walk_follows_the_strand(self):
        # sigma_2 sigma_1^2: strand 1 stays at position 1 until the first
        # sigma_1, so d_1 keeps only the crossing among strands 2 and 3.
        b = BraidWord(3, ((2, 1), (1, 1), (1, 1)))
        assert delete_strand(b, 1).letters == ((1, 1),)
        assert delete_strand(b, 2).letters == ((1, 1), (1, 1))
        assert delete_strand(b, 3).letters == ()

    def test_index_validation(self):
        b = BraidWord(3, ())
        with pytest.raises(ValueError):
            delete_strand(b, 0)
        with pytest.raises(ValueError):
            delete_strand(b, 4)

    @given(braid_letters, st.integers(1, 5))
    def test_perm_face_matches_deleted_perm(self, pairs, i):
        b = braid5(pairs)
        assert perm_of(delete_strand(b, i)) == perm_face(perm_of(b), i)


class TestInsert:
    def test_insert_shifts_far_letters(self):
        b = BraidWord(3, ((2, 1),))
        assert insert_strand(b, 1).letters == ((3, 1),)
        assert insert_strand(b, 4).letters == ((2, 1),)

    def test_insert_conjugates_straddled_letter(self):
        b = BraidWord(2, ((1, 1),))
        assert insert_strand(b, 2).letters == ((2, 1), (1, 1), (2, -1))

    def test_insert_then_delete_is_identity(self):
        b = BraidWord(4, ((1, 1), (3, -1), (2, 1)))
        for i in range(1, 6):
            assert delete_strand(insert_strand(b, i), i).letters == b.letters

    @given(braid_letters, st.integers(1, 6))
    def test_inserted_strand_returns_to_its_position(self, pairs, i):
        b = braid5(pairs)
        up = insert_strand(b, i)
        assert up.strands == 6
        assert perm_of(up).images[i - 1] == i


class TestPureGeneratorTables:
    def test_face_kills_own_band(self):
        for n in (3, 4, 5):
            for (s, t) in [(1, 2), (1, n), (n - 1, n)]:
                assert face_on_pure_gen(s, (s, t), n).is_identity()
                assert face_on_pure_gen(t, (s, t), n).is_identity()

    def test_face_shifts_disjoint_band(self):
        out = face_on_pure_gen(1, (2, 4), 5)
        assert str(out) == "A1,3"

    def test_face_table_agrees_with_strand_deletion(self):
        for n in (3, 4):
            for s in range(1, n):
                for t in range(s + 1, n + 1):
                    for i in range(1, n + 1):
                        table = face_on_pure_gen(i, (s, t), n)
                        walked = delete_strand(a_gen(s, t, n), i)
                        assert braids_equal(realize_bands(table, n - 1), walked)

    def test_coface_on_band_matches_insertion(self):
        for n in (2, 3, 4):
            for s in range(1, n):
                for t in range(s + 1, n + 1):
                    for i in range(1, n + 2):
                        s2, t2 = coface_on_pure_gen(i, (s, t))
                        assert braids_equal(
                            a_gen(s2, t2, n + 1), insert_strand(a_gen(s, t, n), i)
                        )
