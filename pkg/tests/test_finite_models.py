"""Exhaustive checks of the table-driven finite models."""

import pytest

from braidcalc.finite_models import (
    FiniteGroupModel,
    build_p1_rp2,
    build_p2_rp2,
    build_p3_s2,
    derive_rp2_face_assignments,
    enumerate_brunnian,
    enumerate_cohen,
    h_element_check,
    trivial_model,
)


class TestQuaternionModel:
    def test_group_facts(self):
        m = build_p2_rp2()
        assert len(m.labels) == 8
        assert m.order("u") == 4
        assert m.order("r") == 4
        # defining relations
        assert m.mul(m.mul("r", "u"), m.inverse("r")) == "u3"
        assert m.mul("r", "r") == "u2"

    def test_unique_involution(self):
        # the quaternion group has exactly one element of order 2
        m = build_p2_rp2()
        assert [a for a in m.labels if m.order(a) == 2] == ["u2"]

    def test_center(self):
        m = build_p2_rp2()
        central = [
            a for a in m.labels if all(m.mul(a, b) == m.mul(b, a) for b in m.labels)
        ]
        assert central == ["e", "u2"]

    def test_face_images(self):
        m = build_p2_rp2()
        # first face kills r, second kills u
        assert m.face_images("u") == ["g", "e"]
        assert m.face_images("r") == ["e", "g"]
        assert m.face_images("u2") == ["e", "e"]
        assert m.face_images("ru") == ["g", "g"]

    def test_json_dump_shape(self):
        d = build_p2_rp2().to_json_dict()
        assert set(d) == {"name", "labels", "identity", "table", "faces"}
        assert d["identity"] == "e"
        assert d["table"]["u"]["u"] == "u2"
        assert [f["codomain"] for f in d["faces"]] == ["P1(RP2)", "P1(RP2)"]


class TestEnumerations:
    def test_cohen_subset(self):
        m = build_p2_rp2()
        assert enumerate_cohen(m) == ["e", "u2", "ru", "ru3"]

    def test_cohen_subset_is_cyclic_of_order_four(self):
        m = build_p2_rp2()
        assert m.order("ru") == 4
        powers = {"ru"}
        acc = "ru"
        for _ in range(3):
            acc = m.mul(acc, "ru")
            powers.add(acc)
        assert powers == set(enumerate_cohen(m))

    def test_brunnian_subset(self):
        m = build_p2_rp2()
        assert enumerate_brunnian(m) == ["e", "u2"]

    def test_brunnian_inside_cohen(self):
        m = build_p2_rp2()
        assert set(enumerate_brunnian(m)) <= set(enumerate_cohen(m))

    def test_h_element(self):
        m = build_p2_rp2()
        assert h_element_check(m, "r", "u")
        assert not h_element_check(m, "e", "u")


class TestDerivation:
    def test_surviving_assignments(self):
        # exactly the two mixed kill assignments fit the facts, so the
        # face structure is unique up to swapping d_1 with d_2
        assert derive_rp2_face_assignments() == [("r", "u"), ("u", "r")]


class TestOtherModels:
    def test_one_strand_model(self):
        m = build_p1_rp2()
        assert m.labels == ("e", "g")
        assert m.order("g") == 2

    def test_sphere_three_strand_model(self):
        m = build_p3_s2()
        assert len(m.faces) == 3
        # every face lands in the trivial group, so everything is Brunnian
        assert enumerate_brunnian(m) == ["e", "g"]
        assert enumerate_cohen(m) == ["e", "g"]

    def test_trivial_model(self):
        m = trivial_model()
        assert m.mul("e", "e") == "e"
        assert m.inverse("e") == "e"
        assert m.order("e") == 1


class TestAxiomValidation:
    def test_rejects_broken_identity(self):
        with pytest.raises(ValueError):
            FiniteGroupModel("bad", ("e", "g"), ((1, 0), (0, 1)), 0)

    def test_rejects_non_associative_table(self):
        # a quasigroup that is not a group: the subtraction table on Z/3
        table = tuple(tuple((i - j) % 3 for j in range(3)) for i in range(3))
        with pytest.raises(ValueError):
            FiniteGroupModel("bad", ("e", "a", "b"), table, 0)

    def test_rejects_partial_face(self):
        point = trivial_model()
        with pytest.raises(ValueError):
            FiniteGroupModel(
                "bad", ("e", "g"), ((0, 1), (1, 0)), 0, ((point, (0,)),)
            )

    def test_rejects_non_homomorphism_face(self):
        z2 = build_p1_rp2()
        # swapping e and g is not a homomorphism (identity not preserved)
        with pytest.raises(ValueError):
            FiniteGroupModel(
                "bad", ("e", "g"), ((0, 1), (1, 0)), 0, ((z2, (1, 0)),)
            )

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            FiniteGroupModel("bad", ("e", "e"), ((0, 1), (1, 0)), 0)
