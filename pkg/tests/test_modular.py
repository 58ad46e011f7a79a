import pytest

from simplecurrents import currents, fusion, lie, modular
from simplecurrents.angles import ZERO_ANGLE, angle
from simplecurrents.fusion import NotInvertibleError
from simplecurrents.modular import InconsistentDataError


class TestBuild:
    def test_sl4_level2(self, sl4_level2):
        assert sl4_level2.size == 10
        ring = sl4_level2.ring
        assert sl4_level2.twist[ring.index("2L1")] == angle(3, 4)

    def test_sl6_level2(self, sl6_level2):
        assert sl6_level2.size == 21
        ring = sl6_level2.ring
        assert sl6_level2.twist[ring.index("2L3")] == angle(1, 2)

    def test_so8_level2(self, so8_level2):
        assert so8_level2.size == 11
        ring = so8_level2.ring
        assert so8_level2.twist[ring.index("2L1")] == ZERO_ANGLE

    def test_unit_normalisation(self, example_categories):
        for data in example_categories.values():
            u = data.ring.unit_index
            assert data.twist[u].is_zero
            assert data.qdim[u] == pytest.approx(1.0)

    def test_twist_dual_invariant(self, example_categories):
        for data in example_categories.values():
            for a in range(data.size):
                assert data.twist[data.ring.dual[a]] == data.twist[a]

    def test_level_must_be_positive(self):
        with pytest.raises(ValueError):
            modular.build_wzw_data(lie.lie_algebra("A", 3), 0)


class TestSelfBraiding:
    def test_paper_values(self, sl4_level2, sl6_level2, so8_level2):
        assert modular.self_braiding(
            sl4_level2, sl4_level2.ring.index("2L1")) == angle(3, 4)
        assert modular.self_braiding(
            sl6_level2, sl6_level2.ring.index("2L1")) == angle(5, 6)
        assert modular.self_braiding(
            so8_level2, so8_level2.ring.index("2L4")) == ZERO_ANGLE

    def test_requires_invertible(self, sl4_level2):
        with pytest.raises(NotInvertibleError):
            modular.self_braiding(sl4_level2, sl4_level2.ring.index("L1"))

    def test_negative_dimension_convention(self):
        # for d_g = -1 the eigenvalue is the twist shifted by a half turn
        from simplecurrents.fusion import FusionRing
        ring = FusionRing(simples=("0", "g"), unit_index=0, dual=(0, 1),
                          tensor={(0, 0): {0: 1}, (0, 1): {1: 1},
                                  (1, 0): {1: 1}, (1, 1): {0: 1}})
        data = modular.ModularCategoryData(
            ring=ring, twist=(ZERO_ANGLE, angle(1, 4)), qdim=(1.0, -1.0))
        assert modular.self_braiding(data, 1) == angle(3, 4)

    def test_square_equals_self_monodromy(self, example_categories):
        # q^2 (angle-doubled q) must equal twist(g x g) - 2 twist(g)
        for data in example_categories.values():
            for g in fusion.invertibles(data.ring):
                q = modular.self_braiding(data, g)
                assert q + q == modular.monodromy(data, g, g)


class TestMonodromy:
    def test_examples(self, sl4_level2):
        ring = sl4_level2.ring
        g = ring.index("2L1")
        assert modular.monodromy(sl4_level2, g, ring.index("L1")) == angle(3, 4)
        assert modular.monodromy(sl4_level2, g, g) == angle(1, 2)
        assert modular.monodromy(sl4_level2, g, ring.unit_index) == ZERO_ANGLE

    def test_requires_invertible(self, sl4_level2):
        with pytest.raises(NotInvertibleError):
            modular.monodromy(sl4_level2, sl4_level2.ring.index("L2"), 0)

    def test_multiplicative_in_g(self, example_categories):
        # doubling the current doubles every monodromy
        for data in example_categories.values():
            for g in fusion.invertibles(data.ring):
                perm = fusion.fuse_permutation(data.ring, g)
                g2 = perm[g]
                for x in range(data.size):
                    assert (2 * modular.monodromy(data, g, x)
                            == modular.monodromy(data, g2, x))


class TestGrading:
    def test_sl4_grades(self, sl4_level2):
        data = sl4_level2
        ring = data.ring
        p = currents.profile(data, ring.index("2L1"))
        g_mi = modular.grading(data, p, angle(3, 4))
        assert g_mi[ring.index("L1")] == 1
        g_i = modular.grading(data, p, angle(1, 4))
        assert g_i[ring.index("L1")] == 3
        assert g_i[ring.unit_index] == 0

    def test_rejects_imprimitive_zeta(self, sl4_level2):
        p = currents.profile(sl4_level2, sl4_level2.ring.index("2L1"))
        with pytest.raises(ValueError):
            modular.grading(sl4_level2, p, angle(1, 2))

    def test_additivity(self, example_categories):
        # grade(Z) = grade(X) + grade(Y) mod M whenever N^Z_{XY} > 0
        for data in example_categories.values():
            ring = data.ring
            for g in fusion.invertibles(ring):
                p = currents.profile(data, g)
                zeta = currents.admissible_zetas(p)[0] if currents.admissible_zetas(p) \
                    else None
                if zeta is None:
                    continue
                grades = modular.grading(data, p, zeta)
                for (a, b), fiber in ring.tensor.items():
                    for c in fiber:
                        assert grades[c] == (grades[a] + grades[b]) % p.M

    def test_support(self, sl4_level2, so8_level2):
        p4 = currents.profile(sl4_level2, sl4_level2.ring.index("2L1"))
        assert modular.grading_support(sl4_level2, p4) == 4
        p8 = currents.profile(so8_level2, so8_level2.ring.index("2L1"))
        assert modular.grading_support(so8_level2, p8) == 2
        pu = currents.profile(sl4_level2, sl4_level2.ring.unit_index)
        assert modular.grading_support(sl4_level2, pu) == 1

    def test_faithful_on_built_categories(self, example_categories):
        for data in example_categories.values():
            for g in fusion.invertibles(data.ring):
                p = currents.profile(data, g)
                assert modular.grading_support(data, p) == p.M


class TestValidation:
    def test_validate_accepts_built(self, example_categories):
        for data in example_categories.values():
            modular.validate(data)

    def test_validate_rejects_bad_unit_twist(self, sl4_level2):
        twisted = list(sl4_level2.twist)
        twisted[sl4_level2.ring.unit_index] = angle(1, 3)
        bad = modular.ModularCategoryData(
            ring=sl4_level2.ring, twist=tuple(twisted), qdim=sl4_level2.qdim)
        with pytest.raises(InconsistentDataError):
            modular.validate(bad)

    def test_grading_check_rejects_symmetric_centre(self):
        # a Z2 ring with trivial twists has an unfaithful grading
        from simplecurrents.fusion import FusionRing
        ring = FusionRing(simples=("0", "g"), unit_index=0, dual=(0, 1),
                          tensor={(0, 0): {0: 1}, (0, 1): {1: 1},
                                  (1, 0): {1: 1}, (1, 1): {0: 1}})
        data = modular.ModularCategoryData(
            ring=ring, twist=(ZERO_ANGLE, ZERO_ANGLE), qdim=(1.0, 1.0))
        with pytest.raises(InconsistentDataError, match="symmetric centre"):
            modular.check_modular_grading(data)
