import pytest

from conftest import P
from qtree import (
    INFINITE,
    ROOT,
    BasePointSet,
    IntersectionDescriptor,
    InvalidDescriptor,
    NonsingularModel,
    SymbolicPointSet,
    TruncatedTree,
    Verdict,
    classify,
    is_complete_representation,
    minimal_points,
    represents_same_ring,
)

TREE = TruncatedTree(max_level=4)


def model_of(*pts):
    return NonsingularModel(BasePointSet.of(pts))


BLOWUP = model_of(ROOT)
EX_MODEL = model_of(ROOT, P("X"), P("Y"))  # the three-base-point model
DOUBLE_POINT_MODEL = model_of(ROOT, P("Y"))


def fan(base, *excluded):
    return SymbolicPointSet.fan(base, excluded)


def singles(*pts):
    return SymbolicPointSet.of_points(pts)


class TestDescriptorValidation:
    def test_accepts_closed_point_singles(self):
        d = IntersectionDescriptor(EX_MODEL, singles(P("X", "Y"), P("Y", "X")))
        assert not d.henselian

    def test_rejects_base_points(self):
        with pytest.raises(InvalidDescriptor):
            IntersectionDescriptor(EX_MODEL, singles(P("X")))

    def test_rejects_points_off_the_model(self):
        with pytest.raises(InvalidDescriptor):
            IntersectionDescriptor(BLOWUP, singles(P("X", "Y")))

    def test_rejects_fans_not_based_at_base_points(self):
        with pytest.raises(InvalidDescriptor):
            IntersectionDescriptor(BLOWUP, fan(P("X")))

    def test_rejects_empty_subsets(self):
        with pytest.raises(InvalidDescriptor):
            IntersectionDescriptor(BLOWUP, SymbolicPointSet.empty())


class TestClassify:
    def test_two_incomparable_second_level_points(self):
        d = IntersectionDescriptor(EX_MODEL, singles(P("X", "Y"), P("Y", "X")))
        c = classify(d)
        assert c.maximal_ideal_count == 2
        assert c.irredundant is Verdict.YES
        assert c.essential is Verdict.YES
        assert c.noetherian

    def test_full_first_neighborhood_of_the_root(self):
        d = IntersectionDescriptor(BLOWUP, fan(ROOT))
        c = classify(d)
        assert c.maximal_ideal_count == INFINITE
        assert c.irredundant is Verdict.YES
        # the intersection is the root ring itself, so nothing is essential
        assert c.essential is Verdict.NO
        assert c.ring_point == ROOT

    def test_proper_cofinite_subset_of_the_first_neighborhood(self):
        d = IntersectionDescriptor(BLOWUP, fan(ROOT, "X"))
        c = classify(d)
        assert c.irredundant is Verdict.YES
        assert c.essential is Verdict.YES
        assert c.ring_point is None

    def test_full_first_neighborhood_of_a_deeper_point(self):
        model = model_of(ROOT, P("X"))
        d = IntersectionDescriptor(model, fan(P("X")))
        c = classify(d)
        assert c.essential is Verdict.NO
        assert c.ring_point == P("X")
        d_proper = IntersectionDescriptor(model, fan(P("X"), "Y"))
        assert classify(d_proper).essential is Verdict.YES

    def test_comparable_members_are_redundant(self):
        subset = fan(ROOT).union(singles(P("X", "Y")))
        d = IntersectionDescriptor(model_of(ROOT, P("X")), subset)
        c = classify(d)
        assert c.irredundant is Verdict.NO
        assert c.maximal_ideal_count == INFINITE

    def test_henselian_upgrades_infinite_antichains(self):
        subset = fan(ROOT, "Y").union(fan(P("Y")))
        plain = IntersectionDescriptor(DOUBLE_POINT_MODEL, subset, henselian=False)
        hens = IntersectionDescriptor(DOUBLE_POINT_MODEL, subset, henselian=True)
        assert classify(plain).irredundant is Verdict.UNKNOWN
        assert classify(hens).irredundant is Verdict.YES

    def test_ordinary_double_point_instance(self):
        subset = fan(ROOT, "Y").union(singles(P("Y", "X")))
        d = IntersectionDescriptor(DOUBLE_POINT_MODEL, subset)
        c = classify(d)
        assert c.singularity == "ordinary double point"
        # the singularity report is pinned to this one instance
        other = IntersectionDescriptor(DOUBLE_POINT_MODEL, fan(ROOT, "Y"))
        assert classify(other).singularity is None

    def test_finite_antichains_of_every_size_up_to_five(self):
        # exhaustive over the level-2 truncation
        small = TruncatedTree(max_level=2)
        for size in (1, 2, 3, 4, 5):
            seen = 0
            for chosen in small.antichains(size):
                model = __import__("qtree").minimal_model_containing(chosen)
                c = classify(IntersectionDescriptor(model, singles(*chosen)))
                assert c.maximal_ideal_count == size
                assert c.irredundant is Verdict.YES
                assert c.essential is Verdict.YES
                seen += 1
            assert seen > 0

    def test_removing_non_minimal_members_changes_nothing(self):
        rng = __import__("qtree").seeded_rng(default=4242)
        exercised = 0
        for _ in range(300):
            atoms = SymbolicPointSet.empty()
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.5:
                    atoms = atoms.union(singles(TREE.random_point(rng, 1)))
                else:
                    base = TREE.random_point(rng)
                    if base.level < TREE.max_level:
                        atoms = atoms.union(SymbolicPointSet.fan(base))
            if atoms.is_empty:
                continue
            minimal = atoms.minimal_points()
            non_minimal = [
                p for p in TREE.members(atoms) if p not in minimal
            ]
            for p in non_minimal[:3]:
                assert atoms.minus([p]).minimal_points() == minimal
                exercised += 1
        assert exercised > 0

    def test_henselian_flag_only_upgrades(self):
        rng = __import__("qtree").seeded_rng(default=11)
        upgraded = 0
        for _ in range(200):
            base = TREE.random_downward_closed(rng, 5)
            model = NonsingularModel(BasePointSet(base))
            closed = model.closed_points()
            members = sorted(TREE.members(closed), key=lambda p: p.sort_key())
            atoms = SymbolicPointSet.empty()
            if rng.random() < 0.7:
                keep = [f for f in closed.fans if rng.random() < 0.6]
                atoms = atoms.union(SymbolicPointSet(fans=tuple(keep)))
            picks = rng.sample(members, k=min(len(members), rng.randint(0, 3)))
            picks = [p for p in picks if p not in atoms]
            atoms = atoms.union(singles(*picks))
            if atoms.is_empty:
                continue
            plain = classify(IntersectionDescriptor(model, atoms, henselian=False))
            hens = classify(IntersectionDescriptor(model, atoms, henselian=True))
            assert plain.maximal_ideal_count == hens.maximal_ideal_count
            assert plain.essential is hens.essential
            if plain.irredundant is Verdict.YES:
                assert hens.irredundant is Verdict.YES
            elif plain.irredundant is Verdict.NO:
                assert hens.irredundant is Verdict.NO
            else:
                assert hens.irredundant in (Verdict.YES, Verdict.UNKNOWN)
                if hens.irredundant is Verdict.YES:
                    upgraded += 1
        assert upgraded > 0


class TestMinimalPoints:
    def test_finite_antichain_is_fixed(self):
        d = IntersectionDescriptor(EX_MODEL, singles(P("X", "Y"), P("Y", "X")))
        assert minimal_points(d) == d.subset

    def test_fan_absorbs_deeper_single(self):
        subset = fan(ROOT).union(singles(P("X", "Y")))
        d = IntersectionDescriptor(model_of(ROOT, P("X")), subset)
        assert minimal_points(d) == fan(ROOT)

    def test_classify_flags_non_minimal_subsets(self):
        subset = fan(ROOT).union(singles(P("X", "Y")))
        d = IntersectionDescriptor(model_of(ROOT, P("X")), subset)
        assert minimal_points(d) != d.subset
        assert classify(d).irredundant is Verdict.NO


class TestCompleteRepresentation:
    def test_full_closed_point_set_is_complete(self):
        for model in (BLOWUP, EX_MODEL, DOUBLE_POINT_MODEL):
            d = IntersectionDescriptor(model, model.closed_points())
            assert is_complete_representation(d) is Verdict.YES

    def test_first_neighborhood_minus_a_point_is_not(self):
        d = IntersectionDescriptor(BLOWUP, fan(ROOT, "X"))
        assert is_complete_representation(d) is Verdict.NO

    def test_henselian_proper_subsets_are_not(self):
        subset = fan(ROOT, "Y")
        d = IntersectionDescriptor(DOUBLE_POINT_MODEL, subset, henselian=True)
        assert is_complete_representation(d) is Verdict.NO

    def test_proper_subsets_of_the_root_neighborhood_are_never_complete(self):
        # regardless of the ambient model and without the Henselian flag
        d = IntersectionDescriptor(DOUBLE_POINT_MODEL, fan(ROOT, "Y"))
        assert is_complete_representation(d) is Verdict.NO

    def test_subsets_above_a_fixed_point_are_never_complete(self):
        # every member contains the y-direction point, hence so does the
        # intersection, which therefore is not the root ring
        d = IntersectionDescriptor(DOUBLE_POINT_MODEL, fan(P("Y")))
        assert is_complete_representation(d) is Verdict.NO

    def test_fallback_is_unknown(self):
        # infinite proper subset spreading over both directions, not within
        # the root's first neighborhood, no Henselian hypothesis
        subset = fan(P("X")).union(fan(P("Y")))
        d = IntersectionDescriptor(EX_MODEL, subset, henselian=False)
        assert is_complete_representation(d) is Verdict.UNKNOWN


def test_ring_identity_ignores_redundant_members():
    lean = IntersectionDescriptor(model_of(ROOT, P("X")), fan(ROOT))
    padded = IntersectionDescriptor(
        model_of(ROOT, P("X")), fan(ROOT).union(singles(P("X", "Y")))
    )
    assert represents_same_ring(lean, padded)
    other = IntersectionDescriptor(model_of(ROOT, P("X")), fan(ROOT, "t1"))
    assert not represents_same_ring(lean, other)
