import itertools
import math

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import P
from qtree import (
    ROOT,
    CompleteIdeal,
    MonomialIdeal,
    MonomialValuation,
    NonToricPoint,
    NotComplete,
    NotCoprime,
    NotMPrimary,
    base_points,
    factorize,
    generators_for_ideal,
    minkowski_sum,
    point_for_valuation,
    seeded_rng,
    simple_ideal,
    valuation_for_point,
)

M = MonomialIdeal.of


class TestMonomialIdeal:
    def test_minimal_generating_set(self):
        assert M((2, 0), (1, 1), (2, 2), (0, 3)).gens == ((0, 3), (1, 1), (2, 0))

    def test_m_primary_detection(self):
        assert M((1, 0), (0, 1)).is_m_primary
        assert not M((1, 0)).is_m_primary  # (x): no pure power of y
        assert not M((1, 1), (0, 2)).is_m_primary
        assert not MonomialIdeal.unit().is_m_primary

    def test_text_round_trip(self):
        ideal = MonomialIdeal.from_text("x^4, x^2 y, x y^2, y^4")
        assert ideal.gens == ((0, 4), (1, 2), (2, 1), (4, 0))
        assert ideal.to_text() == "x^4, x^2 y, x y^2, y^4"
        assert MonomialIdeal.from_text("x, y").to_text() == "x, y"
        assert MonomialIdeal.from_text("1").is_unit
        assert MonomialIdeal.from_text("x^2y").gens == ((2, 1),)
        with pytest.raises(ValueError):
            MonomialIdeal.from_text("x^2 + y")

    def test_order(self):
        assert M((1, 0), (0, 1)).order() == 1
        assert MonomialIdeal.from_text("x^2, x y, y^3").order() == 2
        assert MonomialIdeal.from_text("x^4, x^2 y, x y^2, y^4").order() == 3


class TestIntegralClosure:
    def test_two_generator_diagonal(self):
        # brute-force witness: 2*(1,1) dominates (2,0)+(0,2)
        expected = oracles.brute_force_closure(((2, 0), (0, 2)), kmax=2)
        assert expected == ((0, 2), (1, 1), (2, 0))
        assert M((2, 0), (0, 2)).integral_closure() == M(*expected)

    def test_already_complete(self):
        assert M((1, 0), (0, 1)).integral_closure() == M((1, 0), (0, 1))

    def test_fourth_powers(self):
        expected = oracles.brute_force_closure(((4, 0), (0, 4)), kmax=4)
        assert expected == ((0, 4), (1, 3), (2, 2), (3, 1), (4, 0))
        assert M((4, 0), (0, 4)).integral_closure() == M(*expected)

    def test_requires_m_primary(self):
        with pytest.raises(NotMPrimary):
            M((1, 1), (0, 2)).integral_closure()

    def test_closure_matches_power_oracle_on_random_ideals(self):
        rng = seeded_rng(default=5150)
        checked = 0
        while checked < 150:
            gens = oracles.random_m_primary_gens(rng)
            span = oracles.max_edge_span(gens)
            closed = M(*gens).integral_closure()
            assert closed == M(*oracles.brute_force_closure(gens, kmax=max(span, 1)))
            assert closed.integral_closure() == closed
            checked += 1

    def test_closure_matches_valuative_criterion(self):
        # third route: membership under every monomial valuation; exact with
        # weights up to 8 because edge normals are bounded by the exponents
        rng = seeded_rng(default=7777)
        for _ in range(80):
            gens = oracles.random_m_primary_gens(rng)
            by_valuations = oracles.closure_by_valuation_test(gens, weight_bound=8)
            assert MonomialIdeal(gens).integral_closure() == MonomialIdeal.of(
                *by_valuations
            )

    def test_closure_is_multiplicative(self):
        rng = seeded_rng(default=6)
        for _ in range(60):
            i = M(*oracles.random_m_primary_gens(rng, max_exp=6, extra=3))
            j = M(*oracles.random_m_primary_gens(rng, max_exp=6, extra=3))
            product = (i * j).integral_closure()
            assert (
                i.integral_closure() * j.integral_closure()
            ).integral_closure() == product
            # the product polygon is the Minkowski sum of the two polygons
            summed = minkowski_sum(
                i.integral_closure().newton_region(),
                j.integral_closure().newton_region(),
            )
            assert product.newton_region().vertices == summed


class TestNewtonRegion:
    def test_vertices_and_edges(self):
        region = MonomialIdeal.from_text("x^4, x^2 y, x y^2, y^4").newton_region()
        assert region.vertices == ((0, 4), (1, 2), (2, 1), (4, 0))
        assert [e.normal for e in region.edges] == [(2, 1), (1, 1), (1, 2)]
        assert [e.lattice_length for e in region.edges] == [1, 1, 1]

    def test_collinear_generators_are_not_vertices(self):
        region = M((4, 0), (2, 2), (0, 4)).newton_region()
        assert region.vertices == ((0, 4), (4, 0))
        assert region.edges[0].lattice_length == 4

    def test_slopes_of_normals_increase(self):
        rng = seeded_rng(default=99)
        for _ in range(80):
            region = (
                M(*oracles.random_m_primary_gens(rng)).integral_closure().newton_region()
            )
            slopes = [e.normal[1] / e.normal[0] for e in region.edges]
            assert slopes == sorted(slopes)
            assert all(s > 0 for s in slopes)
            assert region.vertices[0][0] == 0 and region.vertices[-1][1] == 0

    def test_svg_export(self):
        svg = M((2, 0), (0, 2)).newton_region().to_svg()
        assert svg.startswith("<svg") and "polyline" in svg


class TestQuadraticTransform:
    def test_transform_of_the_maximal_ideal_is_unit(self):
        assert MonomialIdeal.maximal().quadratic_transform("X").is_unit
        assert MonomialIdeal.maximal().quadratic_transform("Y").is_unit

    def test_y_transform_of_x_y_squared(self):
        got = M((1, 0), (0, 2)).quadratic_transform("Y")
        assert got == MonomialIdeal.maximal()

    def test_x_transform_of_x_y_squared_is_unit(self):
        assert M((1, 0), (0, 2)).quadratic_transform("X").is_unit

    def test_requires_complete(self):
        with pytest.raises(NotComplete):
            M((2, 0), (0, 2)).quadratic_transform("X")

    def test_rejects_other_directions(self):
        with pytest.raises(NonToricPoint):
            MonomialIdeal.maximal().quadratic_transform("t1")


class TestBasePoints:
    def test_maximal_ideal(self):
        assert base_points(MonomialIdeal.maximal()).points == {ROOT}

    def test_x_y_squared(self):
        assert base_points(M((1, 0), (0, 2))).points == {ROOT, P("Y")}

    def test_three_point_ideal(self):
        ideal = MonomialIdeal.from_text("x^4, x^2 y, x y^2, y^4")
        assert base_points(ideal).points == {ROOT, P("X"), P("Y")}

    def test_takes_closure_first(self):
        assert base_points(M((2, 0), (0, 2))).points == {ROOT}


class TestFactorize:
    def test_two_simple_factors(self):
        ideal = MonomialIdeal.from_text("x^2, x y, y^3")
        assert factorize(ideal) == CompleteIdeal.of([ROOT, P("Y")])

    def test_three_simple_factors(self):
        ideal = MonomialIdeal.from_text("x^4, x^2 y, x y^2, y^4")
        assert factorize(ideal) == CompleteIdeal.of([ROOT, P("X"), P("Y")])

    def test_square_of_the_maximal_ideal(self):
        assert factorize(M((2, 0), (1, 1), (0, 2))) == CompleteIdeal.of({ROOT: 2})

    def test_requires_complete(self):
        with pytest.raises(NotComplete):
            factorize(M((2, 0), (0, 2)))

    def test_round_trips_with_generators(self):
        rng = seeded_rng(default=13)
        for _ in range(60):
            ideal = M(*oracles.random_m_primary_gens(rng)).integral_closure()
            assert generators_for_ideal(factorize(ideal)) == ideal

    def test_toric_ideals_with_multiplicities_round_trip(self):
        toric = st.dictionaries(
            st.builds(
                lambda ls: P(*ls), st.lists(st.sampled_from(["X", "Y"]), max_size=3)
            ),
            st.integers(1, 3),
            min_size=1,
            max_size=3,
        )

        @given(toric)
        def check(factors):
            j = CompleteIdeal.of(factors)
            assert factorize(generators_for_ideal(j)) == j

        check()

    def test_rees_valuations_match_edge_normals(self):
        rng = seeded_rng(default=21)
        for _ in range(40):
            ideal = M(*oracles.random_m_primary_gens(rng)).integral_closure()
            region = ideal.newton_region()
            from_edges = {
                point_for_valuation(MonomialValuation(*e.normal))
                for e in region.edges
            }
            factored = factorize(ideal)
            assert {v.center for v in factored.rees_valuations()} == from_edges
            assert len(factored.support) == len(region.edges)


class TestEuclidCorrespondence:
    def test_examples(self):
        assert point_for_valuation(MonomialValuation(1, 1)) == ROOT
        assert point_for_valuation(MonomialValuation(1, 2)) == P("X")
        assert point_for_valuation(MonomialValuation(2, 1)) == P("Y")
        assert valuation_for_point(ROOT) == MonomialValuation(1, 1)
        assert valuation_for_point(P("Y")) == MonomialValuation(2, 1)
        assert valuation_for_point(P("X", "Y")) == MonomialValuation(2, 3)
        assert point_for_valuation(MonomialValuation(2, 3)) == P("X", "Y")

    def test_round_trip_small(self):
        for p in range(1, 20):
            for q in range(1, 20 - p + 1):
                if math.gcd(p, q) != 1:
                    continue
                v = MonomialValuation(p, q)
                assert valuation_for_point(point_for_valuation(v)) == v

    def test_rejects_non_coprime(self):
        with pytest.raises(NotCoprime):
            MonomialValuation(2, 4)
        with pytest.raises(NotCoprime):
            MonomialValuation(0, 1)

    def test_rejects_non_toric_points(self):
        with pytest.raises(NonToricPoint):
            valuation_for_point(P("t1"))


class TestSimpleIdeals:
    def test_coordinate_ideals(self):
        assert simple_ideal(MonomialValuation(1, 1)) == MonomialIdeal.maximal()
        assert simple_ideal(MonomialValuation(1, 2)) == M((2, 0), (0, 1))
        assert simple_ideal(MonomialValuation(2, 1)) == M((1, 0), (0, 2))

    def test_simple_ideals_are_complete_with_one_rees_valuation(self):
        for p in range(1, 8):
            for q in range(1, 8):
                if math.gcd(p, q) != 1:
                    continue
                s = simple_ideal(MonomialValuation(p, q))
                assert s.is_complete
                factors = factorize(s)
                assert factors == CompleteIdeal.simple(
                    point_for_valuation(MonomialValuation(p, q))
                )


class TestGeneratorsForIdeal:
    def test_root_gives_the_maximal_ideal(self):
        assert generators_for_ideal(CompleteIdeal.simple(ROOT)) == MonomialIdeal.maximal()

    def test_saturation_of_the_y_direction_factor(self):
        j = CompleteIdeal.simple(P("Y")).saturate()
        assert generators_for_ideal(j).to_text() == "x^2, x y, y^3"

    def test_three_point_model_ideal(self):
        j = CompleteIdeal.of([ROOT, P("X"), P("Y")])
        assert generators_for_ideal(j).to_text() == "x^4, x^2 y, x y^2, y^4"

    def test_rejects_non_toric_factors(self):
        with pytest.raises(NonToricPoint):
            generators_for_ideal(CompleteIdeal.simple(P("t1")))


def test_cross_layer_base_point_agreement():
    # combinatorial chain closure vs recursive transform descent
    coordinate_points = [
        P(*path)
        for level in range(0, 4)
        for path in itertools.product("XY", repeat=level)
    ]
    for point in coordinate_points:
        j = CompleteIdeal.simple(point).saturate()
        assert base_points(generators_for_ideal(j)).points == j.base_points().points


def test_transforms_along_a_chain_reach_m_then_unit():
    for level in range(1, 5):
        for path in itertools.product("XY", repeat=level):
            point = P(*path)
            ideal = simple_ideal(valuation_for_point(point))
            current = ideal
            for step, label in enumerate(path):
                off_path = "Y" if label == "X" else "X"
                # the direction leaving the chain leads off the base points
                assert current.quadratic_transform(off_path).is_unit
                current = current.quadratic_transform(label)
            assert current == MonomialIdeal.maximal()
            assert current.quadratic_transform("X").is_unit
            assert current.quadratic_transform("Y").is_unit


def test_chart_membership_value_inequalities():
    # containments of monomial-times-(x+y) elements under the three order
    # valuations of the three-base-point configuration, checked as value
    # comparisons; v(x+y) = min(v(x), v(y)) for each of these valuations
    v = MonomialValuation(1, 1)
    va = MonomialValuation(1, 2)
    vb = MonomialValuation(2, 1)

    def value(valn, a, b, s=0):
        return valn.element_value(a, b, s)

    # x^3 against y(x+y), y^3 against x(x+y), x and y against x+y
    assert value(v, 3, 0) > value(v, 0, 1, 1)
    assert value(v, 0, 3) > value(v, 1, 0, 1)
    assert value(v, 1, 0) == value(v, 0, 0, 1)
    assert value(v, 0, 1) == value(v, 0, 0, 1)

    assert value(va, 3, 0) == value(va, 0, 1, 1)
    assert value(va, 0, 3) > value(va, 1, 0, 1)
    assert value(va, 1, 0) == value(va, 0, 0, 1)
    assert value(va, 0, 1) > value(va, 0, 0, 1)

    assert value(vb, 3, 0) > value(vb, 0, 1, 1)
    assert value(vb, 0, 3) == value(vb, 1, 0, 1)
    assert value(vb, 1, 0) > value(vb, 0, 0, 1)
    assert value(vb, 0, 1) == value(vb, 0, 0, 1)
