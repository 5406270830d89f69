"""Nonsingular projective models over the root ring.

A nonsingular projective model is the blowup of a saturated complete
m-primary ideal, and it is determined by the ideal's base-point set alone.
Models are therefore identified here with rooted downward-closed base-point
sets; their closed points are derived symbolically as a union of cofinite
first-neighborhood fans, one per base point, each missing the directions
that lead to further base points.

Domination between nonsingular models is base-set containment, the join of
two models is the model of the product ideal (base-set union), and the
minimal desingularization of the blowup of an arbitrary complete ideal is
the blowup of its saturation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyInput, NotAntichain, NotSaturated, RootNotAllowed, UnitIdeal
from .ideals import BasePointSet, CompleteIdeal
from .points import CofiniteFan, Point, SymbolicPointSet, is_antichain, sorted_points


@dataclass(frozen=True)
class NonsingularModel:
    """A nonsingular projective model, identified by its base-point set."""

    base: BasePointSet

    def closed_points(self) -> SymbolicPointSet:
        """The closed points: each base point contributes its first
        neighborhood minus the directions leading to further base points.

        A point q is a closed point iff its parent is a base point and q
        itself is not.
        """
        fans = tuple(
            CofiniteFan(b, self.base.child_labels(b)) for b in self.base.sorted()
        )
        return SymbolicPointSet(fans=fans)

    def contains_point(self, q: Point) -> bool:
        return not q.is_root and q.parent() in self.base and q not in self.base

    def dominates(self, other: "NonsingularModel") -> bool:
        """True iff this model's base set contains the other's."""
        return self.base.points >= other.base.points

    def join(self, other: "NonsingularModel") -> "NonsingularModel":
        """The least model dominating both, realized by the product ideal."""
        return NonsingularModel(self.base.union(other.base))

    def ideal(self) -> CompleteIdeal:
        """The canonical saturated ideal whose blowup this model is."""
        return CompleteIdeal.of(self.base.sorted())

    def __str__(self) -> str:
        return f"model{self.base}"


def model_from_ideal(ideal: CompleteIdeal) -> NonsingularModel:
    """The blowup of a saturated complete ideal."""
    if ideal.is_unit:
        raise UnitIdeal("the unit ideal defines no projective model")
    if not ideal.is_saturated():
        raise NotSaturated(
            "the blowup of an unsaturated ideal is singular; saturate first"
        )
    return NonsingularModel(ideal.base_points())


def minimal_desingularization(ideal: CompleteIdeal) -> NonsingularModel:
    """The minimal desingularization of the blowup of a complete ideal.

    This is the blowup of the saturation, and it has the same base points as
    the original ideal.
    """
    if ideal.is_unit:
        raise UnitIdeal("the unit ideal defines no projective model")
    return model_from_ideal(ideal.saturate())


def _validated_antichain(points: Iterable[Point]) -> tuple[Point, ...]:
    pts = sorted_points(points)
    if not pts:
        raise EmptyInput("at least one point is required")
    if any(p.is_root for p in pts):
        raise RootNotAllowed("the root lies on no projective model over itself")
    if not is_antichain(pts):
        raise NotAntichain("the points must be pairwise incomparable")
    return pts


def minimal_model_containing(points: Iterable[Point]) -> NonsingularModel:
    """The least nonsingular model carrying every given point as a closed point.

    Its base set is the union of the chains to the parents of the given
    points; every model containing all the points has a base set containing
    this one.
    """
    pts = _validated_antichain(points)
    base: set[Point] = set()
    for p in pts:
        base.update(p.parent().chain())
    return NonsingularModel(BasePointSet(frozenset(base)))


def minimal_incomparable_set(points: Iterable[Point]) -> SymbolicPointSet:
    """The points minimal with respect to being incomparable to all the given ones.

    Computed as the closed points of the minimal model containing the given
    antichain, minus the antichain itself.
    """
    pts = _validated_antichain(points)
    model = minimal_model_containing(pts)
    return model.closed_points().minus(pts)
