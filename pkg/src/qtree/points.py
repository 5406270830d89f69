"""Infinitely near points and symbolic point sets of the quadratic tree.

The quadratic tree of a 2-dimensional regular local ring D is the set of all
iterated local quadratic transforms of D, partially ordered by inclusion.
Every point dominates a unique point one level down, so a point is encoded by
the sequence of direction labels chosen along the unique chain from the root;
the root itself is the empty path.

Direction labels are opaque tokens.  The first neighborhood of a point is
parametrized by the closed points of a projective line over the residue
field; the reserved tokens ``X`` and ``Y`` name the two coordinate directions
used by the monomial backend, and any other token names some other direction.
The calculus assumes every first neighborhood is infinite (true whenever the
residue field is infinite) and never enumerates one; it only ever excludes
finitely many directions from one, which is what :class:`SymbolicPointSet`
makes representable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import RootHasNoParent

X_DIR = "X"
Y_DIR = "Y"


def label_key(label: str) -> tuple[int, str]:
    """Sort key putting ``X`` first, ``Y`` second, other tokens alphabetically."""
    if label == X_DIR:
        return (0, "")
    if label == Y_DIR:
        return (1, "")
    return (2, label)


@dataclass(frozen=True)
class Point:
    """A point of the quadratic tree, identified by its path from the root.

    Two points are equal iff their paths are equal; the ancestors of a point
    are exactly its path prefixes.
    """

    path: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.path, tuple):
            object.__setattr__(self, "path", tuple(self.path))
        for label in self.path:
            if not isinstance(label, str) or not label:
                raise ValueError("direction labels must be nonempty strings")

    @classmethod
    def of(cls, *labels: str) -> "Point":
        return cls(tuple(labels))

    @property
    def level(self) -> int:
        return len(self.path)

    @property
    def is_root(self) -> bool:
        return not self.path

    @property
    def last_label(self) -> str:
        if self.is_root:
            raise RootHasNoParent("the root carries no incoming direction label")
        return self.path[-1]

    def parent(self) -> "Point":
        """The unique point this one dominates at the previous level."""
        if self.is_root:
            raise RootHasNoParent("the root is not a quadratic transform of any point")
        return Point(self.path[:-1])

    def child(self, label: str) -> "Point":
        """The first-neighborhood point of this one in the given direction."""
        return Point(self.path + (label,))

    def chain(self) -> tuple["Point", ...]:
        """The unique chain from the root to this point, both ends included."""
        return tuple(Point(self.path[:i]) for i in range(self.level + 1))

    def leq(self, other: "Point") -> bool:
        """Containment order: true iff this path is a prefix of the other's."""
        return other.path[: self.level] == self.path

    def meet(self, other: "Point") -> "Point":
        """The maximal common ancestor (longest common path prefix)."""
        n = 0
        for a, b in zip(self.path, other.path):
            if a != b:
                break
            n += 1
        return Point(self.path[:n])

    def sort_key(self) -> tuple:
        return (self.level, tuple(label_key(l) for l in self.path))

    def __str__(self) -> str:
        return "D" if self.is_root else ".".join(self.path)


ROOT = Point()


def is_antichain(points: Iterable[Point]) -> bool:
    """True iff no two distinct points of the collection are comparable."""
    pts = list(points)
    for a, b in itertools.combinations(pts, 2):
        if a.leq(b) or b.leq(a):
            return False
    return True


def sorted_points(points: Iterable[Point]) -> tuple[Point, ...]:
    """Points in canonical order: by level, then by path label order."""
    return tuple(sorted(points, key=Point.sort_key))


@dataclass(frozen=True)
class OrderValuation:
    """The order valuation of the regular local ring at a point.

    Order valuations are exactly the prime divisors of the second kind on the
    root ring; two of them are equal iff their centers are equal.
    """

    center: Point

    def __str__(self) -> str:
        return f"ord({self.center})"


@dataclass(frozen=True)
class CofiniteFan:
    """A first neighborhood minus finitely many directions.

    Represents Q1(base) with the listed direction labels removed.  Because
    first neighborhoods are infinite, a fan is always an infinite set.
    """

    base: Point
    excluded: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        canonical = tuple(sorted(set(self.excluded), key=label_key))
        object.__setattr__(self, "excluded", canonical)

    def sort_key(self) -> tuple:
        return self.base.sort_key()

    def __str__(self) -> str:
        if not self.excluded:
            return f"Q1({self.base})"
        return f"Q1({self.base}) - {{{', '.join(self.excluded)}}}"


@dataclass(frozen=True)
class SymbolicPointSet:
    """A finite union of single points and cofinite first-neighborhood fans.

    Values are kept in canonical form: fans have pairwise distinct bases,
    no single point is covered by a fan (a single whose parent carries a fan
    is folded into that fan), and all tuples are sorted canonically.  Two
    values are equal iff they describe the same set of points.
    """

    singles: tuple[Point, ...] = ()
    fans: tuple[CofiniteFan, ...] = ()

    def __post_init__(self) -> None:
        single_set = set(self.singles)
        fan_map: dict[Point, set[str]] = {}
        for fan in self.fans:
            excl = set(fan.excluded)
            if fan.base in fan_map:
                # union of two cofinite sets over one base excludes only
                # the directions excluded by both
                fan_map[fan.base] &= excl
            else:
                fan_map[fan.base] = excl
        for base, excl in fan_map.items():
            folded = {p for p in single_set if not p.is_root and p.parent() == base}
            excl -= {p.last_label for p in folded}
            single_set -= folded
        object.__setattr__(self, "singles", sorted_points(single_set))
        object.__setattr__(
            self,
            "fans",
            tuple(
                CofiniteFan(base, tuple(excl))
                for base, excl in sorted(fan_map.items(), key=lambda kv: kv[0].sort_key())
            ),
        )

    @classmethod
    def empty(cls) -> "SymbolicPointSet":
        return cls()

    @classmethod
    def of_points(cls, points: Iterable[Point]) -> "SymbolicPointSet":
        return cls(singles=tuple(points))

    @classmethod
    def fan(cls, base: Point, excluded: Iterable[str] = ()) -> "SymbolicPointSet":
        return cls(fans=(CofiniteFan(base, tuple(excluded)),))

    @cached_property
    def _single_set(self) -> frozenset[Point]:
        return frozenset(self.singles)

    @cached_property
    def _fan_map(self) -> dict[Point, CofiniteFan]:
        return {fan.base: fan for fan in self.fans}

    def __contains__(self, p: Point) -> bool:
        if p in self._single_set:
            return True
        if p.is_root:
            return False
        fan = self._fan_map.get(p.parent())
        return fan is not None and p.last_label not in fan.excluded

    @property
    def is_empty(self) -> bool:
        return not self.singles and not self.fans

    @property
    def is_finite(self) -> bool:
        return not self.fans

    def finite_points(self) -> tuple[Point, ...]:
        if self.fans:
            raise ValueError("the set contains a cofinite fan and is infinite")
        return self.singles

    def union(self, *others: "SymbolicPointSet") -> "SymbolicPointSet":
        singles = self.singles
        fans = self.fans
        for other in others:
            singles += other.singles
            fans += other.fans
        return SymbolicPointSet(singles, fans)

    def minus(self, points: Iterable[Point]) -> "SymbolicPointSet":
        """Remove finitely many points; fans grow their excluded label sets."""
        removed = set(points)
        singles = tuple(p for p in self.singles if p not in removed)
        fans = []
        for fan in self.fans:
            extra = {
                p.last_label
                for p in removed
                if not p.is_root and p.parent() == fan.base
            }
            fans.append(CofiniteFan(fan.base, fan.excluded + tuple(extra)))
        return SymbolicPointSet(singles, tuple(fans))

    def is_subset(self, other: "SymbolicPointSet") -> bool:
        for fan in self.fans:
            cover = other._fan_map.get(fan.base)
            if cover is None or not set(cover.excluded) <= set(fan.excluded):
                return False
        return all(p in other for p in self.singles)

    def _member_strictly_below(self, p: Point) -> bool:
        for q in self.singles:
            if q != p and q.leq(p):
                return True
        for fan in self.fans:
            b = fan.base
            if (
                b.level + 1 < p.level
                and p.path[: b.level] == b.path
                and p.path[b.level] not in fan.excluded
            ):
                return True
        return False

    def _member_leq(self, target: Point) -> bool:
        for q in self.singles:
            if q.leq(target):
                return True
        for fan in self.fans:
            b = fan.base
            if (
                b.level < target.level
                and target.path[: b.level] == b.path
                and target.path[b.level] not in fan.excluded
            ):
                return True
        return False

    def is_antichain(self) -> bool:
        """True iff no two distinct members of the set are comparable."""
        for a, b in itertools.combinations(self.singles, 2):
            if a.leq(b) or b.leq(a):
                return False
        for p in self.singles:
            for fan in self.fans:
                if p.leq(fan.base):
                    return False
                if self._fan_has_member_strictly_below(fan, p):
                    return False
        for f1, f2 in itertools.permutations(self.fans, 2):
            b1, b2 = f1.base, f2.base
            if (
                b1.level < b2.level
                and b2.path[: b1.level] == b1.path
                and b2.path[b1.level] not in f1.excluded
            ):
                return False
        return True

    @staticmethod
    def _fan_has_member_strictly_below(fan: CofiniteFan, p: Point) -> bool:
        b = fan.base
        return (
            b.level + 1 < p.level
            and p.path[: b.level] == b.path
            and p.path[b.level] not in fan.excluded
        )

    def minimal_points(self) -> "SymbolicPointSet":
        """The members minimal under the containment order.

        A single survives unless some distinct member lies strictly below it;
        a fan survives unless some member lies weakly below its base (every
        point of the fan dominates the base, so one dominated member dooms
        the whole fan).
        """
        singles = tuple(p for p in self.singles if not self._member_strictly_below(p))
        fans = tuple(f for f in self.fans if not self._member_leq(f.base))
        return SymbolicPointSet(singles, fans)

    def __str__(self) -> str:
        parts = [str(f) for f in self.fans]
        if self.singles:
            parts.append("{" + ", ".join(str(p) for p in self.singles) + "}")
        return " + ".join(parts) if parts else "{}"
