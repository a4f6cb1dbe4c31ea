"""Partial functions on {1..n}, the six monoid families and the containment order.

A :class:`PartialMap` stores its graph as a tuple ``values`` of length ``n``
where ``values[x - 1]`` is the image of ``x`` and ``0`` marks an undefined
point. Maps compose right to left: ``compose(s, t)`` is "s after t".
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations

from .errors import SizeLimitError, check_cap

MAX_N = 7


class Family(str, Enum):
    PT = "pt"  # all partial maps
    IS = "is"  # injective partial maps
    PO = "po"  # order-preserving partial maps
    PF = "pf"  # order-decreasing partial maps
    F = "f"  # order-decreasing total maps
    PC = "pc"  # order-preserving and order-decreasing partial maps

    def __str__(self):
        return self.value


class PartialMap:
    """A partial function on {1..n}.

    >>> t = PartialMap.from_dict(3, {1: 2, 3: 2})
    >>> t.domain, t.image, t.rank
    (frozenset({1, 3}), frozenset({2}), 1)
    """

    __slots__ = ("n", "values", "_hash")

    def __init__(self, n, values):
        values = tuple(values)
        if n < 0 or len(values) != n:
            raise ValueError(f"expected {n} values, got {len(values)}")
        if any(v < 0 or v > n for v in values):
            raise ValueError(f"values out of range for n={n}: {values}")
        self.n = n
        self.values = values
        self._hash = hash((n, values))

    @classmethod
    def from_dict(cls, n, entries):
        values = [0] * n
        for x, y in entries.items():
            if not (1 <= x <= n and 1 <= y <= n):
                raise ValueError(f"entry {x}->{y} outside 1..{n}")
            values[x - 1] = y
        return cls(n, values)

    @classmethod
    def identity(cls, n, domain=None):
        points = range(1, n + 1) if domain is None else domain
        return cls.from_dict(n, {x: x for x in points})

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @property
    def entries(self):
        return {x: v for x, v in enumerate(self.values, 1) if v}

    @property
    def graph(self):
        return tuple((x, v) for x, v in enumerate(self.values, 1) if v)

    @property
    def domain(self):
        return frozenset(x for x, v in enumerate(self.values, 1) if v)

    @property
    def image(self):
        return frozenset(v for v in self.values if v)

    @property
    def rank(self):
        return len(self.image)

    @property
    def corank(self):
        """|dom t| - |im t|, the number of identifications the map makes."""
        return len(self.domain) - self.rank

    def __call__(self, x):
        v = self.values[x - 1]
        if not v:
            raise KeyError(x)
        return v

    def is_injective(self):
        defined = [v for v in self.values if v]
        return len(defined) == len(set(defined))

    def is_total(self):
        return all(self.values)

    def restrict(self, domain):
        return PartialMap(self.n, (v if x in domain else 0 for x, v in enumerate(self.values, 1)))

    def sort_key(self):
        return (len(self.domain), self.graph)

    def __eq__(self, other):
        if not isinstance(other, PartialMap):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def __repr__(self):
        return f"PartialMap({self.n}, {self.entries})"

    def __str__(self):
        return "{" + ", ".join(f"{x}->{v}" for x, v in self.graph) + "}"


def _check_same_n(s, t):
    if s.n != t.n:
        raise ValueError(f"ambient size mismatch: {s.n} != {t.n}")


def compose(s, t):
    """Return s∘t: defined on x when t(x) is defined and lies in dom s."""
    _check_same_n(s, t)
    sv = s.values
    return PartialMap(s.n, (sv[v - 1] if v else 0 for v in t.values))


def _is_order_preserving(t):
    last = 0
    for v in t.values:
        if v:
            if v < last:
                return False
            last = v
    return True


def _is_order_decreasing(t):
    return all(v <= x for x, v in enumerate(t.values, 1))


def family_contains(fam, t):
    fam = Family(fam)
    if fam is Family.PT:
        return True
    if fam is Family.IS:
        return t.is_injective()
    if fam is Family.PO:
        return _is_order_preserving(t)
    if fam is Family.PF:
        return _is_order_decreasing(t)
    if fam is Family.F:
        return t.is_total() and _is_order_decreasing(t)
    return _is_order_preserving(t) and _is_order_decreasing(t)


def _candidates(fam, x, n, used, last):
    # values admissible at point x given the already-assigned prefix
    top = x if fam in (Family.PF, Family.F, Family.PC) else n
    low = last if fam in (Family.PO, Family.PC) else 1
    values = [v for v in range(max(low, 1), top + 1)]
    if fam is Family.IS:
        values = [v for v in values if v not in used]
    if fam is not Family.F:
        values.insert(0, 0)
    return values


def enumerate_family(fam, n):
    """All elements of the family on {1..n} in canonical order.

    Canonical order sorts by domain size, then by the graph as a sorted
    list of (point, value) pairs.
    """
    fam = Family(fam)
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap("n", n, MAX_N)
    out = []
    values = [0] * n

    def extend(x, used, last):
        if x > n:
            out.append(PartialMap(n, values))
            return
        for v in _candidates(fam, x, n, used, last):
            values[x - 1] = v
            if v:
                extend(x + 1, used | {v}, v)
            else:
                extend(x + 1, used, last)
        values[x - 1] = 0

    extend(1, frozenset(), 0)
    out.sort(key=PartialMap.sort_key)
    return out


def leq(t, s):
    """Containment of graphs: t is a restriction of s."""
    _check_same_n(t, s)
    return all(tv == 0 or tv == sv for tv, sv in zip(t.values, s.values))


def restrictions(s):
    """Every t with t <= s, smallest domains first."""
    dom = sorted(s.domain)
    return [s.restrict(set(sub)) for k in range(len(dom) + 1) for sub in combinations(dom, k)]


def interval(t, s):
    """The closed interval [t, s] of the containment order."""
    return [z for z in restrictions(s) if leq(t, z)]


@lru_cache(maxsize=None)
def _mobius(t, s):
    if t == s:
        return 1
    return -sum(_mobius(t, z) for z in interval(t, s) if z != s)


def mobius(t, s):
    """Möbius function of the containment order, by the defining recursion."""
    if not leq(t, s):
        raise ValueError(f"{t} is not below {s}")
    return _mobius(t, s)


__all__ = [
    "Family",
    "PartialMap",
    "SizeLimitError",
    "compose",
    "enumerate_family",
    "family_contains",
    "interval",
    "leq",
    "mobius",
    "restrictions",
]
