"""Partitions, Young diagram moves and exact character tables of S_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import check_cap

MAX_K = 9


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Sorting partitions of the same size in descending order gives the
    reverse-lexicographic order ([k] first, [1^k] last).
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    @classmethod
    def parse(cls, text):
        body = text.strip().strip("[]").strip()
        return cls(int(p) for p in body.split(",")) if body else cls()


def partitions_of(k):
    """All partitions of k in reverse-lexicographic order."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(k, k)]


def z_centralizer(cycle_type):
    """Order of the centralizer of a permutation with the given cycle type."""
    mult = {}
    for c in cycle_type:
        mult[c] = mult.get(c, 0) + 1
    return prod(i**m * factorial(m) for i, m in mult.items())


def class_size(cycle_type):
    return factorial(sum(cycle_type)) // z_centralizer(cycle_type)


def _beta_set(shape, length):
    return tuple(shape[i] + (length - 1 - i) if i < len(shape) else length - 1 - i for i in range(length))


def _shape_from_beta(beta):
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(p for p in (b - (length - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape, cycles):
    """Murnaghan-Nakayama recursion: strip border strips of length cycles[0]."""
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(shape, len(shape))
    members = set(beta)
    total = 0
    for b in beta:
        # removing a border strip of length r moves a bead from b to b - r
        if b - r < 0 or (b - r) in members:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        new_beta = [c if c != b else b - r for c in beta]
        total += (-1) ** height * _mn(_shape_from_beta(new_beta), rest)
    return total


def character_value(shape, cycle_type):
    """χ_shape evaluated on the class of the given cycle type."""
    shape, cycle_type = Partition(shape), Partition(cycle_type)
    if shape.size != cycle_type.size:
        raise ValueError(f"size mismatch: {shape} vs {cycle_type}")
    return _mn(tuple(shape), tuple(cycle_type))


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters of S_k; ``chars[i][j]`` is χ_{irreps[i]} on ``classes[j]``."""

    k: int
    classes: list
    class_sizes: list
    irreps: list
    chars: list = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_irrep_index", {p: i for i, p in enumerate(self.irreps)})
        object.__setattr__(self, "_class_index", {c: j for j, c in enumerate(self.classes)})

    def value(self, irrep, cycle_type):
        return self.chars[self._irrep_index[Partition(irrep)]][self._class_index[Partition(cycle_type)]]

    def row(self, irrep):
        return list(self.chars[self._irrep_index[Partition(irrep)]])

    def character(self, irrep):
        """The character as a mapping cycle type -> value."""
        return dict(zip(self.classes, self.row(irrep)))

    def degree(self, irrep):
        return self.value(irrep, Partition([1] * self.k))

    def format(self):
        """Aligned integer table, one row per irreducible."""
        head = ["", *map(str, self.classes)]
        rows = [[str(p), *map(str, r)] for p, r in zip(self.irreps, self.chars)]
        rows.insert(0, ["size", *map(str, self.class_sizes)])
        width = [max(len(line[c]) for line in [head, *rows]) for c in range(len(head))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(line, width)) for line in [head, *rows])


def character_table(k):
    if k < 0:
        raise ValueError("k must be non-negative")
    check_cap("k", k, MAX_K)
    parts = partitions_of(k)
    chars = [[_mn(tuple(lam), tuple(mu)) for mu in parts] for lam in parts]
    return CharacterTable(k, parts, [class_size(mu) for mu in parts], parts, chars)


def product_classes(a, b):
    """Conjugacy classes of S_a × S_b with their sizes."""
    return {(ca, cb): class_size(ca) * class_size(cb) for ca in partitions_of(a) for cb in partitions_of(b)}


def inner_product(f, g, a, b):
    """⟨f, g⟩ for class functions on S_a × S_b keyed by pairs of cycle types."""
    classes = product_classes(a, b)
    if set(f) != set(classes) or set(g) != set(classes):
        raise ValueError(f"class functions must be defined on exactly the classes of S_{a} x S_{b}")
    total = sum(size * f[c] * g[c].conjugate() for c, size in classes.items())
    return Fraction(total, factorial(a) * factorial(b))


def outer_character(u, v):
    """χ_u ⊗ χ_v on S_a × S_b as a mapping from pairs of cycle types."""
    u, v = Partition(u), Partition(v)
    return {
        (ca, cb): character_value(u, ca) * character_value(v, cb)
        for ca in partitions_of(u.size)
        for cb in partitions_of(v.size)
    }


def _sorted_unique(shapes):
    return sorted({Partition(s) for s in shapes}, reverse=True)


def remove_one_box(alpha):
    """Partitions obtained by deleting one corner box (branching rule)."""
    alpha = Partition(alpha)
    if not alpha:
        raise ValueError("cannot remove a box from the empty partition")
    out = []
    for i, p in enumerate(alpha):
        if i + 1 == len(alpha) or alpha[i + 1] < p:
            shape = list(alpha)
            shape[i] -= 1
            out.append(tuple(x for x in shape if x))
    return _sorted_unique(out)


def add_one_box(alpha):
    alpha = Partition(alpha)
    out = []
    for i in range(len(alpha) + 1):
        current = alpha[i] if i < len(alpha) else 0
        if i == 0 or alpha[i - 1] > current:
            shape = list(alpha) + [0]
            shape[i] += 1
            out.append(tuple(x for x in shape if x))
    return _sorted_unique(out)


def is_horizontal_strip(outer, inner):
    """True when outer ⊇ inner and no column of outer/inner holds two boxes."""
    outer, inner = Partition(outer), Partition(inner)
    if len(outer) < len(inner) or any(o < i for o, i in zip(outer, inner)):
        return False
    # interlacing: outer_{i+1} <= inner_i
    padded = list(inner) + [0] * (len(outer) - len(inner))
    return all(outer[i + 1] <= padded[i] for i in range(len(outer) - 1))


def add_two_boxes_distinct_columns(alpha):
    """Partitions obtained by adding a horizontal 2-strip (two-box Young/Pieri rule)."""
    alpha = Partition(alpha)
    grown = {beta for mid in add_one_box(alpha) for beta in add_one_box(mid)}
    return _sorted_unique(b for b in grown if is_horizontal_strip(b, alpha))
