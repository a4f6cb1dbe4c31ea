"""Ordinary quivers of the six monoid algebras.

Two independent routes build every quiver: combinatorial rules
(:func:`quiver_rule`) and oracles that go back to the category, either
through characters of the permutation module of surjections (pt) or
through brute-force irreducible morphisms (trivial endomorphism groups).
Arrows always point from the larger object to the smaller one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from . import symgroup
from .eicat import (
    build_category,
    endomorphisms_trivial,
    irreducibles_bruteforce,
    lower_neighbour,
    skeletonize,
    subset_label,
)
from .errors import check_cap
from .partialmaps import Family
from .symgroup import Partition, partitions_of

CHARACTER_ORACLE_MAX_N = 6


@dataclass(frozen=True)
class Vertex:
    id: str
    rank: int
    label: object  # Partition, int or frozenset


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    multiplicity: int


@dataclass
class Quiver:
    family: str
    n: int
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)

    def __post_init__(self):
        self.family = Family(self.family).value
        self._normalize()

    def _normalize(self):
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        order = {v: i for i, v in enumerate(ids)}
        merged = Counter()
        for a in self.arrows:
            if a.source not in order or a.target not in order:
                raise ValueError(f"arrow {a} has an unknown endpoint")
            merged[a.source, a.target] += a.multiplicity
        self.arrows = [
            Arrow(s, t, m)
            for (s, t), m in sorted(merged.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))
            if m > 0
        ]

    def vertex(self, vid):
        return next(v for v in self.vertices if v.id == vid)

    def multiplicity(self, source, target):
        return next((a.multiplicity for a in self.arrows if a.source == source and a.target == target), 0)

    def arrow_count(self):
        return sum(a.multiplicity for a in self.arrows)

    def arrow_multiset(self):
        return {(a.source, a.target): a.multiplicity for a in self.arrows}

    def restrict_to_ranks(self, max_rank):
        keep = [v for v in self.vertices if v.rank <= max_rank]
        ids = {v.id for v in keep}
        return Quiver(
            self.family,
            self.n,
            keep,
            [a for a in self.arrows if a.source in ids and a.target in ids],
        )

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and (self.family, self.n) == (other.family, other.n)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )


def partition_vertex(p):
    p = Partition(p)
    return Vertex(f"p:{p}", p.size, p)


def rank_vertex(k):
    return Vertex(f"r:{k}", k, k)


def subset_vertex(s):
    s = frozenset(s)
    return Vertex(f"s:{subset_label(s)}", len(s), s)


def _partition_vertices(n):
    return [partition_vertex(p) for k in range(n, -1, -1) for p in partitions_of(k)]


def _subsets_desc(n):
    subsets = [frozenset(x + 1 for x in range(n) if mask >> x & 1) for mask in range(1 << n)]
    return sorted(subsets, key=lambda s: (-len(s), sorted(s)))


def _subset_vertices(n):
    return [subset_vertex(s) for s in _subsets_desc(n)]


def _pt_arrows(n):
    arrows = []
    for k in range(1, n):
        for alpha in partitions_of(k):
            counts = Counter(
                beta
                for gamma in symgroup.remove_one_box(alpha)
                for beta in symgroup.add_two_boxes_distinct_columns(gamma)
            )
            arrows += [Arrow(f"p:{beta}", f"p:{alpha}", m) for beta, m in counts.items()]
    return arrows


def pf_arrow_maps(n, exact_step=False):
    """Maps t: X -> Y fixing all but one point j, with the pf (or pc) condition on t(j).

    Yields ``(X, Y, entries)``.
    """
    for X in _subsets_desc(n):
        for j in sorted(X):
            values = [j - 1] if exact_step else range(lower_neighbour(j, X), j)
            for v in values:
                if v < 1:
                    continue
                entries = {x: x for x in X if x != j}
                entries[j] = v
                yield X, frozenset(entries.values()), entries


def _subset_arrows(n, exact_step):
    return [Arrow(subset_vertex(X).id, subset_vertex(Y).id, 1) for X, Y, _ in pf_arrow_maps(n, exact_step)]


def quiver_rule(fam, n):
    """The quiver from the closed-form combinatorial description of the family."""
    fam = Family(fam)
    if n < 1:
        raise ValueError("n must be positive")
    if fam is Family.PT:
        return Quiver(fam, n, _partition_vertices(n), _pt_arrows(n))
    if fam is Family.IS:
        return Quiver(fam, n, _partition_vertices(n), [])
    if fam is Family.PO:
        vertices = [rank_vertex(k) for k in range(n, -1, -1)]
        return Quiver(fam, n, vertices, [Arrow(f"r:{k + 1}", f"r:{k}", k) for k in range(n)])
    if fam in (Family.PF, Family.PC):
        return Quiver(fam, n, _subset_vertices(n), _subset_arrows(n, fam is Family.PC))
    # F_n is isomorphic to PF_{n-1}
    return Quiver(fam, n, _subset_vertices(n - 1), _subset_arrows(n - 1, False))


def _cycle_representative(cycle_type):
    """A permutation (0-based image tuple) with the given cycle type."""
    perm, start = [], 0
    for c in cycle_type:
        perm += [start + (i + 1) % c for i in range(c)]
        start += c
    return tuple(perm)


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def surjections(a, b):
    """All onto maps {0..a-1} -> {0..b-1} as image tuples."""
    return [f for f in product(range(b), repeat=a) if len(set(f)) == b]


def surjection_module_character(k):
    """χ_M(h, g) = #{f : h∘f∘g⁻¹ = f} on S_k × S_{k+1}, keyed by pairs of cycle types."""
    maps = surjections(k + 1, k)
    chi = {}
    for ch in partitions_of(k):
        h = _cycle_representative(ch)
        for cg in partitions_of(k + 1):
            g_inv = _inverse(_cycle_representative(cg))
            chi[ch, cg] = sum(1 for f in maps if all(h[f[g_inv[x]]] == f[x] for x in range(k + 1)))
    return chi


def quiver_pt_character_oracle(n):
    """The pt quiver from multiplicities ⟨χ_M, χ_U ⊗ conj(χ_V)⟩ on S_k × S_{k+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap("n", n, CHARACTER_ORACLE_MAX_N)
    arrows = []
    for k in range(n):
        chi = surjection_module_character(k)
        for u in partitions_of(k):
            for v in partitions_of(k + 1):
                target = {c: symgroup.character_value(u, c[0]) * _conj(symgroup.character_value(v, c[1])) for c in chi}
                m = symgroup.inner_product(chi, target, k, k + 1)
                if m.denominator != 1:
                    raise ArithmeticError(f"non-integral multiplicity {m} for {v}->{u}")
                if m:
                    arrows.append(Arrow(f"p:{v}", f"p:{u}", int(m)))
    return Quiver(Family.PT, n, _partition_vertices(n), arrows)


def _conj(x):
    return x.conjugate()


def _object_vertex(obj):
    return rank_vertex(obj) if isinstance(obj, int) else subset_vertex(obj)


def quiver_generic_trivial_groups(C, fam=None):
    """Quiver of a skeletal EI-category with trivial endomorphism groups.

    Vertices are the objects; each irreducible morphism X -> Y is one arrow
    from X to Y.
    """
    fam = Family(fam or C.family)
    if not endomorphisms_trivial(C):
        raise ValueError(f"{C!r} has a nontrivial endomorphism group")
    verts = sorted((_object_vertex(o) for o in C.objects), key=_vertex_sort_key)
    counts = Counter()
    for m in irreducibles_bruteforce(C):
        mor = C.morphisms[m]
        counts[_object_vertex(mor.dom).id, _object_vertex(mor.cod).id] += 1
    return Quiver(fam, C.n, verts, [Arrow(s, t, c) for (s, t), c in counts.items()])


def _vertex_sort_key(v):
    if isinstance(v.label, frozenset):
        return (-v.rank, sorted(v.label))
    return (-v.rank,)


def quiver_oracle(fam, n):
    """The quiver by the route independent of :func:`quiver_rule`."""
    fam = Family(fam)
    if fam is Family.PT:
        return quiver_pt_character_oracle(n)
    if fam is Family.IS:
        check_cap("n", n, CHARACTER_ORACLE_MAX_N)
        skeleton = skeletonize(build_category(fam, n))
        if irreducibles_bruteforce(skeleton):
            raise AssertionError("groupoid with irreducible morphisms")
        return Quiver(fam, n, _partition_vertices(n), [])
    if fam is Family.F:
        q = quiver_generic_trivial_groups(build_category(Family.PF, n - 1))
        return Quiver(fam, n, q.vertices, q.arrows)
    return quiver_generic_trivial_groups(skeletonize(build_category(fam, n)))


def blocks(q):
    """Connected components of the underlying undirected graph, in vertex order."""
    parent = {v.id: v.id for v in q.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in q.arrows:
        ra, rb = find(a.source), find(a.target)
        if ra != rb:
            parent[rb] = ra
    groups = {}
    for v in q.vertices:
        groups.setdefault(find(v.id), []).append(v.id)
    return list(groups.values())


def diff(expected, actual):
    """Line-oriented differences between two quivers; empty when equal."""
    lines = []
    ev, av = [v.id for v in expected.vertices], [v.id for v in actual.vertices]
    for vid in ev:
        if vid not in av:
            lines.append(f"- vertex {vid}")
    for vid in av:
        if vid not in ev:
            lines.append(f"+ vertex {vid}")
    em, am = expected.arrow_multiset(), actual.arrow_multiset()
    for key in sorted(set(em) | set(am)):
        if em.get(key, 0) != am.get(key, 0):
            lines.append(f"~ {key[0]} -> {key[1]}: rule x{em.get(key, 0)}, oracle x{am.get(key, 0)}")
    return lines
