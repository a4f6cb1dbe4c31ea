"""Finite EI-categories whose morphisms are total onto maps between subsets.

For a family N of partial maps that is an order ideal, the category has
the subsets of {1..n} as objects and one morphism ``dom t -> im t`` per
element t of N. Composition of morphisms is composition of the underlying
maps and is defined only when the codomain of the right factor equals the
domain of the left factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import check_cap
from .partialmaps import Family, PartialMap, compose, enumerate_family

CATEGORY_CAPS = {Family.PT: 6, Family.IS: 6, Family.PO: 7, Family.PF: 7, Family.PC: 7}


@dataclass(frozen=True)
class Morphism:
    id: int
    dom: object
    cod: object
    map: PartialMap


def subset_label(points):
    return "{" + ",".join(map(str, sorted(points))) + "}"


def object_label(obj):
    """Display label: subsets as ``{1,3}``, skeletal objects as their rank."""
    if isinstance(obj, frozenset):
        return subset_label(obj)
    return str(obj)


class FinCategory:
    """A finite category given by objects, morphisms and partial composition.

    Objects are ``frozenset`` subsets for the full categories and integer
    ranks for skeletons. ``compose(g, h)`` returns the id of g∘h or ``None``
    when the pair is not composable.
    """

    def __init__(self, family, n, objects, morphisms, skeletal=False):
        self.family = Family(family)
        self.n = n
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.skeletal = skeletal
        self._by_map = {m.map: m.id for m in self.morphisms}
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((m.dom, m.cod), []).append(m.id)
        self.identities = {}
        for obj in self.objects:
            ident = self._by_map.get(PartialMap.identity(n, self._points(obj)))
            if ident is None:
                raise ValueError(f"object {object_label(obj)} has no identity")
            self.identities[obj] = ident

    def _points(self, obj):
        return obj if isinstance(obj, frozenset) else range(1, obj + 1)

    def __len__(self):
        return len(self.morphisms)

    def __repr__(self):
        kind = "skeletal " if self.skeletal else ""
        return f"<{kind}FinCategory {self.family} n={self.n}: {len(self.objects)} objects, {len(self)} morphisms>"

    def index_of(self, t):
        return self._by_map[t]

    def hom(self, a, b):
        return list(self._hom.get((a, b), ()))

    def outgoing(self, a):
        return [mid for (d, _), ids in self._hom.items() if d == a for mid in ids]

    def compose(self, g, h):
        mg, mh = self.morphisms[g], self.morphisms[h]
        if mh.cod != mg.dom:
            return None
        return self._by_map[compose(mg.map, mh.map)]

    def is_identity(self, m):
        mor = self.morphisms[m]
        return self.identities[mor.dom] == m


def build_category(fam, n):
    """The category E_n (pt), G_n (is), EO_n (po), EF_n (pf) or EC_n (pc)."""
    fam = Family(fam)
    if fam is Family.F:
        raise ValueError("family f is not an order ideal of PT_n; use pf on n-1 points")
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap("n", n, CATEGORY_CAPS[fam])
    maps = enumerate_family(fam, n)
    objects = sorted(
        (frozenset(s) for s in _all_subsets(n)),
        key=lambda s: (len(s), sorted(s)),
    )
    morphisms = [Morphism(i, t.domain, t.image, t) for i, t in enumerate(maps)]
    return FinCategory(fam, n, objects, morphisms)


def _all_subsets(n):
    for mask in range(1 << n):
        yield [x + 1 for x in range(n) if mask >> x & 1]


def skeletonize(C):
    """Full subcategory on the objects {1..k}, relabelled by rank.

    Categories from pf and pc have no distinct isomorphic objects and are
    returned unchanged.
    """
    if C.skeletal or C.family in (Family.PF, Family.PC):
        return C
    keep = {frozenset(range(1, k + 1)): k for k in range(C.n + 1)}
    morphisms = []
    for m in C.morphisms:
        if m.dom in keep and m.cod in keep:
            morphisms.append(Morphism(len(morphisms), keep[m.dom], keep[m.cod], m.map))
    return FinCategory(C.family, C.n, list(range(C.n + 1)), morphisms, skeletal=True)


def is_isomorphism(C, m):
    """True iff m has a two-sided inverse in the composition table."""
    mor = C.morphisms[m]
    id_dom, id_cod = C.identities[mor.dom], C.identities[mor.cod]
    return any(C.compose(g, m) == id_dom and C.compose(m, g) == id_cod for g in C.hom(mor.cod, mor.dom))


def is_ei(C):
    """Every endomorphism is invertible."""
    return all(is_isomorphism(C, m) for obj in C.objects for m in C.hom(obj, obj))


def endomorphisms_trivial(C):
    return all(len(C.hom(obj, obj)) == 1 for obj in C.objects)


def irreducibles_bruteforce(C):
    """Non-isomorphisms that admit no factorization into two non-isomorphisms.

    Exhaustive over composable pairs: every product g∘h with both factors
    non-invertible is marked reducible.
    """
    if not is_ei(C):
        raise ValueError(f"{C!r} is not an EI-category")
    iso = [is_isomorphism(C, m.id) for m in C.morphisms]
    by_dom = {}
    for m in C.morphisms:
        if not iso[m.id]:
            by_dom.setdefault(m.dom, []).append(m.id)
    reducible = set()
    for h in C.morphisms:
        if iso[h.id]:
            continue
        for g in by_dom.get(h.cod, ()):
            reducible.add(C.compose(g, h.id))
    return {m.id for m in C.morphisms if not iso[m.id] and m.id not in reducible}


def lower_neighbour(j, domain):
    """max{x not in domain : x < j}, or 1 when no such point exists."""
    below = [x for x in range(1, j) if x not in domain]
    return max(below) if below else 1


def moved_points(t):
    return [x for x, v in t.graph if v != x]


def pf_irreducible(t):
    """A unique moved point j with lower_neighbour(j, dom t) <= t(j) < j."""
    moved = moved_points(t)
    if len(moved) != 1:
        return False
    j = moved[0]
    return lower_neighbour(j, t.domain) <= t(j) < j


def pc_irreducible(t):
    """A unique moved point j, sent to j - 1."""
    moved = moved_points(t)
    return len(moved) == 1 and t(moved[0]) == moved[0] - 1


def irreducibles_closed_form(fam, C):
    fam = Family(fam)
    if fam is not C.family:
        raise ValueError(f"category was built for {C.family}, not {fam}")
    if fam in (Family.PT, Family.PO):
        test = lambda t: t.corank == 1  # noqa: E731
    elif fam is Family.PF:
        test = pf_irreducible
    elif fam is Family.PC:
        test = pc_irreducible
    else:
        raise ValueError(f"no closed form for family {fam}")
    return {m.id for m in C.morphisms if test(m.map)}
