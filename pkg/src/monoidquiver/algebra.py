"""Structure-constant algebras of monoids and categories, and their radicals.

Both kinds of algebra here have a basis closed under multiplication up to
zero: a product of two basis elements is a single basis element or zero.
``StructureAlgebra`` stores that rule as a function ``product(i, j)``
returning a basis index or :data:`ZERO`, and materializes the dense table
on first use.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import exactla
from .eicat import FinCategory, build_category
from .errors import check_cap
from .partialmaps import Family, PartialMap, compose, enumerate_family, mobius, restrictions

ZERO = -1
TRACE_ORACLE_MAX_DIM = 700
DEFAULT_SEED = 0xC0FFEE


class StructureAlgebra:
    def __init__(self, basis, product, unit, name=""):
        self.basis = list(basis)
        self._product = product
        self.unit = unit
        self.name = name
        self._table = None

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return f"<StructureAlgebra {self.name} dim={self.dim}>"

    def mul_basis(self, i, j):
        return self._product(i, j)

    @property
    def table(self):
        if self._table is None:
            rng = range(self.dim)
            self._table = [[self._product(i, j) for j in rng] for i in rng]
        return self._table

    def mul(self, x, y):
        """Product of two elements given as :class:`AlgElement` or dense vectors."""
        dense = not isinstance(x, AlgElement)
        x, y = as_element(x, self.dim), as_element(y, self.dim)
        out = {}
        for i, a in x.coeffs.items():
            for j, b in y.coeffs.items():
                k = self._product(i, j)
                if k != ZERO:
                    out[k] = out.get(k, 0) + a * b
        result = AlgElement(out, self.dim)
        return result.dense() if dense else result

    def basis_vector(self, i):
        return AlgElement({i: Fraction(1)}, self.dim)

    def left_trace(self, i):
        """Trace of left multiplication by basis element i: #{c : b_i · b_c = b_c}."""
        return sum(1 for c in range(self.dim) if self._product(i, c) == c)

    def check_associative(self, triples=None):
        rng = range(self.dim)
        if triples is None:
            triples = ((a, b, c) for a in rng for b in rng for c in rng)
        for a, b, c in triples:
            ab, bc = self._product(a, b), self._product(b, c)
            left = ZERO if ab == ZERO else self._product(ab, c)
            right = ZERO if bc == ZERO else self._product(a, bc)
            if left != right:
                return (a, b, c)
        return None

    def check_unit(self):
        one = self.unit
        return all(self.mul(one, self.basis_vector(i)) == self.basis_vector(i) == self.mul(self.basis_vector(i), one) for i in range(self.dim))


@dataclass
class AlgElement:
    """Sparse coefficient vector over a basis of size ``dim``; zeros are dropped."""

    coeffs: dict
    dim: int

    def __post_init__(self):
        self.coeffs = {i: Fraction(c) for i, c in self.coeffs.items() if c != 0}

    def dense(self):
        v = [Fraction(0)] * self.dim
        for i, c in self.coeffs.items():
            v[i] = c
        return v

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return AlgElement(out, self.dim)

    def scale(self, a):
        return AlgElement({i: a * c for i, c in self.coeffs.items()}, self.dim)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and self.dim == other.dim and self.coeffs == other.coeffs


def as_element(x, dim):
    if isinstance(x, AlgElement):
        return x
    return AlgElement({i: c for i, c in enumerate(x) if c}, dim)


def from_monoid(fam, n):
    elements = enumerate_family(fam, n)
    index = {t: i for i, t in enumerate(elements)}

    def product(i, j):
        return index[compose(elements[i], elements[j])]

    unit = AlgElement({index[PartialMap.identity(n)]: 1}, len(elements))
    return StructureAlgebra(elements, product, unit, name=f"C{Family(fam).value.upper()}_{n}")


def from_category(C: FinCategory):
    morphisms = C.morphisms

    def product(i, j):
        k = C.compose(i, j)
        return ZERO if k is None else k

    unit = AlgElement({C.identities[obj]: 1 for obj in C.objects}, len(morphisms))
    algebra = StructureAlgebra(morphisms, product, unit, name=f"C[{C.family}-category n={C.n}]")
    algebra.category = C
    return algebra


def phi(s, C):
    """φ(s) = Σ_{t ≤ s} E(t) in the category algebra of C."""
    try:
        return AlgElement({C.index_of(t): 1 for t in restrictions(s)}, len(C))
    except KeyError:
        raise ValueError(f"{s} is not in family {C.family}") from None


def psi(m, C):
    """ψ(E(s)) = Σ_{t ≤ s} μ(t, s)·t in the monoid algebra (same basis order as C)."""
    s = C.morphisms[m].map
    return AlgElement({C.index_of(t): mobius(t, s) for t in restrictions(s)}, len(C))


def _apply(linear, element):
    total = AlgElement({}, element.dim)
    for i, c in element.coeffs.items():
        total = total + linear(i).scale(c)
    return total


@dataclass
class IsoReport:
    family: str
    n: int
    mode: str
    pairs_checked: int = 0
    elements_checked: int = 0
    counterexample: str | None = None
    seed: int | None = None

    @property
    def passed(self):
        return self.counterexample is None

    def format(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{status} iso {self.family} n={self.n} mode={self.mode}"
            + (f" seed={self.seed}" if self.seed is not None else ""),
            f"  inverse checks: {self.elements_checked} elements",
            f"  homomorphism checks: {self.pairs_checked} pairs",
        ]
        if self.counterexample:
            lines.append(f"  counterexample: {self.counterexample}")
        return "\n".join(lines)


def verify_isomorphism(fam, n, mode="auto", samples=10_000, seed=DEFAULT_SEED):
    """Check that φ and ψ are mutually inverse and that φ is multiplicative.

    ``mode="auto"`` is exhaustive for n <= 3 and sampled otherwise.
    """
    fam = Family(fam)
    if mode == "auto":
        mode = "exhaustive" if n <= 3 else "sampled"
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    C = build_category(fam, n)
    cat = from_category(C)
    elements = [m.map for m in C.morphisms]
    report = IsoReport(fam.value, n, mode, seed=seed if mode == "sampled" else None)
    phis = [phi(s, C) for s in elements]
    psis = [psi(m.id, C) for m in C.morphisms]

    for i, s in enumerate(elements):
        report.elements_checked += 1
        if _apply(lambda j: psis[j], phis[i]) != AlgElement({i: 1}, len(C)):
            report.counterexample = f"psi(phi({s})) != {s}"
            return report
        if _apply(lambda j: phis[j], psis[i]) != AlgElement({i: 1}, len(C)):
            report.counterexample = f"phi(psi(E({s}))) != E({s})"
            return report

    size = len(elements)
    if mode == "exhaustive":
        pairs = ((i, j) for i in range(size) for j in range(size))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(size), rng.randrange(size)) for _ in range(samples))
    for i, j in pairs:
        report.pairs_checked += 1
        st = C.index_of(compose(elements[i], elements[j]))
        if phis[st] != cat.mul(phis[i], phis[j]):
            report.counterexample = f"phi({elements[i]}*{elements[j]}) != phi({elements[i]})*phi({elements[j]})"
            return report
    return report


def radical_closed_form(A, k):
    """Coordinate vectors of {E(t) : |dom t| - |im t| >= k}.

    This is Rad^k for the pt category. For the other families it is only
    guaranteed to lie inside the radical: for pf and pc it misses the
    non-identity morphisms between subsets of equal size, so use
    :func:`radical_trace_oracle` there.
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    return [A.basis_vector(i).dense() for i, m in enumerate(A.basis) if m.map.corank >= k]


def gram_matrix(A):
    traces = [A.left_trace(i) for i in range(A.dim)]
    table = A.table
    return [[0 if k == ZERO else traces[k] for k in row] for row in table]


def radical_trace_oracle(A):
    """Radical as the kernel of the trace form (x, y) -> tr(L_{xy}); characteristic zero."""
    check_cap("dim", A.dim, TRACE_ORACLE_MAX_DIM)
    return exactla.kernel_basis(gram_matrix(A), A.dim)


def radical_powers(A, radical, max_power=None):
    """[Rad, Rad^2, ...] by iterated span products, ending with the first zero power."""
    powers = [exactla.row_space_basis(radical)]
    while powers[-1] and (max_power is None or len(powers) < max_power):
        powers.append(exactla.span_product(radical, powers[-1], A.mul))
    return powers


def stirling2(d, m):
    """Stirling numbers of the second kind by the standard recurrence."""
    row = [1]  # S(0, 0)
    for i in range(1, d + 1):
        row = [0] + [j * (row[j] if j < len(row) else 0) + row[j - 1] for j in range(1, i + 1)]
    return row[m] if 0 <= m < len(row) else 0


def surjection_count(a, b):
    return stirling2(a, b) * factorial(b)


def rad_power_dim(n, k):
    """Number of partial maps on {1..n} with |dom| - |im| >= k, by enumeration."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return sum(1 for t in enumerate_family(Family.PT, n) if t.corank >= k)


def stirling_dim_formula(n, k):
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return sum(
        comb(n, d) * comb(n, m) * surjection_count(d, m)
        for d in range(k + 1, n + 1)
        for m in range(1, d - k + 1)
    )


def loewy_length(n):
    """Least L with Rad^L = 0, from the corank filtration of the pt category."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap("n", n, 5)
    return max(t.corank for t in enumerate_family(Family.PT, n)) + 1


def loewy_length_oracle(A):
    """Loewy length from iterated span products of the trace-form radical."""
    return len(radical_powers(A, radical_trace_oracle(A)))


def phi_dense(v, C):
    """Apply φ linearly to a dense vector over the monoid basis (canonical order)."""
    out = [0] * len(C.morphisms)
    for i, c in enumerate(v):
        if c:
            for j, d in phi(C.morphisms[i].map, C).coeffs.items():
                out[j] += c * d
    return out


__all__ = [
    "ZERO",
    "AlgElement",
    "IsoReport",
    "StructureAlgebra",
    "from_category",
    "from_monoid",
    "loewy_length",
    "phi",
    "psi",
    "rad_power_dim",
    "radical_closed_form",
    "radical_trace_oracle",
    "stirling2",
    "stirling_dim_formula",
    "verify_isomorphism",
]
