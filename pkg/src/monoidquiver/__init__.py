"""Quivers, radical filtrations and blocks of the algebras of PT_n and related monoids."""

from .algebra import (
    from_category,
    from_monoid,
    loewy_length,
    phi,
    psi,
    rad_power_dim,
    radical_closed_form,
    radical_trace_oracle,
    stirling_dim_formula,
    verify_isomorphism,
)
from .eicat import (
    FinCategory,
    build_category,
    irreducibles_bruteforce,
    irreducibles_closed_form,
    is_isomorphism,
    skeletonize,
)
from .errors import SizeLimitError
from .partialmaps import Family, PartialMap, compose, enumerate_family, family_contains, leq, mobius
from .quiver import Quiver, blocks, quiver_generic_trivial_groups, quiver_pt_character_oracle, quiver_rule
from .symgroup import Partition, character_table, partitions_of

__version__ = "0.1.0"
