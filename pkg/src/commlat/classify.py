"""Forcing verdicts for a finite modular lattice.

A lattice forces a type (abelian, nilpotent, solvable) when its pointwise
largest commutator multiplication has that type.  Each verdict here is
decided by the cheap lattice-side criterion and cross-checked against the
series of the largest multiplication; the two always agree, so a mismatch
raises instead of warning.

The non-splitting verdict is included because, for congruence lattices of
algebras in congruence modular varieties, not splitting is exactly the shape
that makes every such algebra supernilpotent; this module only decides the
lattice side.
"""

from dataclasses import dataclass
from functools import lru_cache

from .commutator import largest_commutator, series
from .errors import InternalCheckFailed, TheoremViolation
from .lattice import SublatticeEmbedding, is_complemented, is_simple
from .projectivity import (
    _require_modular,
    prime_intervals,
    projective_ceiling,
    splitting_pairs,
    two_element_quotient,
)

DEFAULT_SUBLATTICE_CAP = 12


def forces_solvable_type(lat):
    """True iff the two-element lattice is not a (0,1)-image of the lattice.

    Cross-checked against the largest multiplication being of solvable type.
    """
    _require_modular(lat)
    verdict = two_element_quotient(lat) is None
    if verdict != series(largest_commutator(lat)).is_solvable:
        raise TheoremViolation("two-element-image criterion disagrees with "
                               "the largest multiplication's solvability")
    return verdict


def forces_nilpotent_type(lat):
    """True iff the projective ceiling of every cover is the top element.

    Cross-checked against the largest multiplication being of nilpotent type.
    """
    _require_modular(lat)
    verdict = all(projective_ceiling(lat, i) == lat.top
                  for i in prime_intervals(lat))
    if verdict != series(largest_commutator(lat)).is_nilpotent:
        raise TheoremViolation("cover-ceiling criterion disagrees with the "
                               "largest multiplication's nilpotency")
    return verdict


@lru_cache(maxsize=None)
def _abelian_sufficient_sublattice(lat, cap):
    """A (0,1)-sublattice with >= 3 elements that is modular, simple and
    complemented, or None.  Searches closed subsets up to ``cap`` members
    (breadth first, deterministic); the search is capped, hence incomplete
    for large lattices, but a found witness is always genuine."""
    if lat.n < 3:
        return None
    start = SublatticeEmbedding.generated(lat, [lat.bottom, lat.top])
    queue = [start.members]
    seen = {start.members}
    while queue:
        members = queue.pop(0)
        sub = SublatticeEmbedding(lat, members)
        if len(members) >= 3:
            own, embed = sub.as_lattice()
            if own.is_modular() and is_simple(own) and is_complemented(own):
                return embed
        if len(members) >= cap:
            continue
        for extra in lat.elements:
            if extra in members:
                continue
            grown = SublatticeEmbedding.generated(lat, members | {extra}).members
            if len(grown) <= cap and grown not in seen:
                seen.add(grown)
                queue.append(grown)
    return None


def forces_abelian_type(lat, sublattice_cap=DEFAULT_SUBLATTICE_CAP):
    """True iff the largest multiplication sends (top, top) to bottom.

    Additionally searches for a simple complemented modular (0,1)-sublattice
    with at least three elements; finding one is a sufficient condition, so
    a found witness with a negative verdict raises.
    """
    _require_modular(lat)
    table = largest_commutator(lat)
    verdict = table.value(lat.top, lat.top) == lat.bottom
    if verdict != series(table).is_abelian:
        raise TheoremViolation("top-square criterion disagrees with the "
                               "largest multiplication's series")
    witness = _abelian_sufficient_sublattice(lat, sublattice_cap)
    if witness is not None and not verdict:
        raise TheoremViolation("sufficient sublattice found although the "
                               "largest multiplication is not abelian")
    return verdict


def supernilpotency_shape(lat):
    """True iff the lattice does not split (no splitting pair exists)."""
    return not splitting_pairs(lat)


@dataclass(frozen=True)
class ForcingReport:
    """All verdicts for one lattice, with witnesses.

    ``solvable_obstruction`` is the image vector of a (0,1)-map onto the
    two-element lattice when one exists (the obstruction to forcing solvable
    type), else None.  ``cover_ceilings`` lists the projective ceiling of
    every cover.  ``abelian_sufficient_condition`` is a witness sublattice
    for the sufficient abelian criterion when the capped search finds one.
    """

    n: int
    covers: tuple
    modular: bool
    forces_solvable_type: bool
    solvable_obstruction: tuple | None
    forces_nilpotent_type: bool
    cover_ceilings: tuple
    forces_abelian_type: bool
    largest_top_square: int
    abelian_sufficient_condition: tuple | None
    supernilpotency_shape: bool
    splitting_pairs: tuple

    def to_doc(self):
        return {
            "n": self.n,
            "covers": [list(c) for c in self.covers],
            "modular": self.modular,
            "forces_solvable_type": self.forces_solvable_type,
            "solvable_obstruction":
                list(self.solvable_obstruction)
                if self.solvable_obstruction is not None else None,
            "forces_nilpotent_type": self.forces_nilpotent_type,
            "cover_ceilings": [[lo, hi, g] for (lo, hi, g) in self.cover_ceilings],
            "forces_abelian_type": self.forces_abelian_type,
            "largest_top_square": self.largest_top_square,
            "abelian_sufficient_condition":
                list(self.abelian_sufficient_condition)
                if self.abelian_sufficient_condition is not None else None,
            "supernilpotency_shape": self.supernilpotency_shape,
            "splitting_pairs": [[p, q] for (p, q) in self.splitting_pairs],
        }

    def summary(self):
        def yn(v):
            return "yes" if v else "no"

        lines = [
            f"lattice on {self.n} elements, {len(self.covers)} covers",
            f"  modular:                {yn(self.modular)}",
            f"  forces abelian type:    {yn(self.forces_abelian_type)}"
            f"  (largest [top,top] = {self.largest_top_square})",
            f"  forces nilpotent type:  {yn(self.forces_nilpotent_type)}",
            f"  forces solvable type:   {yn(self.forces_solvable_type)}",
            f"  supernilpotent shape:   {yn(self.supernilpotency_shape)}"
            f"  (splitting pairs: {len(self.splitting_pairs)})",
        ]
        if self.solvable_obstruction is not None:
            lines.append("  two-element image:      "
                         + "".join(map(str, self.solvable_obstruction)))
        if self.abelian_sufficient_condition is not None:
            lines.append("  abelian witness sublattice: "
                         f"{list(self.abelian_sufficient_condition)}")
        return "\n".join(lines)


def analyze(lat, sublattice_cap=DEFAULT_SUBLATTICE_CAP):
    """Full forcing report; raises NotModular for nonmodular input and
    verifies the type-nesting invariant before returning."""
    _require_modular(lat)
    quot = two_element_quotient(lat)
    ceilings = tuple((i.lo, i.hi, projective_ceiling(lat, i))
                     for i in prime_intervals(lat))
    table = largest_commutator(lat)
    report = ForcingReport(
        n=lat.n,
        covers=lat.cover_pairs(),
        modular=True,
        forces_solvable_type=forces_solvable_type(lat),
        solvable_obstruction=quot.image if quot is not None else None,
        forces_nilpotent_type=forces_nilpotent_type(lat),
        cover_ceilings=ceilings,
        forces_abelian_type=forces_abelian_type(lat, sublattice_cap),
        largest_top_square=table.value(lat.top, lat.top),
        abelian_sufficient_condition=_abelian_sufficient_sublattice(
            lat, sublattice_cap),
        supernilpotency_shape=supernilpotency_shape(lat),
        splitting_pairs=tuple((p.delta, p.epsilon)
                              for p in splitting_pairs(lat)),
    )
    if report.forces_abelian_type and not report.forces_nilpotent_type:
        raise InternalCheckFailed("abelian verdict without nilpotent verdict")
    if report.forces_nilpotent_type and not report.forces_solvable_type:
        raise InternalCheckFailed("nilpotent verdict without solvable verdict")
    return report
