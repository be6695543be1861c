"""Non-planarity certificates.

A contact structure supported by an open book with planar page forces
e + sigma to agree across all of its Stein fillings, and any two positive
factorizations of one planar monodromy differ by lantern substitutions,
whose ledger values cancel.  Consequently a positive factorization that
admits an allowable relator with nonzero obstruction value
(sigma_delta + euler_delta != 0), or that bounds one of the known
subsurface configurations, cannot support a planar open book.

The engine certifies only one direction: every "non-planar" verdict
carries a machine-checkable witness, while the absence of an obstruction
is always reported as inconclusive, never as "planar".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Optional, Sequence, Tuple

from .errors import NotApplicableError
from .relators import RelatorEntry, bounding_case
from .surfaces import Curve, NamePair
from .words import Twist, Word, contains

NON_PLANAR = "non-planar"
NO_OBSTRUCTION = "no-obstruction-found"
NON_PLANAR_CONDITIONAL = "non-planar-conditional"
ASSERTION_INCONSISTENT = "assertion-inconsistent"


@dataclass(frozen=True)
class RelatorWitness:
    """Evidence for a relator-admission certificate: re-running containment
    with these positions and allowability data reproduces the verdict."""

    relator_name: str
    obstruction: Optional[int]
    obstruction_nonzero: bool
    positions: Tuple[int, ...]
    swaps: Tuple[int, ...]
    homology_allowable: bool
    obstruction_asserted: bool


@dataclass(frozen=True)
class BoundingWitness:
    """Evidence for a bounded-subsurface certificate."""

    genus: int
    boundary_count: int
    multicurve: Tuple[str, ...]
    positions: Tuple[int, ...]
    swaps: Tuple[int, ...]


@dataclass(frozen=True)
class PlanarityCertificate:
    verdict: str
    basis: str
    witness: Optional[object] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class BoundingDeclaration:
    """A user-declared embedded subsurface: its genus and boundary count,
    with the boundary multicurve named among the factorization's curves."""

    genus: int
    boundary_count: int
    multicurve: Tuple[Curve, ...]

    def __post_init__(self):
        if len(self.multicurve) != self.boundary_count:
            raise ValueError(
                f"declared subsurface has {self.boundary_count} boundary components "
                f"but the multicurve lists {len(self.multicurve)} curves"
            )


def detect_relator(
    word: Word,
    entries: Sequence[RelatorEntry],
    declared: Collection[NamePair] = (),
) -> list:
    """Scan a database of relators for admitted obstructions.

    For each entry whose left side is contained in the word (up to
    certified commutations): a nonzero obstruction value, together with
    allowability (from homology, or asserted by the entry's construction),
    yields a non-planar certificate.  Matches with zero obstruction are
    reported in notes.  No matches means no obstruction was found, which is
    never a planarity proof.
    """
    certificates = []
    notes = []
    for entry in entries:
        left = entry.relator.left if entry.relator.left is not None else entry.left_word
        if left is None or left.surface != word.surface:
            continue
        entry_declared = set(declared) | set(entry.disjoint)
        witness = contains(word, left, entry_declared)
        if witness is None:
            continue
        if not entry.has_nonzero_obstruction:
            notes.append(
                f"relator {entry.name} is admitted but its obstruction value is zero"
                if entry.obstruction == 0
                else f"relator {entry.name} is admitted but its obstruction value is unknown"
            )
            continue
        allowable = entry.relator.allowable
        if not (allowable or entry.obstruction_asserted):
            notes.append(
                f"relator {entry.name} is admitted with nonzero obstruction but is not allowable"
            )
            continue
        value = entry.obstruction
        basis = (
            "the factorization admits an allowable relator whose signature-plus-exponent "
            f"obstruction is {'nonzero (value unspecified)' if value is None else value}; "
            "a planar open book would force that value to vanish"
        )
        cert_notes = []
        if not allowable and entry.obstruction_asserted:
            cert_notes.append(
                "allowability rests on the entry's construction (boundary twists replaced "
                "through chain relations), not on the stored homology classes"
            )
        if entry.note:
            cert_notes.append(entry.note)
        certificates.append(
            PlanarityCertificate(
                verdict=NON_PLANAR,
                basis=basis,
                witness=RelatorWitness(
                    relator_name=entry.name,
                    obstruction=value,
                    obstruction_nonzero=entry.has_nonzero_obstruction,
                    positions=witness.positions,
                    swaps=witness.swaps,
                    homology_allowable=allowable,
                    obstruction_asserted=entry.obstruction_asserted,
                ),
                notes=tuple(cert_notes),
            )
        )
    if certificates:
        return certificates
    return [
        PlanarityCertificate(
            verdict=NO_OBSTRUCTION,
            basis="no admitted relator with nonzero obstruction value was found; "
            "this is inconclusive, not a planarity proof",
            notes=tuple(notes),
        )
    ]


def detect_bounding(
    word: Word,
    declaration: BoundingDeclaration,
    declared: Collection[NamePair] = (),
) -> PlanarityCertificate:
    """Check a declared bounded subsurface against the known obstruction cases.

    The boundary multicurve twists must all appear in the factorization
    (they pairwise commute, so ordering is free).  Obstructing shapes:
    two or fewer boundary components at genus >= 1, genus 1 with at most
    9 holes, genus 2 with at most 8.
    """
    multicurve_names = tuple(c.name for c in declaration.multicurve)
    pair_declared = set(declared)
    for i, c1 in enumerate(declaration.multicurve):
        for c2 in declaration.multicurve[i + 1:]:
            pair_declared.add(frozenset((c1.name, c2.name)))
    target = Word(word.surface, tuple(Twist(c, 1) for c in declaration.multicurve))
    witness = contains(word, target, pair_declared)
    if witness is None:
        raise NotApplicableError(
            "the declared boundary multicurve does not appear in the factorization "
            "(up to certified commutations)"
        )
    case = bounding_case(declaration.genus, declaration.boundary_count)
    if case.verdict == "obstructs":
        return PlanarityCertificate(
            verdict=NON_PLANAR,
            basis=(
                f"the factorization bounds an embedded genus-{declaration.genus} subsurface "
                f"with {declaration.boundary_count} boundary components, a configuration whose "
                "associated relator has nonzero signature-plus-exponent obstruction"
            ),
            witness=BoundingWitness(
                genus=declaration.genus,
                boundary_count=declaration.boundary_count,
                multicurve=multicurve_names,
                positions=witness.positions,
                swaps=witness.swaps,
            ),
            notes=(case.note,),
        )
    return PlanarityCertificate(
        verdict=NO_OBSTRUCTION,
        basis="the declared subsurface is outside the known obstruction cases",
        notes=(case.note,),
    )


def esig_planarity_test(pair1: Tuple[int, int], pair2: Tuple[int, int]) -> PlanarityCertificate:
    """Compare (e, sigma) of two fillings asserted to fill the same contact
    manifold (an assertion the engine cannot verify).

    Unequal sums exclude planarity conditional on that assertion; sums that
    differ mod 4 contradict a congruence holding for every contact
    3-manifold, so the assertion itself is inconsistent.
    """
    esig1 = pair1[0] + pair1[1]
    esig2 = pair2[0] + pair2[1]
    if (esig1 - esig2) % 4 != 0:
        return PlanarityCertificate(
            verdict=ASSERTION_INCONSISTENT,
            basis=(
                f"e + sigma values {esig1} and {esig2} differ mod 4, which no pair of fillings "
                "of one contact manifold can do; the common-boundary assertion is wrong"
            ),
        )
    if esig1 != esig2:
        return PlanarityCertificate(
            verdict=NON_PLANAR_CONDITIONAL,
            basis=(
                f"e + sigma values {esig1} and {esig2} differ; planar contact manifolds force "
                "equality across fillings, so planarity is excluded conditional on the asserted "
                "common boundary"
            ),
        )
    return PlanarityCertificate(
        verdict=NO_OBSTRUCTION,
        basis=f"e + sigma agree (= {esig1}); consistent with planarity, which this does not prove",
    )
