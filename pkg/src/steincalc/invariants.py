"""Invariants of the Lefschetz filling carried by a positive factorization,
and of its boundary open book.

A positive word on a genus-g, b-holed page builds a 4-manifold from
(page) x (disk) by attaching one 2-handle per twist, with framing -1
relative to the page framing.  Euler characteristic is immediate:
(2 - 2g - b) + word length.  On a planar page with convex curves the
intersection form is computed exactly: the handle classes surviving to
second homology are the integer kernel of the boundary map sending each
curve to its homology class, and on that kernel the -1 framings restrict
to minus the standard dot product of coefficient vectors (hole-bilinear
corrections vanish on the kernel, so this representative is well defined;
it is pinned by the <-b> boundary-multitwist calibration and the lantern
substitution check).  Off the planar page the signature is ledger-relative
only: an asserted baseline plus the signature deltas of the substitutions
applied since.

First homology of the boundary 3-manifold is presented on the surface
basis by two relation families: the closed ones (phi - id on homology) and
one relation per auxiliary arc joining boundary 1 to boundary j, tracking
how the monodromy drags the arc.  Invariant factors come from Smith normal
form; torsion is the payload, so nothing is done rationally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    BaselineUnavailableError,
    IncomparableSigmaError,
    UnsupportedInputError,
)
from .intlinalg import AbelianQuotient, kernel_basis, smith_normal_form, symmetric_signature
from .surfaces import (
    Arc,
    Surface,
    arc_pairing,
    relative_embedding,
    standard_arc,
)
from .words import SubstitutionRecord, Word


def euler_characteristic(word: Word) -> int:
    """Euler characteristic of the filling: chi(page) + one per handle."""
    surface = word.surface
    return (2 - 2 * surface.genus - surface.boundary_count) + len(word)


@dataclass(frozen=True)
class PlanarForm:
    """Exact intersection form data of a planar filling."""

    matrix: Tuple[Tuple[int, ...], ...]
    b2: int
    sigma: int
    invariant_factors: Tuple[int, ...]


def planar_intersection_form(word: Word) -> PlanarForm:
    """Exact intersection form of the filling over a planar page.

    Requires every curve to carry a hole set (the decidable planar
    fragment); outer-parallel curves enter through their stored negated
    class, so columns always match homology classes.
    """
    surface = word.surface
    if surface.genus != 0:
        raise UnsupportedInputError("exact intersection forms are computed for planar pages only")
    if not word.is_positive:
        raise UnsupportedInputError("fillings are built from positive words")
    for t in word.twists:
        if t.curve.hole_set is None:
            raise UnsupportedInputError(
                f"curve {t.curve.name} has no hole set; the planar form needs convex curve data"
            )
    n = len(word)
    rows = surface.rank
    boundary_map = [[word.twists[j].curve.homology.coords[i] for j in range(n)] for i in range(rows)]
    kernel = kernel_basis(boundary_map, cols=n)
    b2 = len(kernel)
    q = [[-sum(u[k] * v[k] for k in range(n)) for v in kernel] for u in kernel]
    snf = smith_normal_form(q, rows=b2, cols=b2)
    return PlanarForm(
        matrix=tuple(tuple(row) for row in q),
        b2=b2,
        sigma=symmetric_signature(q),
        invariant_factors=tuple(d for d in snf.diag if d != 0),
    )


@dataclass(frozen=True)
class SigmaLedger:
    """An asserted signature for one factorization plus applied substitutions."""

    baseline_name: str
    baseline_sigma: int
    records: Tuple[SubstitutionRecord, ...] = ()

    def extended(self, record: SubstitutionRecord) -> "SigmaLedger":
        return SigmaLedger(self.baseline_name, self.baseline_sigma, self.records + (record,))

    @property
    def offset(self) -> Optional[int]:
        total = 0
        for r in self.records:
            if r.sigma_delta is None:
                return None
            total += r.sigma_delta
        return total


@dataclass(frozen=True)
class SigmaValue:
    """An exact, baseline-relative, or unknown signature."""

    mode: str  # "exact" | "relative" | "unknown"
    value: Optional[int]
    baseline_name: Optional[str] = None
    offset: Optional[int] = None


def sigma(word: Word, ledger: Optional[SigmaLedger] = None) -> SigmaValue:
    """Signature of the filling: exact on fully planar input, otherwise the
    baseline plus the accumulated substitution deltas.

    Raises when a non-planar page has no asserted baseline; returns mode
    "unknown" when some applied relator has no stored signature delta.
    """
    planar = word.surface.genus == 0 and all(t.curve.hole_set is not None for t in word.twists)
    if planar and word.is_positive:
        return SigmaValue(mode="exact", value=planar_intersection_form(word).sigma)
    if ledger is None:
        raise BaselineUnavailableError(
            "signature off the planar fragment is ledger-relative; assert a baseline first"
        )
    offset = ledger.offset
    if offset is None:
        return SigmaValue(mode="unknown", value=None, baseline_name=ledger.baseline_name)
    return SigmaValue(
        mode="relative",
        value=ledger.baseline_sigma + offset,
        baseline_name=ledger.baseline_name,
        offset=offset,
    )


@dataclass(frozen=True)
class H1Group:
    """First homology of the boundary 3-manifold, with reduction helpers."""

    surface: Surface
    quotient: AbelianQuotient

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.quotient.invariant_factors

    @property
    def free_rank(self) -> int:
        return self.quotient.free_rank

    def reduce(self, v: Sequence[int]) -> Tuple[int, ...]:
        return tuple(self.quotient.reduce(v))

    def is_zero(self, v: Sequence[int]) -> bool:
        return self.quotient.is_zero(v)

    def order(self, v: Sequence[int]) -> Optional[int]:
        return self.quotient.order(v)

    def report(self) -> list:
        return [list(self.invariant_factors), self.free_rank]


def arc_relation_vector(word: Word, arc: Arc) -> Tuple[int, ...]:
    """The closed class by which the monodromy moves the arc.

    Iterates the relative transvection over the twists in application
    order: the arc's relative class picks up arc_pairing(rel, [c]) copies
    of the twisting curve, while the running relative class only sees the
    image of [c] in relative coordinates (boundary classes die there).
    The sign convention makes the boundary multitwist produce relations
    d_j + (d_2 + ... + d_b), i.e. d_j = d_k and b d_j = 0 in the quotient.
    """
    surface = word.surface
    rel = list(arc.rel_class)
    acc = [0] * surface.rank
    for t in reversed(word.twists):
        c = t.curve.homology
        count = arc_pairing(rel, c) * t.sign
        if count == 0:
            continue
        for i in range(surface.rank):
            acc[i] += count * c.coords[i]
        embedded = relative_embedding(c)
        for i in range(surface.rank):
            rel[i] += count * embedded[i]
    return tuple(acc)


def arc_family(surface: Surface, overrides: Sequence[Arc] = ()) -> list:
    """One arc per boundary component beyond the first: declared overrides
    where given, standard arcs elsewhere."""
    by_index = {a.index: a for a in overrides}
    return [by_index.get(j, standard_arc(surface, j)) for j in range(2, surface.boundary_count + 1)]


def h1_boundary(word: Word, arcs: Optional[Sequence[Arc]] = None) -> H1Group:
    """H_1 of the boundary open book of the word.

    Quotient of the surface homology by the monodromy-action relations
    (phi - id on every basis class) and one arc relation per boundary
    component beyond the first.
    """
    surface = word.surface
    if arcs is None:
        arcs = arc_family(surface)
    relations: List[Sequence[int]] = []
    for e in surface.basis_classes():
        image = word.action_on(e)
        if image != e:
            relations.append(tuple(x - y for x, y in zip(image.coords, e.coords)))
    for arc in arcs:
        relations.append(arc_relation_vector(word, arc))
    return H1Group(surface=surface, quotient=AbelianQuotient.from_relations(surface.rank, relations))


@dataclass(frozen=True)
class ChernData:
    """Poincare dual of the first Chern class of the induced contact
    structure, as a vector over the surface basis reduced in H_1(M)."""

    vector: Tuple[int, ...]
    reduced: Tuple[int, ...]
    is_zero: bool
    order: Optional[int]


def boundary_multitwist_defaults(word: Word) -> Optional[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]]:
    """Library rotation numbers and meridian classes, available exactly when
    the word is one positive twist about each boundary component.

    Rotations for the flat-page Legendrian realization: 0 on the outer
    boundary, 1 on boundaries 2..b-1, and 2g on the last one.  Meridian of
    the twist about boundary j maps to the class of d_j.
    """
    surface = word.surface
    b = surface.boundary_count
    if len(word) != b or not word.is_positive:
        return None
    seen: Dict[int, int] = {}
    for idx, t in enumerate(word.twists):
        j = t.curve.boundary_parallel_to
        if j is None or j in seen:
            return None
        seen[j] = idx
    if set(seen) != set(range(1, b + 1)):
        return None
    rotations = [0] * b
    mu: List[Tuple[int, ...]] = [()] * b
    for j, idx in seen.items():
        if j == 1:
            rotations[idx] = 0
            mu[idx] = surface.outer_boundary_class().coords
        elif j == b and b >= 2:
            rotations[idx] = 2 * surface.genus
            mu[idx] = surface.d_class(j).coords
        else:
            rotations[idx] = 1
            mu[idx] = surface.d_class(j).coords
    return tuple(rotations), tuple(mu)


def chern_pd(
    word: Word,
    h1: Optional[H1Group] = None,
    rotations: Optional[Sequence[int]] = None,
    mu_map: Optional[Sequence[Sequence[int]]] = None,
) -> ChernData:
    """Sum of rotation numbers times meridian classes, reduced in H_1(M).

    Rotation numbers come from per-twist input, falling back to the curves'
    stored rotations, with library defaults only for the boundary
    multitwist configuration; the meridian map has the same default and is
    otherwise required input.
    """
    surface = word.surface
    defaults = boundary_multitwist_defaults(word)
    if rotations is None:
        stored = [t.curve.rotation for t in word.twists]
        if all(r is not None for r in stored):
            rotations = [int(r) for r in stored]  # type: ignore[arg-type]
        elif defaults is not None:
            rotations = list(defaults[0])
        else:
            raise UnsupportedInputError(
                "rotation numbers are required outside the boundary-multitwist configuration"
            )
    if mu_map is None:
        if defaults is not None:
            mu_map = list(defaults[1])
        else:
            raise UnsupportedInputError(
                "a meridian-to-homology map is required outside the boundary-multitwist configuration"
            )
    if len(rotations) != len(word) or len(mu_map) != len(word):
        raise UnsupportedInputError("rotations and meridian classes must cover every twist")
    if h1 is None:
        h1 = h1_boundary(word)
    vector = [0] * surface.rank
    for r, mu in zip(rotations, mu_map):
        if len(mu) != surface.rank:
            raise UnsupportedInputError("meridian class has the wrong rank")
        for i in range(surface.rank):
            vector[i] += r * mu[i]
    return ChernData(
        vector=tuple(vector),
        reduced=h1.reduce(vector),
        is_zero=h1.is_zero(vector),
        order=h1.order(vector),
    )


@dataclass(frozen=True)
class FillingInvariants:
    """The full invariant record of one positive factorization."""

    surface: Surface
    euler: int
    sigma: SigmaValue
    b2: Optional[int] = None
    q_matrix: Optional[Tuple[Tuple[int, ...], ...]] = None
    q_invariant_factors: Optional[Tuple[int, ...]] = None
    h1: Optional[H1Group] = None
    esig: Optional[int] = None
    esig_mod4: Optional[int] = None
    c1: Optional[ChernData] = None


def filling_invariants(
    word: Word,
    ledger: Optional[SigmaLedger] = None,
    rotations: Optional[Sequence[int]] = None,
    mu_map: Optional[Sequence[Sequence[int]]] = None,
    arcs: Optional[Sequence[Arc]] = None,
) -> FillingInvariants:
    """Compute everything available for the word: exact planar data when the
    page allows it, ledger-relative signature otherwise, homology of the
    boundary always, Chern data when rotations and meridians are known."""
    euler = euler_characteristic(word)
    b2 = q_matrix = q_factors = None
    planar = word.surface.genus == 0 and all(t.curve.hole_set is not None for t in word.twists)
    if planar and word.is_positive:
        form = planar_intersection_form(word)
        sigma_value = SigmaValue(mode="exact", value=form.sigma)
        b2, q_matrix, q_factors = form.b2, form.matrix, form.invariant_factors
    else:
        try:
            sigma_value = sigma(word, ledger)
        except BaselineUnavailableError:
            sigma_value = SigmaValue(mode="unknown", value=None)
    h1 = h1_boundary(word, arcs=arcs)
    c1: Optional[ChernData]
    try:
        c1 = chern_pd(word, h1=h1, rotations=rotations, mu_map=mu_map)
    except UnsupportedInputError:
        c1 = None
    esig = esig_mod4 = None
    if sigma_value.value is not None:
        esig = euler + sigma_value.value
        esig_mod4 = esig % 4
    return FillingInvariants(
        surface=word.surface,
        euler=euler,
        sigma=sigma_value,
        b2=b2,
        q_matrix=q_matrix,
        q_invariant_factors=q_factors,
        h1=h1,
        esig=esig,
        esig_mod4=esig_mod4,
        c1=c1,
    )


@dataclass(frozen=True)
class EsigReport:
    """Comparison of e + sigma for two fillings."""

    esig1: int
    esig2: int
    equal: bool
    congruent_mod4: bool
    alarm: bool
    detail: str


def esig_check(
    inv1: FillingInvariants,
    inv2: FillingInvariants,
    same_monodromy_asserted: bool = False,
) -> EsigReport:
    """Compare e + sigma of two fillings.

    Requires comparable signature modes (both exact, or both relative to
    the same baseline).  When the caller asserts both words present the
    same monodromy on the same planar page, exact disagreement is
    impossible and is flagged as an internal alarm.
    """
    s1, s2 = inv1.sigma, inv2.sigma
    if s1.value is None or s2.value is None:
        raise IncomparableSigmaError("both fillings need a resolved signature")
    if s1.mode != s2.mode:
        raise IncomparableSigmaError(f"signature modes differ: {s1.mode} vs {s2.mode}")
    if s1.mode == "relative" and s1.baseline_name != s2.baseline_name:
        raise IncomparableSigmaError(
            f"relative signatures over different baselines: {s1.baseline_name} vs {s2.baseline_name}"
        )
    esig1 = inv1.euler + s1.value
    esig2 = inv2.euler + s2.value
    equal = esig1 == esig2
    congruent = (esig1 - esig2) % 4 == 0
    alarm = (
        not equal
        and same_monodromy_asserted
        and s1.mode == "exact"
        and s2.mode == "exact"
        and inv1.surface == inv2.surface
        and inv1.surface.genus == 0
    )
    if alarm:
        detail = "exact planar fillings over the same page disagree; internal consistency alarm"
    elif equal:
        detail = "e + sigma agree"
    elif congruent:
        detail = "e + sigma differ but agree mod 4"
    else:
        detail = "e + sigma differ mod 4"
    return EsigReport(
        esig1=esig1,
        esig2=esig2,
        equal=equal,
        congruent_mod4=congruent,
        alarm=alarm,
        detail=detail,
    )
