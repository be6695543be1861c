"""Signed Dehn-twist words and the certified rewriting engine.

Words are stored fully expanded in written order and compose like mapping
classes: the rightmost twist acts first.  The only reordering move the
engine certifies is the commutation of twists about disjoint curves, so
searches here are sound but deliberately incomplete; a failed search means
"unknown", never "no".  Containment asks for the target's twists to appear
in order after certified commutations; substitution additionally needs the
matched block to become contiguous.

A relator is a pair of positive words (left, right) naming the same mapping
class.  ``verify_relator`` checks the necessary conditions that are
decidable at the homology level; passing them does not prove the relation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Collection, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    CommutationUndecidedError,
    ConsistencyAlarmError,
    NotApplicableError,
    RankMismatchError,
)
from .surfaces import Curve, HomologyClass, NamePair, Surface, curves_commute, twist_action


@dataclass(frozen=True)
class Twist:
    """A signed Dehn twist: sign +1 is the positive (right-handed) twist."""

    curve: Curve
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.sign)


@dataclass(frozen=True)
class Word:
    """An ordered sequence of twists on one surface, applied right to left."""

    surface: Surface
    twists: Tuple[Twist, ...]

    def __post_init__(self):
        for t in self.twists:
            if t.curve.surface != self.surface:
                raise RankMismatchError(
                    f"twist about {t.curve.name} lives on {t.curve.surface}, not {self.surface}"
                )

    def __len__(self) -> int:
        return len(self.twists)

    @property
    def is_positive(self) -> bool:
        return all(t.sign == 1 for t in self.twists)

    def action_on(self, x: HomologyClass) -> HomologyClass:
        for t in reversed(self.twists):
            x = twist_action(t.curve, x, t.sign)
        return x

    def action_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Columns of the induced map on the homology basis."""
        return tuple(self.action_on(e).coords for e in self.surface.basis_classes())

    def inverse(self) -> "Word":
        return Word(self.surface, tuple(t.inverse() for t in reversed(self.twists)))


def word_of(surface: Surface, curves: Sequence[Curve], signs: Optional[Sequence[int]] = None) -> Word:
    if signs is None:
        signs = [1] * len(curves)
    return Word(surface, tuple(Twist(c, s) for c, s in zip(curves, signs)))


def compose(w1: Word, w2: Word) -> Word:
    """Concatenation w1 * w2 (w2 acts first). Does not normalize."""
    if w1.surface != w2.surface:
        raise RankMismatchError("cannot compose words on different surfaces")
    return Word(w1.surface, w1.twists + w2.twists)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs about the identical curve."""
    stack: List[Twist] = []
    for t in w.twists:
        if stack and stack[-1].curve == t.curve and stack[-1].sign == -t.sign:
            stack.pop()
        else:
            stack.append(t)
    return Word(w.surface, tuple(stack))


def certified_commute(t1: Twist, t2: Twist, declared: Collection[NamePair] = ()) -> bool:
    """Twists about the same curve always commute; otherwise fall back to
    the disjointness certificates of the curve model."""
    if t1.curve == t2.curve:
        return True
    return curves_commute(t1.curve, t2.curve, declared) is True


def commute_adjacent(w: Word, i: int, declared: Collection[NamePair] = ()) -> Word:
    """Swap positions i and i+1, refusing without a disjointness certificate."""
    if not 0 <= i < len(w) - 1:
        raise IndexError(f"no adjacent pair at position {i} in a word of length {len(w)}")
    t1, t2 = w.twists[i], w.twists[i + 1]
    if not certified_commute(t1, t2, declared):
        raise CommutationUndecidedError(
            f"commutation of {t1.curve.name} and {t2.curve.name} is not certified "
            "(curves may intersect; declare disjointness to allow the move)"
        )
    twists = list(w.twists)
    twists[i], twists[i + 1] = t2, t1
    return Word(w.surface, tuple(twists))


def _dependency_reach(w: Word, declared: Collection[NamePair]) -> List[List[bool]]:
    """reach[i][j] (i < j): some chain of non-commuting occurrences forces
    position i to stay before position j under certified commutations."""
    n = len(w)
    dep = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dep[i][j] = not certified_commute(w.twists[i], w.twists[j], declared)
    reach = [row[:] for row in dep]
    for i in range(n - 2, -1, -1):
        for k in range(i + 1, n):
            if dep[i][k]:
                for j in range(k + 1, n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


@dataclass(frozen=True)
class ContainmentWitness:
    """Machine-checkable evidence that a target appears in order.

    ``positions`` index the matched occurrences in the original word (in
    target order); ``swaps`` is a sequence of certified adjacent
    transpositions after which the matched occurrences sit at
    ``final_positions`` in increasing order.
    """

    positions: Tuple[int, ...]
    swaps: Tuple[int, ...]
    final_positions: Tuple[int, ...]


def _match_candidates(w: Word, target: Word) -> Optional[List[List[int]]]:
    candidates = []
    for t in target.twists:
        slots = [i for i, s in enumerate(w.twists) if s.curve == t.curve and s.sign == t.sign]
        if not slots:
            return None
        candidates.append(slots)
    return candidates


def _embeddings(w: Word, target: Word, reach: List[List[bool]]) -> Iterator[Tuple[int, ...]]:
    """All injections of the target into w whose matched occurrences can be
    put in target order by certified commutations.

    An assignment is valid when no later target letter is forced (by a
    chain of dependent occurrences) to stay before an earlier one; this
    criterion is exact for commutation moves because the dependency
    closure is.
    """
    candidates = _match_candidates(w, target)
    if candidates is None:
        return
    m = len(target.twists)
    chosen: List[int] = []

    def ok(pos: int) -> bool:
        for prev in chosen:
            if pos == prev:
                return False
            if pos < prev and reach[pos][prev]:
                return False
        return True

    def extend(k: int) -> Iterator[Tuple[int, ...]]:
        if k == m:
            yield tuple(chosen)
            return
        for pos in candidates[k]:
            if ok(pos):
                chosen.append(pos)
                yield from extend(k + 1)
                chosen.pop()

    yield from extend(0)


def _linearize(
    w: Word,
    declared: Collection[NamePair],
    reach: List[List[bool]],
    selected: Sequence[int],
    contiguous: bool,
) -> Optional[Tuple[List[int], List[int]]]:
    """Reorder the occurrences of w so the selected ones appear in the given
    relative order (consecutively when ``contiguous``), moving letters only
    past certified-disjoint neighbours.

    Returns (order, swaps) where ``order`` lists original indices in their
    new sequence and ``swaps`` are the adjacent transpositions realizing it,
    or None when contiguity is blocked by a wedged occurrence.
    """
    n = len(w)
    sel_set = set(selected)
    succ: List[set] = [set() for _ in range(n)]

    for i in range(n):
        for j in range(i + 1, n):
            if not certified_commute(w.twists[i], w.twists[j], declared):
                succ[i].add(j)
    for a, b in zip(selected, selected[1:]):
        succ[a].add(b)

    if contiguous and sel_set:
        first, last = selected[0], selected[-1]
        for x in range(n):
            if x in sel_set:
                continue
            before = any(x < s and reach[x][s] for s in selected)
            after = any(s < x and reach[s][x] for s in selected)
            if before and after:
                return None  # wedged between two matched occurrences
            if before:
                succ[x].add(first)
            elif after:
                succ[last].add(x)
            elif x < first:
                succ[x].add(first)
            else:
                succ[last].add(x)

    indegree = [0] * n
    for i in range(n):
        for j in succ[i]:
            indegree[j] += 1
    heap = [i for i in range(n) if indegree[i] == 0]
    heapq.heapify(heap)
    order: List[int] = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indegree[j] -= 1
            if indegree[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        return None  # cycle: the required order is not reachable

    rank = [0] * n
    for r, i in enumerate(order):
        rank[i] = r
    seq = list(range(n))
    swaps: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if rank[seq[i]] > rank[seq[i + 1]]:
                if not certified_commute(w.twists[seq[i]], w.twists[seq[i + 1]], declared):
                    raise ConsistencyAlarmError("linearization produced an uncertified swap")
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                swaps.append(i)
                changed = True
    return order, swaps


def contains(w: Word, target: Word, declared: Collection[NamePair] = ()) -> Optional[ContainmentWitness]:
    """Search for the target's twists in order, up to certified commutations.

    Returns a witness on success and None on failure; None means "unknown"
    (containment quantifies over every positive factorization, which the
    engine cannot enumerate), never a definite "no".
    """
    if w.surface != target.surface:
        raise RankMismatchError("containment across different surfaces")
    if not target.twists:
        return ContainmentWitness((), (), ())
    reach = _dependency_reach(w, declared)
    for positions in _embeddings(w, target, reach):
        lin = _linearize(w, declared, reach, positions, contiguous=False)
        if lin is None:
            continue
        order, swaps = lin
        rank = {i: r for r, i in enumerate(order)}
        return ContainmentWitness(
            positions=positions,
            swaps=tuple(swaps),
            final_positions=tuple(rank[p] for p in positions),
        )
    return None


@dataclass(frozen=True)
class Relator:
    """Two positive words naming the same mapping class.

    ``euler_delta`` is the total exponent difference len(right) - len(left):
    the Euler-characteristic change of the filling when a substitution
    replaces the left side by the right side.  ``sigma_delta`` is the
    corresponding signature change; it is stored (from known values and
    additivity), never derived from the words.  Ledger-only relators
    produced by composition carry no words.
    """

    name: str
    left: Optional[Word]
    right: Optional[Word]
    euler_delta: Optional[int]
    sigma_delta: Optional[int] = None
    allowable: bool = False
    provenance: str = "user-asserted"

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError(f"relator {self.name}: both sides or neither must be given")
        if self.left is not None and self.right is not None:
            if self.left.surface != self.right.surface:
                raise RankMismatchError(f"relator {self.name}: sides live on different surfaces")
            if not (self.left.is_positive and self.right.is_positive):
                raise ValueError(f"relator {self.name}: both sides must be positive words")
            if self.euler_delta != len(self.right) - len(self.left):
                raise ValueError(
                    f"relator {self.name}: euler_delta {self.euler_delta} != "
                    f"len(right) - len(left) = {len(self.right) - len(self.left)}"
                )

    @property
    def obstruction(self) -> Optional[int]:
        """sigma_delta + euler_delta; the planarity obstruction value."""
        if self.sigma_delta is None or self.euler_delta is None:
            return None
        return self.sigma_delta + self.euler_delta

    def inverse(self) -> "Relator":
        return Relator(
            name=f"{self.name}^-1",
            left=self.right,
            right=self.left,
            euler_delta=None if self.euler_delta is None else -self.euler_delta,
            sigma_delta=None if self.sigma_delta is None else -self.sigma_delta,
            allowable=self.allowable,
            provenance=self.provenance,
        )

    def curves(self) -> Tuple[Curve, ...]:
        seen: List[Curve] = []
        for side in (self.left, self.right):
            if side is None:
                continue
            for t in side.twists:
                if t.curve not in seen:
                    seen.append(t.curve)
        return tuple(seen)


def computed_allowable(r: Relator) -> Optional[bool]:
    """All twists about homologically non-trivial curves; None without words."""
    if r.left is None:
        return None
    return all(c.is_allowable for c in r.curves())


@dataclass(frozen=True)
class SubstitutionRecord:
    """Ledger entry left behind by one substitution."""

    relator_name: str
    sigma_delta: Optional[int]
    euler_delta: int
    positions: Tuple[int, ...]
    swaps: Tuple[int, ...]


def substitute(
    w: Word,
    relator: Relator,
    declared: Collection[NamePair] = (),
    positions: Optional[Sequence[int]] = None,
) -> Tuple[Word, SubstitutionRecord]:
    """Replace an occurrence of the relator's left side by its right side.

    The left side must embed as an in-order subword reachable by certified
    commutations, with the matched block commutable into a contiguous run.
    The engine searches for such an embedding (or verifies a supplied one)
    and records the move for the signature ledger.
    """
    if relator.left is None or relator.right is None:
        raise NotApplicableError(f"relator {relator.name} carries no words to substitute")
    if w.surface != relator.left.surface:
        raise RankMismatchError("substitution across different surfaces")
    if not w.is_positive:
        raise ValueError("substitution is defined on positive words")

    reach = _dependency_reach(w, declared)
    if positions is not None:
        chosen = [tuple(positions)]
        for k, p in enumerate(positions):
            t = relator.left.twists[k]
            if w.twists[p].curve != t.curve or w.twists[p].sign != t.sign:
                raise NotApplicableError(f"position {p} does not carry the twist {t.curve.name}")
    else:
        chosen = _embeddings(w, relator.left, reach)

    for pos in chosen:
        lin = _linearize(w, declared, reach, pos, contiguous=True)
        if lin is None:
            continue
        order, swaps = lin
        start = order.index(pos[0])
        block = order[start : start + len(pos)]
        if block != list(pos):
            raise ConsistencyAlarmError("contiguous linearization lost the matched block")
        new_twists = (
            tuple(w.twists[i] for i in order[:start])
            + relator.right.twists
            + tuple(w.twists[i] for i in order[start + len(pos):])
        )
        record = SubstitutionRecord(
            relator_name=relator.name,
            sigma_delta=relator.sigma_delta,
            euler_delta=relator.euler_delta,
            positions=tuple(pos),
            swaps=tuple(swaps),
        )
        return Word(w.surface, new_twists), record
    raise NotApplicableError(
        f"no certified embedding of the left side of {relator.name} was found "
        "(which does not prove the configuration is absent)"
    )


@dataclass(frozen=True)
class RelatorCheck:
    name: str
    passed: Optional[bool]
    detail: str


@dataclass(frozen=True)
class RelatorReport:
    """Per-check results of the necessary-condition suite for a relator.

    A pass does not prove the two sides are equal in the mapping class
    group; it says the homology-level necessary conditions hold.
    """

    relator_name: str
    checks: Tuple[RelatorCheck, ...]

    @property
    def necessary_conditions_hold(self) -> bool:
        return all(c.passed for c in self.checks if c.passed is not None)

    def check(self, name: str) -> RelatorCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_relator(r: Relator) -> RelatorReport:
    """Check the decidable necessary conditions for a relator.

    homology_identity: left and right act identically on every homology
    basis vector.  euler_delta_consistent: the stored exponent difference
    matches the words.  allowable_consistent: the stored allowability flag
    matches the homology computation (twists about nonzero classes only).
    """
    checks: List[RelatorCheck] = []
    if r.left is None or r.right is None:
        checks.append(RelatorCheck("homology_identity", None, "skipped: ledger-only relator has no words"))
        checks.append(RelatorCheck("euler_delta_consistent", None, "skipped: ledger-only relator has no words"))
        checks.append(RelatorCheck("allowable_consistent", None, "skipped: ledger-only relator has no words"))
        return RelatorReport(r.name, tuple(checks))

    same = r.left.action_matrix() == r.right.action_matrix()
    checks.append(
        RelatorCheck(
            "homology_identity",
            same,
            "both sides act identically on the homology basis" if same else "the sides differ on some basis vector",
        )
    )
    expected = len(r.right) - len(r.left)
    checks.append(
        RelatorCheck(
            "euler_delta_consistent",
            r.euler_delta == expected,
            f"stored {r.euler_delta}, words give {expected}",
        )
    )
    computed = computed_allowable(r)
    checks.append(
        RelatorCheck(
            "allowable_consistent",
            r.allowable == computed,
            f"stored allowable={r.allowable}, homology gives {computed}",
        )
    )
    return RelatorReport(r.name, tuple(checks))
