"""Deciders for vertex fault tolerance.

A graph is k-fault stable for a pattern H when every deletion of k vertices
(with incident edges) leaves a subgraph isomorphic to H. For star patterns
the check reduces to a surviving degree bound; for general patterns it runs a
backtracking subgraph-isomorphism search per fault set. Fault sets are
enumerated in lexicographic order with early exit, so the reported witness is
always the lexicographically smallest failing one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import is_isomorphic
from .errors import InvalidParameterError
from .graph import Graph, complement, induced_delete, near_complete_regular

__all__ = [
    "NOT_APPLICABLE",
    "StabilityVerdict",
    "UNIQUE_REGULAR_SURVIVOR",
    "UNSTABLE",
    "classify_low_degree",
    "contains_subgraph",
    "is_stable_general",
    "is_star_stable",
    "sparse_complement_guarantees_stable",
    "star_stable_by_subsets",
]

NOT_APPLICABLE = "not-applicable"
UNIQUE_REGULAR_SURVIVOR = "the-unique-regular-survivor"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of a stability check.

    ``witness`` is present iff unstable: a fault set whose removal leaves no
    pattern copy. ``checked_fault_sets`` counts the fault sets examined before
    deciding.
    """

    stable: bool
    witness: tuple[int, ...] | None
    checked_fault_sets: int


def contains_subgraph(g: Graph, pattern: Graph) -> bool:
    """True iff an injective edge-preserving map from pattern into g exists.

    Plain backtracking: pattern vertices in decreasing degree order, target
    candidates pruned by degree compatibility.
    """
    if pattern.n > g.n or pattern.size > g.size:
        return False
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    pdeg = pattern.degrees()
    gdeg = g.degrees()
    image = [0] * pattern.n
    placed = [False] * pattern.n

    def place(depth: int, used: int) -> bool:
        if depth == pattern.n:
            return True
        pv = order[depth]
        required = 0
        w = pattern.rows[pv]
        while w:
            q = (w & -w).bit_length() - 1
            w &= w - 1
            if placed[q]:
                required |= 1 << image[q]
        for tv in range(g.n):
            bit = 1 << tv
            if used & bit or gdeg[tv] < pdeg[pv]:
                continue
            if g.rows[tv] & required == required:
                image[pv] = tv
                placed[pv] = True
                if place(depth + 1, used | bit):
                    return True
                placed[pv] = False
        return False

    return place(0, 0)


def _trivial_unstable(g: Graph, k: int) -> StabilityVerdict:
    # Too few vertices for any fault set to leave a pattern copy; the smallest
    # fault set of size min(k, n) witnesses it.
    return StabilityVerdict(False, tuple(range(min(k, g.n))), 0)


def is_star_stable(g: Graph, r: int, k: int) -> StabilityVerdict:
    """Decide whether g survives any k deletions with a degree-r vertex left.

    Equivalent to k-fault stability for the r-leaf star pattern: a surviving
    vertex of degree >= r is exactly a star center.
    """
    if r < 3:
        raise InvalidParameterError(f"star patterns require r >= 3, got {r}")
    if k < 0:
        raise InvalidParameterError(f"fault budget k must be >= 0, got {k}")
    if g.n < r + 1 + k:
        return _trivial_unstable(g, k)
    full = (1 << g.n) - 1
    rows = g.rows
    checked = 0
    for fault in combinations(range(g.n), k):
        checked += 1
        alive = full
        for v in fault:
            alive ^= 1 << v
        m = alive
        found = False
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if (rows[v] & alive).bit_count() >= r:
                found = True
                break
        if not found:
            return StabilityVerdict(False, fault, checked)
    return StabilityVerdict(True, None, checked)


def is_stable_general(g: Graph, pattern: Graph, k: int) -> StabilityVerdict:
    """Exhaustive stability check for an arbitrary pattern at desk scale."""
    if k < 0:
        raise InvalidParameterError(f"fault budget k must be >= 0, got {k}")
    if pattern.n == 0:
        return StabilityVerdict(True, None, 0)
    if g.n - k < pattern.n:
        return _trivial_unstable(g, k)
    checked = 0
    for fault in combinations(range(g.n), k):
        checked += 1
        if not contains_subgraph(induced_delete(g, fault), pattern):
            return StabilityVerdict(False, fault, checked)
    return StabilityVerdict(True, None, checked)


def star_stable_by_subsets(g: Graph, r: int, k: int) -> bool:
    """Cross-check oracle for graphs of order exactly r+k+1.

    At exact order, stability is equivalent to every (r+1)-subset containing a
    vertex adjacent to all other vertices of the subset.
    """
    if g.n != r + k + 1:
        raise InvalidParameterError(
            f"subset criterion applies at order r+k+1 = {r + k + 1}, got {g.n}")
    for subset in combinations(range(g.n), r + 1):
        smask = 0
        for v in subset:
            smask |= 1 << v
        if not any(smask & ~(1 << v) & ~g.rows[v] == 0 for v in subset):
            return False
    return True


def sparse_complement_guarantees_stable(g: Graph, r: int) -> bool:
    """Accelerator: with fewer than ceil((r+1)/2) complement edges, at most r
    vertices miss any neighbour, so some survivor is always total.

    Only meaningful when g has at least r+1+k vertices; callers must ensure
    the order precondition separately.
    """
    return complement(g).size < (r + 2) // 2


def classify_low_degree(g: Graph, r: int, k: int) -> str:
    """Classify a graph of order r+k+1 whose stability hinges on regularity.

    Graphs with a total vertex are out of scope (``not-applicable``). Among
    the rest, only the complement of a perfect matching can be stable, and
    only for even r with odd k.
    """
    if r < 3:
        raise InvalidParameterError(f"star patterns require r >= 3, got {r}")
    if k < 0:
        raise InvalidParameterError(f"fault budget k must be >= 0, got {k}")
    if g.n != r + k + 1:
        raise InvalidParameterError(
            f"classification applies at order r+k+1 = {r + k + 1}, got {g.n}")
    if g.max_degree() == r + k:
        return NOT_APPLICABLE
    if r % 2 == 0 and k % 2 == 1 and is_isomorphic(g, near_complete_regular(r + k + 1)):
        return UNIQUE_REGULAR_SURVIVOR
    return UNSTABLE
