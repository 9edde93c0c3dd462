"""Bruck-Cypher-Ho spare-vertex construction and constructive fault recovery.

Given a pattern graph H on n vertices labelled bijectively with 1..n and a
fault budget k, the construction appends k spare vertices labelled n+1..n+k
and, for every pattern edge with labels i and j, inserts all edges between the
label intervals {i..i+k} and {j..j+k}. The result tolerates any k vertex
faults: relabelling survivors greedily by smallest free label re-embeds H.

For star patterns the outcome is independent of the labelling: it is the join
of a (k+1)-clique with r isolated vertices, produced directly by
:func:`star_stable`.

Labels are 1-based throughout this module, matching the convention that label
l sits at internal vertex index l-1 in the result graph.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityExceededError, InvalidParameterError
from .graph import MAX_ORDER, Graph, complete, conjunction, empty, from_edges, star

__all__ = [
    "Embedding",
    "IsolatedPatternWarning",
    "LabeledInstance",
    "Labelling",
    "bch_construct",
    "default_star_labelling",
    "recovery_embedding",
    "star_instance",
    "star_stable",
]


class IsolatedPatternWarning(UserWarning):
    """The pattern has isolated vertices; the construction still works, but
    stability-preservation arguments that assume none do not apply."""


@dataclass(frozen=True)
class Labelling:
    """Bijection from pattern vertex indices 0..n-1 to labels {1..n}.

    ``labels[v]`` is the label of pattern vertex v.
    """

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if sorted(self.labels) != list(range(1, n + 1)):
            raise InvalidParameterError(
                f"labelling must be a bijection onto 1..{n}, got {self.labels}")

    @classmethod
    def identity(cls, n: int) -> "Labelling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def of(cls, labels: Iterable[int]) -> "Labelling":
        return cls(tuple(labels))

    def label_of(self, vertex: int) -> int:
        return self.labels[vertex]


@dataclass(frozen=True)
class LabeledInstance:
    """A constructed fault-tolerant graph together with its provenance."""

    pattern: Graph
    k: int
    labelling: Labelling
    result: Graph


@dataclass(frozen=True)
class Embedding:
    """Injective edge-preserving map of pattern labels into surviving labels."""

    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __getitem__(self, label: int) -> int:
        for src, dst in self.pairs:
            if src == label:
                return dst
        raise KeyError(label)


def bch_construct(pattern: Graph, k: int, labelling: Labelling) -> LabeledInstance:
    """Expand the pattern with k spare vertices under the given labelling.

    The result graph lives on labels 1..n+k (vertex index = label - 1) and its
    edge set is exactly the union, over pattern edges with labels i and j, of
    all pairs between {i..i+k} and {j..j+k}.
    """
    if k < 0:
        raise InvalidParameterError(f"fault budget k must be >= 0, got {k}")
    n = pattern.n
    if len(labelling.labels) != n:
        raise InvalidParameterError(
            f"labelling covers {len(labelling.labels)} vertices, pattern has {n}")
    if n + k > MAX_ORDER:
        raise CapacityExceededError(f"order {n + k} exceeds the {MAX_ORDER}-vertex cap")
    if any(not pattern.rows[v] for v in range(n)):
        warnings.warn(
            "pattern has isolated vertices; construction proceeds but "
            "stability-preservation assumptions do not apply",
            IsolatedPatternWarning,
            stacklevel=2,
        )
    edges = []
    for u, v in pattern.edges():
        i, j = labelling.label_of(u), labelling.label_of(v)
        for a in range(i, i + k + 1):
            for b in range(j, j + k + 1):
                if a != b:
                    edges.append((a - 1, b - 1))
    return LabeledInstance(pattern, k, labelling, from_edges(n + k, edges))


def star_stable(r: int, k: int) -> Graph:
    """The unique spare-vertex expansion of a star: join of K_{k+1} and r
    isolated vertices, on r+k+1 vertices with (k+1)(2r+k)/2 edges."""
    if r < 3:
        raise InvalidParameterError(f"star patterns require r >= 3, got {r}")
    if k < 0:
        raise InvalidParameterError(f"fault budget k must be >= 0, got {k}")
    if r + k + 1 > MAX_ORDER:
        raise CapacityExceededError(f"order {r + k + 1} exceeds the {MAX_ORDER}-vertex cap")
    return conjunction(complete(k + 1), empty(r))


def default_star_labelling(r: int) -> Labelling:
    """Center at label 1, leaves at 2..r+1; the identity on star(r)'s indices."""
    return Labelling.identity(r + 1)


def recovery_embedding(instance: LabeledInstance, faults: Iterable[int]) -> Embedding:
    """Greedy re-embedding of the pattern after deleting ``faults`` (labels).

    Pattern labels are processed in increasing order; each receives the
    smallest surviving result label not yet assigned. With f <= k faults the
    image of label i always lands in {i..i+f}, and every pattern edge maps to
    a surviving edge.
    """
    fset = frozenset(faults)
    k, n = instance.k, instance.pattern.n
    if len(fset) > k:
        raise InvalidParameterError(f"{len(fset)} faults exceed the budget k={k}")
    all_labels = range(1, n + k + 1)
    for f in fset:
        if f not in all_labels:
            raise InvalidParameterError(f"fault label {f} is not a vertex label of the result")
    survivors = [l for l in all_labels if l not in fset]
    pairs = tuple((i + 1, survivors[i]) for i in range(n))
    _validate_embedding(instance, fset, pairs)
    return Embedding(pairs)


def _validate_embedding(
    instance: LabeledInstance,
    faults: frozenset,
    pairs: Sequence[tuple[int, int]],
) -> None:
    psi = dict(pairs)
    images = list(psi.values())
    assert len(set(images)) == len(images), "embedding must be injective"
    nfaults = len(faults)
    for src, dst in pairs:
        assert src <= dst <= src + nfaults <= src + instance.k, \
            f"image of label {src} drifted to {dst}"
        assert dst not in faults
    label = instance.labelling.label_of
    for u, v in instance.pattern.edges():
        a, b = psi[label(u)], psi[label(v)]
        assert instance.result.adjacent(a - 1, b - 1), \
            f"pattern edge with labels ({label(u)}, {label(v)}) lost under the embedding"


def star_instance(r: int, k: int, labelling: Labelling | None = None) -> LabeledInstance:
    """Constructed star instance; default labelling puts the center at label 1."""
    if labelling is None:
        labelling = default_star_labelling(r)
    return bch_construct(star(r), k, labelling)
