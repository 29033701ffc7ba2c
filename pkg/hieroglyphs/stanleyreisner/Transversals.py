"""
Minimal transversals (minimal vertex covers) of a hypergraph.

Branch on the uncovered edge with the fewest allowed vertices. Vertices
tried earlier at the same node are forbidden in later branches, so each
transversal is reached once. A branch dies when an uncovered edge has only
forbidden vertices, or when a chosen vertex no longer has a private edge
(an edge it alone covers), since a later choice can never restore one.
"""
import logging
from typing import FrozenSet, Iterable, List, Set

log = logging.getLogger(__name__)


def _has_private_edges(chosen: FrozenSet[int], edges: List[FrozenSet[int]]) -> bool:
    private = set()
    for edge in edges:
        hit = edge & chosen
        if len(hit) == 1:
            private |= hit
    return private == chosen


def minimal_transversals(edges: Iterable[Iterable[int]]) -> List[FrozenSet[int]]:
    """
    Every inclusion-minimal vertex set meeting all edges.

    Args:
        edges: Nonempty vertex sets

    Returns:
        Transversals sorted by size, then by their sorted vertex lists; a
        hypergraph with no edges has the single empty transversal
    """
    edges = sorted({frozenset(edge) for edge in edges}, key=lambda e: (len(e), sorted(e)))
    if any(not edge for edge in edges):
        raise ValueError("An empty edge has no transversal")
    found: Set[FrozenSet[int]] = set()
    nodes = 0

    def search(chosen: FrozenSet[int], forbidden: FrozenSet[int]):
        nonlocal nodes
        nodes += 1
        uncovered = [edge for edge in edges if not edge & chosen]
        if not uncovered:
            found.add(chosen)
            return
        if any(edge <= forbidden for edge in uncovered):
            return
        edge = min(uncovered, key=lambda e: (len(e - forbidden), sorted(e)))
        banned = set(forbidden)
        for vertex in sorted(edge - forbidden):
            extended = chosen | {vertex}
            if _has_private_edges(extended, edges):
                search(extended, frozenset(banned))
            banned.add(vertex)

    search(frozenset(), frozenset())
    log.debug("%d transversals from %d edges, %d search nodes", len(found), len(edges), nodes)
    return sorted(found, key=lambda t: (len(t), sorted(t)))
