import functools
import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from networkx.utils import UnionFind

from .. import errors as err
from ..library.Events import emit
from ..types import Generator, Word


"""Stallings graphs of finitely generated subgroups of free groups.

A subgroup given by generator words is represented by a wedge of loops at the basepoint, one loop per word. Folding
identifies the ends of equally labelled edges leaving or entering a vertex until none remain; the folded graph
depends only on the subgroup, its rank is the first Betti number, and membership is path tracing.
"""
logger = logging.getLogger(__name__)

Edge = tuple[int, Generator, int]


# Structs
@dataclass(frozen=True)
class SubgroupGraph:
    alphabet: frozenset[Generator]
    vertices: frozenset[int]
    # (source, label, target); an edge read backwards spells the inverse letter
    edges: frozenset[Edge]
    basepoint: int = 0
    folded: bool = False


# Events
class GraphFolded(NamedTuple):
    vertices: int
    edges: int
    rank: int


def build_graph(words: Sequence[Word], alphabet: Sequence[Generator] | None = None) -> SubgroupGraph:
    """Wedge of loops at the basepoint, one per non-empty word.

    Args:
        words: Reduced generator words
        alphabet: Generators the words are over; the generators the words use when omitted

    Raises:
        GraphError: If a word uses a generator outside the alphabet
    """
    letters = frozenset(g for word in words for g in word.generators())
    alphabet = letters if alphabet is None else frozenset(alphabet)
    if not letters <= alphabet:
        outside = sorted(letters - alphabet, key=Generator.sort_key)
        raise err.GraphError(f"{err.GRAPH_WORD_OUTSIDE_ALPHABET}: {', '.join(map(str, outside))}")
    vertices = {0}
    edges: set[Edge] = set()
    fresh = 1
    for word in words:
        if not word:
            logger.info("dropping empty generator word")
            continue
        current = 0
        for position, letter in enumerate(word.letters):
            if position == len(word) - 1:
                following = 0
            else:
                following = fresh
                vertices.add(fresh)
                fresh += 1
            edges.add((current, letter.gen, following) if letter.sign == 1 else (following, letter.gen, current))
            current = following
    return SubgroupGraph(alphabet, frozenset(vertices), frozenset(edges))


class _Folding:
    """Work queue of vertices to inspect over a union-find partition of the vertices.

    `outgoing[v][g]` and `incoming[v][g]` hold the far ends of the g-edges at representative v.
    """

    def __init__(self, g: SubgroupGraph, rng: random.Random | None) -> None:
        self.rng = rng
        self.partition = UnionFind(g.vertices)
        self.outgoing: dict[int, dict[Generator, set[int]]] = {v: {} for v in g.vertices}
        self.incoming: dict[int, dict[Generator, set[int]]] = {v: {} for v in g.vertices}
        for source, label, target in g.edges:
            self.add_edge(source, label, target)
        order = sorted(g.vertices)
        if rng is not None:
            rng.shuffle(order)
        self.queue = deque(order)

    def add_edge(self, source: int, label: Generator, target: int) -> None:
        self.outgoing[source].setdefault(label, set()).add(target)
        self.incoming[target].setdefault(label, set()).add(source)

    def remove_edge(self, source: int, label: Generator, target: int) -> None:
        self.outgoing[source][label].discard(target)
        self.incoming[target][label].discard(source)

    def run(self) -> None:
        while self.queue:
            vertex = self.partition[self.queue.popleft()]
            pair = self.foldable_pair(vertex)
            if pair is None:
                continue
            self.merge(*pair)
            self.queue.append(vertex)

    def foldable_pair(self, vertex: int) -> tuple[int, int] | None:
        for table in (self.outgoing, self.incoming):
            labels = sorted(table[vertex], key=Generator.sort_key)
            if self.rng is not None:
                self.rng.shuffle(labels)
            for label in labels:
                ends = sorted(table[vertex][label])
                if len(ends) > 1:
                    return tuple(self.rng.sample(ends, 2)) if self.rng is not None else (ends[0], ends[1])
        return None

    def merge(self, a: int, b: int) -> None:
        self.partition.union(a, b)
        keep = self.partition[a]
        gone = b if keep == a else a
        moved = [(gone, label, t) for label, ends in self.outgoing[gone].items() for t in ends]
        moved += [(s, label, gone) for label, ends in self.incoming[gone].items() for s in ends]
        for edge in moved:
            self.remove_edge(*edge)
        for source, label, target in moved:
            source = keep if source == gone else source
            target = keep if target == gone else target
            self.add_edge(source, label, target)
            self.queue.append(source)
            self.queue.append(target)
        del self.outgoing[gone]
        del self.incoming[gone]
        self.queue.append(keep)

    def result(self, g: SubgroupGraph) -> SubgroupGraph:
        edges = frozenset(
            (source, label, target)
            for source, table in self.outgoing.items()
            for label, ends in table.items()
            for target in ends
        )
        folded = SubgroupGraph(g.alphabet, frozenset(self.outgoing), edges, self.partition[g.basepoint], True)
        return relabel(folded)


def fold(g: SubgroupGraph, rng: random.Random | None = None) -> SubgroupGraph:
    """Fold until no vertex has two outgoing or two incoming edges with one label.

    The folded graph is returned in canonical numbering, so the result is independent of the folding order.

    Args:
        g: The graph to fold
        rng: When given, randomises the order in which foldable pairs are identified
    """
    folding = _Folding(g, rng)
    folding.run()
    folded = folding.result(g)
    emit(logger, GraphFolded(len(folded.vertices), len(folded.edges), rank(folded)))
    return folded


def relabel(g: SubgroupGraph) -> SubgroupGraph:
    """Renumber the vertices of a folded graph in breadth-first order from the basepoint, which becomes 0.

    Neighbours are visited by label, outgoing edges before incoming ones; in a folded graph this order is unique.
    """
    outgoing, incoming = _adjacency(g)
    numbering = {g.basepoint: 0}
    queue = deque([g.basepoint])
    while queue:
        vertex = queue.popleft()
        steps = [(label.sort_key(), 0, t) for label, t in outgoing.get(vertex, {}).items()]
        steps += [(label.sort_key(), 1, s) for label, s in incoming.get(vertex, {}).items()]
        for _, _, neighbour in sorted(steps):
            if neighbour not in numbering:
                numbering[neighbour] = len(numbering)
                queue.append(neighbour)
    edges = frozenset((numbering[s], label, numbering[t]) for s, label, t in g.edges)
    return SubgroupGraph(g.alphabet, frozenset(numbering.values()), edges, 0, g.folded)


@functools.lru_cache(maxsize=64)
def _adjacency(g: SubgroupGraph) -> tuple[dict[int, dict[Generator, int]], dict[int, dict[Generator, int]]]:
    outgoing: dict[int, dict[Generator, int]] = {}
    incoming: dict[int, dict[Generator, int]] = {}
    for source, label, target in g.edges:
        outgoing.setdefault(source, {})[label] = target
        incoming.setdefault(target, {})[label] = source
    return outgoing, incoming


def _check_folded(g: SubgroupGraph) -> None:
    if not g.folded:
        raise err.GraphError(err.GRAPH_NOT_FOLDED)


def rank(g: SubgroupGraph) -> int:
    """Rank of the subgroup, |edges| - |vertices| + 1.

    Raises:
        GraphError: If the graph is not folded
    """
    _check_folded(g)
    return len(g.edges) - len(g.vertices) + 1


def member(g: SubgroupGraph, w: Word) -> bool:
    """Whether w reads a closed path at the basepoint.

    Raises:
        GraphError: If the graph is not folded or w uses a generator outside the alphabet
    """
    _check_folded(g)
    if not w.generators() <= g.alphabet:
        raise err.GraphError(err.GRAPH_WORD_OUTSIDE_ALPHABET)
    outgoing, incoming = _adjacency(g)
    vertex = g.basepoint
    for letter in w.letters:
        table = outgoing if letter.sign == 1 else incoming
        following = table.get(vertex, {}).get(letter.gen)
        if following is None:
            return False
        vertex = following
    return vertex == g.basepoint


def is_free_basis(words: Sequence[Word]) -> bool:
    """Whether the words freely generate the subgroup they span, i.e. its rank equals their number."""
    if not words or any(not word for word in words):
        return False
    return rank(fold(build_graph(words))) == len(words)
