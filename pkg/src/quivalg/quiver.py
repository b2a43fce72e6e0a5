"""Finite quivers and paths.

Vertices are the integers 0..n-1.  Arrows carry user-chosen string names
but are canonicalized to their declaration index internally; a path stores
arrow indices together with its endpoints, so the trivial path at a vertex
is representable.  Composition is written left to right: ``compose(p, q)``
traverses p first, matching the right-module conventions used throughout.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import DisconnectedQuiverError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A directed path; ``arrows`` lists arrow indices, empty for e_i."""

    source: int
    target: int
    arrows: tuple = ()

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def reversed_key(self):
        return tuple(reversed(self.arrows))


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        names = set()
        for a in self.arrows:
            if a.name in names:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            names.add(a.name)
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.name!r} has endpoints outside the vertex range")

    @classmethod
    def from_arrows(cls, vertex_count, arrows):
        """Build from (name, source, target) triples."""
        return cls(vertex_count, tuple(Arrow(*a) for a in arrows))

    @cached_property
    def _name_index(self):
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def out_arrows(self):
        out = [[] for _ in range(self.vertex_count)]
        for i, a in enumerate(self.arrows):
            out[a.source].append(i)
        return tuple(tuple(v) for v in out)

    @cached_property
    def in_arrows(self):
        inc = [[] for _ in range(self.vertex_count)]
        for i, a in enumerate(self.arrows):
            inc[a.target].append(i)
        return tuple(tuple(v) for v in inc)

    def arrow_index(self, name):
        return self._name_index[name]

    def trivial_path(self, v):
        return Path(v, v, ())

    def arrow_path(self, idx):
        a = self.arrows[idx]
        return Path(a.source, a.target, (idx,))

    def path(self, names):
        """Path from a nonempty sequence of arrow names; validates composability."""
        idxs = tuple(self.arrow_index(n) for n in names)
        return self.path_from_indices(idxs)

    def path_from_indices(self, idxs):
        if not idxs:
            raise ValueError("use trivial_path for length-zero paths")
        for k in range(len(idxs) - 1):
            if self.arrows[idxs[k]].target != self.arrows[idxs[k + 1]].source:
                raise ValueError("arrows are not composable")
        return Path(self.arrows[idxs[0]].source, self.arrows[idxs[-1]].target, tuple(idxs))

    def is_valid_path(self, p):
        if p.is_trivial:
            return 0 <= p.source < self.vertex_count and p.source == p.target
        try:
            q = self.path_from_indices(p.arrows)
        except (ValueError, IndexError):
            return False
        return q == p

    def path_name(self, p):
        if p.is_trivial:
            return f"e{p.source}"
        return "*".join(self.arrows[i].name for i in p.arrows)

    @cached_property
    def _connected(self):
        if self.vertex_count == 1:
            return True
        adj = [set() for _ in range(self.vertex_count)]
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def compose(p, q):
    """Concatenation ``first p, then q``; None when the endpoints mismatch."""
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


class QuiverShape(Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"
    NOT_NAKAYAMA = "not_nakayama"


def is_connected(quiver):
    return quiver._connected


def shape_classify(quiver):
    """Classify a connected quiver as an oriented line, an oriented cycle,
    or neither.  Invariant under vertex relabeling."""
    if not is_connected(quiver):
        raise DisconnectedQuiverError("shape classification requires a connected quiver")
    n = quiver.vertex_count
    indeg = [len(quiver.in_arrows[v]) for v in range(n)]
    outdeg = [len(quiver.out_arrows[v]) for v in range(n)]
    if all(i == 1 for i in indeg) and all(o == 1 for o in outdeg):
        return QuiverShape.CYCLIC
    if (len(quiver.arrows) == n - 1
            and all(i <= 1 for i in indeg) and all(o <= 1 for o in outdeg)):
        return QuiverShape.LINEAR
    return QuiverShape.NOT_NAKAYAMA


def permute_vertices(quiver, perm):
    """Relabel vertices by ``perm`` (old index -> new index); arrow order kept."""
    arrows = tuple(Arrow(a.name, perm[a.source], perm[a.target]) for a in quiver.arrows)
    return Quiver(quiver.vertex_count, arrows)


def connected_components(quiver):
    """Vertex sets of the underlying undirected components, each sorted."""
    adj = [set() for _ in range(quiver.vertex_count)]
    for a in quiver.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = set()
    comps = []
    for start in range(quiver.vertex_count):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subquiver(quiver, vertices):
    """Subquiver on ``vertices`` (relabeled 0..k-1 in the given order)."""
    pos = {v: i for i, v in enumerate(vertices)}
    arrows = tuple(Arrow(a.name, pos[a.source], pos[a.target])
                   for a in quiver.arrows
                   if a.source in pos and a.target in pos)
    return Quiver(len(vertices), arrows)
