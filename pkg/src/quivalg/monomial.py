"""Monomial bound quiver algebras.

An algebra is presented by a connected quiver and a set of forbidden paths
of length >= 2 (the monomial generators of the ideal).  The basis consists
of all paths containing no forbidden factor; admissibility (finiteness of
that basis) is decided exactly by a cycle search on the automaton of
relation-free suffix windows, so no length cutoff is ever involved.
"""

from enum import Enum

from .errors import BadRelationError, DisconnectedQuiverError, NotAdmissibleError
from .quiver import Path, compose, is_connected


class Side(Enum):
    RIGHT = "right"
    LEFT = "left"
    BOTH = "both"


def _factor_of(inner, outer):
    """True when ``inner`` occurs as a contiguous factor of ``outer``."""
    li, lo = len(inner), len(outer)
    if li > lo:
        return False
    return any(outer[k:k + li] == inner for k in range(lo - li + 1))


def _reduce_relations(relations):
    """Drop relations containing another relation as a factor; dedup."""
    unique = sorted({r.arrows: r for r in relations}.values(),
                    key=lambda r: (r.length, r.arrows))
    kept = []
    for r in unique:
        if not any(o is not r and _factor_of(o.arrows, r.arrows) for o in unique):
            kept.append(r)
    return tuple(kept)


class MonomialAlgebra:
    """A = KQ/I for a monomial admissible ideal I, with its finite path basis."""

    def __init__(self, quiver, relations):
        if not is_connected(quiver):
            raise DisconnectedQuiverError("monomial algebras are built over connected quivers")
        for r in relations:
            if r.length < 2:
                raise BadRelationError(f"relation {r} has length < 2")
            if not quiver.is_valid_path(r):
                raise BadRelationError(f"relation {r} is not a path of the quiver")
        self.quiver = quiver
        self.relations = _reduce_relations(relations)
        self._forbidden = {r.arrows for r in self.relations}
        self._rel_lengths = sorted({len(f) for f in self._forbidden})
        self._max_rel = max(self._rel_lengths, default=1)
        self._check_admissible()
        self.basis = self._enumerate_basis()
        self._basis_index = {p: i for i, p in enumerate(self.basis)}
        self._cache = {}
        self._opposite = None

    # -- construction internals -------------------------------------------

    def _window_ok(self, seq):
        """No forbidden factor ends at the last arrow of ``seq``."""
        n = len(seq)
        for ln in self._rel_lengths:
            if ln <= n and seq[n - ln:] in self._forbidden:
                return False
        return True

    def _check_admissible(self):
        w = self._max_rel - 1
        out = self.quiver.out_arrows
        arrows = self.quiver.arrows
        # states: (vertex, suffix window of < max relation length arrows)
        WHITE, GRAY, BLACK = 0, 1, 2
        color = {}
        for v in range(self.quiver.vertex_count):
            start = (v, ())
            if color.get(start, WHITE) != WHITE:
                continue
            stack = [(start, iter(out[v]))]
            color[start] = GRAY
            while stack:
                (sv, win), it = stack[-1]
                advanced = False
                for a in it:
                    seq = win + (a,)
                    if not self._window_ok(seq):
                        continue
                    nxt = (arrows[a].target, seq[-w:] if w else ())
                    c = color.get(nxt, WHITE)
                    if c == GRAY:
                        raise NotAdmissibleError(
                            "the relation-free extension graph has a cycle; "
                            "the path basis is infinite")
                    if c == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, iter(out[nxt[0]])))
                        advanced = True
                        break
                if not advanced:
                    color[(sv, win)] = BLACK
                    stack.pop()

    def _enumerate_basis(self):
        paths = []
        out = self.quiver.out_arrows
        arrows = self.quiver.arrows
        for v in range(self.quiver.vertex_count):
            stack = [(v, ())]
            while stack:
                tgt, seq = stack.pop()
                paths.append(Path(v, tgt, seq))
                for a in out[tgt]:
                    ext = seq + (a,)
                    if self._window_ok(ext):
                        stack.append((arrows[a].target, ext))
        paths.sort(key=lambda p: (p.length, p.arrows, p.source))
        return tuple(paths)

    # -- queries ------------------------------------------------------------

    @property
    def dimension(self):
        return len(self.basis)

    def contains(self, path):
        return path in self._basis_index

    def basis_position(self, path):
        return self._basis_index[path]

    def paths_from(self, v):
        return [p for p in self.basis if p.source == v]

    def paths_into(self, v):
        return [p for p in self.basis if p.target == v]

    def multiply(self, p, q):
        """Product of two basis paths: their concatenation when nonzero,
        None for zero (incomposable or hitting a forbidden factor)."""
        if p not in self._basis_index or q not in self._basis_index:
            raise ValueError("multiply expects elements of the path basis")
        c = compose(p, q)
        if c is None or c not in self._basis_index:
            return None
        return c

    def extend_by_arrow(self, p, arrow_idx):
        """p * (arrow) when nonzero, else None; p must be a basis path."""
        a = self.quiver.arrows[arrow_idx]
        if p.target != a.source:
            return None
        ext = p.arrows + (arrow_idx,)
        if not self._window_ok(ext):
            return None
        return Path(p.source, a.target, ext)

    def opposite(self):
        """The opposite algebra: arrows and relations reversed.

        Cached, and an involution: ``A.opposite().opposite() is A``.
        """
        if self._opposite is None:
            from .quiver import Arrow, Quiver
            rev = Quiver(self.quiver.vertex_count,
                         tuple(Arrow(a.name, a.target, a.source) for a in self.quiver.arrows))
            rels = tuple(Path(r.target, r.source, r.reversed_key()) for r in self.relations)
            opp = MonomialAlgebra(rev, rels)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def _is_maximal(self, p):
        return all(self.extend_by_arrow(p, a) is None
                   for a in self.quiver.out_arrows[p.target])

    def maximal_paths_from(self, v):
        return [p for p in self.basis if p.source == v and self._is_maximal(p)]

    def socle_criterion(self, v, side=Side.RIGHT):
        """True when exactly one maximal nonzero path starts at v (RIGHT) or
        ends at v (LEFT); equivalently the corresponding indecomposable
        projective has simple socle."""
        if side is Side.RIGHT:
            return len(self.maximal_paths_from(v)) == 1
        if side is Side.LEFT:
            return self.opposite().socle_criterion(v, Side.RIGHT)
        raise ValueError("socle_criterion takes RIGHT or LEFT")

    def is_qf2(self, side=Side.BOTH):
        """Every indecomposable projective on the requested side(s) has
        simple socle."""
        sides = (Side.RIGHT, Side.LEFT) if side is Side.BOTH else (side,)
        return all(self.socle_criterion(v, s)
                   for s in sides for v in range(self.quiver.vertex_count))

    def __eq__(self, other):
        return (isinstance(other, MonomialAlgebra)
                and self.quiver == other.quiver and self.relations == other.relations)

    def __hash__(self):
        return hash((self.quiver, self.relations))

    def __repr__(self):
        return (f"MonomialAlgebra({self.quiver.vertex_count} vertices, "
                f"{len(self.quiver.arrows)} arrows, {len(self.relations)} relations, "
                f"dim {self.dimension})")


def build(quiver, relations):
    """Construct the algebra; raises NotAdmissible / DisconnectedQuiver /
    BadRelation on invalid input."""
    return MonomialAlgebra(quiver, tuple(relations))
