"""Kupisch-series combinatorics for Nakayama algebras.

A Nakayama algebra is determined, up to rotation of a cyclic quiver, by the
sequence of dimensions of its indecomposable projectives read along the
arrows.  This module converts between length sequences and monomial
presentations, enumerates all admissible sequences below given bounds, and
produces the uniserial modules entering the classification of
endomorphism algebras of generator-cogenerators.
"""

from dataclasses import dataclass
from itertools import product

from .errors import InvalidKupischError, NotNakayamaError
from .monomial import MonomialAlgebra
from .quiver import Arrow, Quiver, QuiverShape, shape_classify
from . import linalg
from .representations import Representation


@dataclass(frozen=True)
class KupischSeries:
    shape: QuiverShape
    lengths: tuple

    def __post_init__(self):
        c = self.lengths
        n = len(c)
        if n == 0 or any(x < 1 for x in c):
            raise InvalidKupischError("lengths must be a nonempty sequence of positive integers")
        if self.shape is QuiverShape.LINEAR:
            if c[-1] != 1:
                raise InvalidKupischError("a linear series ends with 1")
            for i in range(n - 1):
                if not 2 <= c[i] <= c[i + 1] + 1:
                    raise InvalidKupischError(
                        f"linear series needs 2 <= c[{i}] <= c[{i + 1}] + 1")
        elif self.shape is QuiverShape.CYCLIC:
            if any(x < 2 for x in c):
                raise InvalidKupischError("a cyclic series needs every length >= 2")
            for i in range(n):
                if c[(i + 1) % n] < c[i] - 1:
                    raise InvalidKupischError(
                        f"cyclic series needs c[{(i + 1) % n}] >= c[{i}] - 1")
        else:
            raise InvalidKupischError("shape must be LINEAR or CYCLIC")

    @property
    def vertex_count(self):
        return len(self.lengths)

    def canonical(self):
        """Rotation-canonical form: cyclic series use the lexicographically
        greatest rotation, linear series are already canonical."""
        if self.shape is QuiverShape.LINEAR:
            return self
        n = len(self.lengths)
        best = max(tuple(self.lengths[(i + k) % n] for k in range(n)) for i in range(n))
        return KupischSeries(QuiverShape.CYCLIC, best)

    def __str__(self):
        return f"{self.shape.value}:" + ",".join(str(c) for c in self.lengths)


def parse_kupisch(text):
    """Parse ``linear:c1,...,1`` or ``cyclic:c0,...`` into a series."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise InvalidKupischError(f"missing 'linear:' or 'cyclic:' prefix in {text!r}")
    shapes = {"linear": QuiverShape.LINEAR, "cyclic": QuiverShape.CYCLIC}
    if head.strip() not in shapes:
        raise InvalidKupischError(f"unknown shape {head.strip()!r}")
    try:
        lengths = tuple(int(x.strip()) for x in tail.split(","))
    except ValueError as exc:
        raise InvalidKupischError(f"bad length list in {text!r}") from exc
    return KupischSeries(shapes[head.strip()], lengths)


def kupisch_to_algebra(ks):
    """The monomial algebra of a Kupisch series: an oriented line or cycle
    with the minimal relations cutting each projective down to length c_i."""
    n = ks.vertex_count
    if ks.shape is QuiverShape.LINEAR:
        arrows = tuple(Arrow(f"a{i}", i, i + 1) for i in range(n - 1))
        quiver = Quiver(n, arrows)
        relations = []
        for i, c in enumerate(ks.lengths):
            if c >= 2 and i + c <= n - 1:
                relations.append(quiver.path_from_indices(tuple(range(i, i + c))))
    else:
        arrows = tuple(Arrow(f"a{i}", i, (i + 1) % n) for i in range(n))
        quiver = Quiver(n, arrows)
        relations = []
        for i, c in enumerate(ks.lengths):
            relations.append(quiver.path_from_indices(tuple((i + k) % n for k in range(c))))
    return MonomialAlgebra(quiver, tuple(relations))


def algebra_to_kupisch(algebra):
    """Kupisch series of a Nakayama-shaped monomial algebra, or None.

    Cyclic series are returned in rotation-canonical form; linear series
    follow the orientation of the chain.
    """
    quiver = algebra.quiver
    shape = shape_classify(quiver)
    if shape is QuiverShape.NOT_NAKAYAMA:
        return None
    n = quiver.vertex_count
    dims = [len(algebra.paths_from(v)) for v in range(n)]
    if shape is QuiverShape.LINEAR:
        sources = [v for v in range(n) if not quiver.in_arrows[v]]
        order = _walk(quiver, sources[0], n)
        return KupischSeries(shape, tuple(dims[v] for v in order))
    order = _walk(quiver, 0, n)
    return KupischSeries(shape, tuple(dims[v] for v in order)).canonical()


def _walk(quiver, start, steps):
    order = [start]
    v = start
    for _ in range(steps - 1):
        v = quiver.arrows[quiver.out_arrows[v][0]].target
        order.append(v)
    return order


def uniserial_module(algebra, top_vertex, length):
    """The uniserial right module with the given top and composition length
    over a Nakayama-shaped algebra (a quotient of the projective at the
    top vertex by a radical power)."""
    key = ("uniserial", top_vertex, length)
    if key in algebra._cache:
        return algebra._cache[key]
    quiver = algebra.quiver
    if not 1 <= length <= len(algebra.paths_from(top_vertex)):
        raise ValueError(
            f"no uniserial of length {length} with top at {top_vertex}")
    verts = [top_vertex]
    steps = []
    p = quiver.trivial_path(top_vertex)
    for _ in range(length - 1):
        outs = quiver.out_arrows[p.target]
        if len(outs) != 1:
            raise NotNakayamaError("uniserial construction needs a line or cycle quiver")
        p = algebra.extend_by_arrow(p, outs[0])
        steps.append(outs[0])
        verts.append(p.target)
    coords = [[] for _ in range(quiver.vertex_count)]
    for k, v in enumerate(verts):
        coords[v].append(k)
    pos = {}
    for v in range(quiver.vertex_count):
        for i, k in enumerate(coords[v]):
            pos[k] = i
    dims = [len(c) for c in coords]
    maps = [linalg.zeros(dims[a.source], dims[a.target]) for a in quiver.arrows]
    for k, a in enumerate(steps):
        maps[a][pos[k]][pos[k + 1]] = 1
    rep = Representation(algebra, dims, maps, validate=True)
    algebra._cache[key] = rep
    return rep


def uniserial_id(algebra, rep):
    """Complete invariant (top vertex, length) of a uniserial module."""
    from .representations import top as top_of
    t, _ = top_of(rep)
    tops = [v for v, d in enumerate(t.dims) if d]
    if len(tops) != 1 or t.dims[tops[0]] != 1:
        raise NotNakayamaError("module is not uniserial: top is not simple")
    return (tops[0], rep.total_dim)


def injective_uniserial_id(algebra, v):
    """(top, length) of the indecomposable injective at v, combinatorially:
    its length counts the paths into v and its top sits at the source of
    the longest one."""
    into = algebra.paths_into(v)
    longest = max(into, key=lambda p: p.length)
    return (longest.source, len(into))


def allowed_summand_ids(algebra):
    """(top, length) ids of the distinct indecomposables among projectives,
    injectives and injectives-mod-socle."""
    ks = algebra_to_kupisch(algebra)
    if ks is None:
        raise NotNakayamaError("allowed summands are defined over Nakayama algebras")
    n = algebra.quiver.vertex_count
    ids = set()
    for v in range(n):
        ids.add((v, len(algebra.paths_from(v))))
        t, l = injective_uniserial_id(algebra, v)
        ids.add((t, l))
        if l >= 2:
            ids.add((t, l - 1))
    return tuple(sorted(ids))


def allowed_summands(algebra):
    """The distinct indecomposable modules in add(B + D(B) + D(B)/soc D(B))."""
    return [uniserial_module(algebra, t, l) for t, l in allowed_summand_ids(algebra)]


def mandatory_summand_ids(algebra):
    """Ids of all indecomposable projectives and injectives (deduplicated)."""
    n = algebra.quiver.vertex_count
    ids = set()
    for v in range(n):
        ids.add((v, len(algebra.paths_from(v))))
        ids.add(injective_uniserial_id(algebra, v))
    return tuple(sorted(ids))


def all_uniserial_ids(algebra):
    n = algebra.quiver.vertex_count
    return tuple(sorted((v, l) for v in range(n)
                        for l in range(1, len(algebra.paths_from(v)) + 1)))


def gen_cogen_candidate_ids(algebra, full_universe=False):
    """All basic generator-cogenerators, as sorted tuples of (top, length).

    The universe is the allowed-summand set by default; with
    ``full_universe`` every uniserial indecomposable may appear, which is
    the universe needed to test the only-if direction of the endomorphism
    classification.
    """
    mandatory = mandatory_summand_ids(algebra)
    universe = all_uniserial_ids(algebra) if full_universe else allowed_summand_ids(algebra)
    optional = tuple(sorted(set(universe) - set(mandatory)))
    out = []
    for mask in range(1 << len(optional)):
        chosen = [o for k, o in enumerate(optional) if mask >> k & 1]
        out.append(tuple(sorted(set(mandatory) | set(chosen))))
    out.sort()
    return out


def gen_cogen_candidates(algebra, full_universe=False):
    """Same as :func:`gen_cogen_candidate_ids` but returning module lists."""
    if algebra_to_kupisch(algebra) is None:
        raise NotNakayamaError("generator-cogenerators are enumerated over Nakayama algebras")
    return [tuple(uniserial_module(algebra, t, l) for t, l in ids)
            for ids in gen_cogen_candidate_ids(algebra, full_universe)]


def enumerate_kupisch(max_n, max_c):
    """All Kupisch series with at most max_n vertices and lengths at most
    max_c; cyclic series are rotation-canonical.  Deterministic order:
    linear first, then cyclic, each sorted by (n, lengths)."""
    if max_n < 1 or max_c < 1:
        raise ValueError("bounds must be at least 1")
    linear = []

    def extend_linear(suffix):
        if len(suffix) <= max_n:
            linear.append(tuple(suffix))
        if len(suffix) == max_n:
            return
        lo, hi = 2, min(max_c, suffix[0] + 1)
        for c in range(lo, hi + 1):
            extend_linear([c] + suffix)

    extend_linear([1])
    cyclic = set()
    if max_c >= 2:
        for n in range(1, max_n + 1):
            for tup in product(range(2, max_c + 1), repeat=n):
                if all(tup[(i + 1) % n] >= tup[i] - 1 for i in range(n)):
                    cyclic.add(KupischSeries(QuiverShape.CYCLIC, tup).canonical().lengths)
    out = [KupischSeries(QuiverShape.LINEAR, t) for t in sorted(linear, key=lambda t: (len(t), t))]
    out += [KupischSeries(QuiverShape.CYCLIC, t) for t in sorted(cyclic, key=lambda t: (len(t), t))]
    return out


def is_selfinjective_kupisch(ks):
    """Selfinjective Nakayama algebras are the constant cyclic series and
    the simple algebra."""
    if ks.shape is QuiverShape.CYCLIC:
        return len(set(ks.lengths)) == 1
    return ks.vertex_count == 1
