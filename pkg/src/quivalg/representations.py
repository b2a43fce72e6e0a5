"""Right modules over a monomial algebra, as quiver representations.

A representation assigns to every vertex a rational vector space (recorded
by its dimension) and to every arrow an exact matrix.  Vectors are rows and
an arrow u -> w acts by right multiplication, so the matrix of a path is
the product of its arrow matrices read left to right.

A morphism is a family of per-vertex matrices commuting with every arrow
map.  Socles, tops, covers, envelopes and hom spaces are all computed by
exact Gaussian elimination; no floating point is involved anywhere.
"""

from collections import namedtuple

from . import linalg
from .errors import ZeroModuleError
from .quiver import Path


class Representation:
    def __init__(self, algebra, dims, maps, validate=True):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.maps = [linalg.mat_copy(m) for m in maps]
        q = algebra.quiver
        if len(self.dims) != q.vertex_count or len(self.maps) != len(q.arrows):
            raise ValueError("dimension vector or map list has the wrong length")
        for i, a in enumerate(q.arrows):
            m = self.maps[i]
            if len(m) != self.dims[a.source] or any(len(r) != self.dims[a.target] for r in m):
                raise ValueError(f"map for arrow {a.name!r} has the wrong shape")
        if validate:
            self._check_relations()

    def _check_relations(self):
        for rel in self.algebra.relations:
            m = self.path_action(rel)
            if not linalg.is_zero_matrix(m):
                raise ValueError(f"relation {rel} does not act by zero")

    @property
    def total_dim(self):
        return sum(self.dims)

    @property
    def is_zero(self):
        return self.total_dim == 0

    def path_action(self, path):
        """Matrix of the right action of a path, from its source space to
        its target space."""
        m = linalg.identity(self.dims[path.source])
        v = path.source
        for a in path.arrows:
            tgt = self.algebra.quiver.arrows[a].target
            m = linalg.mat_mul(m, self.maps[a], bcols=self.dims[tgt])
            v = tgt
        return m

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.algebra == other.algebra
                and self.dims == other.dims
                and all(ma == mb for ma, mb in zip(self.maps, other.maps)))

    def __repr__(self):
        return f"Representation(dims={self.dims})"


class Morphism:
    def __init__(self, source, target, vertex_maps, validate=True):
        self.source = source
        self.target = target
        self.vertex_maps = [linalg.mat_copy(m) for m in vertex_maps]
        for v, m in enumerate(self.vertex_maps):
            if len(m) != source.dims[v] or any(len(r) != target.dims[v] for r in m):
                raise ValueError(f"vertex map at {v} has the wrong shape")
        if validate:
            self._check_commutes()

    def _check_commutes(self):
        q = self.source.algebra.quiver
        for i, a in enumerate(q.arrows):
            left = linalg.mat_mul(self.source.maps[i], self.vertex_maps[a.target],
                                  bcols=self.target.dims[a.target])
            right = linalg.mat_mul(self.vertex_maps[a.source], self.target.maps[i],
                                   bcols=self.target.dims[a.target])
            if left != right:
                raise ValueError(f"maps do not commute with arrow {a.name!r}")

    def then(self, other):
        """Composite morphism: self first, then other."""
        if other.source is not self.target and other.source != self.target:
            raise ValueError("morphisms are not composable")
        maps = [linalg.mat_mul(f, g, bcols=other.target.dims[v])
                for v, (f, g) in enumerate(zip(self.vertex_maps, other.vertex_maps))]
        return Morphism(self.source, other.target, maps, validate=False)

    def is_injective(self):
        return all(linalg.rank(m) == self.source.dims[v]
                   for v, m in enumerate(self.vertex_maps))

    def is_surjective(self):
        return all(linalg.rank(m) == self.target.dims[v]
                   for v, m in enumerate(self.vertex_maps))

    def is_isomorphism(self):
        return (self.source.dims == self.target.dims
                and all(linalg.rank(m) == self.source.dims[v]
                        for v, m in enumerate(self.vertex_maps)))

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"


# -- standard modules --------------------------------------------------------


def _paths_by_target(algebra, v):
    """Basis paths starting at v, grouped per target vertex in basis order."""
    by_tgt = [[] for _ in range(algebra.quiver.vertex_count)]
    for p in algebra.basis:
        if p.source == v:
            by_tgt[p.target].append(p)
    return by_tgt


def simple_module(algebra, v):
    key = ("simple", v)
    if key not in algebra._cache:
        n = algebra.quiver.vertex_count
        dims = [1 if w == v else 0 for w in range(n)]
        maps = [linalg.zeros(dims[a.source], dims[a.target])
                for a in algebra.quiver.arrows]
        algebra._cache[key] = Representation(algebra, dims, maps, validate=False)
    return algebra._cache[key]


def projective_module(algebra, v):
    """The indecomposable projective e_v A: paths out of v, arrows acting by
    right concatenation."""
    key = ("proj", v)
    if key not in algebra._cache:
        by_tgt = _paths_by_target(algebra, v)
        index = [{p: i for i, p in enumerate(ps)} for ps in by_tgt]
        dims = [len(ps) for ps in by_tgt]
        maps = []
        for ai, a in enumerate(algebra.quiver.arrows):
            m = linalg.zeros(dims[a.source], dims[a.target])
            for r, p in enumerate(by_tgt[a.source]):
                ext = algebra.extend_by_arrow(p, ai)
                if ext is not None:
                    m[r][index[a.target][ext]] = 1
            maps.append(m)
        algebra._cache[key] = Representation(algebra, dims, maps, validate=False)
    return algebra._cache[key]


def dual_representation(rep):
    """The dual module over the opposite algebra: transposed arrow maps."""
    opp = rep.algebra.opposite()
    maps = []
    for i, a in enumerate(rep.algebra.quiver.arrows):
        maps.append(linalg.transpose(rep.maps[i], rep.dims[a.target]))
    return Representation(opp, rep.dims, maps, validate=False)


def injective_module(algebra, v):
    """The indecomposable injective D(A e_v): dual of the opposite
    projective at v."""
    key = ("inj", v)
    if key not in algebra._cache:
        p_op = projective_module(algebra.opposite(), v)
        algebra._cache[key] = dual_representation(p_op)
    return algebra._cache[key]


def direct_sum(reps):
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    algebra = reps[0].algebra
    n = algebra.quiver.vertex_count
    dims = [sum(r.dims[v] for r in reps) for v in range(n)]
    maps = []
    for ai, a in enumerate(algebra.quiver.arrows):
        m = linalg.zeros(dims[a.source], dims[a.target])
        roff = 0
        coff = 0
        for r in reps:
            block = r.maps[ai]
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    if x:
                        m[roff + i][coff + j] = x
            roff += r.dims[a.source]
            coff += r.dims[a.target]
        maps.append(m)
    return Representation(algebra, dims, maps, validate=False)


def regular_module(algebra):
    key = ("regular",)
    if key not in algebra._cache:
        algebra._cache[key] = direct_sum(
            [projective_module(algebra, v) for v in range(algebra.quiver.vertex_count)])
    return algebra._cache[key]


# -- socle, radical, top, quotients -------------------------------------------


def socle(rep):
    """Largest semisimple submodule; returns (sub, inclusion).

    At each vertex this is the joint kernel of the outgoing arrow maps
    (loops included), so the sub-representation has zero arrow maps.
    """
    algebra = rep.algebra
    q = algebra.quiver
    rows_per_vertex = []
    for v in range(q.vertex_count):
        d = rep.dims[v]
        outs = q.out_arrows[v]
        if not outs or d == 0:
            rows_per_vertex.append(linalg.identity(d))
            continue
        stacked = [sum((list(rep.maps[a][r]) for a in outs), []) for r in range(d)]
        width = sum(rep.dims[q.arrows[a].target] for a in outs)
        rows_per_vertex.append(linalg.left_nullspace(stacked, d) if width else linalg.identity(d))
    dims = [len(rows) for rows in rows_per_vertex]
    maps = [linalg.zeros(dims[a.source], dims[a.target]) for a in q.arrows]
    sub = Representation(algebra, dims, maps, validate=False)
    incl = Morphism(sub, rep, rows_per_vertex, validate=False)
    return sub, incl


def radical(rep):
    """The submodule generated by all arrow images; returns (sub, inclusion)."""
    algebra = rep.algebra
    q = algebra.quiver
    basis_rows = []
    for v in range(q.vertex_count):
        stacked = []
        for a in q.in_arrows[v]:
            stacked.extend(rep.maps[a])
        basis_rows.append(linalg.row_space_basis(stacked) if stacked else [])
    dims = [len(rows) for rows in basis_rows]
    solvers = [linalg.RowSolver(rows, rep.dims[v]) for v, rows in enumerate(basis_rows)]
    maps = []
    for ai, a in enumerate(q.arrows):
        m = []
        for row in basis_rows[a.source]:
            img = linalg.mat_mul([row], rep.maps[ai], bcols=rep.dims[a.target])[0]
            coords = solvers[a.target].coords(img)
            m.append(coords)
        maps.append(m)
    sub = Representation(algebra, dims, maps, validate=False)
    incl_maps = [rows if rows else linalg.zeros(0, rep.dims[v])
                 for v, rows in enumerate(basis_rows)]
    incl = Morphism(sub, rep, incl_maps, validate=False)
    return sub, incl


def quotient_by(rep, rows_per_vertex):
    """Quotient by the subrepresentation spanned by the given rows;
    returns (quotient, projection)."""
    algebra = rep.algebra
    q = algebra.quiver
    dims = []
    projs = []
    sects = []
    for v in range(q.vertex_count):
        dim, proj, sect = linalg.quotient_maps(rows_per_vertex[v], rep.dims[v])
        dims.append(dim)
        projs.append(proj)
        sects.append(sect)
    maps = []
    for ai, a in enumerate(q.arrows):
        m = linalg.mat_mul(linalg.mat_mul(sects[a.source], rep.maps[ai],
                                          bcols=rep.dims[a.target]),
                           projs[a.target], bcols=dims[a.target])
        maps.append(m)
    quot = Representation(algebra, dims, maps, validate=False)
    pr = Morphism(rep, quot, projs, validate=False)
    return quot, pr


def top(rep):
    """Largest semisimple quotient M / rad M; returns (quotient, projection)."""
    q = rep.algebra.quiver
    rad_rows = []
    for v in range(q.vertex_count):
        stacked = []
        for a in q.in_arrows[v]:
            stacked.extend(rep.maps[a])
        rad_rows.append(stacked)
    return quotient_by(rep, rad_rows)


def mod_socle(rep):
    """M / soc M (possibly the zero module)."""
    sub, incl = socle(rep)
    return quotient_by(rep, incl.vertex_maps)[0]


# -- covers and envelopes ------------------------------------------------------


def projective_cover(rep):
    """Minimal projective cover; returns (P, surjection P -> M)."""
    if rep.is_zero:
        raise ZeroModuleError("the zero module has no projective cover here")
    algebra = rep.algebra
    q = algebra.quiver
    generators = []  # (vertex, row vector in M_v lifting a top basis vector)
    for v in range(q.vertex_count):
        _, _, sect = linalg.quotient_maps(_radical_rows(rep, v), rep.dims[v])
        for row in sect:
            generators.append((v, row))
    if not generators:
        raise ValueError("nonzero module with zero top; the input is corrupt")
    summands = [projective_module(algebra, v) for v, _ in generators]
    cover = direct_sum(summands)
    blocks = [[[] for _ in range(q.vertex_count)] for _ in generators]
    for gi, (v, gen) in enumerate(generators):
        vec = {algebra.quiver.trivial_path(v): list(gen)}
        by_tgt = _paths_by_target(algebra, v)
        ordered = sorted((p for ps in by_tgt for p in ps),
                         key=lambda p: (p.length, p.arrows))
        for p in ordered:
            if p.is_trivial:
                continue
            prefix = Path(v, q.arrows[p.arrows[-2]].target if p.length > 1 else v,
                          p.arrows[:-1])
            last = p.arrows[-1]
            vec[p] = linalg.mat_mul([vec[prefix]], rep.maps[last],
                                    bcols=rep.dims[p.target])[0]
        for w in range(q.vertex_count):
            blocks[gi][w] = [vec[p] for p in by_tgt[w]]
    vertex_maps = []
    for w in range(q.vertex_count):
        rows = []
        for gi in range(len(generators)):
            rows.extend(blocks[gi][w])
        vertex_maps.append(rows if rows else linalg.zeros(0, rep.dims[w]))
    proj_morphism = Morphism(cover, rep, vertex_maps, validate=False)
    return cover, proj_morphism


def _radical_rows(rep, v):
    rows = []
    for a in rep.algebra.quiver.in_arrows[v]:
        rows.extend(rep.maps[a])
    return rows


def injective_envelope(rep):
    """Minimal injective envelope; returns (E, embedding M -> E).

    Computed as the dual of the projective cover of the dual module over
    the opposite algebra.
    """
    if rep.is_zero:
        raise ZeroModuleError("the zero module has no injective envelope here")
    dual = dual_representation(rep)
    cover, pr = projective_cover(dual)
    env = dual_representation(cover)
    emb_maps = [linalg.transpose(pr.vertex_maps[v], rep.dims[v])
                for v in range(rep.algebra.quiver.vertex_count)]
    emb = Morphism(rep, env, emb_maps, validate=False)
    return env, emb


HomologicalStatus = namedtuple("HomologicalStatus", ["is_projective", "is_injective"])


def homological_status(rep):
    """Whether M is projective and whether it is injective, by comparing its
    dimension against the cover / envelope forced by top(M) and soc(M)."""
    if rep.is_zero:
        raise ZeroModuleError("homological status of the zero module is undefined")
    algebra = rep.algebra
    t, _ = top(rep)
    s, _ = socle(rep)
    proj_dim = sum(t.dims[v] * projective_module(algebra, v).total_dim
                   for v in range(algebra.quiver.vertex_count) if t.dims[v])
    inj_dim = sum(s.dims[v] * injective_module(algebra, v).total_dim
                  for v in range(algebra.quiver.vertex_count) if s.dims[v])
    return HomologicalStatus(proj_dim == rep.total_dim, inj_dim == rep.total_dim)


# -- hom spaces and faithfulness ----------------------------------------------


def hom_space(m, n):
    """A basis of Hom(M, N), found by solving the commutation equations."""
    if m.algebra != n.algebra:
        raise ValueError("hom_space needs modules over the same algebra")
    q = m.algebra.quiver
    nverts = q.vertex_count
    offsets = []
    total = 0
    for v in range(nverts):
        offsets.append(total)
        total += m.dims[v] * n.dims[v]
    rows = []
    for ai, a in enumerate(q.arrows):
        u, w = a.source, a.target
        ma, na = m.maps[ai], n.maps[ai]
        for r in range(m.dims[u]):
            for c in range(n.dims[w]):
                row = [0] * total
                for k in range(m.dims[w]):
                    if ma[r][k]:
                        row[offsets[w] + k * n.dims[w] + c] += ma[r][k]
                for k in range(n.dims[u]):
                    if na[k][c]:
                        row[offsets[u] + r * n.dims[u] + k] -= na[k][c]
                if any(row):
                    rows.append(row)
    kernel = linalg.nullspace(rows, total)
    morphisms = []
    for vec in kernel:
        maps = []
        for v in range(nverts):
            base = offsets[v]
            maps.append([[vec[base + r * n.dims[v] + c] for c in range(n.dims[v])]
                         for r in range(m.dims[v])])
        morphisms.append(Morphism(m, n, maps, validate=False))
    return morphisms


def annihilator_dimension(rep):
    """Dimension of {a in A : M a = 0}, by exact elimination over the
    path basis."""
    algebra = rep.algebra
    actions = {}
    for p in algebra.basis:  # sorted by length, so prefixes come first
        if p.is_trivial:
            actions[p] = linalg.identity(rep.dims[p.source])
        else:
            prefix = Path(p.source,
                          algebra.quiver.arrows[p.arrows[-2]].target if p.length > 1 else p.source,
                          p.arrows[:-1])
            actions[p] = linalg.mat_mul(actions[prefix], rep.maps[p.arrows[-1]],
                                        bcols=rep.dims[p.target])
    block_offsets = {}
    width = 0
    for p in algebra.basis:
        key = (p.source, p.target)
        if key not in block_offsets:
            block_offsets[key] = width
            width += rep.dims[p.source] * rep.dims[p.target]
    rows = []
    for p in algebra.basis:
        row = [0] * width
        off = block_offsets[(p.source, p.target)]
        flat = linalg.flatten(actions[p])
        row[off:off + len(flat)] = flat
        rows.append(row)
    return algebra.dimension - linalg.rank(rows)


def is_faithful(rep):
    """True when the right annihilator of M in A is zero."""
    return annihilator_dimension(rep) == 0


def is_isomorphic(m, n):
    """Isomorphism test for modules with local endomorphism rings.

    For indecomposable M and N some basis element of Hom(M, N) is an
    isomorphism whenever one exists, because the non-isomorphisms form a
    proper subspace; scanning the basis is therefore complete.
    """
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    return any(f.is_isomorphism() for f in hom_space(m, n))
