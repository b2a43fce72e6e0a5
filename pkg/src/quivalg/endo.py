"""Structure-constant algebras: endomorphism rings and corner algebras fAf.

A BasicAlgebra is an exact multiplication table together with a marked
complete set of orthogonal primitive idempotents and a structural radical
basis.  Elements are tagged by the idempotent pair (i, j) with
x = e_i x e_j.  Two constructors produce them: the span of all paths of a
monomial algebra between a chosen set of vertices, and End_B(M) for a
basic module M with indecomposable summands whose endomorphism rings are
local (morphism products are resolved exactly against hom-space bases).

The product is written in function-composition order: for endomorphism
algebras x * y applies y first, which makes End_B(B) literally carry the
multiplication of B.
"""

from fractions import Fraction

from . import linalg
from .errors import NotBasicError, NotLocalError
from .quiver import Arrow, Quiver, QuiverShape, connected_components, induced_subquiver, shape_classify
from .representations import Morphism, hom_space
from .nakayama import KupischSeries


class BasicAlgebra:
    """Finite dimensional basic algebra given by exact structure constants.

    ``tags[x] = (i, j)`` records x in e_i C e_j, ``products[x][y]`` is the
    sparse coefficient vector of x*y, ``radical`` lists the indices of a
    basis of rad C, and ``payloads`` keeps the path or morphism each basis
    element came from.
    """

    def __init__(self, num_summands, idempotents, tags, products, radical, payloads=None):
        self.num_summands = num_summands
        self.idempotents = tuple(idempotents)
        self.tags = tuple(tags)
        self.products = products
        self.radical = tuple(radical)
        self.payloads = tuple(payloads) if payloads is not None else None
        self._gabriel_cache = None

    @property
    def dimension(self):
        return len(self.tags)

    def block(self, i, j):
        return [x for x in range(self.dimension) if self.tags[x] == (i, j)]

    def right_block(self, i):
        """Basis indices of the right projective e_i C."""
        return [x for x in range(self.dimension) if self.tags[x][0] == i]

    def left_block(self, i):
        """Basis indices of the left projective C e_i."""
        return [x for x in range(self.dimension) if self.tags[x][1] == i]

    def product(self, x, y):
        return self.products[x][y]

    def _gabriel(self):
        """Gabriel quiver plus radical generators (a basis of rad mod rad^2)."""
        if self._gabriel_cache is not None:
            return self._gabriel_cache
        n = self.num_summands
        rad_set = set(self.radical)
        pos_in_block = {}
        rad_blocks = {}
        for x in self.radical:
            rad_blocks.setdefault(self.tags[x], []).append(x)
        for key, xs in rad_blocks.items():
            for k, x in enumerate(xs):
                pos_in_block[x] = k
        sq_vectors = {}
        for x in self.radical:
            for y in self.radical:
                if self.tags[x][1] != self.tags[y][0]:
                    continue
                prod = self.products[x][y]
                if not prod:
                    continue
                key = (self.tags[x][0], self.tags[y][1])
                vec = [Fraction(0)] * len(rad_blocks.get(key, []))
                for z, c in prod:
                    if z not in rad_set:
                        raise ValueError("rad * rad escaped the radical span")
                    vec[pos_in_block[z]] += c
                sq_vectors.setdefault(key, []).append(vec)
        arrows = []
        generators = []
        for key in sorted(rad_blocks):
            xs = rad_blocks[key]
            spanned = list(sq_vectors.get(key, []))
            for x in xs:
                vec = [Fraction(int(pos_in_block[x] == k)) for k in range(len(xs))]
                if linalg.RowSolver(spanned, len(xs)).contains(vec):
                    continue
                spanned.append(vec)
                generators.append(x)
                arrows.append(Arrow(f"g{len(arrows)}", key[0], key[1]))
        quiver = Quiver(n, tuple(arrows))
        self._gabriel_cache = (quiver, tuple(generators))
        return self._gabriel_cache

    def radical_generators(self):
        return self._gabriel()[1]


def monomial_basic_algebra(algebra, vertices=None):
    """The corner algebra spanned by all basis paths with both endpoints in
    ``vertices`` (all vertices by default); used for fAf and for viewing a
    monomial algebra through the BasicAlgebra interface."""
    if vertices is None:
        vertices = range(algebra.quiver.vertex_count)
    verts = sorted(vertices)
    vset = set(verts)
    pos = {v: i for i, v in enumerate(verts)}
    paths = [p for p in algebra.basis if p.source in vset and p.target in vset]
    index = {p: x for x, p in enumerate(paths)}
    tags = [(pos[p.source], pos[p.target]) for p in paths]
    idempotents = [index[algebra.quiver.trivial_path(v)] for v in verts]
    products = []
    for p in paths:
        row = []
        for q in paths:
            r = algebra.multiply(p, q)
            row.append(((index[r], Fraction(1)),) if r is not None else ())
        products.append(row)
    radical = [x for x, p in enumerate(paths) if p.length >= 1]
    return BasicAlgebra(len(verts), idempotents, tags, products, radical, payloads=paths)


class EndomorphismContext:
    """Shared hom-space and composition caches over a fixed universe of
    indecomposable modules, so that many endomorphism algebras with
    summands drawn from the universe can be assembled cheaply."""

    def __init__(self, universe):
        if not universe:
            raise ValueError("empty universe")
        self.universe = list(universe)
        self.algebra = self.universe[0].algebra
        for rep in self.universe:
            if rep.algebra != self.algebra:
                raise ValueError("universe modules live over different algebras")
            if rep.is_zero:
                raise ValueError("zero modules cannot be summands")
        self._hom = {}
        self._solver = {}
        self._compose = {}
        self._top_data = {}

    def hom(self, a, b):
        """Basis of Hom(U_a, U_b); for a == b the first element is the
        identity and the rest is a basis of the radical of End(U_a)."""
        key = (a, b)
        if key not in self._hom:
            if a == b:
                self._hom[key] = self._normalized_end(a)
            else:
                self._hom[key] = hom_space(self.universe[a], self.universe[b])
        return self._hom[key]

    def _scalar_data(self, a):
        if a not in self._top_data:
            rep = self.universe[a]
            data = []
            for v in range(rep.algebra.quiver.vertex_count):
                rows = []
                for ai in rep.algebra.quiver.in_arrows[v]:
                    rows.extend(rep.maps[ai])
                dim, proj, sect = linalg.quotient_maps(rows, rep.dims[v])
                if dim:
                    data.append((v, dim, proj, sect))
            self._top_data[a] = data
        return self._top_data[a]

    def _scalar_part(self, a, f):
        """The unique c with f - c id nilpotent, via the induced top map;
        raises NotLocal when the top action is not scalar."""
        scalar = None
        for v, dim, proj, sect in self._scalar_data(a):
            ind = linalg.mat_mul(linalg.mat_mul(sect, f.vertex_maps[v],
                                                bcols=f.target.dims[v]),
                                 proj, bcols=dim)
            for r in range(dim):
                for c in range(dim):
                    if r != c and ind[r][c] != 0:
                        raise NotLocalError("endomorphism ring is not local")
            diag = {Fraction(ind[r][r]) for r in range(dim)}
            if len(diag) > 1:
                raise NotLocalError("endomorphism ring is not local")
            d = diag.pop()
            if scalar is None:
                scalar = d
            elif scalar != d:
                raise NotLocalError("endomorphism ring is not local")
        return Fraction(0) if scalar is None else Fraction(scalar)

    def _normalized_end(self, a):
        rep = self.universe[a]
        homs = hom_space(rep, rep)
        ident = Morphism(rep, rep, [linalg.identity(d) for d in rep.dims], validate=False)
        radicals = []
        rows = []
        for f in homs:
            c = self._scalar_part(a, f)
            maps = [linalg.mat_sub(f.vertex_maps[v], linalg.scalar_mul(c, linalg.identity(d)))
                    for v, d in enumerate(rep.dims)]
            r = Morphism(rep, rep, maps, validate=False)
            if self._is_zero_morphism(r):
                continue
            self._check_nilpotent(r)
            vec = self._flatten_morphism(r)
            if linalg.RowSolver(rows, len(vec)).contains(vec):
                continue
            rows.append(vec)
            radicals.append(r)
        if len(radicals) != len(homs) - 1:
            raise NotLocalError("endomorphism ring is not local")
        return [ident] + radicals

    @staticmethod
    def _is_zero_morphism(f):
        return all(linalg.is_zero_matrix(m) for m in f.vertex_maps)

    def _check_nilpotent(self, r):
        power = r
        for _ in range(r.source.total_dim):
            if self._is_zero_morphism(power):
                return
            power = power.then(r)
        if not self._is_zero_morphism(power):
            raise NotLocalError("radical candidate is not nilpotent")

    @staticmethod
    def _flatten_morphism(f):
        out = []
        for m in f.vertex_maps:
            out.extend(linalg.flatten(m))
        return out

    def _hom_solver(self, a, b):
        key = (a, b)
        if key not in self._solver:
            rows = [self._flatten_morphism(f) for f in self.hom(a, b)]
            width = sum(self.universe[a].dims[v] * self.universe[b].dims[v]
                        for v in range(self.algebra.quiver.vertex_count))
            self._solver[key] = linalg.RowSolver(rows, width)
        return self._solver[key]

    def compose_coords(self, dom, mid, cod, g_idx, f_idx):
        """Coordinates of f o g (g: U_dom -> U_mid first, then
        f: U_mid -> U_cod) over the basis of Hom(U_dom, U_cod)."""
        key = (dom, mid, cod, g_idx, f_idx)
        if key not in self._compose:
            comp = self.hom(dom, mid)[g_idx].then(self.hom(mid, cod)[f_idx])
            coords = self._hom_solver(dom, cod).coords(self._flatten_morphism(comp))
            if coords is None:
                raise ValueError("composite escaped the hom space; corrupt input")
            self._compose[key] = tuple((z, c) for z, c in enumerate(coords) if c)
        return self._compose[key]

    def is_isomorphic(self, a, b):
        if self.universe[a].dims != self.universe[b].dims:
            return False
        if a == b:
            return True
        return any(f.is_isomorphism() for f in self.hom(a, b))

    def endo_algebra(self, subset):
        """End of the direct sum of the universe modules listed in
        ``subset``, as a BasicAlgebra."""
        subset = list(subset)
        for i in range(len(subset)):
            for j in range(i + 1, len(subset)):
                if self.is_isomorphic(subset[i], subset[j]):
                    raise NotBasicError(
                        f"summands {subset[i]} and {subset[j]} are isomorphic")
        entries = []  # (tag, universe pair, index within hom basis)
        for bi in range(len(subset)):
            for bj in range(len(subset)):
                for k in range(len(self.hom(subset[bj], subset[bi]))):
                    entries.append(((bi, bj), (subset[bj], subset[bi]), k))
        index = {}
        for x, (tag, pair, k) in enumerate(entries):
            index[(tag, k)] = x
        products = []
        for (tag_x, pair_x, kx) in entries:
            row = []
            for (tag_y, pair_y, ky) in entries:
                if tag_x[1] != tag_y[0]:
                    row.append(())
                    continue
                dom, mid, cod = pair_y[0], pair_y[1], pair_x[1]
                coords = self.compose_coords(dom, mid, cod, ky, kx)
                out_tag = (tag_x[0], tag_y[1])
                row.append(tuple((index[(out_tag, z)], c) for z, c in coords))
            products.append(row)
        idempotents = [index[((i, i), 0)] for i in range(len(subset))]
        radical = [x for x, (tag, pair, k) in enumerate(entries)
                   if tag[0] != tag[1] or k > 0]
        payloads = [self.hom(pair[0], pair[1])[k] for (tag, pair, k) in entries]
        return BasicAlgebra(len(subset), idempotents, tags=[e[0] for e in entries],
                            products=products, radical=radical, payloads=payloads)


def endomorphism_algebra(summands):
    """End_B(M) for a basic list of indecomposable modules with local
    endomorphism rings; raises NotBasic / NotLocal otherwise."""
    ctx = EndomorphismContext(summands)
    return ctx.endo_algebra(range(len(summands)))


def gabriel_quiver(c):
    """One vertex per summand and dim e_i (rad / rad^2) e_j arrows i -> j."""
    return c._gabriel()[0]


def is_nakayama_algebra(c):
    """True when every connected component of the Gabriel quiver is an
    oriented line or cycle."""
    quiver = gabriel_quiver(c)
    for comp in connected_components(quiver):
        sub = induced_subquiver(quiver, comp)
        if shape_classify(sub) is QuiverShape.NOT_NAKAYAMA:
            return False
    return True


def is_qf2_algebra(c):
    """Simple right socle for every e_i C and simple left socle for every
    C e_i, computed against generators of the radical."""
    gens = c.radical_generators()
    d = c.dimension
    for i in range(c.num_summands):
        for side in ("right", "left"):
            idxs = c.right_block(i) if side == "right" else c.left_block(i)
            rows = []
            for x in idxs:
                row = []
                for g in gens:
                    vec = [Fraction(0)] * d
                    prod = c.products[x][g] if side == "right" else c.products[g][x]
                    for z, coeff in prod:
                        vec[z] += coeff
                    row.extend(vec)
                rows.append(row)
            soc_dim = len(idxs) - linalg.rank(rows)
            if soc_dim != 1:
                return False
    return True


def kupisch_of_endo(c):
    """Kupisch series of a connected Nakayama BasicAlgebra read along its
    Gabriel quiver, rotation-canonical; None when not applicable."""
    quiver = gabriel_quiver(c)
    if len(connected_components(quiver)) != 1:
        return None
    shape = shape_classify(quiver)
    if shape is QuiverShape.NOT_NAKAYAMA:
        return None
    n = c.num_summands
    dims = [len(c.right_block(i)) for i in range(n)]
    if shape is QuiverShape.LINEAR:
        if n == 1:
            return KupischSeries(QuiverShape.LINEAR, (dims[0],))
        start = next(v for v in range(n) if not quiver.in_arrows[v])
        order = _walk_quiver(quiver, start, n)
        return KupischSeries(QuiverShape.LINEAR, tuple(dims[v] for v in order))
    order = _walk_quiver(quiver, 0, n)
    return KupischSeries(QuiverShape.CYCLIC, tuple(dims[v] for v in order)).canonical()


def _walk_quiver(quiver, start, steps):
    order = [start]
    v = start
    for _ in range(steps - 1):
        v = quiver.arrows[quiver.out_arrows[v][0]].target
        order.append(v)
    return order
