"""Exact linear algebra over the rationals.

Matrices are plain lists of rows with ``int`` or ``Fraction`` entries; all
arithmetic is exact.  An r x c matrix with r = 0 is the empty list and a
matrix with c = 0 has empty rows, so functions that cannot infer a missing
dimension take it explicitly.

Vectors are treated as rows throughout the package: a linear map V -> W of
dimensions d_V x d_W is a d_V x d_W matrix acting by ``v @ A``.
"""

from fractions import Fraction


def zeros(nrows, ncols):
    return [[0] * ncols for _ in range(nrows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat, ncols=None):
    if mat:
        ncols = len(mat[0])
    if ncols is None:
        raise ValueError("cannot infer column count of an empty matrix")
    return [[row[j] for row in mat] for j in range(ncols)]


def mat_mul(a, b, bcols=None):
    """Product of an r x k matrix with a k x c matrix.

    ``bcols`` is required when b has no rows (k = 0) so the zero result
    still has a well-defined width.
    """
    if b:
        bcols = len(b[0])
    if bcols is None:
        raise ValueError("bcols required when the right factor has no rows")
    out = []
    for row in a:
        acc = [0] * bcols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(c, a):
    return [[c * x for x in row] for row in a]


def mat_copy(a):
    return [list(row) for row in a]


def flatten(a):
    return [x for row in a for x in row]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def rref(mat, ncols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where R has Fraction entries, each pivot is 1
    and pivot columns are cleared above and below.
    """
    r = [[Fraction(x) for x in row] for row in mat]
    nrows = len(r)
    if nrows:
        ncols = len(r[0])
    if ncols is None:
        ncols = 0
    pivots = []
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        sel = None
        for i in range(pr, nrows):
            if r[i][c]:
                sel = i
                break
        if sel is None:
            continue
        r[pr], r[sel] = r[sel], r[pr]
        inv = 1 / r[pr][c]
        r[pr] = [x * inv for x in r[pr]]
        for i in range(nrows):
            if i != pr and r[i][c]:
                f = r[i][c]
                r[i] = [x - f * y for x, y in zip(r[i], r[pr])]
        pivots.append(c)
        pr += 1
    return r, pivots


def rank(mat):
    return len(rref(mat)[1])


def nullspace(mat, ncols):
    """Basis of the right kernel {x : mat @ x = 0}, as a list of vectors."""
    r, pivots = rref(mat, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def left_nullspace(mat, nrows):
    """Basis of {x : x @ mat = 0}, as a list of row vectors."""
    return nullspace(transpose(mat, 0) if not mat else transpose(mat), nrows)


def row_space_basis(mat):
    r, pivots = rref(mat)
    return [r[i] for i in range(len(pivots))]


class RowSolver:
    """Expresses vectors as linear combinations of a fixed list of rows.

    Elimination happens once at construction; ``coords`` then runs a back
    substitution per query.  Used to resolve products against the basis of
    a hom space and to build quotient projections.
    """

    def __init__(self, rows, ncols):
        self.ncols = ncols
        k = len(rows)
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)]
               for i, row in enumerate(rows)]
        pivots = []
        pr = 0
        for c in range(ncols):
            if pr >= k:
                break
            sel = None
            for i in range(pr, k):
                if aug[i][c]:
                    sel = i
                    break
            if sel is None:
                continue
            aug[pr], aug[sel] = aug[sel], aug[pr]
            inv = 1 / aug[pr][c]
            aug[pr] = [x * inv for x in aug[pr]]
            for i in range(k):
                if i != pr and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[pr])]
            pivots.append(c)
            pr += 1
        self._reduced = [row[:ncols] for row in aug]
        self._transform = [row[ncols:] for row in aug]
        self._pivots = pivots

    @property
    def rank(self):
        return len(self._pivots)

    def coords(self, vec):
        """Coefficients over the original rows, or None if vec is outside."""
        v = [Fraction(x) for x in vec]
        k = len(self._transform[0]) if self._transform else 0
        coeff = [Fraction(0)] * k
        for i, p in enumerate(self._pivots):
            f = v[p]
            if f:
                red = self._reduced[i]
                v = [x - f * y for x, y in zip(v, red)]
                tr = self._transform[i]
                coeff = [a + f * b for a, b in zip(coeff, tr)]
        if any(v):
            return None
        return coeff

    def contains(self, vec):
        return self.coords(vec) is not None


def quotient_maps(rows, ncols):
    """Projection/section pair for the quotient of K^ncols by a row span.

    Returns ``(dim, proj, sect)`` where proj is ncols x dim, sect is
    dim x ncols, ``sect @ proj`` is the identity on the quotient and two
    vectors have equal images under proj iff they differ by an element of
    the span.
    """
    r, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    dim = len(free)
    proj = zeros(ncols, dim)
    for j, f in enumerate(free):
        proj[f][j] = Fraction(1)
        for i, p in enumerate(pivots):
            proj[p][j] = -r[i][f]
    sect = zeros(dim, ncols)
    for j, f in enumerate(free):
        sect[j][f] = Fraction(1)
    return dim, proj, sect
