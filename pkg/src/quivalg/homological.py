"""Dominant dimension and the double centraliser test.

The minimal injective coresolution of the regular module is built term by
term through exact injective envelopes and cokernels; the dominant
dimension counts its leading projective terms.  The corner algebra fAf of
the minimal faithful projective-injective left module and the commutant of
its right action on Af give the double centraliser check.
"""

from dataclasses import dataclass

from . import linalg
from .endo import monomial_basic_algebra
from .errors import DomDimZeroError
from .monomial import Side
from .representations import (
    homological_status,
    injective_envelope,
    projective_module,
    quotient_by,
    regular_module,
)


@dataclass(frozen=True)
class DomDim:
    """Dominant dimension value: an exact natural number, a lower bound
    established by a truncated coresolution, or infinity."""

    kind: str  # "finite" | "at_least" | "infinite"
    value: int = 0

    @classmethod
    def finite(cls, n):
        return cls("finite", n)

    @classmethod
    def at_least(cls, n):
        return cls("at_least", n)

    @classmethod
    def infinite(cls):
        return cls("infinite")

    def ge(self, k):
        """True when the dominant dimension is certainly >= k."""
        if self.kind == "infinite":
            return True
        return self.value >= k

    def __str__(self):
        if self.kind == "infinite":
            return "infinity"
        if self.kind == "at_least":
            return f">={self.value}"
        return str(self.value)


@dataclass
class Coresolution:
    """Leading terms of the minimal injective coresolution of the regular
    module: embeddings N_k -> I_k and cokernel projections I_k -> N_{k+1}."""

    terms: list
    embeddings: list
    cokernel_maps: list
    truncated_at: int
    terminated: bool


def injective_coresolution(algebra, cutoff):
    """Compute terms I_0, ..., stopping at a zero cokernel or after
    ``cutoff`` terms; minimality comes from the envelope construction."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    current = regular_module(algebra)
    terms = []
    embeddings = []
    cokernels = []
    terminated = False
    while len(terms) < cutoff:
        if current.is_zero:
            terminated = True
            break
        env, emb = injective_envelope(current)
        terms.append(env)
        embeddings.append(emb)
        coker, pr = quotient_by(env, emb.vertex_maps)
        cokernels.append(pr)
        current = coker
    if current.is_zero:
        terminated = True
    return Coresolution(terms, embeddings, cokernels, cutoff, terminated)


def is_selfinjective(algebra):
    """True when the regular right module is injective."""
    return homological_status(regular_module(algebra)).is_injective


def dominant_dimension(algebra, cutoff=12):
    """Number of leading projective terms of the minimal injective
    coresolution; 0 when the first term is not projective, infinite for
    selfinjective algebras, a lower bound when the cutoff is reached."""
    if is_selfinjective(algebra):
        return DomDim.infinite()
    current = regular_module(algebra)
    produced = 0
    while produced < cutoff:
        if current.is_zero:
            # finite injective dimension with all terms projective
            return DomDim.infinite()
        env, emb = injective_envelope(current)
        if not homological_status(env).is_projective:
            return DomDim.finite(produced)
        produced += 1
        current = quotient_by(env, emb.vertex_maps)[0]
    return DomDim.at_least(cutoff)


def _suffix_faithful(algebra, vertices):
    """Faithfulness of the sum of the projectives at ``vertices``.

    Over a monomial algebra, the annihilator of a sum of path-spanned
    projectives is spanned by paths, and a basis path acts nonzero exactly
    when it is a suffix of some basis path starting in the vertex set.
    """
    vset = set(vertices)
    suffixes = set()
    targets_hit = set()
    for p in algebra.basis:
        if p.source not in vset:
            continue
        targets_hit.add(p.target)
        for k in range(len(p.arrows)):
            suffixes.add(p.arrows[k:])
    for q in algebra.basis:
        if q.is_trivial:
            if q.source not in targets_hit:
                return False
        elif q.arrows not in suffixes:
            return False
    return True


def minimal_faithful_proj_inj(algebra, side=Side.RIGHT):
    """Vertices whose indecomposable projectives on the given side are also
    injective, when their direct sum is faithful; None otherwise (dominant
    dimension zero)."""
    work = algebra if side is Side.RIGHT else algebra.opposite()
    verts = [v for v in range(work.quiver.vertex_count)
             if homological_status(projective_module(work, v)).is_injective]
    if not verts:
        return None
    if not _suffix_faithful(work, verts):
        return None
    return tuple(verts)


def base_algebra(algebra):
    """The corner algebra fAf for the minimal faithful projective-injective
    left module Af; raises DomDimZero when there is none."""
    verts = minimal_faithful_proj_inj(algebra, Side.LEFT)
    if verts is None:
        raise DomDimZeroError("the algebra has dominant dimension zero")
    return monomial_basic_algebra(algebra, verts)


@dataclass(frozen=True)
class DoubleCentralizerResult:
    holds: bool
    dim_algebra: int
    dim_commutant: object = None  # int, or None when dominant dimension is 0


def double_centralizer_check(algebra):
    """Compare dim A against the commutant of the right fAf-action on Af.

    Af has basis the nonzero paths ending in supp(f); left multiplication
    embeds A into the commutant because Af is faithful, so equality of
    dimensions is the double centraliser property.
    """
    verts = minimal_faithful_proj_inj(algebra, Side.LEFT)
    if verts is None:
        return DoubleCentralizerResult(False, algebra.dimension, None)
    vset = set(verts)
    blocks = {v: [p for p in algebra.basis if p.target == v] for v in verts}
    pos = {v: {p: i for i, p in enumerate(blocks[v])} for v in verts}
    corner = [p for p in algebra.basis
              if p.source in vset and p.target in vset and not p.is_trivial]
    # unknown commutant blocks Phi_v, constrained by Phi_u R_p = R_p Phi_v
    offsets = {}
    total = 0
    for v in verts:
        offsets[v] = total
        total += len(blocks[v]) ** 2
    rows = []
    for p in corner:
        u, w = p.source, p.target
        du, dw = len(blocks[u]), len(blocks[w])
        rmat = linalg.zeros(du, dw)
        for i, q in enumerate(blocks[u]):
            prod = algebra.multiply(q, p)
            if prod is not None:
                rmat[i][pos[w][prod]] = 1
        for r in range(du):
            for c in range(dw):
                row = [0] * total
                for k in range(du):
                    if rmat[k][c]:
                        row[offsets[u] + r * du + k] += rmat[k][c]
                for k in range(dw):
                    if rmat[r][k]:
                        row[offsets[w] + k * dw + c] -= rmat[r][k]
                if any(row):
                    rows.append(row)
    dim_comm = total - linalg.rank(rows)
    return DoubleCentralizerResult(dim_comm == algebra.dimension,
                                   algebra.dimension, dim_comm)
