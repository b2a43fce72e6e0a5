"""Exhaustive theorem verification over bounded corpora.

Each suite sweeps a finite family of algebras, evaluates the relevant
implications on every member, and returns a machine-readable report whose
counterexample list is empty exactly when the suite passes.  Sweeps are
pure and deterministic; with several workers the corpus is partitioned by
quiver and merged in a fixed order, so reports do not depend on the
worker count.
"""

import json
import os
import time
from dataclasses import dataclass

from . import __version__
from .endo import (
    EndomorphismContext,
    gabriel_quiver,
    is_nakayama_algebra,
    is_qf2_algebra,
    kupisch_of_endo,
    monomial_basic_algebra,
)
from .enumeration import CorpusBounds, admissible_relation_sets, canonical_form, connected_quivers, enumerate_monomial_algebras
from .homological import (
    base_algebra,
    dominant_dimension,
    double_centralizer_check,
    is_selfinjective,
    minimal_faithful_proj_inj,
)
from .monomial import MonomialAlgebra, Side
from .nakayama import (
    KupischSeries,
    algebra_to_kupisch,
    all_uniserial_ids,
    allowed_summand_ids,
    enumerate_kupisch,
    gen_cogen_candidate_ids,
    injective_uniserial_id,
    is_selfinjective_kupisch,
    kupisch_to_algebra,
    uniserial_module,
)
from .quiver import Arrow, Quiver, QuiverShape, shape_classify
from .representations import homological_status, projective_module, socle

SUITES = ("main-theorem", "yamagata", "qf2-chain", "morita", "cross-checks")

# The default corpus pairs a length-two-relation family with a smaller
# family exercising relation length three; together they stay in the
# thousands-of-algebras regime that keeps exhaustive runs at minutes.
DEFAULT_CORPORA = (CorpusBounds(4, 4, 2), CorpusBounds(3, 2, 3))
DEFAULT_MAX_N = 3
DEFAULT_MAX_C = 4
COMPARISON_MAX_N = 6
COMPARISON_MAX_C = 8
DOMDIM_CUTOFF = 12


@dataclass
class VerificationReport:
    suite: str
    bounds: dict
    counts: dict
    counterexamples: list
    wall_time_seconds: float = 0.0
    tool_version: str = __version__

    @property
    def passed(self):
        return not self.counterexamples

    def to_dict(self):
        """Serializable content; wall time is reported separately so equal
        runs produce byte-identical files."""
        return {
            "suite": self.suite,
            "tool_version": self.tool_version,
            "bounds": dict(sorted(self.bounds.items())),
            "counts": dict(sorted(self.counts.items())),
            "counterexamples": self.counterexamples,
            "passed": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def write(self, path):
        tmp = f"{path}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
        os.replace(tmp, path)

    def csv_summary(self):
        lines = ["key,value"]
        lines.append(f"suite,{self.suite}")
        lines.append(f"passed,{str(self.passed).lower()}")
        for k, v in sorted(self.bounds.items()):
            lines.append(f"bounds.{k},{v}")
        for k, v in sorted(self.counts.items()):
            lines.append(f"counts.{k},{v}")
        lines.append(f"counterexamples,{len(self.counterexamples)}")
        return "\n".join(lines) + "\n"


# -- corpus sweep ---------------------------------------------------------------


def _domdim_dict(d):
    return {"kind": d.kind, "value": d.value}


def algebra_facts(algebra, cutoff=DOMDIM_CUTOFF):
    """Everything the monomial-side suites need to know about one algebra."""
    opp = algebra.opposite()
    n = algebra.quiver.vertex_count
    socle_agree = True
    for work in (algebra, opp):
        for v in range(n):
            soc_dim = socle(projective_module(work, v))[0].total_dim
            if work.socle_criterion(v, Side.RIGHT) != (soc_dim == 1):
                socle_agree = False
    pi_right = minimal_faithful_proj_inj(algebra, Side.RIGHT)
    pi_left = minimal_faithful_proj_inj(algebra, Side.LEFT)
    dc = double_centralizer_check(algebra)
    base_naka = None
    dim_faf = None
    if pi_left is not None:
        base_naka = is_nakayama_algebra(base_algebra(algebra))
        dim_faf = monomial_basic_algebra(algebra, pi_left).dimension
    dim_eae = None
    if pi_right is not None:
        dim_eae = monomial_basic_algebra(algebra, pi_right).dimension
    return {
        "form": canonical_form(algebra).decode("ascii"),
        "dim": algebra.dimension,
        "shape": shape_classify(algebra.quiver).value,
        "domdim": _domdim_dict(dominant_dimension(algebra, cutoff)),
        "domdim_op": _domdim_dict(dominant_dimension(opp, cutoff)),
        "qf2_right": algebra.is_qf2(Side.RIGHT),
        "qf2_left": algebra.is_qf2(Side.LEFT),
        "socle_agree": socle_agree,
        "pi_right": list(pi_right) if pi_right is not None else None,
        "pi_left": list(pi_left) if pi_left is not None else None,
        "dc_holds": dc.holds,
        "dc_dim_commutant": dc.dim_commutant,
        "base_nakayama": base_naka,
        "dim_eAe": dim_eae,
        "dim_fAf": dim_faf,
    }


def _facts_ge(fact_domdim, k):
    if fact_domdim["kind"] == "infinite":
        return True
    return fact_domdim["value"] >= k


def _quiver_payloads(bounds):
    quivers = connected_quivers(bounds.max_vertices, bounds.max_arrows)
    return [(q.vertex_count, tuple((a.source, a.target) for a in q.arrows),
             bounds.max_relation_length) for q in quivers]


def _facts_for_quiver(payload):
    n, pairs, max_rel, cutoff = payload
    quiver = Quiver(n, tuple(Arrow(f"a{i}", s, t) for i, (s, t) in enumerate(pairs)))
    seen = set()
    out = []
    for rel_tuples in admissible_relation_sets(quiver, max_rel):
        algebra = MonomialAlgebra(
            quiver, tuple(quiver.path_from_indices(w) for w in rel_tuples))
        form = canonical_form(algebra)
        if form in seen:
            continue
        seen.add(form)
        out.append(algebra_facts(algebra, cutoff))
    return out


def sweep_corpus(corpora, cutoff=DOMDIM_CUTOFF, workers=1):
    """Facts for every algebra of every corpus, partitioned per quiver and
    merged in canonical order regardless of the worker count."""
    if isinstance(corpora, CorpusBounds):
        corpora = (corpora,)
    payloads = [(n, pairs, max_rel, cutoff)
                for bounds in corpora
                for n, pairs, max_rel in _quiver_payloads(bounds)]
    if workers <= 1:
        chunks = [_facts_for_quiver(p) for p in payloads]
    else:
        from multiprocessing import Pool
        with Pool(workers) as pool:
            chunks = pool.map(_facts_for_quiver, payloads)
    return [fact for chunk in chunks for fact in chunk]


def _corpora_dict(corpora):
    if isinstance(corpora, CorpusBounds):
        corpora = (corpora,)
    return {"corpora": [b.as_dict() for b in corpora]}


# -- suites ---------------------------------------------------------------------


def main_theorem_corpus_checks(facts):
    """Counts and counterexamples for: domdim >= 2 forces a Nakayama-shaped
    quiver, on a list of algebra facts."""
    counts = {"algebras": len(facts), "domdim_ge2": 0, "nakayama_shape": 0}
    counterexamples = []
    for f in facts:
        naka = f["shape"] != QuiverShape.NOT_NAKAYAMA.value
        if naka:
            counts["nakayama_shape"] += 1
        if _facts_ge(f["domdim"], 2):
            counts["domdim_ge2"] += 1
            if not naka:
                counterexamples.append({
                    "implication": "domdim>=2 => nakayama shape",
                    "canonical_form": f["form"],
                })
    return counts, counterexamples


def kupisch_side_checks(max_n, max_c, cmp_n, cmp_c):
    """Counts and counterexamples for the Kupisch-side set matching."""
    counterexamples = []
    lhs = set()
    n_endo = 0
    for ks in enumerate_kupisch(max_n, max_c):
        algebra = kupisch_to_algebra(ks)
        universe = all_uniserial_ids(algebra)
        reps = [uniserial_module(algebra, t, l) for t, l in universe]
        ctx = EndomorphismContext(reps)
        pos = {uid: i for i, uid in enumerate(universe)}
        for cand in gen_cogen_candidate_ids(algebra, full_universe=False):
            n_endo += 1
            endo = ctx.endo_algebra([pos[uid] for uid in cand])
            kc = kupisch_of_endo(endo)
            if kc is None:
                counterexamples.append({
                    "implication": "End of allowed generator-cogenerator is Nakayama",
                    "series": str(ks), "summands": list(map(list, cand)),
                })
                continue
            recon = kupisch_to_algebra(kc)
            if not dominant_dimension(recon, 2).ge(2):
                counterexamples.append({
                    "implication": "End of generator-cogenerator has domdim >= 2",
                    "series": str(ks), "summands": list(map(list, cand)),
                })
            base_ks = kupisch_of_endo(base_algebra(recon))
            if base_ks != ks.canonical():
                counterexamples.append({
                    "implication": "base algebra of End_B(M) recovers B",
                    "series": str(ks), "summands": list(map(list, cand)),
                    "base": str(base_ks),
                })
            if kc.vertex_count <= cmp_n and max(kc.lengths) <= cmp_c:
                lhs.add(str(kc))
    rhs = set()
    n_cmp = 0
    for ks in enumerate_kupisch(cmp_n, cmp_c):
        algebra = kupisch_to_algebra(ks)
        n_cmp += 1
        if not dominant_dimension(algebra, 2).ge(2):
            continue
        base_ks = kupisch_of_endo(base_algebra(algebra))
        if base_ks is None:
            counterexamples.append({
                "implication": "base algebra of a Nakayama algebra is connected Nakayama",
                "series": str(ks),
            })
            continue
        if base_ks.vertex_count <= max_n and max(base_ks.lengths) <= max_c:
            rhs.add(str(ks))
    for s in sorted(lhs - rhs):
        counterexamples.append({
            "implication": "realized endomorphism series has domdim >= 2 with small base",
            "series": s,
        })
    for s in sorted(rhs - lhs):
        counterexamples.append({
            "implication": "Nakayama series with domdim >= 2 and small base is realized",
            "series": s,
        })
    counts = {"endo_instances": n_endo, "realized_series": len(lhs),
              "comparison_series": n_cmp, "matched_series": len(lhs & rhs)}
    return counts, counterexamples


def run_main_theorem(bounds=DEFAULT_CORPORA, max_n=DEFAULT_MAX_N, max_c=DEFAULT_MAX_C,
                     cmp_n=COMPARISON_MAX_N, cmp_c=COMPARISON_MAX_C, workers=1):
    """Monomial side of the classification plus the Kupisch-side matching:
    an algebra in the corpus with dominant dimension at least two must have
    a Nakayama-shaped quiver, and the Kupisch series realized by
    endomorphism algebras of allowed generator-cogenerators must coincide
    with those of Nakayama algebras of dominant dimension at least two
    whose base algebra fits the generator bounds."""
    t0 = time.time()
    facts = sweep_corpus(bounds, workers=workers)
    counts, counterexamples = main_theorem_corpus_checks(facts)
    k_counts, k_ces = kupisch_side_checks(max_n, max_c, cmp_n, cmp_c)
    counts.update(k_counts)
    counterexamples.extend(k_ces)
    return VerificationReport(
        suite="main-theorem",
        bounds={**_corpora_dict(bounds), "max_n": max_n, "max_c": max_c,
                "comparison_max_n": cmp_n, "comparison_max_c": cmp_c},
        counts=counts,
        counterexamples=_sorted_counterexamples(counterexamples),
        wall_time_seconds=time.time() - t0,
    )


def qf2_chain_checks(facts):
    counts = {"algebras": len(facts), "qf2_both": 0, "domdim_ge2": 0}
    counterexamples = []
    for f in facts:
        qf2_both = f["qf2_right"] and f["qf2_left"]
        naka = f["shape"] != QuiverShape.NOT_NAKAYAMA.value
        if qf2_both:
            counts["qf2_both"] += 1
        if _facts_ge(f["domdim"], 2):
            counts["domdim_ge2"] += 1
            if not qf2_both:
                counterexamples.append({
                    "implication": "domdim>=2 => QF-2 on both sides",
                    "canonical_form": f["form"],
                })
        if qf2_both and not naka:
            counterexamples.append({
                "implication": "monomial QF-2 => nakayama shape",
                "canonical_form": f["form"],
            })
        if not f["socle_agree"]:
            counterexamples.append({
                "implication": "socle criterion == socle dimension oracle",
                "canonical_form": f["form"],
            })
    return counts, counterexamples


def run_qf2_chain(bounds=DEFAULT_CORPORA, workers=1):
    """domdim >= 2 forces QF-2 on both sides, two-sided QF-2 forces a
    Nakayama-shaped quiver, and the combinatorial socle criterion matches
    the linear-algebra socle of every projective."""
    t0 = time.time()
    facts = sweep_corpus(bounds, workers=workers)
    counts, counterexamples = qf2_chain_checks(facts)
    return VerificationReport(
        suite="qf2-chain", bounds=_corpora_dict(bounds), counts=counts,
        counterexamples=_sorted_counterexamples(counterexamples),
        wall_time_seconds=time.time() - t0,
    )


def cross_check_facts(facts):
    counts = {"algebras": len(facts), "domdim_ge1": 0, "dc_holds": 0}
    counterexamples = []
    for f in facts:
        ge1 = _facts_ge(f["domdim"], 1)
        ge2 = _facts_ge(f["domdim"], 2)
        if ge1:
            counts["domdim_ge1"] += 1
        if f["dc_holds"]:
            counts["dc_holds"] += 1
        if ge1 != (f["pi_right"] is not None) or ge1 != (f["pi_left"] is not None):
            counterexamples.append({
                "implication": "domdim>=1 <=> minimal faithful projective-injective exists",
                "canonical_form": f["form"],
            })
        if ge2 != f["dc_holds"]:
            counterexamples.append({
                "implication": "domdim>=2 <=> double centralizer",
                "canonical_form": f["form"],
            })
        if f["domdim"] != f["domdim_op"]:
            counterexamples.append({
                "implication": "domdim(A) == domdim(op A)",
                "canonical_form": f["form"],
                "domdim": f["domdim"], "domdim_op": f["domdim_op"],
            })
        if ge1 and f["base_nakayama"] is not True:
            counterexamples.append({
                "implication": "base algebra fAf is componentwise Nakayama",
                "canonical_form": f["form"],
            })
        if ge1 and f["dim_eAe"] != f["dim_fAf"]:
            counterexamples.append({
                "implication": "dim eAe == dim fAf",
                "canonical_form": f["form"],
            })
    return counts, counterexamples


def structural_oracle_checks(max_n, max_c):
    """Kupisch roundtrips, selfinjectivity agreement, and the two fixed
    enumeration counts."""
    counts = {}
    counterexamples = []
    series = enumerate_kupisch(max_n, max_c)
    counts["kupisch_series"] = len(series)
    for ks in series:
        algebra = kupisch_to_algebra(ks)
        back = algebra_to_kupisch(algebra)
        if back != ks:
            counterexamples.append({
                "implication": "kupisch roundtrip",
                "series": str(ks), "roundtrip": str(back),
            })
        dims = tuple(len(algebra.paths_from(v)) for v in range(ks.vertex_count))
        walk_dims = _dims_along_walk(algebra, ks)
        if walk_dims != ks.lengths:
            counterexamples.append({
                "implication": "projective dimensions match the series",
                "series": str(ks), "dims": list(dims),
            })
        if is_selfinjective_kupisch(ks) != is_selfinjective(algebra):
            counterexamples.append({
                "implication": "selfinjectivity criterion matches homological oracle",
                "series": str(ks),
            })
    expected = ["linear:1", "linear:2,1", "cyclic:2", "cyclic:3",
                "cyclic:2,2", "cyclic:3,2", "cyclic:3,3"]
    got = [str(ks) for ks in enumerate_kupisch(2, 3)]
    counts["kupisch_2_3"] = len(got)
    if sorted(got) != sorted(expected):
        counterexamples.append({
            "implication": "enumerate_kupisch(2,3) yields the seven known series",
            "series": got,
        })
    small = sum(1 for _ in enumerate_monomial_algebras(CorpusBounds(1, 1, 3)))
    counts["loop_algebras_1_1_3"] = small
    if small != 3:
        counterexamples.append({
            "implication": "enumerate_monomial_algebras(1,1,3) yields three algebras",
            "count": small,
        })
    return counts, counterexamples


def run_cross_checks(bounds=DEFAULT_CORPORA, max_n=DEFAULT_MAX_N, max_c=DEFAULT_MAX_C,
                     workers=1):
    """Dominant-dimension characterisations and structural oracles:
    existence of a minimal faithful projective-injective at domdim >= 1,
    the double centraliser at domdim >= 2, invariance under opposites,
    Nakayama base algebras, corner-dimension agreement, Kupisch
    roundtrips, and the fixed enumeration counts."""
    t0 = time.time()
    facts = sweep_corpus(bounds, workers=workers)
    counts, counterexamples = cross_check_facts(facts)
    s_counts, s_ces = structural_oracle_checks(max_n, max_c)
    counts.update(s_counts)
    counterexamples.extend(s_ces)
    return VerificationReport(
        suite="cross-checks",
        bounds={**_corpora_dict(bounds), "max_n": max_n, "max_c": max_c},
        counts=counts,
        counterexamples=_sorted_counterexamples(counterexamples),
        wall_time_seconds=time.time() - t0,
    )


def _dims_along_walk(algebra, ks):
    if ks.shape is QuiverShape.LINEAR:
        start = next(v for v in range(algebra.quiver.vertex_count)
                     if not algebra.quiver.in_arrows[v])
    else:
        start = 0
    v = start
    dims = []
    for _ in range(algebra.quiver.vertex_count):
        dims.append(len(algebra.paths_from(v)))
        outs = algebra.quiver.out_arrows[v]
        if outs:
            v = algebra.quiver.arrows[outs[0]].target
    dims = tuple(dims)
    if ks.shape is QuiverShape.CYCLIC:
        n = len(dims)
        dims = max(tuple(dims[(i + k) % n] for k in range(n)) for i in range(n))
    return dims


def run_yamagata(max_n=DEFAULT_MAX_N, max_c=DEFAULT_MAX_C):
    """Over every Kupisch series within bounds and every basic
    generator-cogenerator from the full uniserial universe: End_B(M) is
    Nakayama exactly when all summands are allowed, End_B(M) is always
    QF-2 on both sides, and for Nakayama outcomes the projective-injective
    vertices match the injective summands."""
    t0 = time.time()
    counts = {"series": 0, "candidates": 0, "allowed_candidates": 0,
              "nakayama_endos": 0}
    counterexamples = []
    for ks in enumerate_kupisch(max_n, max_c):
        counts["series"] += 1
        algebra = kupisch_to_algebra(ks)
        universe = all_uniserial_ids(algebra)
        reps = [uniserial_module(algebra, t, l) for t, l in universe]
        ctx = EndomorphismContext(reps)
        pos = {uid: i for i, uid in enumerate(universe)}
        allowed = set(allowed_summand_ids(algebra))
        injective_ids = {injective_uniserial_id(algebra, v)
                         for v in range(algebra.quiver.vertex_count)}
        for cand in gen_cogen_candidate_ids(algebra, full_universe=True):
            counts["candidates"] += 1
            expect_nakayama = all(uid in allowed for uid in cand)
            if expect_nakayama:
                counts["allowed_candidates"] += 1
            endo = ctx.endo_algebra([pos[uid] for uid in cand])
            naka = is_nakayama_algebra(endo)
            if naka:
                counts["nakayama_endos"] += 1
            if naka != expect_nakayama:
                counterexamples.append({
                    "implication": "End_B(M) Nakayama <=> summands allowed",
                    "series": str(ks), "summands": list(map(list, cand)),
                    "nakayama": naka,
                })
            if not is_qf2_algebra(endo):
                counterexamples.append({
                    "implication": "End_B(M) is QF-2",
                    "series": str(ks), "summands": list(map(list, cand)),
                })
            if naka:
                mismatch = _apt_mismatch(endo, cand, injective_ids)
                if mismatch:
                    counterexamples.append({
                        "implication": "projective-injectives of End_B(M) sit at injective summands",
                        "series": str(ks), "summands": list(map(list, cand)),
                        "detail": mismatch,
                    })
    return VerificationReport(
        suite="yamagata", bounds={"max_n": max_n, "max_c": max_c},
        counts=counts, counterexamples=_sorted_counterexamples(counterexamples),
        wall_time_seconds=time.time() - t0,
    )


def _apt_mismatch(endo, cand, injective_ids):
    """Compare projective-injective vertices of a Nakayama End algebra with
    the injective summands of M, through the reconstructed Kupisch walk."""
    quiver = gabriel_quiver(endo)
    n = endo.num_summands
    shape = shape_classify(quiver)
    if shape is QuiverShape.LINEAR:
        start = next(v for v in range(n) if not quiver.in_arrows[v])
    else:
        start = 0
    order = _quiver_walk(quiver, start, n)
    lengths = tuple(len(endo.right_block(i)) for i in order)
    recon = kupisch_to_algebra(KupischSeries(shape, lengths))
    pi_positions = {k for k in range(n)
                    if homological_status(projective_module(recon, k)).is_injective}
    inj_positions = {k for k in range(n) if cand[order[k]] in injective_ids}
    if pi_positions != inj_positions:
        return {"proj_inj": sorted(pi_positions), "injective_summands": sorted(inj_positions)}
    return None


def _quiver_walk(quiver, start, steps):
    order = [start]
    v = start
    for _ in range(steps - 1):
        v = quiver.arrows[quiver.out_arrows[v][0]].target
        order.append(v)
    return order


def run_morita(max_n=DEFAULT_MAX_N, max_c=DEFAULT_MAX_C):
    """Forward direction of the Morita-algebra classification: for a
    selfinjective (constant cyclic) series and M = B plus distinct P/soc
    summands, End_B(M) is Nakayama with selfinjective base and dominant
    dimension at least two."""
    t0 = time.time()
    counts = {"series": 0, "instances": 0}
    counterexamples = []
    for c in range(2, max_c + 1):
        for n in range(1, max_n + 1):
            ks = KupischSeries(QuiverShape.CYCLIC, (c,) * n)
            counts["series"] += 1
            algebra = kupisch_to_algebra(ks)
            universe = all_uniserial_ids(algebra)
            reps = [uniserial_module(algebra, t, l) for t, l in universe]
            ctx = EndomorphismContext(reps)
            pos = {uid: i for i, uid in enumerate(universe)}
            projs = sorted((v, c) for v in range(n))
            rad_tops = sorted((v, c - 1) for v in range(n)) if c > 1 else []
            for mask in range(1 << len(rad_tops)):
                counts["instances"] += 1
                cand = tuple(sorted(set(projs)
                                    | {rt for k, rt in enumerate(rad_tops) if mask >> k & 1}))
                endo = ctx.endo_algebra([pos[uid] for uid in cand])
                entry = {"series": str(ks), "summands": list(map(list, cand))}
                if not is_nakayama_algebra(endo):
                    counterexamples.append({**entry, "implication": "End is Nakayama"})
                    continue
                kc = kupisch_of_endo(endo)
                recon = kupisch_to_algebra(kc)
                if not dominant_dimension(recon, 2).ge(2):
                    counterexamples.append({**entry, "implication": "End has domdim >= 2"})
                base_ks = kupisch_of_endo(base_algebra(recon))
                if base_ks is None or not is_selfinjective_kupisch(base_ks):
                    counterexamples.append({**entry, "implication": "base algebra is selfinjective"})
    return VerificationReport(
        suite="morita", bounds={"max_n": max_n, "max_c": max_c},
        counts=counts, counterexamples=_sorted_counterexamples(counterexamples),
        wall_time_seconds=time.time() - t0,
    )


def _sorted_counterexamples(items):
    return sorted(items, key=lambda d: json.dumps(d, sort_keys=True))


def run_suite(suite, bounds=None, max_n=None, max_c=None, workers=1):
    bounds = bounds or DEFAULT_CORPORA
    max_n = max_n if max_n is not None else DEFAULT_MAX_N
    max_c = max_c if max_c is not None else DEFAULT_MAX_C
    if suite == "main-theorem":
        return run_main_theorem(bounds, max_n, max_c, workers=workers)
    if suite == "yamagata":
        return run_yamagata(max_n, max_c)
    if suite == "qf2-chain":
        return run_qf2_chain(bounds, workers=workers)
    if suite == "morita":
        return run_morita(max_n, max_c)
    if suite == "cross-checks":
        return run_cross_checks(bounds, max_n, max_c, workers=workers)
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
