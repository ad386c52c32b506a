"""Machine-checkable predicates for each theorem, evaluated per ring or graph.

Every check returns a TheoremVerdict: HOLDS when the statement's sides agree,
VACUOUS when a stated hypothesis fails (so coverage stays auditable), and
VIOLATED with a witness otherwise.  Equivalences evaluate all sides
independently — no short-circuiting — so HOLDS verdicts record the shared
truth value, which the corpus report uses to certify non-vacuous coverage.

Finite rings are Artinian, hence Noetherian; Noetherian hypotheses are
therefore treated as satisfied and noted on the verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graphs import SimpleGraph, build_ag, build_zd, graph_from_edges, make_family
from .ideals import (Ideal, IdealLattice, ZrProfile, enumerate_ideals, is_reduced,
                     nilradical, zr_condition_profile)
from .invariants import (INFINITE, SHAPE_COMPLETE_BIPARTITE, SHAPE_FIGURE1, SHAPE_K1,
                         SHAPE_PATH, SHAPE_STAR, all_pairs_distances, chromatic_number,
                         classify_shape, clique_number, complete_bipartite_parts,
                         diameter, girth, has_universal_vertex, is_complete,
                         is_connected, is_star, maximal_cliques, smarandache_vertices)
from .rings import FiniteRing, ProductSpec, build_ring

HOLDS = "HOLDS"
VACUOUS = "VACUOUS"
VIOLATED = "VIOLATED"

NOETHERIAN_NOTE = "finite ring: Noetherian/Artinian hypotheses auto-satisfied"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    subject: str
    verdict: str
    sides: tuple[tuple[str, object], ...] = ()
    witness: object = None
    note: str = ""

    @property
    def sort_key(self):
        return (self.theorem_id, self.subject)

    def side(self, name: str):
        for key, value in self.sides:
            if key == name:
                return value
        raise KeyError(name)


def _sides(**kw) -> tuple[tuple[str, object], ...]:
    return tuple(kw.items())


class RingContext:
    """Lazily computed per-ring data shared by all checks."""

    def __init__(self, ring: FiniteRing, max_ideals: int = 20000, search_cap: int = 600):
        self.ring = ring
        self.max_ideals = max_ideals
        self.search_cap = search_cap

    @cached_property
    def lattice(self) -> IdealLattice:
        return enumerate_ideals(self.ring, max_ideals=self.max_ideals)

    @cached_property
    def profile(self) -> ZrProfile:
        return zr_condition_profile(self.ring, self.lattice)

    @cached_property
    def ag(self) -> SimpleGraph:
        return build_ag(self.ring, self.lattice)

    @cached_property
    def zd(self) -> SimpleGraph:
        return build_zd(self.ring)

    @cached_property
    def ag_dist(self) -> np.ndarray:
        return all_pairs_distances(self.ag)

    @cached_property
    def zd_dist(self) -> np.ndarray:
        return all_pairs_distances(self.zd)

    def _diam(self, g, dist):
        if g.n == 0:
            return None
        if (dist < 0).any():
            return INFINITE
        return int(dist.max())

    @cached_property
    def ag_diameter(self):
        return self._diam(self.ag, self.ag_dist)

    @cached_property
    def zd_diameter(self):
        return self._diam(self.zd, self.zd_dist)

    @cached_property
    def ag_girth(self):
        return girth(self.ag)

    @cached_property
    def zd_girth(self):
        return girth(self.zd)

    @cached_property
    def ag_svertices(self) -> dict[int, tuple[int, int, int]]:
        return smarandache_vertices(self.ag)

    @cached_property
    def zd_svertices(self) -> dict[int, tuple[int, int, int]]:
        return smarandache_vertices(self.zd)

    @cached_property
    def reduced(self) -> bool:
        return is_reduced(self.ring)

    @cached_property
    def is_domain(self) -> bool:
        return self.ag.n == 0 or self.zd.n == 0  # equal by construction; tested elsewhere

    @cached_property
    def ag_is_k2(self) -> bool:
        return self.ag.n == 2 and self.ag.n_edges == 1

    @cached_property
    def is_local(self) -> bool:
        return len(self.lattice.maximal_ideal_indices) == 1

    @cached_property
    def two_maximal_meet_zero(self) -> bool:
        """Exactly two maximal ideals intersecting in (0): CRT-equivalent to F1 x F2."""
        maxi = self.lattice.maximal_ideal_indices
        if len(maxi) != 2:
            return False
        zero_mask = 1 << self.ring.zero
        m1, m2 = (self.lattice.ideals[k].mask for k in maxi)
        return m1 & m2 == zero_mask

    @cached_property
    def astar_size(self) -> int:
        return len(self.lattice.annihilating_indices())

    @cached_property
    def factor_info(self) -> tuple[dict, ...]:
        """For product-built rings: basic facts about each factor."""
        spec = self.ring.spec
        if not isinstance(spec, ProductSpec):
            return ()
        out = []
        for fspec in spec.factors:
            fring = build_ring(fspec)
            flat = enumerate_ideals(fring)
            is_dom = build_zd(fring).n == 0
            out.append({
                "name": fring.name,
                "is_domain": is_dom,
                "is_field": is_dom,  # finite domains are fields
                "astar_size": len(flat.annihilating_indices()),
                "reduced": is_reduced(fring),
            })
        return tuple(out)

    def vertex_ideal(self, v: int) -> Ideal:
        return self.ag.payload[v]


# --------------------------------------------------------------------------
# section-2 checks


def check_complete_equivalence(ctx: RingContext) -> TheoremVerdict:
    """AG complete <=> zero-divisor graph complete <=> (Z(R))^2 = 0, unless AG = K2."""
    sides = _sides(
        ag_complete=is_complete(ctx.ag),
        zd_complete=is_complete(ctx.zd),
        zsq_zero=ctx.profile.zsq_zero,
    )
    if ctx.ag_is_k2:
        return TheoremVerdict("complete_equivalence", ctx.ring.name, VACUOUS, sides,
                              note="AG(R) = K2 excluded by hypothesis; " + NOETHERIAN_NOTE)
    values = {v for _, v in sides}
    if len(values) == 1:
        return TheoremVerdict("complete_equivalence", ctx.ring.name, HOLDS, sides,
                              note=NOETHERIAN_NOTE)
    return TheoremVerdict("complete_equivalence", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)}, note=NOETHERIAN_NOTE)


def check_diam2_equivalence(ctx: RingContext) -> TheoremVerdict:
    """diam(AG) = 2 <=> diam(zero-divisor graph) = 2 <=> the Z(R) condition."""
    prof = ctx.profile
    z_condition = prof.union_two_primes_intersect_zero or (
        prof.z_is_prime_ideal and not prof.zsq_zero)
    sides = _sides(
        ag_diam_2=ctx.ag_diameter == 2,
        zd_diam_2=ctx.zd_diameter == 2,
        z_condition=z_condition,
    )
    if ctx.ag_is_k2:
        return TheoremVerdict("diam2_equivalence", ctx.ring.name, VACUOUS, sides,
                              note="AG(R) = K2 excluded by hypothesis; " + NOETHERIAN_NOTE)
    values = {v for _, v in sides}
    if len(values) == 1:
        return TheoremVerdict("diam2_equivalence", ctx.ring.name, HOLDS, sides,
                              note=NOETHERIAN_NOTE)
    return TheoremVerdict("diam2_equivalence", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)}, note=NOETHERIAN_NOTE)


def check_lemma_1_10(ctx: RingContext) -> TheoremVerdict:
    """diam(AG) = 2 and Z(R) covered by two maximal primes => their intersection is (0)."""
    prof = ctx.profile
    applies = ctx.ag_diameter == 2 and prof.cover_indices is not None
    sides = _sides(
        diam_2=ctx.ag_diameter == 2,
        two_prime_cover=prof.cover_indices is not None,
        intersection_zero=prof.cover_intersection_is_zero,
    )
    if not applies:
        return TheoremVerdict("lemma_1_10", ctx.ring.name, VACUOUS, sides)
    if prof.cover_intersection_is_zero:
        return TheoremVerdict("lemma_1_10", ctx.ring.name, HOLDS, sides)
    p1, p2 = prof.cover_indices
    return TheoremVerdict("lemma_1_10", ctx.ring.name, VIOLATED, sides, witness={
        "primes": [ctx.lattice.label(p1), ctx.lattice.label(p2)],
        "intersection_size": (ctx.lattice.ideals[p1].mask & ctx.lattice.ideals[p2].mask).bit_count(),
    })


# --------------------------------------------------------------------------
# section-3 checks


def check_bipartite_reduced(ctx: RingContext) -> TheoremVerdict:
    """Reduced: Z(R) a union of two primes meeting in (0) <=> AG complete bipartite."""
    sides = _sides(
        z_two_primes=ctx.profile.union_two_primes_intersect_zero,
        ag_complete_bipartite=complete_bipartite_parts(ctx.ag) is not None,
    )
    if not ctx.reduced:
        return TheoremVerdict("bipartite_reduced", ctx.ring.name, VACUOUS, sides,
                              note="not reduced")
    if sides[0][1] == sides[1][1]:
        return TheoremVerdict("bipartite_reduced", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("bipartite_reduced", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


def check_girth4_reduced(ctx: RingContext) -> TheoremVerdict:
    """Reduced: gr(AG) = 4 <=> AG = K_{m,n} with m,n >= 2 <=> cover with both
    sub-ideal counts >= 3.  All three are expected false on finite corpora."""
    parts = complete_bipartite_parts(ctx.ag)
    kmn_big = parts is not None and min(len(parts[0]), len(parts[1])) >= 2
    counts = ctx.profile.subideal_counts
    z_cond = (ctx.profile.union_two_primes_intersect_zero
              and counts is not None and min(counts) >= 3)
    sides = _sides(
        girth_4=ctx.ag_girth == 4,
        kmn_parts_ge_2=kmn_big,
        cover_subideals_ge_3=z_cond,
    )
    if not ctx.reduced:
        return TheoremVerdict("girth4_reduced", ctx.ring.name, VACUOUS, sides,
                              note="not reduced")
    values = {v for _, v in sides}
    if len(values) == 1:
        return TheoremVerdict("girth4_reduced", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("girth4_reduced", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


def check_girthinf_reduced(ctx: RingContext) -> TheoremVerdict:
    """Reduced: AG nonempty with infinite girth <=> universal vertex <=> star.

    The K x D item is verified constructively only: a ring built as a product
    of exactly two fields must land on the true side.
    """
    nonempty_acyclic = ctx.ag.n > 0 and ctx.ag_girth == INFINITE
    built_two_fields = (len(ctx.factor_info) == 2
                        and all(f["is_field"] for f in ctx.factor_info))
    sides = _sides(
        nonempty_girth_inf=nonempty_acyclic,
        universal_vertex=has_universal_vertex(ctx.ag),
        star=is_star(ctx.ag),
        built_as_field_product=built_two_fields,
    )
    if not ctx.reduced:
        return TheoremVerdict("girthinf_reduced", ctx.ring.name, VACUOUS, sides,
                              note="not reduced")
    equiv = {sides[0][1], sides[1][1], sides[2][1]}
    constructive_ok = (not built_two_fields) or nonempty_acyclic
    if len(equiv) == 1 and constructive_ok:
        return TheoremVerdict("girthinf_reduced", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("girthinf_reduced", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


def _condition_2c(ctx: RingContext) -> bool:
    """Z(R) is an annihilating ideal and every zero product of distinct nonzero
    ideals involves Ann(Z(R))."""
    prof = ctx.profile
    lat = ctx.lattice
    z_idx = lat.index_of.get(prof.z_mask)
    if z_idx is None:
        return False
    ann_idx = lat.annihilator_index[z_idx]
    zero_mask = 1 << ctx.ring.zero
    if lat.ideals[z_idx].mask == zero_mask or lat.ideals[ann_idx].mask == zero_mask:
        return False
    for a in range(1, len(lat.ideals)):
        ann_a = lat.ideals[lat.annihilator_index[a]].mask
        for b in range(1, len(lat.ideals)):
            if a == b:
                continue
            if lat.ideals[b].mask & ~ann_a == 0:  # product is zero
                if a != ann_idx and b != ann_idx:
                    return False
    return True


def check_girthinf_nonreduced(ctx: RingContext) -> TheoremVerdict:
    """Non-reduced: AG nonempty with infinite girth <=> AG is K1, P4, or K_{1,n}.

    The coefficient-ring cases are exercised through the operative surrogate
    |A(R)*| = 1 (on R for K1, on the non-field factor for P4), and condition
    (2)(c) is checked against the K1/K_{1,n} shapes whenever Z(R) is an ideal.
    """
    shape = classify_shape(ctx.ag)
    star_like = shape.tag in (SHAPE_K1, SHAPE_STAR) or (
        shape.tag == SHAPE_COMPLETE_BIPARTITE and shape.parts == (1, 1))
    shape_side = star_like or (shape.tag == SHAPE_PATH and shape.n == 4)
    girth_side = ctx.ag.n > 0 and ctx.ag_girth == INFINITE

    surrogate_k1 = ctx.astar_size == 1
    fi = ctx.factor_info
    surrogate_p4 = (len(fi) == 2
                    and sum(1 for f in fi if f["is_field"]) == 1
                    and next(f for f in fi if not f["is_field"])["astar_size"] == 1)
    z_ideal = ctx.profile.z_is_ideal
    cond_2c = _condition_2c(ctx) if z_ideal else False

    sides = _sides(
        nonempty_girth_inf=girth_side,
        shape_k1_p4_star=shape_side,
        surrogate_k1=surrogate_k1,
        surrogate_p4=surrogate_p4,
        z_is_ideal=z_ideal,
        condition_2c=cond_2c,
    )
    if ctx.reduced:
        return TheoremVerdict("girthinf_nonreduced", ctx.ring.name, VACUOUS, sides,
                              note="reduced")
    problems = []
    if girth_side != shape_side:
        problems.append("girth/shape equivalence")
    if surrogate_k1 and shape.tag != SHAPE_K1:
        problems.append("|A(R)*| = 1 but AG is not K1")
    if surrogate_p4 and not (shape.tag == SHAPE_PATH and shape.n == 4):
        problems.append("field x (|A*|=1 factor) but AG is not P4")
    if z_ideal and cond_2c != star_like:
        problems.append("condition (2)(c) disagrees with K1/K_{1,n} shape")
    if not problems:
        return TheoremVerdict("girthinf_nonreduced", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("girthinf_nonreduced", ctx.ring.name, VIOLATED, sides,
                          witness={"problems": problems, "shape": shape.describe()})


def check_girth4_nonreduced(ctx: RingContext) -> TheoremVerdict:
    """Non-reduced corollary: no finite ring attains gr(AG) = 4, and the
    Figure-1 shape never appears (its ring side needs a domain that is not a
    field, hence an infinite ring)."""
    shape = classify_shape(ctx.ag)
    sides = _sides(
        girth_not_4=ctx.ag_girth != 4,
        not_figure1=shape.tag != SHAPE_FIGURE1,
    )
    if ctx.reduced:
        return TheoremVerdict("girth4_nonreduced", ctx.ring.name, VACUOUS, sides,
                              note="reduced")
    if sides[0][1] and sides[1][1]:
        return TheoremVerdict("girth4_nonreduced", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("girth4_nonreduced", ctx.ring.name, VIOLATED, sides,
                          witness={"girth": str(ctx.ag_girth), "shape": shape.describe()})


# --------------------------------------------------------------------------
# section-1 bounds and lattice sanity (corpus-wide guards)


def check_global_bounds(ctx: RingContext) -> TheoremVerdict:
    """Connectivity, diameter <= 3, girth in {3,4,inf}; girth 4 excluded for AG."""
    ag, zd = ctx.ag, ctx.zd
    ok_girth = {3, 4, INFINITE}
    sides = _sides(
        ag_empty_iff_domain=(ag.n == 0) == ctx.is_domain,
        zd_empty_iff_domain=(zd.n == 0) == ctx.is_domain,
        ag_connected=is_connected(ag),
        zd_connected=is_connected(zd),
        ag_diam_le_3=ctx.ag_diameter is None or ctx.ag_diameter in (0, 1, 2, 3),
        zd_diam_le_3=ctx.zd_diameter is None or ctx.zd_diameter in (0, 1, 2, 3),
        ag_girth_bounded=ctx.ag_girth in ok_girth,
        zd_girth_bounded=ctx.zd_girth in ok_girth,
        ag_girth_not_4=ctx.ag_girth != 4,
    )
    if all(v for _, v in sides):
        return TheoremVerdict("global_bounds", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("global_bounds", ctx.ring.name, VIOLATED, sides, witness={
        "ag_diameter": str(ctx.ag_diameter), "zd_diameter": str(ctx.zd_diameter),
        "ag_girth": str(ctx.ag_girth), "zd_girth": str(ctx.zd_girth)})


def check_lattice_sanity(ctx: RingContext) -> TheoremVerdict:
    """nil(R) = intersection of primes; I * Ann(I) = 0 elementwise; A(R)* flags."""
    lat = ctx.lattice
    ring = ctx.ring
    zero_mask = 1 << ring.zero

    nil_mask = nilradical(ring).mask
    inter = (1 << ring.order) - 1
    for k in lat.prime_indices():
        inter &= lat.ideals[k].mask
    nil_ok = nil_mask == inter

    ann_ok = True
    for k, ideal in enumerate(lat.ideals):
        ann = lat.ideals[lat.annihilator_index[k]]
        prods = ring.mul[np.ix_(ideal.member_array, ann.member_array)]
        if not (prods == ring.zero).all():
            ann_ok = False
            break

    astar_ok = all(
        flag == (ideal.mask != zero_mask
                 and lat.ideals[lat.annihilator_index[k]].mask != zero_mask)
        for k, (ideal, flag) in enumerate(zip(lat.ideals, lat.is_annihilating)))

    sides = _sides(nil_is_prime_intersection=nil_ok, annihilators_kill=ann_ok,
                   astar_flags=astar_ok)
    if nil_ok and ann_ok and astar_ok:
        return TheoremVerdict("lattice_sanity", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("lattice_sanity", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


# --------------------------------------------------------------------------
# section-4: S-vertex checks


def _has_dist3(dist: np.ndarray) -> bool:
    return bool((dist == 3).any())


def check_svertex_basic(ctx: RingContext) -> TheoremVerdict:
    """A graph with an S-vertex has >= 4 vertices, >= 3 edges, S-degrees >= 2."""
    sides = []
    ok = True
    any_premise = False
    for tag, g, sv in (("ag", ctx.ag, ctx.ag_svertices), ("zd", ctx.zd, ctx.zd_svertices)):
        if sv:
            any_premise = True
            good = (g.n >= 4 and g.n_edges >= 3
                    and all(int(g.degrees[a]) >= 2 for a in sv))
            sides.append((f"{tag}_facts", good))
            ok = ok and good
        else:
            sides.append((f"{tag}_facts", True))
    if not any_premise:
        return TheoremVerdict("svertex_basic", ctx.ring.name, VACUOUS, tuple(sides),
                              note="no S-vertices in either graph")
    verdict = HOLDS if ok else VIOLATED
    return TheoremVerdict("svertex_basic", ctx.ring.name, verdict, tuple(sides),
                          witness=None if ok else {"ag_s": sorted(ctx.ag_svertices),
                                                   "zd_s": sorted(ctx.zd_svertices)})


def check_svertex_dist3(ctx: RingContext) -> TheoremVerdict:
    """A vertex pair at distance 3 forces an S-vertex (triv1 part 7)."""
    prem_ag = _has_dist3(ctx.ag_dist)
    prem_zd = _has_dist3(ctx.zd_dist)
    sides = _sides(
        ag_dist3=prem_ag, ag_has_svertex=bool(ctx.ag_svertices),
        zd_dist3=prem_zd, zd_has_svertex=bool(ctx.zd_svertices),
    )
    if not prem_ag and not prem_zd:
        return TheoremVerdict("svertex_dist3", ctx.ring.name, VACUOUS, sides)
    ok = (not prem_ag or bool(ctx.ag_svertices)) and (not prem_zd or bool(ctx.zd_svertices))
    verdict = HOLDS if ok else VIOLATED
    return TheoremVerdict("svertex_dist3", ctx.ring.name, verdict, sides,
                          witness=None if ok else {"sides": dict(sides)})


def check_prop_color(ctx: RingContext) -> TheoremVerdict:
    """Connected AG with clique number >= 3 and no S-vertices is weakly perfect."""
    omega = clique_number(ctx.ag, ctx.search_cap)
    premise = is_connected(ctx.ag) and ctx.ag.n > 0 and omega >= 3 and not ctx.ag_svertices
    if not premise:
        sides = _sides(premise=False, omega=omega)
        return TheoremVerdict("prop_color", ctx.ring.name, VACUOUS, sides)
    chi = chromatic_number(ctx.ag, ctx.search_cap)
    sides = _sides(premise=True, omega=omega, chi=chi)
    if omega == chi:
        return TheoremVerdict("prop_color", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("prop_color", ctx.ring.name, VIOLATED, sides,
                          witness={"omega": omega, "chi": chi})


def check_clique_svertices(ctx: RingContext) -> TheoremVerdict:
    """A maximal clique of size >= 3 meeting one of the four conditions consists
    of S-vertices.

    The proof-level (strong) reading is checked; if only the stated count
    reading (|S| >= n) survives, the verdict notes the distinction.
    """
    ag = ctx.ag
    if ag.n < 3:
        return TheoremVerdict("svertex_clique", ctx.ring.name, VACUOUS,
                              _sides(qualifying_cliques=0), note="AG too small")
    sq = ag.square_zero
    svs = set(ctx.ag_svertices)
    qualifying = 0
    weak_only = []
    for clique in maximal_cliques(ag):
        if len(clique) < 3:
            continue
        nonsq = [v for v in clique if not sq[v]]
        cond1 = len(nonsq) >= 2
        cond23 = any(
            not sq[i] and any(j != i and not ctx.vertex_ideal(j).issubset(ctx.vertex_ideal(i))
                              for j in clique)
            for i in nonsq)
        cond4 = ctx.reduced
        if not (cond1 or cond23 or cond4):
            continue
        qualifying += 1
        if all(v in svs for v in clique):
            continue
        if len(svs) >= len(clique):
            weak_only.append([ag.labels[v] for v in clique])
        else:
            sides = _sides(qualifying_cliques=qualifying, strong=False, weak=False)
            return TheoremVerdict("svertex_clique", ctx.ring.name, VIOLATED, sides, witness={
                "clique": [ag.labels[v] for v in clique],
                "s_vertices": [ag.labels[v] for v in sorted(svs)]})
    if qualifying == 0:
        return TheoremVerdict("svertex_clique", ctx.ring.name, VACUOUS,
                              _sides(qualifying_cliques=0))
    sides = _sides(qualifying_cliques=qualifying, strong=not weak_only, weak=True)
    note = ""
    if weak_only:
        note = ("strong (proof-level) reading fails but the stated count reading holds "
                f"on {len(weak_only)} clique(s)")
    return TheoremVerdict("svertex_clique", ctx.ring.name, HOLDS, sides, note=note)


def check_lemma_direct(ctx: RingContext) -> TheoremVerdict:
    """Product-built rings: no S-vertices in AG forces n = 2 with two domains."""
    fi = ctx.factor_info
    if not fi:
        return TheoremVerdict("svertex_direct", ctx.ring.name, VACUOUS, (),
                              note="not built as a direct product")
    s_empty = not ctx.ag_svertices
    conclusion = len(fi) == 2 and all(f["is_domain"] for f in fi)
    sides = _sides(no_svertices=s_empty, two_domain_factors=conclusion,
                   n_factors=len(fi))
    if not s_empty or conclusion:
        return TheoremVerdict("svertex_direct", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("svertex_direct", ctx.ring.name, VIOLATED, sides, witness={
        "factors": [f["name"] for f in fi],
        "s_vertices": sorted(ctx.ag_svertices)})


def check_artinian_nonlocal(ctx: RingContext) -> TheoremVerdict:
    """Non-local: AG has no S-vertices <=> R is a product of two fields
    (operationally: exactly two maximal ideals meeting in (0))."""
    sides = _sides(
        no_svertices=not ctx.ag_svertices,
        two_fields=ctx.two_maximal_meet_zero,
        n_maximal=len(ctx.lattice.maximal_ideal_indices),
    )
    if ctx.is_local:
        return TheoremVerdict("svertex_artinian_nonlocal", ctx.ring.name, VACUOUS, sides,
                              note="local ring")
    if sides[0][1] == sides[1][1]:
        return TheoremVerdict("svertex_artinian_nonlocal", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("svertex_artinian_nonlocal", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


def check_artinian_girth4(ctx: RingContext) -> TheoremVerdict:
    """gr(AG) = 4 forbids local rings; vacuous on finite corpora (girth 4 needs
    infinite rings) but retained so the logic is exercised."""
    sides = _sides(girth_4=ctx.ag_girth == 4, local=ctx.is_local)
    if ctx.ag_girth != 4:
        return TheoremVerdict("artinian_girth4_nonlocal", ctx.ring.name, VACUOUS, sides)
    if not ctx.is_local:
        return TheoremVerdict("artinian_girth4_nonlocal", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("artinian_girth4_nonlocal", ctx.ring.name, VIOLATED, sides,
                          witness={"maximal_ideals": 1})


def check_lemma_red(ctx: RingContext) -> TheoremVerdict:
    """Reduced: every S-vertex x of the zero-divisor graph maps to the S-vertex
    Rx of AG(R); in particular S-vertices in the former force them in the latter.

    That map is what the lemma's proof establishes.  The literal count
    comparison |S(Gamma)| <= |S(AG)| is additionally recorded as a side: it
    fails whenever the map collapses several generators onto one ideal (first
    falsified by Z30, where |S(Gamma)| = 7 but |S(AG)| = 3), so it is reported
    but not enforced.
    """
    from .ideals import principal_ideal

    zd_count = len(ctx.zd_svertices)
    ag_count = len(ctx.ag_svertices)
    if not ctx.reduced:
        sides = _sides(zd_count=zd_count, ag_count=ag_count)
        return TheoremVerdict("svertex_reduced_count", ctx.ring.name, VACUOUS, sides,
                              note="not reduced")
    ag_ideal_masks = {ctx.ag.payload[v].mask for v in ctx.ag_svertices}
    unmapped = []
    for v in ctx.zd_svertices:
        elem = ctx.zd.payload[v]
        if principal_ideal(ctx.ring, elem).mask not in ag_ideal_masks:
            unmapped.append(ctx.zd.labels[v])
    implication = (zd_count == 0) or ag_count > 0
    literal_count = zd_count <= ag_count
    sides = _sides(zd_count=zd_count, ag_count=ag_count,
                   map_to_svertices=not unmapped,
                   implication=implication,
                   literal_count_claim=literal_count)
    if not unmapped and implication:
        note = "" if literal_count else (
            "literal count reading fails here; only the generator-to-ideal map is provable")
        return TheoremVerdict("svertex_reduced_count", ctx.ring.name, HOLDS, sides, note=note)
    return TheoremVerdict("svertex_reduced_count", ctx.ring.name, VIOLATED, sides,
                          witness={"unmapped": unmapped})


def check_reduced_theorem(ctx: RingContext) -> TheoremVerdict:
    """Reduced, four parts: k >= 3 minimal primes force S-vertices in both
    graphs; a two-prime cover, girth 4, or a nonempty forest each force none."""
    k = len(ctx.lattice.minimal_prime_indices())
    ag_s = bool(ctx.ag_svertices)
    zd_s = bool(ctx.zd_svertices)
    p1 = (k < 3) or (ag_s and zd_s)
    p2 = (not ctx.profile.union_two_primes_intersect_zero) or not ag_s
    p3 = (ctx.ag_girth != 4) or not ag_s
    p4 = not (ctx.ag.n > 0 and ctx.ag_girth == INFINITE) or not ag_s
    sides = _sides(min_primes=k, part1=p1, part2=p2, part3=p3, part4=p4)
    if not ctx.reduced:
        return TheoremVerdict("svertex_reduced_theorem", ctx.ring.name, VACUOUS, sides,
                              note="not reduced")
    if p1 and p2 and p3 and p4:
        return TheoremVerdict("svertex_reduced_theorem", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("svertex_reduced_theorem", ctx.ring.name, VIOLATED, sides,
                          witness={"sides": dict(sides)})


def check_remark_diam(ctx: RingContext) -> TheoremVerdict:
    """No S-vertices in a graph caps its diameter at 2; no S-vertices in AG also
    caps the zero-divisor diameter (via diam(Gamma) = 3 => diam(AG) = 3)."""
    zd_ok = ctx.zd_svertices or ctx.zd_diameter != 3
    ag_ok = ctx.ag_svertices or ctx.ag_diameter != 3
    cross_ok = ctx.ag_svertices or ctx.zd_diameter != 3
    sides = _sides(zd_diam_ok=bool(zd_ok), ag_diam_ok=bool(ag_ok), cross_ok=bool(cross_ok))
    if zd_ok and ag_ok and cross_ok:
        return TheoremVerdict("svertex_remark_diam", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("svertex_remark_diam", ctx.ring.name, VIOLATED, sides, witness={
        "ag_diameter": str(ctx.ag_diameter), "zd_diameter": str(ctx.zd_diameter)})


def _four_cycle_with_nonsquare_vertex(ctx: RingContext) -> bool:
    """Is there a 4-cycle I-J-K-L through a vertex with I^2 != 0?"""
    ag = ctx.ag
    for v in range(ag.n):
        if ag.square_zero[v]:
            continue
        nbrs = [int(u) for u in ag.neighbors(v)]
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                j, l = nbrs[ai], nbrs[bi]
                common = np.flatnonzero(ag.adj[j] & ag.adj[l])
                if any(int(kk) != v for kk in common):
                    return True
    return False


def check_bipart_theorem(ctx: RingContext) -> TheoremVerdict:
    """Part 1: girth 4 with a non-square-zero cycle vertex and no S-vertices
    forces complete bipartite (vacuous on finite corpora).  Part 2: complete
    bipartite AG has no S-vertices and girth 4 or infinity."""
    cb = complete_bipartite_parts(ctx.ag) is not None
    prem1 = (ctx.ag_girth == 4 and not ctx.ag_svertices
             and _four_cycle_with_nonsquare_vertex(ctx))
    part1_ok = (not prem1) or cb
    part2_ok = (not cb) or (not ctx.ag_svertices and ctx.ag_girth in (4, INFINITE))
    sides = _sides(part1_premise=prem1, complete_bipartite=cb,
                   part1_ok=part1_ok, part2_ok=part2_ok)
    if not prem1 and not cb:
        return TheoremVerdict("bipart_theorem", ctx.ring.name, VACUOUS, sides)
    if part1_ok and part2_ok:
        return TheoremVerdict("bipart_theorem", ctx.ring.name, HOLDS, sides)
    return TheoremVerdict("bipart_theorem", ctx.ring.name, VIOLATED, sides, witness={
        "girth": str(ctx.ag_girth), "s_vertices": sorted(ctx.ag_svertices)})


RING_CHECKS = (
    check_complete_equivalence,
    check_diam2_equivalence,
    check_lemma_1_10,
    check_bipartite_reduced,
    check_girth4_reduced,
    check_girthinf_reduced,
    check_girthinf_nonreduced,
    check_girth4_nonreduced,
    check_global_bounds,
    check_lattice_sanity,
    check_svertex_basic,
    check_svertex_dist3,
    check_prop_color,
    check_clique_svertices,
    check_lemma_direct,
    check_artinian_nonlocal,
    check_artinian_girth4,
    check_lemma_red,
    check_reduced_theorem,
    check_remark_diam,
    check_bipart_theorem,
)


def run_ring_checks(ring: FiniteRing, max_ideals: int = 20000,
                    search_cap: int = 600) -> list[TheoremVerdict]:
    ctx = RingContext(ring, max_ideals=max_ideals, search_cap=search_cap)
    return [check(ctx) for check in RING_CHECKS]


# --------------------------------------------------------------------------
# synthetic graph checks


def expected_multipartite_svertices(parts: tuple[int, ...]) -> set[int]:
    """Exact S-vertex set of a complete multipartite graph (triv1 part 4)."""
    r = len(parts)
    owner = []
    for k, p in enumerate(parts):
        owner.extend([k] * p)
    if r <= 2:
        return set()
    big = [k for k, p in enumerate(parts) if p >= 2]
    if not big:
        return set()
    if len(big) >= 2:
        return set(range(sum(parts)))
    return {v for v, k in enumerate(owner) if k != big[0]}


def clique_with_outsider(size: int, links: int) -> SimpleGraph:
    """A clique of the given size plus one vertex adjacent to ``links`` of it."""
    if not 3 <= size:
        raise ValueError("clique size must be >= 3")
    if not 1 <= links <= size - 1:
        raise ValueError("links must be between 1 and size-1")
    edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
    edges += [(i, size) for i in range(links)]
    return graph_from_edges(size + 1, edges)


def _verdict_from_equality(theorem_id, subject, expected: set[int], actual: set[int],
                           extra_sides=(), note=""):
    sides = _sides(expected=len(expected), actual=len(actual)) + tuple(extra_sides)
    if expected == actual:
        return TheoremVerdict(theorem_id, subject, HOLDS, sides, note=note)
    return TheoremVerdict(theorem_id, subject, VIOLATED, sides, witness={
        "expected": sorted(expected), "actual": sorted(actual)}, note=note)


def synthetic_family_checks() -> list[TheoremVerdict]:
    """Verdicts for the deterministic synthetic families of triv1/triv2/bipart."""
    out: list[TheoremVerdict] = []

    for n in range(1, 9):
        g = make_family("complete", n)
        sv = set(smarandache_vertices(g))
        omega = clique_number(g)
        chi = chromatic_number(g)
        out.append(_verdict_from_equality(
            "triv1_complete", f"K{n}", set(), sv,
            extra_sides=(("weakly_perfect", omega == chi),)))

    for leaves in range(1, 9):
        g = make_family("star", leaves)
        sv = set(smarandache_vertices(g))
        out.append(_verdict_from_equality("triv1_star", f"star{leaves}", set(), sv))

    for m in range(1, 6):
        for n in range(m, 6):
            g = make_family("complete_bipartite", (m, n))
            sv = set(smarandache_vertices(g))
            gr = girth(g)
            sides = (("weakly_perfect", clique_number(g) == chromatic_number(g) == 2),
                     ("girth_4_or_inf", gr in (4, INFINITE)))
            out.append(_verdict_from_equality(
                "triv1_complete_bipartite", f"K{m}_{n}", set(), sv, extra_sides=sides))

    for r in (2, 3, 4):
        for parts in itertools.combinations_with_replacement((1, 2, 3), r):
            g = make_family("complete_multipartite", list(parts))
            sv = set(smarandache_vertices(g))
            expected = expected_multipartite_svertices(parts)
            subject = "K_" + "_".join(str(p) for p in parts)
            out.append(_verdict_from_equality("triv1_multipartite", subject, expected, sv))

    for m in range(1, 5):
        for n in range(m, 5):
            g = make_family("bistar", (m, n))
            sv = set(smarandache_vertices(g))
            out.append(_verdict_from_equality(
                "triv1_bistar", f"bistar{m}_{n}", {0, 1}, sv,
                extra_sides=(("weakly_perfect", clique_number(g) == chromatic_number(g) == 2),)))

    for n in range(3, 13):
        g = make_family("cycle", n)
        sv = set(smarandache_vertices(g))
        expected = set(range(n)) if n >= 5 else set()
        omega, chi = clique_number(g), chromatic_number(g)
        if n == 3:
            color_ok = omega == chi == 3
        elif n % 2 == 0:
            color_ok = omega == chi == 2
        else:
            color_ok = chi == 3 and omega == 2
        out.append(_verdict_from_equality(
            "triv1_cycle", f"C{n}", expected, sv, extra_sides=(("coloring_ok", color_ok),)))

    # chordless C5 embedded in a larger graph: pendant attached to one cycle vertex
    g = graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    sv = set(smarandache_vertices(g))
    out.append(_verdict_from_equality("triv1_cycle_embedded", "C5+pendant",
                                      {0, 1, 2, 3, 4}, sv))

    for size in (3, 4, 5):
        for links in range(1, size):
            g = clique_with_outsider(size, links)
            sv = set(smarandache_vertices(g))
            if links <= size - 2:
                expected = set(range(size))
            else:
                expected = set(range(links))
            out.append(_verdict_from_equality(
                "triv2_clique_outsider", f"clique{size}_t{links}", expected, sv))

    return out


def random_graph(index: int, seed: int, max_vertices: int = 10) -> SimpleGraph:
    """Seeded Erdos-Renyi graph on 4..max_vertices vertices."""
    rng = np.random.default_rng([seed, index])
    n = int(rng.integers(4, max_vertices + 1))
    p = float(rng.uniform(0.15, 0.85))
    upper = rng.random((n, n)) < p
    adj = np.triu(upper, 1)
    adj = adj | adj.T
    return SimpleGraph("synthetic", tuple(f"v{i}" for i in range(n)), adj)


def prop_color_random_checks(count: int, seed: int, max_vertices: int = 10) -> list[TheoremVerdict]:
    """Prop color on seeded random graphs: connected, omega >= 3, no S-vertices
    => weakly perfect; omega <= chi recorded as a side everywhere."""
    out = []
    for i in range(count):
        g = random_graph(i, seed, max_vertices)
        subject = f"rand{i:03d}"
        omega = clique_number(g)
        chi = chromatic_number(g)
        sv = smarandache_vertices(g)
        premise = is_connected(g) and omega >= 3 and not sv
        sides = _sides(premise=premise, omega=omega, chi=chi,
                       omega_le_chi=omega <= chi)
        if omega > chi:
            out.append(TheoremVerdict("prop_color_random", subject, VIOLATED, sides,
                                      witness={"omega": omega, "chi": chi}))
        elif not premise:
            out.append(TheoremVerdict("prop_color_random", subject, VACUOUS, sides))
        elif omega == chi:
            out.append(TheoremVerdict("prop_color_random", subject, HOLDS, sides))
        else:
            out.append(TheoremVerdict("prop_color_random", subject, VIOLATED, sides,
                                      witness={"omega": omega, "chi": chi}))
    return out


def synthetic_checks(seed: int, random_count: int = 500,
                     random_max_vertices: int = 10) -> list[TheoremVerdict]:
    out = synthetic_family_checks()
    if random_count:
        out.extend(prop_color_random_checks(random_count, seed, random_max_vertices))
    return out
