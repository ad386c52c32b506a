"""Corpus definition, parallel runner, and report serialization.

The default corpus is shipped as a JSON spec file (data/default_corpus.json)
and can be regenerated with :func:`default_corpus`.  Reports are serialized
deterministically: verdicts sort by (theorem_id, subject) and wall-clock time
never enters the text/JSON payload, so output is byte-identical across runs
and worker counts.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .errors import AxiomViolationError, InvalidSpecError, ResourceLimitError
from .rings import (ProductSpec, PolyQuotientSpec, RingSpec, StructureSpec, ZmodSpec,
                    build_ring, parse_ring_spec, ring_spec_to_dict, spec_name)
from .theorems import (HOLDS, VACUOUS, VIOLATED, TheoremVerdict, run_ring_checks,
                       synthetic_checks)

DEFAULT_SEED = 0


@dataclass(frozen=True)
class Caps:
    max_order: int = 4096
    max_ideals: int = 20000
    max_graph_vertices: int = 600


@dataclass(frozen=True)
class RandomGraphConfig:
    count: int = 500
    max_vertices: int = 10


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    rings: tuple[RingSpec, ...]
    synthetic_families: bool = True
    random_graphs: RandomGraphConfig | None = RandomGraphConfig()
    caps: Caps = Caps()
    seed: int = DEFAULT_SEED


# --------------------------------------------------------------------------
# the default corpus


def _product_factor_pool() -> list[RingSpec]:
    return [
        ZmodSpec(2), ZmodSpec(3), ZmodSpec(4), ZmodSpec(5), ZmodSpec(8), ZmodSpec(9),
        PolyQuotientSpec(2, (1, 1, 1), name="F4"),
        PolyQuotientSpec(2, (0, 0, 1), name="Z2[x]/(x^2)"),
        PolyQuotientSpec(3, (0, 0, 1), name="Z3[x]/(x^2)"),
    ]


def _spec_order(spec: RingSpec) -> int:
    if isinstance(spec, ZmodSpec):
        return spec.n
    if isinstance(spec, PolyQuotientSpec):
        return spec.base_mod ** (len(spec.modulus) - 1)
    if isinstance(spec, ProductSpec):
        out = 1
        for f in spec.factors:
            out *= _spec_order(f)
        return out
    if isinstance(spec, StructureSpec):
        out = 1
        for m in spec.orders:
            out *= m
        return out
    raise TypeError(spec)


def weak_perfect_example_spec() -> StructureSpec:
    """The 32-element ring on basis {1, x, y, z} with x^2 = y^2 = yz = 2 and
    z^2 = xy = xz = 0, additive orders (4, 2, 2, 2)."""
    e = lambda i: tuple(1 if j == i else 0 for j in range(4))
    two = (2, 0, 0, 0)
    zero = (0, 0, 0, 0)
    table = (
        (e(0), e(1), e(2), e(3)),
        (e(1), two, zero, zero),
        (e(2), zero, two, two),
        (e(3), zero, two, zero),
    )
    return StructureSpec(orders=(4, 2, 2, 2), one=0, table=table, name="weak2")


def nilpotent_plane_spec() -> StructureSpec:
    """Order-8 local ring on basis {1, x, y} with x^2 = y^2 = xy = 0."""
    zero = (0, 0, 0)
    table = (
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 1, 0), zero, zero),
        ((0, 0, 1), zero, zero),
    )
    return StructureSpec(orders=(2, 2, 2), one=0, table=table, name="M2zero8")


def default_corpus(max_product_order: int = 512) -> CorpusSpec:
    """All Z_n (n <= 100), prime powers p^k (p in {2,3,5}, k <= 4), products of
    2-3 pool factors up to the order cap, and the two structure rings."""
    specs: list[RingSpec] = []
    seen: set[str] = set()

    def push(spec: RingSpec):
        name = spec_name(spec)
        if name not in seen:
            seen.add(name)
            specs.append(spec)

    for n in range(2, 101):
        push(ZmodSpec(n))
    for p in (2, 3, 5):
        for k in range(1, 5):
            push(ZmodSpec(p ** k))

    pool = _product_factor_pool()
    for pair in itertools.combinations_with_replacement(pool, 2):
        spec = ProductSpec(pair)
        if _spec_order(spec) <= max_product_order:
            push(spec)
    for triple in itertools.combinations_with_replacement(pool, 3):
        spec = ProductSpec(triple)
        if _spec_order(spec) <= max_product_order:
            push(spec)

    push(weak_perfect_example_spec())
    push(nilpotent_plane_spec())
    return CorpusSpec(name="default", rings=tuple(specs))


# --------------------------------------------------------------------------
# corpus file I/O


def corpus_to_dict(corpus: CorpusSpec) -> dict:
    doc = {
        "name": corpus.name,
        "seed": corpus.seed,
        "caps": {"max_order": corpus.caps.max_order,
                 "max_ideals": corpus.caps.max_ideals,
                 "max_graph_vertices": corpus.caps.max_graph_vertices},
        "synthetic_families": corpus.synthetic_families,
        "rings": [ring_spec_to_dict(s) for s in corpus.rings],
    }
    if corpus.random_graphs is not None:
        doc["random_graphs"] = {"count": corpus.random_graphs.count,
                                "max_vertices": corpus.random_graphs.max_vertices}
    return doc


def parse_corpus(doc: dict) -> CorpusSpec:
    if not isinstance(doc, dict):
        raise InvalidSpecError("corpus spec must be an object")
    allowed = {"name", "seed", "caps", "synthetic_families", "rings", "random_graphs"}
    unknown = set(doc) - allowed
    if unknown:
        raise InvalidSpecError(f"corpus spec has unknown fields: {sorted(unknown)}")
    name = doc.get("name", "corpus")
    seed = doc.get("seed", DEFAULT_SEED)
    if not isinstance(seed, int):
        raise InvalidSpecError("corpus seed must be an integer")
    caps_doc = doc.get("caps", {})
    if not isinstance(caps_doc, dict) or set(caps_doc) - {"max_order", "max_ideals", "max_graph_vertices"}:
        raise InvalidSpecError("corpus caps must contain only max_order/max_ideals/max_graph_vertices")
    caps = Caps(max_order=caps_doc.get("max_order", 4096),
                max_ideals=caps_doc.get("max_ideals", 20000),
                max_graph_vertices=caps_doc.get("max_graph_vertices", 600))
    if min(caps.max_order, caps.max_ideals, caps.max_graph_vertices) < 1:
        raise InvalidSpecError("corpus caps must be positive")
    rings_doc = doc.get("rings", [])
    if not isinstance(rings_doc, list):
        raise InvalidSpecError("corpus rings must be a list")
    rings = tuple(parse_ring_spec(r) for r in rings_doc)
    rand = None
    if "random_graphs" in doc:
        rd = doc["random_graphs"]
        if not isinstance(rd, dict) or set(rd) - {"count", "max_vertices"}:
            raise InvalidSpecError("random_graphs must contain only count/max_vertices")
        rand = RandomGraphConfig(count=rd.get("count", 500),
                                 max_vertices=rd.get("max_vertices", 10))
    return CorpusSpec(name=name, rings=rings,
                      synthetic_families=bool(doc.get("synthetic_families", True)),
                      random_graphs=rand, caps=caps, seed=seed)


def load_corpus(path: str) -> CorpusSpec:
    """Load a corpus spec file; the literal path "default" loads the shipped one."""
    if path == "default":
        text = resources.files("ringbench").joinpath("data/default_corpus.json").read_text("utf-8")
        return parse_corpus(json.loads(text))
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidSpecError(f"cannot read corpus {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidSpecError(
            f"corpus {path} is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    return parse_corpus(doc)


# --------------------------------------------------------------------------
# running


@dataclass(frozen=True)
class RingFailure:
    subject: str
    kind: str
    message: str


@dataclass
class CorpusReport:
    corpus_name: str
    n_rings: int
    n_graph_subjects: int
    verdicts: list[TheoremVerdict]
    failures: list[RingFailure]
    elapsed_seconds: float = 0.0  # informational only; never serialized

    @property
    def n_violated(self) -> int:
        return sum(1 for v in self.verdicts if v.verdict == VIOLATED)

    def counts_by_theorem(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for v in self.verdicts:
            slot = out.setdefault(v.theorem_id, {HOLDS: 0, VACUOUS: 0, VIOLATED: 0})
            slot[v.verdict] += 1
        return dict(sorted(out.items()))

    def coverage(self) -> dict[str, dict[str, int]]:
        """For the named equivalence checks: HOLDS verdicts split by the shared
        truth value of their sides (non-vacuous coverage certification)."""
        named = {
            "complete_equivalence": ("ag_complete", "zd_complete", "zsq_zero"),
            "diam2_equivalence": ("ag_diam_2", "zd_diam_2", "z_condition"),
            "bipartite_reduced": ("z_two_primes", "ag_complete_bipartite"),
            "girthinf_reduced": ("nonempty_girth_inf", "universal_vertex", "star"),
        }
        out = {}
        for tid, side_names in named.items():
            true_sides = false_sides = 0
            for v in self.verdicts:
                if v.theorem_id != tid or v.verdict != HOLDS:
                    continue
                values = {v.side(s) for s in side_names}
                if values == {True}:
                    true_sides += 1
                elif values == {False}:
                    false_sides += 1
            out[tid] = {"sides_true": true_sides, "sides_false": false_sides}
        return out

    def to_text(self) -> str:
        lines = [f"corpus: {self.corpus_name}",
                 f"rings: {self.n_rings}",
                 f"graph subjects: {self.n_graph_subjects}",
                 f"checks: {len(self.verdicts)}"]
        totals = {HOLDS: 0, VACUOUS: 0, VIOLATED: 0}
        for v in self.verdicts:
            totals[v.verdict] += 1
        lines.append(f"verdicts: HOLDS={totals[HOLDS]} VACUOUS={totals[VACUOUS]} "
                     f"VIOLATED={totals[VIOLATED]}")
        lines.append("per-theorem:")
        for tid, counts in self.counts_by_theorem().items():
            lines.append(f"  {tid:28s} HOLDS={counts[HOLDS]:<5d} VACUOUS={counts[VACUOUS]:<5d} "
                         f"VIOLATED={counts[VIOLATED]}")
        lines.append("coverage (HOLDS with all sides true / all sides false):")
        for tid, cov in sorted(self.coverage().items()):
            lines.append(f"  {tid:28s} true={cov['sides_true']:<5d} false={cov['sides_false']}")
        if self.failures:
            lines.append("per-ring failures:")
            for f in sorted(self.failures, key=lambda f: f.subject):
                lines.append(f"  {f.subject}: [{f.kind}] {f.message}")
        else:
            lines.append("per-ring failures: none")
        violated = [v for v in self.verdicts if v.verdict == VIOLATED]
        if violated:
            lines.append("violations:")
            for v in violated:
                lines.append(f"  {v.theorem_id} on {v.subject}: sides={dict(v.sides)} "
                             f"witness={v.witness}")
        else:
            lines.append("violations: none")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "corpus": self.corpus_name,
            "rings": self.n_rings,
            "graph_subjects": self.n_graph_subjects,
            "violated": self.n_violated,
            "per_theorem": self.counts_by_theorem(),
            "coverage": self.coverage(),
            "failures": [{"subject": f.subject, "kind": f.kind, "message": f.message}
                         for f in sorted(self.failures, key=lambda f: f.subject)],
            "verdicts": [
                {"theorem": v.theorem_id, "subject": v.subject, "verdict": v.verdict,
                 "sides": {k: (val if not isinstance(val, float) else str(val))
                           for k, val in v.sides},
                 "witness": v.witness, "note": v.note}
                for v in self.verdicts
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"


def _ring_task(args):
    spec_doc, max_order, max_ideals, search_cap = args
    spec = parse_ring_spec(spec_doc)
    subject = spec_name(spec)
    try:
        ring = build_ring(spec, max_order=max_order)
        return run_ring_checks(ring, max_ideals=max_ideals, search_cap=search_cap), None
    except InvalidSpecError as exc:
        return [], RingFailure(subject, "invalid-spec", str(exc))
    except AxiomViolationError as exc:
        return [], RingFailure(subject, "axiom-violation", str(exc))
    except ResourceLimitError as exc:
        return [], RingFailure(subject, "resource", str(exc))


def run_corpus(corpus: CorpusSpec, jobs: int = 1, seed: int | None = None) -> CorpusReport:
    """Build every ring, run every applicable check, aggregate deterministically.

    Per-ring build or resource errors are recorded and do not abort the run.
    The report's verdicts are sorted by (theorem_id, subject), so the result
    is independent of the worker count.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    started = time.monotonic()
    effective_seed = corpus.seed if seed is None else seed

    tasks = [(ring_spec_to_dict(s), corpus.caps.max_order, corpus.caps.max_ideals,
              corpus.caps.max_graph_vertices) for s in corpus.rings]
    verdicts: list[TheoremVerdict] = []
    failures: list[RingFailure] = []
    if jobs == 1:
        results = map(_ring_task, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_ring_task, tasks, chunksize=8)
    for vs, failure in results:
        verdicts.extend(vs)
        if failure is not None:
            failures.append(failure)
    if jobs != 1:
        pool.shutdown()

    n_graph_subjects = 0
    if corpus.synthetic_families or corpus.random_graphs is not None:
        rand_count = corpus.random_graphs.count if corpus.random_graphs else 0
        rand_max = corpus.random_graphs.max_vertices if corpus.random_graphs else 10
        synth = synthetic_checks(effective_seed, random_count=rand_count,
                                 random_max_vertices=rand_max)
        if not corpus.synthetic_families:
            synth = [v for v in synth if v.theorem_id == "prop_color_random"]
        verdicts.extend(synth)
        n_graph_subjects = len({v.subject for v in synth})

    verdicts.sort(key=lambda v: v.sort_key)
    return CorpusReport(
        corpus_name=corpus.name,
        n_rings=len(corpus.rings),
        n_graph_subjects=n_graph_subjects,
        verdicts=verdicts,
        failures=failures,
        elapsed_seconds=time.monotonic() - started,
    )
