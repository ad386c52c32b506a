"""Command-line entry point.

Subcommands: ring-info, ideals, graph, verify.  Exit codes form a stable
contract: 0 success, 2 parse/spec error, 3 axiom violation, 4 resource cap,
5 theorem violation.  All stdout output is deterministic for a fixed seed and
corpus; wall-clock timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import load_corpus, run_corpus
from .errors import AxiomViolationError, InvalidSpecError, ResourceLimitError
from .graphs import build_ag, build_zd, export_dot, export_json
from .ideals import Ideal, enumerate_ideals, nilradical, zero_divisor_mask, zr_condition_profile
from .invariants import compute_report
from .rings import build_ring, load_ring_spec

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_AXIOM = 3
EXIT_RESOURCE = 4
EXIT_VIOLATION = 5


def _load_ring(path: str, max_order: int):
    spec = load_ring_spec(path)
    return build_ring(spec, max_order=max_order)


def _fmt_metric(value) -> str:
    if value is None:
        return "undefined"
    if value == float("inf"):
        return "inf"
    return str(value)


def cmd_ring_info(args) -> int:
    ring = _load_ring(args.spec, args.max_order)
    lattice = enumerate_ideals(ring, max_ideals=args.max_ideals)
    profile = zr_condition_profile(ring, lattice)
    nil = nilradical(ring)
    z_size = Ideal(ring, profile.z_mask).size
    print(f"ring: {ring.name}")
    print(f"order: {ring.order}")
    print(f"characteristic: {ring.characteristic}")
    print(f"reduced: {str(nil.size == 1).lower()}")
    print(f"nilradical size: {nil.size}")
    print(f"zero divisors (incl. 0): {z_size}")
    print(f"z profile: zsq_zero={str(profile.zsq_zero).lower()}"
          f" prime_ideal={str(profile.z_is_prime_ideal).lower()}"
          f" two_prime_cover_meet_zero={str(profile.union_two_primes_intersect_zero).lower()}")
    print(f"ideals: {len(lattice.ideals)}")
    print(f"annihilating ideals A(R)*: {len(lattice.annihilating_indices())}")
    print(f"maximal ideals: {len(lattice.maximal_ideal_indices)}")
    print(f"minimal primes: {len(lattice.minimal_prime_indices())}")
    return EXIT_OK


def cmd_ideals(args) -> int:
    ring = _load_ring(args.spec, args.max_order)
    lattice = enumerate_ideals(ring, max_ideals=args.max_ideals)
    print(f"ring: {ring.name}")
    print(f"ideals: {len(lattice.ideals)}")
    for k, ideal in enumerate(lattice.ideals):
        flags = []
        if lattice.is_prime[k]:
            flags.append("prime")
        if lattice.is_minimal_prime[k]:
            flags.append("minimal-prime")
        if lattice.is_annihilating[k]:
            flags.append("annihilating")
        ann = lattice.ideals[lattice.annihilator_index[k]]
        print(f"  {ideal.label}: size={ideal.size} ann={ann.label}"
              + (f" [{', '.join(flags)}]" if flags else ""))
    return EXIT_OK


def cmd_graph(args) -> int:
    ring = _load_ring(args.spec, args.max_order)
    if args.kind == "ag":
        lattice = enumerate_ideals(ring, max_ideals=args.max_ideals)
        g = build_ag(ring, lattice)
    else:
        g = build_zd(ring)
    if args.format == "dot":
        sys.stdout.write(export_dot(g))
        return EXIT_OK
    if args.format == "json":
        sys.stdout.write(export_json(g))
        return EXIT_OK
    report = compute_report(g, cap=args.max_vertices)
    print(f"graph: {args.kind}({ring.name})")
    print(f"vertices: {g.n}")
    print(f"edges: {g.n_edges}")
    print(f"connected: {str(report.connected).lower()}")
    pair = report.diameter_pair
    pair_text = f" (between {g.labels[pair[0]]} and {g.labels[pair[1]]})" if pair else ""
    print(f"diameter: {_fmt_metric(report.diameter)}{pair_text}")
    print(f"girth: {_fmt_metric(report.girth)}")
    print(f"clique number: {report.clique_number}")
    print(f"chromatic number: {report.chromatic_number}")
    print(f"shape: {report.shape.describe()}")
    if report.bipartition is not None:
        a, b = report.bipartition
        print(f"bipartite: parts {len(a)}/{len(b)}")
    else:
        print("bipartite: no")
    if report.s_vertices:
        print(f"s-vertices: {len(report.s_vertices)}")
        for a, (x, b, y) in report.s_witnesses:
            print(f"  {g.labels[a]}  (x={g.labels[x]}, b={g.labels[b]}, y={g.labels[y]})")
    else:
        print("s-vertices: 0")
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = load_corpus(args.corpus)
    report = run_corpus(corpus, jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    print(f"elapsed: {report.elapsed_seconds:.1f}s "
          f"(jobs={args.jobs})", file=sys.stderr)
    return EXIT_VIOLATION if report.n_violated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringbench",
        description="Finite commutative ring workbench: lattices, graphs, invariants, "
                    "and theorem verification over a ring corpus.")
    parser.add_argument("--max-order", type=int, default=4096,
                        help="element-count cap for ring construction")
    parser.add_argument("--max-ideals", type=int, default=20000,
                        help="ideal-count cap per ring")
    parser.add_argument("--max-vertices", type=int, default=600,
                        help="vertex cap for exact clique/coloring search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring-info", help="order, characteristic, Z(R) profile, ideal counts")
    p.add_argument("spec", help="ring spec JSON file")
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("ideals", help="list the full ideal lattice")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("graph", help="build AG(R) or the zero-divisor graph")
    p.add_argument("spec")
    p.add_argument("--kind", choices=("ag", "zd"), default="ag")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("corpus", help='corpus JSON file, or "default" for the shipped corpus')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the randomized synthetic graphs (default: corpus seed)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AxiomViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
