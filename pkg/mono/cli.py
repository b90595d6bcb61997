"""
Command Line Interface
`mono` entry point: analysis, covers, partitions, constructions and the
verification suites
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import __version__
from .analysis_system import COVER_METHODS, DISTINCT_METHODS, PARTITION_METHODS, create_analysis_system
from .config import Settings, get_settings
from .graphs.constructions import ConstructionSpec, build
from .graphs.graph_core import ColourCountError, GraphError, load_graph, save_graph
from .harness.report import emit_report, load_report
from .harness.suites import SUITE_IDS, SuiteParams, SuiteRunner, replay_certificate
from .harness.verifier import CertificateVerifier
from .solvers.proof_guided import CLAIM_IDS, PreconditionError, claim_predicate_probe

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mono",
        description="Monochromatic covers and partitions of edge-coloured graphs",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--quiet', '-q', action='store_true', help='Suppress verbose output')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', help='n, r, delta, alpha and component counts')
    analyze.add_argument('graph', help='Graph file in the "n r" + "u v c" text format')
    analyze.add_argument('--json', help='Write the full analysis as JSON')

    cover = sub.add_parser('cover', help='Monochromatic cover')
    cover.add_argument('graph')
    cover.add_argument('--method', choices=COVER_METHODS, default='koenig')
    cover.add_argument('--json', help='Write the cover as JSON')

    partition = sub.add_parser('partition', help='Monochromatic partition')
    partition.add_argument('graph')
    partition.add_argument('--method', choices=PARTITION_METHODS, default='exact')
    partition.add_argument('--seed', type=int, default=None)
    partition.add_argument('--budget', type=int, default=None, help='Retry budget of the heuristic')
    partition.add_argument('--json', help='Write the partition as JSON')

    distinct = sub.add_parser('distinct-cover', help='Cover by components of distinct colours')
    distinct.add_argument('graph')
    distinct.add_argument('--method', choices=DISTINCT_METHODS, default='exact')
    distinct.add_argument('--json', help='Write the cover as JSON')

    construct = sub.add_parser('construct', help='Generate an extremal or random graph')
    construct.add_argument('kind', choices=['cover-t', 'antipodal', 'random'])
    construct.add_argument('--n', type=int, required=True)
    construct.add_argument('--t', type=int)
    construct.add_argument('--r', type=int)
    construct.add_argument('--min-degree', type=int)
    construct.add_argument('--seed', type=int, default=0)
    construct.add_argument('--clique-colour', type=int, default=0)
    construct.add_argument('--deletion-rate', type=float, default=1.0)
    construct.add_argument('-o', '--output', required=True, help='Output graph file')

    verify = sub.add_parser('verify', help='Run a verification suite (or "all")')
    verify.add_argument('suite', choices=list(SUITE_IDS) + ['all'])
    verify.add_argument('--n-max', type=int)
    verify.add_argument('--samples', type=int)
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--workers', type=int, default=None)
    verify.add_argument('--json', help='Write the JSON report')
    verify.add_argument('--csv', help='Write the per-suite CSV summary')

    probe = sub.add_parser('probe', help='Evaluate intermediate claims on a graph')
    probe.add_argument('graph')
    probe.add_argument('--claim', choices=list(CLAIM_IDS) + ['all'], default='all')

    replay = sub.add_parser('replay', help='Replay the certificates of a JSON report')
    replay.add_argument('report')

    return parser


def _print_certificate(label: str, certificate, check) -> None:
    print(f"{label} ({certificate.method.value}, {certificate.size} parts):")
    for part in certificate.parts:
        print(f"  - {part.describe()}")
    print(check.get_verification_report())


def _write_json(path: Optional[str], payload: Dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2), encoding="utf-8")
        print(f"✅ Wrote {path}")


# ========== Commands ==========

def _cmd_analyze(args, settings: Settings) -> int:
    system = create_analysis_system(verbose=not args.quiet, settings=settings)
    result = system.analyze(load_graph(args.graph), name=args.graph)
    print(result.get_summary())
    _write_json(args.json, result.to_dict())
    return EXIT_OK if result.all_valid else EXIT_FAILURE


def _cmd_cover(args, settings: Settings) -> int:
    g = load_graph(args.graph)
    cover = create_analysis_system(verbose=False, settings=settings).cover(g, args.method)
    check = CertificateVerifier().check_cover(g, cover)
    _print_certificate("Cover", cover, check)
    _write_json(args.json, cover.to_dict())
    return EXIT_OK if check.is_valid else EXIT_FAILURE


def _cmd_partition(args, settings: Settings) -> int:
    g = load_graph(args.graph)
    system = create_analysis_system(verbose=False, settings=settings)
    partition = system.partition(g, args.method, seed=args.seed, budget=args.budget)
    if partition is None:
        print("⚠️  heuristic exhausted its retry budget; no partition found")
        return EXIT_FAILURE
    check = CertificateVerifier().check_partition(g, partition)
    _print_certificate("Partition", partition, check)
    _write_json(args.json, partition.to_dict())
    return EXIT_OK if check.is_valid else EXIT_FAILURE


def _cmd_distinct_cover(args, settings: Settings) -> int:
    g = load_graph(args.graph)
    cover = create_analysis_system(verbose=False, settings=settings).distinct_cover(g, args.method)
    if cover is None:
        print("❌ no distinct-colour cover")
        return EXIT_FAILURE
    check = CertificateVerifier().check_cover(g, cover, distinct=True)
    _print_certificate("Distinct-colour cover", cover, check)
    _write_json(args.json, cover.to_dict())
    return EXIT_OK if check.is_valid else EXIT_FAILURE


def _cmd_construct(args, settings: Settings) -> int:
    kind = 'random-dense' if args.kind == 'random' else args.kind
    spec = ConstructionSpec(
        kind=kind, n=args.n, t=args.t, r=args.r, min_degree=args.min_degree, seed=args.seed,
        clique_colour=args.clique_colour, deletion_rate=args.deletion_rate,
    )
    g = build(spec)
    save_graph(g, args.output)
    if not args.quiet:
        print(f"✅ Wrote {g!r} to {args.output}")
    return EXIT_OK


def _cmd_verify(args, settings: Settings) -> int:
    params = SuiteParams(
        n_max=args.n_max,
        samples=args.samples,
        seed=settings.master_seed if args.seed is None else args.seed,
        workers=settings.workers if args.workers is None else args.workers,
    )
    runner = SuiteRunner(verbose=not args.quiet)
    suite_ids = runner.list_suites() if args.suite == 'all' else [args.suite]
    results = [runner.run(suite_id, params) for suite_id in suite_ids]

    config = {'suites': suite_ids, **params.model_dump(exclude={'limits'})}
    if args.json:
        emit_report(results, args.json, "json", config)
    if args.csv:
        emit_report(results, args.csv, "csv-summary", config)

    for result in results:
        print(result.get_summary())
    return EXIT_OK if all(result.passed for result in results) else EXIT_FAILURE


def _cmd_probe(args, settings: Settings) -> int:
    g = load_graph(args.graph)
    claim_ids = CLAIM_IDS if args.claim == 'all' else (args.claim,)
    violated = False
    for claim_id in claim_ids:
        try:
            report = claim_predicate_probe(g, claim_id, settings.search_limits())
        except (PreconditionError, ColourCountError) as e:
            print(f"➖ {claim_id}: hypotheses not met ({e})")
            continue
        marker = "✅" if report.holds else ("⚠️ " if report.annotation else "❌")
        print(f"{marker} {claim_id}: {'holds' if report.holds else 'violated'} {report.witness}")
        violated = violated or not report.holds
    return EXIT_FAILURE if violated else EXIT_OK


def _cmd_replay(args, settings: Settings) -> int:
    report = load_report(args.report)
    faithful = True
    for suite in report.suites:
        for certificate in suite.certificates:
            refails = replay_certificate(certificate)
            faithful = faithful and refails
            marker = "✅" if refails else "❌"
            print(f"{marker} {suite.id}: {certificate.predicate} {'re-fails' if refails else 'no longer fails'}")
    return EXIT_OK if faithful else EXIT_FAILURE


COMMANDS = {
    'analyze': _cmd_analyze,
    'cover': _cmd_cover,
    'partition': _cmd_partition,
    'distinct-cover': _cmd_distinct_cover,
    'construct': _cmd_construct,
    'verify': _cmd_verify,
    'probe': _cmd_probe,
    'replay': _cmd_replay,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Exit codes: 0 success, 1 a check or suite failed, 2 usage or input error"""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = get_settings()
        return COMMANDS[args.command](args, settings)
    except (GraphError, ValueError, OSError) as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
