"""
Process a directory of graph files and generate an analysis table
Reads every *.txt graph, analyzes it with the Monochromatic Analysis System,
and writes a CSV table plus a text summary
"""

import sys
from datetime import datetime
from pathlib import Path

from mono import create_analysis_system
from mono.graphs.graph_core import GraphError, load_graph

# Fix Windows console encoding for emojis
if sys.platform == 'win32':
    sys.stdout.reconfigure(encoding='utf-8')


def process_graph_dir(input_dir: str, output_file: str, verbose: bool = True) -> int:
    """
    Analyze every graph file in input_dir

    Args:
        input_dir: Directory holding graph files in the "n r" + "u v c" format
        output_file: Path of the CSV table to write
        verbose: Whether to print per-graph progress

    Returns:
        Number of graphs whose certificates did not all verify
    """
    print(f"\n{'='*70}")
    print("🚀 MONOCHROMATIC ANALYSIS - BATCH PROCESSOR")
    print(f"{'='*70}\n")
    print(f"Input: {input_dir}")
    print(f"Output: {output_file}")
    print(f"{'='*70}\n")

    system = create_analysis_system(verbose=verbose)

    graphs = {}
    for path in sorted(Path(input_dir).glob("*.txt")):
        try:
            graphs[path.name] = load_graph(path)
        except GraphError as e:
            print(f"❌ Skipping {path.name}: {e}")

    print(f"📚 Loaded {len(graphs)} graphs\n")

    start_time = datetime.now()
    results = system.analyze_batch(graphs)
    elapsed = (datetime.now() - start_time).total_seconds()

    system.export_results(output_file)

    summary_file = Path(output_file).with_name(Path(output_file).stem + "_summary.txt")
    with open(summary_file, 'w', encoding='utf-8') as f:
        for result in results:
            f.write(result.get_summary())
            f.write("\n")
    print(f"✅ Wrote summaries to: {summary_file}")

    stats = system.get_statistics()
    invalid = len(results) - stats.get('all_valid', 0)
    print(f"\n{'='*70}")
    print("📊 PROCESSING COMPLETE")
    print(f"{'='*70}")
    print(f"Graphs: {len(results)}")
    print(f"All certificates valid: {stats.get('all_valid', 0)}")
    print(f"With distinct-colour cover: {stats.get('with_distinct_cover', 0)}")
    print(f"Total time: {elapsed:.1f}s")
    print(f"{'='*70}\n")
    return invalid


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description='Analyze a directory of graph files')
    parser.add_argument('--input', '-i', default='graphs',
                        help='Directory of graph files')
    parser.add_argument('--output', '-o', default='analysis.csv',
                        help='Output CSV table')
    parser.add_argument('--quiet', '-q', action='store_true',
                        help='Suppress verbose output')

    args = parser.parse_args()

    if not Path(args.input).is_dir():
        print(f"❌ Error: Input directory not found: {args.input}")
        sys.exit(2)

    sys.exit(1 if process_graph_dir(args.input, args.output, verbose=not args.quiet) else 0)
