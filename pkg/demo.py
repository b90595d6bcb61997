"""
Quick Demo of the Monochromatic Analysis System
Builds the extremal examples and a random dense graph, then analyzes them
"""

from mono import create_analysis_system
from mono.graphs.constructions import build_antipodal_example, build_cover_t_example, random_dense_coloured
from mono.solvers.koenig_cover import degree_floor


def demo_examples():
    """Run demo on the sharpness constructions"""

    print("\n" + "=" * 70)
    print("🎨 MONOCHROMATIC COMPONENTS - DEMO")
    print("=" * 70)
    print("\nCovers and partitions of dense edge-coloured graphs\n")

    system = create_analysis_system(verbose=True)

    examples = {
        'cover-t example (t=2, n=12): needs 3 parts': build_cover_t_example(12, 2),
        'antipodal example (n=8, r=2): no distinct-colour cover': build_antipodal_example(8, 2),
        'random 2-coloured graph (n=14, delta >= floor for t=2)': random_dense_coloured(14, 2, degree_floor(14, 2), seed=7),
        'random 3-coloured K8': random_dense_coloured(8, 3, 7, seed=3),
    }

    for name, g in examples.items():
        result = system.analyze(g, name)
        print(result.get_summary())

    print("\n" + "=" * 70)
    print("📊 DEMO STATISTICS")
    print("=" * 70)
    for key, value in system.get_statistics().items():
        print(f"{key}: {value}")


def main():
    demo_examples()


if __name__ == "__main__":
    main()
