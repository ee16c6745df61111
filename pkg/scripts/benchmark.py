import argparse
import sys
import time
from pathlib import Path

# Add project root to sys.path
project_root = Path(__file__).resolve().parent.parent
sys.path.append(str(project_root))

from src.core import Settings, configure_logging
from src.features.diagrams import enumerate_diagrams
from src.features.relations import DEFAULT_RELATIONS, RelationConfig, Ring, relation_basis
from src.pipeline import ClassCollapseCheck, VerificationRunner


def _timed(label: str, action):
    start_time = time.time()
    result = action()
    duration = time.time() - start_time
    print(f"{label:<32}{duration:8.2f}s")
    return result, duration


def run_benchmark(max_degree: int = 4, strands: int = 2, parallel: bool = False, workers: int = None):
    settings = Settings.load()
    configure_logging(settings.log_level, settings.log_file)
    config = RelationConfig(diagram_cap=settings.diagram_cap, allow_degree_five=settings.allow_degree_five)

    print("\n" + "=" * 40)
    print("BENCHMARK RESULTS")
    print("=" * 40)
    total = 0.0
    for degree in range(1, max_degree + 1):
        diagrams, seconds = _timed(f"enumerate n={degree} k={strands}", lambda: enumerate_diagrams(degree, strands, cap=config.diagram_cap))
        total += seconds
        basis, seconds = _timed(
            f"basis n={degree} ({len(diagrams)} cols)",
            lambda: relation_basis(degree, strands, DEFAULT_RELATIONS, Ring.RATIONAL, config),
        )
        total += seconds
        print(f"{'':<32}rank {basis.rank}, dimension {basis.dimension}")

    runner = VerificationRunner(max_workers=workers or settings.max_workers, parallel=parallel)
    check = ClassCollapseCheck(max_degree, strands, strands == 2, config)
    context, seconds = _timed(f"class collapse ({'parallel' if parallel else 'sequential'})", lambda: runner.run(check))
    total += seconds
    print(f"Classes:        {len(context.certificates)}")
    print(f"Failures:       {len(context.failures)}")
    print(f"Total Time:     {total:.2f}s")
    print("=" * 40 + "\n")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Benchmark enumeration, basis builds and class checks")
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--strands", type=int, default=2)
    parser.add_argument("--parallel", action="store_true", help="Run class checks in worker processes")
    parser.add_argument("--workers", type=int, help="Number of worker processes")

    args = parser.parse_args()

    run_benchmark(max_degree=args.max_degree, strands=args.strands, parallel=args.parallel, workers=args.workers)
