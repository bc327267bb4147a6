"""
Benchmarking over seeds
=======================

The harness runs one algorithm over a set of instances with consecutive
seeds, re-verifies every cover, and aggregates best/mean cover size, the
mean first-attainment iteration, and a success rate. Automata runs also
emit per-iteration entropy traces for plotting.
"""
from dataclasses import replace
from pathlib import Path

from lacover import bench_default_config, run_benchmark, write_csv, write_trace

instances = sorted((Path(__file__).resolve().parent.parent / "instances").glob("*.col"))
print("instances:", [p.name for p in instances])

# short iteration budget to keep the demo quick; drop max_iterations for
# the full protocol (10 seeds x 1000 iterations)
config = replace(bench_default_config(), max_iterations=60)

rows, traces, errors = run_benchmark(instances, config, seeds=5, algorithm="dla")
assert not errors
print()
print(write_csv(rows))

print("trace preview (first run, every 15th iteration):")
first = traces[0]
print("iteration  best  entropy")
for iteration, best, entropy in first.points[::15]:
    print(f"{iteration:9d}  {best:4d}  {entropy:.4f}")

# the same harness runs the baselines; no traces in that case
rows, traces, _ = run_benchmark(instances, config, seeds=5, algorithm="greedy")
assert traces == []
print()
print(write_csv(rows))

# serialize traces for external plotting
text = write_trace(run_benchmark(instances[:1], config, seeds=2, algorithm="binary")[1])
print("trace CSV starts with:")
print("\n".join(text.splitlines()[:4]))
