"""Why the recursion exists: counted work vs the matrix definition.

Computing a trace polynomial from its definition multiplies 2q matrices
(eight polynomial multiplications each); the triangle recursion spends
one polynomial multiplication per Farey triangle on the way down.  Both
sides are verified equal before timing.
"""

from fareyslice.benchmark import run_benchmark

for kind, size in (("left", 200), ("fibonacci", 12), ("fibonacci", 15)):
    r = run_benchmark(kind, size)
    print(f"{kind} family, size {size} (target {r.target}):")
    print(f"  polynomial multiplications: recursion {r.recursion_mults}, "
          f"matrices {r.oracle_mults}  ({r.mult_ratio:.0f}x fewer)")
    print(f"  wall time: recursion {r.recursion_seconds*1e3:.1f} ms, "
          f"matrices {r.oracle_seconds*1e3:.1f} ms  "
          f"({r.speedup:.1f}x speedup)")
