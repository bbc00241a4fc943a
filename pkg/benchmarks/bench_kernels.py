"""Compare the compiled and pure-Python kernel backends.

Times the three kernel entry points on cover-ideal workloads of growing
size and prints one table row per case. Run from a checkout with the
package installed:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from coverlab import cover_ideal, cycle, two_cliques, whisker
from coverlab.kernels import pure

try:
    from coverlab.kernels import _fastcore as fast
except ImportError:
    fast = None


def _time(func, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    c12 = cover_ideal(cycle(13))
    tc = cover_ideal(two_cliques(5, 6))
    wh = cover_ideal(whisker(cycle(6)))
    yield "square, 13-cycle", "product", list(c12.gens), list(c12.gens)
    yield "square, glued 5+6 cliques", "product", list(tc.gens), list(tc.gens)
    yield "square, whiskered 6-cycle", "product", list(wh.gens), list(wh.gens)
    sq = pure.product_minimalize(list(tc.gens), list(tc.gens))
    yield "cube step, glued cliques", "product", sq, list(tc.gens)
    yield "intersect, whiskered squares", "lcm", sq, sq
    big = pure.product_minimalize(list(wh.gens), list(wh.gens))
    yield "minimal filter, 4th power pool", "minimalize", [
        tuple(a + b for a, b in zip(u, v)) for u in big for v in big[:40]
    ], None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if fast is None:
        print("compiled backend not available; showing pure-Python times only")

    header = f"{'case':34} {'op':10} {'pure (s)':>10}"
    if fast is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, op, a, b in workloads():
        if op == "product":
            t_pure = _time(pure.product_minimalize, a, b, repeat=args.repeat)
            t_fast = (
                _time(fast.product_minimalize, a, b, repeat=args.repeat)
                if fast
                else None
            )
        elif op == "lcm":
            t_pure = _time(pure.lcm_minimalize, a, b, repeat=args.repeat)
            t_fast = (
                _time(fast.lcm_minimalize, a, b, repeat=args.repeat) if fast else None
            )
        else:
            t_pure = _time(pure.minimalize, a, repeat=args.repeat)
            t_fast = _time(fast.minimalize, a, repeat=args.repeat) if fast else None
        line = f"{name:34} {op:10} {t_pure:10.4f}"
        if t_fast is not None:
            line += f" {t_fast:13.4f} {t_pure / t_fast:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
