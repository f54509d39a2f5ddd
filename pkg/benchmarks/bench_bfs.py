"""Time the compiled BFS kernel against the pure-Python one.

    python3 benchmarks/bench_bfs.py [--sizes 32 64 128] [--repeat 3]
"""
import argparse
import time

from pzgraph.oracle import _bfs_py

try:
    from pzgraph.oracle import _bfs_c
except ImportError:
    _bfs_c = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'M':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for M in args.sizes:
        py = best_of(lambda: _bfs_py.bfs_field(1, 0, M), args.repeat)
        if _bfs_c is None:
            print(f"{M:>6} {py:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        ref = _bfs_py.bfs_field(1, 0, M)
        assert list(_bfs_c.bfs_field(1, 0, M)) == ref
        cy = best_of(lambda: _bfs_c.bfs_field(1, 0, M), args.repeat)
        print(f"{M:>6} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
