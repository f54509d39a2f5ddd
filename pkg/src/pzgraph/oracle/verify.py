"""Cross-check the closed forms against the brute-force oracle, pair by pair.

A report is a plain dict so it can be written as one JSON line.  Every check
is a boolean under ``checks``; ``ok`` is their conjunction.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Iterable, Iterator

from ..core import ProjPoint, is_distant, point
from ..matrices import (
    cf_expand,
    eval_word,
    has_square_two_pattern,
    single_matrix_class,
    reduce_word,
    shortest_path_matrices,
    standard_basis,
    standard_word,
)
from ..paths import distance, is_unique_shortest, standard_path
from ..transition import klein_graph, transition
from . import bfs_distance, default_bound, geodesic_dag


def _count(dag, x, y) -> int:
    memo = {x: 1}
    stack = [y]
    while stack:  # iterative post-order, geodesics can be long
        v = stack[-1]
        pending = [w for w in dag[v] if w not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if v not in memo:
            memo[v] = sum(memo[w] for w in dag[v])
    return memo[y]


def verify_pair(x, y, M: int | None = None) -> dict:
    x, y = point(x), point(y)
    if M is None:
        M = default_bound(x, y)
    report = {"x": str(x), "y": str(y), "bound": M}
    if x == y or is_distant(x, y):
        d = 0 if x == y else 1
        bfs = bfs_distance(x, y, M)
        report.update(distance=d, bfs_distance=bfs, geodesics=1)
        report["checks"] = {"distance": bfs == d}
        report["ok"] = bfs == d
        return report

    td = transition(x, y)
    d = distance(x, y)
    bfs = bfs_distance(x, y, M)
    bfs2 = bfs_distance(x, y, 2 * M)
    dag = geodesic_dag(x, y, M)
    count = _count(dag, x, y)
    unique = is_unique_shortest(td)
    klein = set(klein_graph(td).vertices)

    word = standard_word(x, y, td)
    reduced = reduce_word(word)
    mats = shortest_path_matrices(x, y)
    cf = cf_expand(*standard_basis(x, y, td).coords)

    checks = {
        "distance": d == bfs,
        "bound_stable": bfs == bfs2,
        "uniqueness": unique == (count == 1),
        "klein_contains_geodesics": set(dag) <= klein,
        "standard_word_length": len(word) == len(standard_path(td)),
        "reduced_word_length": len(reduced) == bfs,
        "no_square_two": not has_square_two_pattern(reduced),
        "word_value": eval_word(reduced) == eval_word(word),
        "matrix_count": (len(mats) == 1) == single_matrix_class(cf),
        "matrix_multiplicity": len(mats) == 1 or count >= 2,
    }
    report.update(
        distance=d,
        bfs_distance=bfs,
        geodesics=count,
        unique=unique,
        word_length=len(reduced),
        matrices=len(mats),
        checks=checks,
        ok=all(checks.values()),
    )
    return report


def box_corpus(C: int) -> list[tuple[ProjPoint, ProjPoint]]:
    """``x = 1:0`` against every canonical point with both coordinates in ``[-C, C]``."""
    x = ProjPoint(1, 0)
    out = []
    for a in range(-C, C + 1):
        for b in range(0, C + 1):
            if gcd(a, b) == 1 and (b > 0 or a == 1):
                out.append((x, ProjPoint(a, b)))
    return out


def random_corpus(n: int, R: int, seed: int = 0) -> list[tuple[ProjPoint, ProjPoint]]:
    """``n`` pairs of distinct canonical points with coordinates in ``[-R, R]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a, b, c, d = (rng.randint(-R, R) for _ in range(4))
        if gcd(a, b) != 1 or gcd(c, d) != 1:
            continue
        x, y = point((a, b)), point((c, d))
        if x != y:
            out.append((x, y))
    return out


def _run(args):
    x, y, M = args
    return verify_pair(x, y, M)


def sweep(pairs: Iterable, M: int | None = None, workers: int = 1) -> Iterator[dict]:
    """Reports in input order; ``workers > 1`` spreads pairs over processes."""
    jobs = [(x, y, M) for x, y in pairs]
    if workers <= 1:
        yield from map(_run, jobs)
        return
    with ProcessPoolExecutor(workers) as pool:
        yield from pool.map(_run, jobs, chunksize=16)


def summarize(reports: Iterable[dict]) -> dict:
    total = failed = 0
    failures: dict[str, int] = {}
    for r in reports:
        total += 1
        if not r["ok"]:
            failed += 1
            for name, good in r["checks"].items():
                if not good:
                    failures[name] = failures.get(name, 0) + 1
    return {"summary": True, "pairs": total, "disagreements": failed, "by_check": failures}


def write_jsonl(reports: Iterable[dict], stream) -> dict:
    kept = []
    for r in reports:
        stream.write(json.dumps(r) + "\n")
        kept.append(r)
    summary = summarize(kept)
    stream.write(json.dumps(summary) + "\n")
    return summary
