"""Classify a seeded corpus of random connected regular multigraphs and
report verdict counts, certificate checks and timings.

Usage:
    python scripts/run_corpus.py [--seed 0] [--count 500] [--max-n 200] [--max-degree 8]
"""

import argparse
import random
import time
from collections import Counter

from regschreier.corpus import random_regular, random_unmatchable
from regschreier.schreier import classify, verify_classification


def sample(rng, max_n, max_degree):
    if rng.random() < 0.2:
        return random_unmatchable(rng.choice([3, 5, 7]), rng.choice([3, 5, 9]), rng)
    r = rng.randint(1, max_degree)
    hp = rng.choice([0.0, 0.0, 0.05, 0.2])
    n = rng.randint(1, max_n)
    if hp == 0 and (n * r) % 2:
        n += 1
    if r == 1 and hp == 0:
        n = 2
    if r <= 2 and hp > 0:
        n = min(n, r + 1)
    return random_regular(n, r, rng, half_prob=hp)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--max-degree", type=int, default=8)
    args = p.parse_args()

    rng = random.Random(args.seed)
    verdicts = Counter()
    failures = 0
    slowest = 0.0
    t_all = time.perf_counter()
    for _ in range(args.count):
        g = sample(rng, args.max_n, args.max_degree)
        t0 = time.perf_counter()
        res = classify(g)
        slowest = max(slowest, time.perf_counter() - t0)
        verdicts[res.verdict] += 1
        if verify_classification(g, res):
            failures += 1
    print(f"seed {args.seed}: {args.count} graphs in {time.perf_counter() - t_all:.1f}s")
    for k in ("direct", "not-schreier", "cover-only"):
        print(f"  {k:13s} {verdicts[k]}")
    print(f"  certificate failures: {failures}")
    print(f"  slowest classify: {slowest * 1000:.1f} ms")


if __name__ == "__main__":
    main()
