"""Compare the greedy decomposition length with the fewest elementary vectors possible."""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from elemvec import oracle
from elemvec.scone import conformal_decompose, enumerate_evs


@dataclass
class GapConfig:
    seed: int = 1
    instances: int = 60
    cols: int = 6
    rows: int = 2
    samples: int = 3


def main():
    defaults = GapConfig()
    parser = argparse.ArgumentParser(description=__doc__)
    for name, value in vars(defaults).items():
        parser.add_argument(f"--{name}", type=type(value), default=value)
    cfg = GapConfig(**vars(parser.parse_args()))
    rng = random.Random(cfg.seed)
    gaps = Counter()
    for _ in range(cfg.instances):
        K = oracle.random_scone(rng, cfg.cols, cfg.rows)
        evs = enumerate_evs(K)
        for _ in range(cfg.samples):
            x = oracle.random_conic_combination(rng, evs, K.ncols, max_terms=4)
            if not any(x):
                continue
            greedy = len(conformal_decompose(K, x).terms)
            best = oracle.min_conformal_size(K, x)
            assert best is not None and best <= greedy
            gaps[greedy - best] += 1
    print(cfg)
    for gap, count in sorted(gaps.items()):
        print(f"greedy - minimum = {gap}: {count}")


if __name__ == "__main__":
    main()
