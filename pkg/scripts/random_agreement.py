"""Cross-check the circuit enumeration and the special-vector predicates against brute force."""
import argparse
import random
import time
from dataclasses import dataclass

from elemvec import oracle
from elemvec.scone import enumerate_evs, is_elementary, is_swnd


@dataclass
class AgreementConfig:
    seed: int = 0
    instances: int = 100
    min_cols: int = 2
    max_cols: int = 6
    max_rows: int = 4
    density: float = 0.6
    nonneg_prob: float = 0.5


def run(cfg: AgreementConfig) -> dict:
    rng = random.Random(cfg.seed)
    stats = {"instances": 0, "evs": 0, "ev_mismatch": 0, "vectors": 0, "predicate_mismatch": 0}
    t0 = time.perf_counter()
    for _ in range(cfg.instances):
        K = oracle.random_scone(rng, rng.randint(cfg.min_cols, cfg.max_cols), rng.randint(1, cfg.max_rows), cfg.density, cfg.nonneg_prob)
        evs = enumerate_evs(K)
        stats["instances"] += 1
        stats["evs"] += len(evs)
        stats["ev_mismatch"] += evs != oracle.brute_evs(K)
        vectors = list(evs) + [oracle.random_conic_combination(rng, evs, K.ncols) for _ in range(2)]
        for v in filter(any, vectors):
            stats["vectors"] += 1
            a, b = is_elementary(K, v), is_swnd(K, v)
            c = oracle.brute_cnd(K, v) if K.ncols <= oracle.MAX_CND_COLS else a
            stats["predicate_mismatch"] += not (a == b == c)
    stats["seconds"] = round(time.perf_counter() - t0, 2)
    return stats


def main():
    defaults = AgreementConfig()
    parser = argparse.ArgumentParser(description=__doc__)
    for name, value in vars(defaults).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = AgreementConfig(**vars(parser.parse_args()))
    print(cfg)
    for key, value in run(cfg).items():
        print(f"{key:>20}: {value}")


if __name__ == "__main__":
    main()
