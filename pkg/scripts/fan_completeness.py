#!/usr/bin/env python3
"""Sample random rational points and count how many miss every maximal cone.

Full-flag fans should have no misses; partial fans are checked too (they
are coarsenings, so they should be complete as well).
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from toric_schubert.root_system import parse_type
from toric_schubert.sweep import DEFAULT_TYPES, coxeter_words, parabolic_subsets
from toric_schubert.toric_fan import cone_contains, full_flag_fan, partial_flag_fan, random_rational_points
from toric_schubert.weyl_group import is_min_coset_rep


@dataclass
class CompletenessConfig:
    fans: int = 20
    points: int = 1000
    seed: int = 0
    partial: bool = False


def sample_instances(cfg: CompletenessConfig):
    pool = []
    for name in DEFAULT_TYPES:
        rs = parse_type(name)
        for w, words in coxeter_words(rs).items():
            if not words[0]:
                continue
            subsets = [p for p in parabolic_subsets(rs) if is_min_coset_rep(w, p)] if cfg.partial else [None]
            pool.extend((rs, word, p) for word in words for p in subsets)
    return random.Random(cfg.seed).sample(pool, min(cfg.fans, len(pool)))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--fans", type=int, default=CompletenessConfig.fans)
    parser.add_argument("--points", type=int, default=CompletenessConfig.points)
    parser.add_argument("--seed", type=int, default=CompletenessConfig.seed)
    parser.add_argument("--partial", action="store_true", help="sample partial flag fans too")
    cfg = CompletenessConfig(**vars(parser.parse_args()))

    total = 0
    for k, (rs, word, p) in enumerate(sample_instances(cfg)):
        fan = partial_flag_fan(rs, word, p) if p else full_flag_fan(rs, word)
        misses = sum(
            not any(cone_contains(c, x) for c in fan.maximal_cones)
            for x in random_rational_points(fan.rank, cfg.points, seed=cfg.seed + k)
        )
        total += misses
        sp = ",".join(map(str, sorted(p.subset))) if p else "-"
        print(f"{rs.name:<3} word={','.join(map(str, word)):<12} S_P={sp:<8} cones={len(fan.maximal_cones):>3} misses={misses}")
    print(f"total misses: {total}")


if __name__ == "__main__":
    main()
