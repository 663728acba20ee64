#!/usr/bin/env python3
"""Compare verdicts on a word and on its reverse, for w with w and w^-1 both in W^P.

Prints every instance where the plain criterion changes under reversal.
"""
from __future__ import annotations

import argparse

from toric_schubert.root_system import parse_type
from toric_schubert.smoothness import smooth_by_criterion
from toric_schubert.sweep import DEFAULT_TYPES, coxeter_words, parabolic_subsets
from toric_schubert.weyl_group import is_min_coset_rep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--types", default=",".join(DEFAULT_TYPES))
    args = parser.parse_args()
    for name in args.types.split(","):
        rs = parse_type(name)
        checked = flips = 0
        for w, words in coxeter_words(rs).items():
            for p in parabolic_subsets(rs):
                if not (is_min_coset_rep(w, p) and is_min_coset_rep(w.inverse(), p)):
                    continue
                for word in words:
                    checked += 1
                    a = smooth_by_criterion(rs, word, p).smooth
                    b = smooth_by_criterion(rs, tuple(reversed(word)), p).smooth
                    if a != b:
                        flips += 1
                        print(f"  {name} word={word} S_P={sorted(p.subset)}: {a} -> {b}")
        print(f"{name}: {checked} checked, {flips} verdict changes")


if __name__ == "__main__":
    main()
