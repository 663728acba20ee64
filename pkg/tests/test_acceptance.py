"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``; both print one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import random
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from oracles import positive_by_definition  # noqa: E402

from toric_schubert.interval_lattice import distributivity_violation, feasible_sets, is_distributive, is_join_distributive, is_lattice, poset_from_family
from toric_schubert.root_system import parse_type
from toric_schubert.smoothness import gamma_graph, smooth_by_cone_oracle, smooth_by_criterion
from toric_schubert.spherical import levi_factorization, spherical_smoothness
from toric_schubert.subexpressions import positive_subexpression
from toric_schubert.sweep import DEFAULT_TYPES, coxeter_words, parabolic_subsets, sweep
from toric_schubert.toric_fan import cone_contains, full_flag_fan, partial_flag_fan, random_rational_points
from toric_schubert.weyl_group import ParabolicSpec, element_from_word, enumerate_group, longest_element, lower_interval, reduced_words

fs = frozenset


@lru_cache(maxsize=1)
def full_sweep():
    return sweep(DEFAULT_TYPES)


def fan_shape(fan):
    rays = set(fan.rays())
    cones = {(c.label_word, fs(c.rays)) for c in fan.maximal_cones}
    return rays, cones


def criterion_1():
    t = time.perf_counter()
    rays, cones = fan_shape(full_flag_fan(parse_type("A2"), [1, 2]))
    elapsed = time.perf_counter() - t
    want_cones = {
        ("e", fs({(1, 0), (0, 1)})),
        ("s1", fs({(0, 1), (-1, 1)})),
        ("s2", fs({(1, 0), (0, -1)})),
        ("s1s2", fs({(-1, 1), (0, -1)})),
    }
    ok = rays == {(1, 0), (0, 1), (-1, 1), (0, -1)} and cones == want_cones and elapsed < 1
    return ok, f"{len(cones)} cones, {elapsed:.3f}s"


def criterion_2():
    t = time.perf_counter()
    fan = partial_flag_fan(parse_type("A2"), [1, 2], ParabolicSpec({1}))
    elapsed = time.perf_counter() - t
    rays = set(fan.rays())
    ok = len(fan.maximal_cones) == 3 and rays == {(1, 0), (0, -1), (-1, 1)} and elapsed < 1
    return ok, f"{len(fan.maximal_cones)} cones, rays {sorted(rays)}, {elapsed:.3f}s"


def criterion_3():
    b2 = parse_type("B2")
    good = (smooth_by_criterion(b2, [1, 2], ParabolicSpec({1})), smooth_by_cone_oracle(b2, [1, 2], ParabolicSpec({1})))
    bad_crit = smooth_by_criterion(b2, [2, 1], ParabolicSpec({2}))
    bad_cone = smooth_by_cone_oracle(b2, [2, 1], ParabolicSpec({2}))
    ok = all(v.smooth for v in good) and not bad_crit.smooth and not bad_cone.smooth
    ok = ok and bad_cone.witness["determinant"] == 2 and good[1].witness["determinant"] == 1
    return ok, f"det {good[1].witness['determinant']} / {bad_cone.witness['determinant']}"


def criterion_4():
    a3 = parse_type("A3")
    cases = [((2, 1, 3), {2}, {(1, 2), (1, 3)}), ((1, 3, 2), {1, 3}, {(1, 3), (2, 3)})]
    ok = True
    for word, sp, edges in cases:
        p = ParabolicSpec(sp)
        ok &= not smooth_by_criterion(a3, word, p).smooth
        ok &= not smooth_by_cone_oracle(a3, word, p).smooth
        ok &= gamma_graph(a3, word).edges == edges
    return ok, "both singular, edges match"


def criterion_5():
    fam = feasible_sets(parse_type("A3"), [2, 1, 3], ParabolicSpec({2}))
    want = {fs(), fs({2}), fs({3}), fs({2, 3}), fs({1, 2}), fs({1, 3}), fs({1, 2, 3})}
    poset = poset_from_family(fam)
    witness = distributivity_violation(poset)
    ok = (fam.sets == want and is_lattice(poset) and is_join_distributive(poset)
          and not is_distributive(poset) and witness == (fs({1, 2}), fs({2}), fs({1, 3})))
    return ok, f"witness x={sorted(witness[0])} y={sorted(witness[1])} z={sorted(witness[2])}"


def criterion_6():
    poset = poset_from_family(feasible_sets(parse_type("A2"), [1, 2], ParabolicSpec({1})))
    chain = all(poset.leq[a, b] or poset.leq[b, a] for a in range(len(poset)) for b in range(len(poset)))
    return len(poset) == 3 and chain, f"{len(poset)} elements"


def criterion_7():
    t = time.perf_counter()
    reports = full_sweep()
    bad = sum(len(r.disagreements) + len(r.ray_mismatches) + len(r.word_dependence) for r in reports)
    instances = sum(r.instances for r in reports)
    return bad == 0 and instances > 0, f"{instances} instances, {bad} disagreements, {time.perf_counter() - t:.1f}s"


def criterion_8():
    reports = full_sweep()
    bad = sum(len(r.boolean_failures) for r in reports)
    return bad == 0, f"{sum(r.elements for r in reports)} elements, {bad} failures"


def criterion_9():
    reports = full_sweep()
    bad = sum(len(r.interval_failures) for r in reports)
    return bad == 0, f"{sum(r.instances for r in reports)} families, {bad} failures"


def positive_counts(rs, word):
    """Brute force: endpoint -> list of positive step masks, over all 2^l masks."""
    found = {}
    for mask in range(1 << len(word)):
        steps = [bool(mask >> k & 1) for k in range(len(word))]
        if positive_by_definition(rs, word, steps):
            v = element_from_word(rs, [i for i, s in zip(word, steps) if s])
            found.setdefault(v, []).append(tuple(steps))
    return found


def criterion_10():
    checked = 0
    for name in ("A1", "A2", "A3", "B2", "B3", "C3", "G2"):
        rs = parse_type(name)
        for w in enumerate_group(rs):
            below = lower_interval(w)
            for word in reduced_words(w):
                found = positive_counts(rs, word)
                if set(found) != set(below) or any(len(m) != 1 for m in found.values()):
                    return False, f"{name} {word}: uniqueness fails"
                for v, (steps,) in found.items():
                    if positive_subexpression(rs, word, v).steps != steps:
                        return False, f"{name} {word}: positive_subexpression differs"
                    checked += 1
    return True, f"{checked} (word, v) pairs"


def criterion_11():
    pool = [(name, word) for name in DEFAULT_TYPES
            for words in coxeter_words(parse_type(name)).values() for word in words if word]
    rng = random.Random(2024)
    misses = 0
    for k, (name, word) in enumerate(rng.sample(pool, 20)):
        fan = full_flag_fan(parse_type(name), word)
        for point in random_rational_points(fan.rank, 1000, seed=k):
            misses += not any(cone_contains(c, point) for c in fan.maximal_cones)
    return misses == 0, f"20 fans x 1000 points, {misses} misses"


def criterion_12():
    total = smooth = 0
    for name in ("A1", "A2", "A3", "B2", "B3", "C3", "G2"):
        rs = parse_type(name)
        cs = list(coxeter_words(rs))
        for p in parabolic_subsets(rs):
            w0 = longest_element(rs, p.subset)
            for c in cs:
                w = w0 * c
                if w.length != w0.length + c.length:
                    continue
                if not levi_factorization(rs, w, p.subset).horospherical:
                    continue
                total += 1
                smooth += spherical_smoothness(rs, w, p.subset).smooth
    return total > 0 and smooth == total, f"{smooth}/{total} smooth"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def report(n, ok, detail):
    return f"criterion {n:>2} [PRIMARY] {'PASS' if ok else 'FAIL'}: {detail}"


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + report(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, check in enumerate(CRITERIA, start=1):
        ok, detail = check()
        results.append(ok)
        print(report(n, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
