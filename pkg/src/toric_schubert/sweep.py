"""Exhaustive cross-check sweeps over Coxeter-type elements and parabolic subsets."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import CapExceeded
from .interval_lattice import (
    antimatroid_violation,
    bruhat_interval_isomorphism,
    feasible_sets,
    is_boolean,
    is_join_distributive,
    is_lattice,
    poset_from_family,
    FinitePoset,
)
from .root_system import RootSystemData, parse_type
from .smoothness import (
    predicted_identity_rays,
    smooth_by_cone_oracle,
    smooth_by_criterion,
    smooth_full_fan_check,
    smooth_simply_laced,
)
from .toric_fan import identity_cone
from .weyl_group import (
    DEFAULT_ORDER_CAP,
    ParabolicSpec,
    WeylElement,
    bruhat_leq,
    element_from_word,
    enumerate_group,
    format_word,
    is_min_coset_rep,
    lower_interval_WP,
)

log = logging.getLogger(__name__)

DEFAULT_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4")
RANK_CAP = 8


def coxeter_words(rs: RootSystemData) -> dict[WeylElement, list[tuple[int, ...]]]:
    """Every word with pairwise distinct letters, grouped by the element it spells."""
    out: dict[WeylElement, list[tuple[int, ...]]] = {}
    letters = range(1, rs.rank + 1)
    for size in range(rs.rank + 1):
        for chosen in combinations(letters, size):
            for word in permutations(chosen):
                out.setdefault(element_from_word(rs, word), []).append(word)
    return out


def parabolic_subsets(rs: RootSystemData) -> list[ParabolicSpec]:
    letters = range(1, rs.rank + 1)
    return [ParabolicSpec(frozenset(c)) for size in range(rs.rank + 1) for c in combinations(letters, size)]


@dataclass
class TypeReport:
    type: str
    elements: int = 0
    instances: int = 0
    smooth: int = 0
    singular: int = 0
    disagreements: list = field(default_factory=list)
    ray_mismatches: list = field(default_factory=list)
    word_dependence: list = field(default_factory=list)
    interval_failures: list = field(default_factory=list)
    boolean_failures: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(map(len, (
            self.disagreements, self.ray_mismatches, self.word_dependence,
            self.interval_failures, self.boolean_failures,
        )))

    def to_dict(self, table: bool = False) -> dict:
        d = {
            "type": self.type,
            "elements": self.elements,
            "instances": self.instances,
            "smooth": self.smooth,
            "singular": self.singular,
            "failures": self.failures,
            "disagreements": self.disagreements,
            "ray_mismatches": self.ray_mismatches,
            "word_dependence": self.word_dependence,
            "interval_failures": self.interval_failures,
            "boolean_failures": self.boolean_failures,
        }
        if table:
            d["verdicts"] = self.verdicts
        return d


def check_smoothness(rs: RootSystemData, word, p: ParabolicSpec) -> tuple[bool, dict | None, bool]:
    """Run every smoothness route; return ``(verdict, disagreement, rays_ok)``."""
    crit = smooth_by_criterion(rs, word, p)
    routes = {
        "criterion": crit.smooth,
        "cone_oracle": smooth_by_cone_oracle(rs, word, p).smooth,
        "full_fan": smooth_full_fan_check(rs, word, p).smooth,
    }
    if rs.simply_laced:
        routes["simply_laced"] = smooth_simply_laced(rs, word, p).smooth
    disagreement = None
    if len(set(routes.values())) > 1:
        disagreement = {"word": list(word), "parabolic": sorted(p.subset), "routes": routes}
    rays_ok = True
    if crit.smooth:
        rays_ok = set(identity_cone(rs, word, p).rays) == predicted_identity_rays(rs, word, crit)
    return crit.smooth, disagreement, rays_ok


def check_interval(rs: RootSystemData, word, p: ParabolicSpec, w: WeylElement) -> str | None:
    fam = feasible_sets(rs, word, p)
    if antimatroid_violation(fam) is not None:
        return "antimatroid axiom"
    poset = poset_from_family(fam)
    if not is_lattice(poset):
        return "not a lattice"
    if not is_join_distributive(poset):
        return "not join-distributive"
    if len(fam) != len(lower_interval_WP(w, p)):
        return "size differs from [e,w]^P"
    if not bruhat_interval_isomorphism(rs, word, p).ok:
        return "bruhat isomorphism"
    return None


def boolean_interval_holds(group: list[WeylElement], w: WeylElement) -> bool:
    """``[e, w]`` computed by filtering the whole group with Bruhat order is Boolean of rank l(w)."""
    below = [v for v in group if bruhat_leq(v, w)]
    leq = [[bruhat_leq(a, b) for b in below] for a in below]
    poset = FinitePoset(tuple(below), leq)
    return len(below) == 1 << w.length and is_boolean(poset)


def sweep_type(type_name: str, cap: int = DEFAULT_ORDER_CAP, boolean: bool = True) -> TypeReport:
    rs = parse_type(type_name)
    if rs.rank > RANK_CAP:
        raise CapExceeded(f"rank {rs.rank} exceeds sweep cap {RANK_CAP}")
    report = TypeReport(rs.name)
    group = enumerate_group(rs, cap) if boolean else None
    words_by_element = coxeter_words(rs)
    report.elements = len(words_by_element)
    for w, words in sorted(words_by_element.items(), key=lambda kv: kv[1][0]):
        if boolean and not boolean_interval_holds(group, w):
            report.boolean_failures.append(format_word(w.canonical_word))
        for p in parabolic_subsets(rs):
            if not is_min_coset_rep(w, p):
                continue
            seen = set()
            for word in sorted(words):
                report.instances += 1
                smooth, disagreement, rays_ok = check_smoothness(rs, word, p)
                seen.add(smooth)
                report.smooth += smooth
                report.singular += not smooth
                report.verdicts.append({"word": list(word), "parabolic": sorted(p.subset), "smooth": smooth})
                if disagreement:
                    report.disagreements.append(disagreement)
                if not rays_ok:
                    report.ray_mismatches.append({"word": list(word), "parabolic": sorted(p.subset)})
                problem = check_interval(rs, word, p, w)
                if problem:
                    report.interval_failures.append(
                        {"word": list(word), "parabolic": sorted(p.subset), "problem": problem}
                    )
            if len(seen) > 1:
                report.word_dependence.append({"element": format_word(w.canonical_word), "parabolic": sorted(p.subset)})
    log.info("swept %s: %d instances, %d failures", rs.name, report.instances, report.failures)
    return report


def sweep(types=DEFAULT_TYPES, cap: int = DEFAULT_ORDER_CAP, workers: int = 1, boolean: bool = True) -> list[TypeReport]:
    """Sweep each type; reports come back in the order the types were given."""
    types = list(types)
    if workers > 1 and len(types) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(sweep_type, types, [cap] * len(types), [boolean] * len(types)))
    return [sweep_type(t, cap, boolean) for t in types]
