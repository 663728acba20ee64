"""Fans of toric Schubert varieties and exact polyhedral primitives.

Lattice vectors are plain tuples of ints in the basis ``e_1^+, ..., e_r^+``.
For a Coxeter-type reduced word ``s_{i_1} ... s_{i_r}`` the negative rays are

    e_k^- = -e_k^+ - sum_{m > k} <alpha_{i_k}^vee, alpha_{i_m}> e_m^+

and the maximal cone labelled by the subset ``A`` of positions uses
``e_k^-`` for ``k`` in ``A`` and ``e_k^+`` otherwise. Cones of the partial flag
variety merge the cones whose labels lie in the same ``W_P``-coset.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from . import exact
from .errors import NotCoxeterType, NotMinCosetRep, NotPointed, NotReduced, ZeroVector
from .root_system import RootSystemData, cartan_integer
from .verdict import SmoothnessVerdict
from .weyl_group import (
    ParabolicSpec,
    WeylElement,
    element_from_word,
    format_word,
    is_min_coset_rep,
    is_reduced,
    parabolic_factorization,
)

Vector = tuple[int, ...]

SCHEMA = "toric-schubert/1"


def primitive(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive representative")
    return tuple(x // g for x in v)


def unit_vector(r: int, k: int) -> Vector:
    return tuple(int(i == k) for i in range(r))


@dataclass(frozen=True)
class Cone:
    generators: tuple[Vector, ...]
    label: WeylElement | None = None
    subsets: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if any(not any(g) for g in gens):
            raise ZeroVector("cone generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    @cached_property
    def rays(self) -> tuple[Vector, ...]:
        return extremal_rays(self)

    @property
    def label_word(self) -> str:
        return format_word(self.label.canonical_word) if self.label is not None else ""


@dataclass(frozen=True)
class Fan:
    rank: int
    maximal_cones: tuple[Cone, ...]
    origin: dict = field(default_factory=dict, compare=False)

    def rays(self) -> list[Vector]:
        return sorted({r for c in self.maximal_cones for r in c.rays})

    def to_dict(self) -> dict:
        rays = self.rays()
        index = {r: n for n, r in enumerate(rays)}
        cones = []
        for c in self.maximal_cones:
            entry = {
                "rays": sorted(index[r] for r in c.rays),
                "label": c.label_word,
                "subsets": [sorted(s) for s in c.subsets],
            }
            if len(c.generators) != len(c.rays):
                entry["generators"] = [list(g) for g in c.generators]
            cones.append(entry)
        return {
            "schema": SCHEMA,
            "origin": self.origin,
            "rank": self.rank,
            "rays": [list(r) for r in rays],
            "maximal_cones": cones,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"rank {d['rank']}", f"rays {len(d['rays'])}"]
        lines += [f"  {n}: ({', '.join(map(str, r))})" for n, r in enumerate(d["rays"])]
        lines.append(f"maximal_cones {len(d['maximal_cones'])}")
        for c in d["maximal_cones"]:
            lines.append(f"  [{' '.join(map(str, c['rays']))}] {c['label']}")
        return "\n".join(lines)


def _check_coxeter_word(rs: RootSystemData, word: Sequence[int]) -> WeylElement:
    for i in word:
        rs.check_index(i)
    if not is_reduced(rs, word):
        raise NotReduced(f"{format_word(word)} is not a reduced word in {rs.name}")
    if len(set(word)) != len(word):
        raise NotCoxeterType(f"{format_word(word)} repeats a simple reflection")
    return element_from_word(rs, word)


def ray_generators(rs: RootSystemData, word: Sequence[int]) -> tuple[list[Vector], list[Vector]]:
    """The positive and negative ray generators ``(e^+, e^-)`` of the full-flag fan."""
    _check_coxeter_word(rs, word)
    r = len(word)
    eplus = [unit_vector(r, k) for k in range(r)]
    eminus = []
    for k in range(r):
        v = [0] * r
        v[k] = -1
        for m in range(k + 1, r):
            v[m] = -cartan_integer(rs, word[k], word[m])
        eminus.append(tuple(v))
    return eplus, eminus


def _subset_generators(eplus, eminus, subset: frozenset[int]) -> tuple[Vector, ...]:
    # subset holds 1-based positions
    return tuple(eminus[k] if k + 1 in subset else eplus[k] for k in range(len(eplus)))


def _all_subsets(r: int) -> list[frozenset[int]]:
    return [frozenset(k + 1 for k in range(r) if mask >> k & 1) for mask in range(1 << r)]


def subword_element(rs: RootSystemData, word: Sequence[int], subset) -> WeylElement:
    """Product of ``s_{i_j}`` over ``j`` in ``subset`` (1-based), in increasing order."""
    return element_from_word(rs, [word[j - 1] for j in sorted(subset)])


def full_flag_fan(rs: RootSystemData, word: Sequence[int]) -> Fan:
    word = tuple(word)
    eplus, eminus = ray_generators(rs, word)
    cones = tuple(
        Cone(_subset_generators(eplus, eminus, A), subword_element(rs, word, A), (A,))
        for A in _all_subsets(len(word))
    )
    return Fan(len(word), cones, {"type": rs.name, "word": list(word), "parabolic": []})


def coset_groups(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> dict[WeylElement, list[frozenset[int]]]:
    """Map each ``v`` in ``[e,w]^P`` to the subsets ``A`` whose ``w_A`` lies in ``v W_P``."""
    groups: dict[WeylElement, list[frozenset[int]]] = {}
    for A in _all_subsets(len(word)):
        u = subword_element(rs, word, A)
        v, _ = parabolic_factorization(u, p)
        groups.setdefault(v, []).append(A)
    return groups


def merged_cone(rs, word, eplus, eminus, label, subsets) -> Cone:
    gens = []
    for A in subsets:
        for g in _subset_generators(eplus, eminus, A):
            if g not in gens:
                gens.append(g)
    cone = Cone(tuple(gens), label, tuple(subsets))
    cone.rays  # asserts pointedness
    return cone


def partial_flag_fan(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> Fan:
    word = tuple(word)
    p.validate(rs)
    w = _check_coxeter_word(rs, word)
    if not is_min_coset_rep(w, p):
        raise NotMinCosetRep(f"{format_word(word)} is not a minimal coset representative for S_P={{{p}}}")
    eplus, eminus = ray_generators(rs, word)
    groups = coset_groups(rs, word, p)
    cones = tuple(merged_cone(rs, word, eplus, eminus, v, subs) for v, subs in groups.items())
    return Fan(len(word), cones, {"type": rs.name, "word": list(word), "parabolic": sorted(p.subset)})


def identity_cone(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> Cone:
    """The merged cone ``C_1^P`` at the identity coset."""
    word = tuple(word)
    w = _check_coxeter_word(rs, word)
    if not is_min_coset_rep(w, p):
        raise NotMinCosetRep(f"{format_word(word)} is not a minimal coset representative for S_P={{{p}}}")
    eplus, eminus = ray_generators(rs, word)
    subs = [A for A in _all_subsets(len(word)) if parabolic_factorization(subword_element(rs, word, A), p)[0].is_identity()]
    return merged_cone(rs, word, eplus, eminus, subword_element(rs, word, ()), subs)


def is_pointed(generators: Sequence[Vector]) -> bool:
    """No nontrivial nonnegative combination of the generators vanishes."""
    if not generators:
        return True
    cols = [tuple(g) + (1,) for g in generators]
    target = (0,) * len(generators[0]) + (1,)
    return exact.nonnegative_solution(cols, target) is None


def cone_contains(cone: Cone | Sequence[Vector], point: Sequence[int | Fraction]) -> bool:
    gens = cone.generators if isinstance(cone, Cone) else tuple(cone)
    if not any(point):
        return True
    if not gens:
        return False
    if exact.rank(gens) == len(gens):
        x = exact.solve_independent(gens, point)
        return x is not None and all(c >= 0 for c in x)
    return exact.nonnegative_solution(gens, point) is not None


def extremal_rays(cone: Cone | Sequence[Vector]) -> tuple[Vector, ...]:
    """Primitive generators that are not nonnegative combinations of the others."""
    gens = cone.generators if isinstance(cone, Cone) else tuple(cone)
    prims = sorted({primitive(g) for g in gens})
    if exact.rank(prims) == len(prims):
        return tuple(prims)
    if not is_pointed(prims):
        raise NotPointed("cone contains a line")
    return tuple(
        g for n, g in enumerate(prims)
        if exact.nonnegative_solution(prims[:n] + prims[n + 1:], g) is None
    )


def is_smooth_cone(cone: Cone | Sequence[Vector], ambient_rank: int) -> SmoothnessVerdict:
    rays = extremal_rays(cone)
    assert all(len(r) == ambient_rank for r in rays)
    witness = {"extremal_rays": [list(r) for r in rays], "extremal_count": len(rays)}
    if not rays:
        return SmoothnessVerdict(True, "cone-oracle", witness)
    if exact.rank(rays) < len(rays):
        witness["reason"] = "extremal rays are linearly dependent"
        return SmoothnessVerdict(False, "cone-oracle", witness)
    factors = [abs(int(f)) for f in invariant_factors(Matrix([list(r) for r in rays]), domain=ZZ)]
    witness["invariant_factors"] = factors
    if len(rays) == ambient_rank:
        witness["determinant"] = abs(int(exact.determinant(rays)))
    smooth = all(f == 1 for f in factors)
    if not smooth:
        witness["reason"] = "extremal rays do not extend to a lattice basis"
    return SmoothnessVerdict(smooth, "cone-oracle", witness)


def random_rational_points(rank: int, count: int, seed: int = 0, bound: int = 20) -> list[tuple[Fraction, ...]]:
    rng = random.Random(seed)
    return [
        tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(rank))
        for _ in range(count)
    ]
