"""Smoothness of toric Schubert varieties in G/P.

Three routes that must agree:

* ``smooth_by_criterion``: the Cartan-integer criterion on a reduced word;
  each constrained position ``j`` (letter in ``S_P``) needs exactly one later
  position ``t`` with nonzero Cartan integer, that integer must be -1, and the
  targets ``t`` must be pairwise distinct.
* ``smooth_by_cone_oracle``: unimodularity of the merged cone at the identity.
* ``smooth_full_fan_check``: unimodularity of every maximal cone.

``smooth_simply_laced`` is the graph reformulation for types A, D, E.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotMinCosetRep, NotSimplyLaced
from .root_system import RootSystemData, cartan_integer
from .toric_fan import _check_coxeter_word, identity_cone, is_smooth_cone, partial_flag_fan, ray_generators
from .verdict import SmoothnessVerdict
from .weyl_group import ParabolicSpec, WeylElement, format_word, is_min_coset_rep

__all__ = [
    "GammaGraph",
    "SmoothnessVerdict",
    "gamma_graph",
    "jp_indices",
    "predicted_identity_rays",
    "smooth_by_cone_oracle",
    "smooth_by_criterion",
    "smooth_full_fan_check",
    "smooth_simply_laced",
    "smoothness_report",
]


def _validate(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> WeylElement:
    p.validate(rs)
    w = _check_coxeter_word(rs, word)
    if not is_min_coset_rep(w, p):
        raise NotMinCosetRep(f"{format_word(word)} has a right descent in S_P={{{p}}}")
    return w


def jp_indices(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> list[int]:
    """1-based positions of the word whose letter lies in ``S_P``."""
    _validate(rs, word, p)
    return [j for j, i in enumerate(word, start=1) if i in p.subset]


def smooth_by_criterion(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> SmoothnessVerdict:
    word = tuple(word)
    jp = jp_indices(rs, word, p)
    if not jp:
        return SmoothnessVerdict(True, "trivial-case", {"jp": [], "t": {}})
    r = len(word)
    targets: dict[int, int] = {}
    for j in jp:
        nonzero = {
            m: cartan_integer(rs, word[j - 1], word[m - 1])
            for m in range(j + 1, r + 1)
            if cartan_integer(rs, word[j - 1], word[m - 1]) != 0
        }
        if len(nonzero) != 1 or next(iter(nonzero.values())) != -1:
            return SmoothnessVerdict(False, "direct-criterion", {
                "jp": jp,
                "failing_j": j,
                "nonzero_cartan_integers": {str(m): b for m, b in nonzero.items()},
                "reason": "no later position" if not nonzero
                else "more than one later position" if len(nonzero) > 1
                else "Cartan integer is not -1",
            })
        t = next(iter(nonzero))
        clash = next((jj for jj, tt in targets.items() if tt == t), None)
        if clash is not None:
            return SmoothnessVerdict(False, "direct-criterion", {
                "jp": jp,
                "failing_j": j,
                "collision": {"t": t, "positions": [clash, j]},
                "reason": "targets are not pairwise distinct",
            })
        targets[j] = t
    return SmoothnessVerdict(True, "direct-criterion", {"jp": jp, "t": {str(j): t for j, t in targets.items()}})


def predicted_identity_rays(rs: RootSystemData, word: Sequence[int], verdict: SmoothnessVerdict) -> set[tuple[int, ...]]:
    """Rays of ``C_1^P`` forced by a smooth criterion verdict: ``e_i^+`` off the targets, plus ``e_j^-``."""
    assert verdict.smooth
    eplus, eminus = ray_generators(rs, word)
    t = {int(j): tt for j, tt in verdict.witness["t"].items()}
    rays = {eplus[i - 1] for i in range(1, len(word) + 1) if i not in t.values()}
    return rays | {eminus[j - 1] for j in t}


@dataclass(frozen=True)
class GammaGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def out_neighbors(self, j: int) -> list[int]:
        return sorted(m for a, m in self.edges if a == j)

    def to_dict(self) -> dict:
        return {"vertices": list(range(1, self.vertex_count + 1)), "edges": sorted(map(list, self.edges))}

    def to_dot(self, highlight: Sequence[int] = ()) -> str:
        lines = ["digraph Gamma {"]
        for v in range(1, self.vertex_count + 1):
            style = " [style=filled]" if v in highlight else ""
            lines.append(f"  {v}{style};")
        lines += [f"  {a} -> {b};" for a, b in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines)


def gamma_graph(rs: RootSystemData, word: Sequence[int]) -> GammaGraph:
    """Arrow ``j -> m`` whenever ``j < m`` and the Cartan integer of the two letters is -1."""
    word = tuple(word)
    _check_coxeter_word(rs, word)
    r = len(word)
    edges = frozenset(
        (j, m)
        for j in range(1, r + 1)
        for m in range(j + 1, r + 1)
        if cartan_integer(rs, word[j - 1], word[m - 1]) == -1
    )
    return GammaGraph(r, edges)


def smooth_simply_laced(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> SmoothnessVerdict:
    if not rs.simply_laced:
        raise NotSimplyLaced(f"{rs.name} is not simply laced")
    jp = jp_indices(rs, word, p)
    graph = gamma_graph(rs, word)
    witness = {"jp": jp, "edges": sorted(map(list, graph.edges))}
    targets = {}
    for j in jp:
        out = graph.out_neighbors(j)
        if len(out) != 1:
            witness.update(failing_j=j, out_degree=len(out))
            return SmoothnessVerdict(False, "graph-criterion", witness)
        targets[j] = out[0]
    if len(set(targets.values())) != len(targets):
        witness["targets"] = {str(j): t for j, t in targets.items()}
        witness["reason"] = "targets are not pairwise distinct"
        return SmoothnessVerdict(False, "graph-criterion", witness)
    witness["targets"] = {str(j): t for j, t in targets.items()}
    return SmoothnessVerdict(True, "graph-criterion", witness)


def smooth_by_cone_oracle(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> SmoothnessVerdict:
    _validate(rs, word, p)
    cone = identity_cone(rs, word, p)
    verdict = is_smooth_cone(cone, len(word))
    witness = dict(verdict.witness, generators=[list(g) for g in cone.generators])
    return SmoothnessVerdict(verdict.smooth, "cone-oracle", witness)


def smooth_full_fan_check(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> SmoothnessVerdict:
    _validate(rs, word, p)
    fan = partial_flag_fan(rs, word, p)
    singular = []
    for cone in fan.maximal_cones:
        v = is_smooth_cone(cone, fan.rank)
        if not v.smooth:
            singular.append({"label": cone.label_word, **v.witness})
    witness = {"cone_count": len(fan.maximal_cones), "singular_cones": singular}
    return SmoothnessVerdict(not singular, "cone-oracle", witness)


def smoothness_report(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> dict:
    """Criterion verdict plus every independent cross-check, as a JSON-ready dict."""
    word = tuple(word)
    primary = smooth_by_criterion(rs, word, p)
    checks = [
        ("smooth_by_cone_oracle", smooth_by_cone_oracle(rs, word, p)),
        ("smooth_full_fan_check", smooth_full_fan_check(rs, word, p)),
    ]
    if rs.simply_laced:
        checks.append(("smooth_simply_laced", smooth_simply_laced(rs, word, p)))
    return {
        "input": {"type": rs.name, "word": list(word), "parabolic": sorted(p.subset)},
        "method": primary.method,
        "smooth": primary.smooth,
        "witness": primary.witness,
        "cross_checks": [
            {"check": name, "smooth": v.smooth, "agrees": v.smooth == primary.smooth, "witness": v.witness}
            for name, v in checks
        ],
    }
