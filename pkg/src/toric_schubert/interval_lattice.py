"""Feasible-set families for projected Boolean intervals, and lattice checks.

For a Coxeter-type word ``s_{i_1} ... s_{i_r}`` of ``w`` in ``W^P`` the
interval ``[e, w]^P`` is identified with the family of subsets ``A`` of
``{1..r}`` whose subword product lies in ``W^P``. The family is an antimatroid
for the reverse order ``r < r-1 < ... < 1`` on the ground set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Sequence

import numpy as np

from .errors import InconsistentFamily, NotBounded, NotLattice
from .root_system import RootSystemData, cartan_integer
from .toric_fan import _check_coxeter_word, subword_element
from .weyl_group import (
    ParabolicSpec,
    bruhat_leq,
    format_word,
    is_min_coset_rep,
    lower_interval_WP,
)
from .errors import NotMinCosetRep

Subset = frozenset[int]


def subset_key(s: Subset) -> tuple:
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class FeasibleFamily:
    ground_size: int
    sets: frozenset[Subset]

    def __post_init__(self):
        assert frozenset() in self.sets

    def sorted_sets(self) -> list[Subset]:
        return sorted(self.sets, key=subset_key)

    def order_min(self, elements) -> int:
        """Minimum under ``r < r-1 < ... < 1``, i.e. the largest integer."""
        return max(elements)

    def bitmasks(self) -> list[int]:
        return sorted(sum(1 << (k - 1) for k in s) for s in self.sets)

    def __len__(self):
        return len(self.sets)


def _all_subsets(r: int):
    for size in range(r + 1):
        for combo in combinations(range(1, r + 1), size):
            yield frozenset(combo)


def _condition_star(rs, word, p, A: Subset) -> bool:
    # every selected letter in S_P is followed (inside A) by a non-commuting letter
    return all(
        any(k > j and cartan_integer(rs, word[j - 1], word[k - 1]) != 0 for k in A)
        for j in A
        if word[j - 1] in p.subset
    )


def feasible_sets(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> FeasibleFamily:
    """Subsets satisfying the non-commuting-successor condition.

    The family is also computed from the descent test on subword products; any
    disagreement raises :class:`InconsistentFamily`.
    """
    word = tuple(word)
    p.validate(rs)
    w = _check_coxeter_word(rs, word)
    if not is_min_coset_rep(w, p):
        raise NotMinCosetRep(f"{format_word(word)} has a right descent in S_P={{{p}}}")
    by_condition = set()
    by_descents = set()
    for A in _all_subsets(len(word)):
        if _condition_star(rs, word, p, A):
            by_condition.add(A)
        if is_min_coset_rep(subword_element(rs, word, A), p):
            by_descents.add(A)
    if by_condition != by_descents:
        diff = sorted(by_condition ^ by_descents, key=subset_key)[0]
        raise InconsistentFamily(f"definitions disagree on {sorted(diff)}")
    return FeasibleFamily(len(word), frozenset(by_condition))


def antimatroid_violation(fam: FeasibleFamily) -> tuple[Subset, Subset, int] | None:
    """First ``(A, B, x)`` breaking the axiom, or None when it holds."""
    sets = fam.sorted_sets()
    for A in sets:
        for B in sets:
            if B <= A:
                continue
            x = fam.order_min(B - A)
            if A | {x} not in fam.sets:
                return A, B, x
    return None


def check_antimatroid_axiom(fam: FeasibleFamily) -> bool:
    return antimatroid_violation(fam) is None


@dataclass(frozen=True, eq=False)
class FinitePoset:
    elements: tuple[Hashable, ...]
    leq: np.ndarray = field(repr=False)

    def __post_init__(self):
        leq = np.asarray(self.leq, dtype=bool)
        n = len(self.elements)
        assert leq.shape == (n, n)
        assert leq.diagonal().all()
        assert not (leq & leq.T & ~np.eye(n, dtype=bool)).any(), "not antisymmetric"
        closure = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        assert not (closure & ~leq).any(), "not transitive"
        object.__setattr__(self, "leq", leq)

    def __len__(self):
        return len(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)

    def bottom(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=1))
        return int(hits[0]) if len(hits) else None

    def top(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=0))
        return int(hits[0]) if len(hits) else None

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(a, b)`` with ``a`` covered by ``b``."""
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        hasse = strict & ~two_step
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(hasse))]

    def upper_covers(self, a: int) -> list[int]:
        return [b for x, b in self.covers() if x == a]

    def interval(self, a: int, b: int) -> FinitePoset:
        idx = [k for k in range(len(self)) if self.leq[a, k] and self.leq[k, b]]
        return FinitePoset(tuple(self.elements[k] for k in idx), self.leq[np.ix_(idx, idx)])

    def to_dot(self, name=str) -> str:
        lines = ["digraph Hasse {", "  rankdir=BT;"]
        for k, x in enumerate(self.elements):
            lines.append(f'  n{k} [label="{name(x)}"];')
        lines += [f"  n{a} -> n{b};" for a, b in self.covers()]
        lines.append("}")
        return "\n".join(lines)


def poset_from_family(fam: FeasibleFamily) -> FinitePoset:
    sets = fam.sorted_sets()
    leq = np.array([[a <= b for b in sets] for a in sets], dtype=bool)
    return FinitePoset(tuple(sets), leq)


@dataclass(frozen=True, eq=False)
class LatticeTables:
    join: np.ndarray
    meet: np.ndarray


def _extremum(candidates: np.ndarray, leq: np.ndarray, least: bool) -> int | None:
    idx = np.flatnonzero(candidates)
    for k in idx:
        row = leq[k, idx] if least else leq[idx, k]
        if row.all():
            return int(k)
    return None


def lattice_tables(poset: FinitePoset) -> LatticeTables | None:
    """Join and meet tables, or None if some pair lacks a join or meet."""
    if poset.bottom() is None or poset.top() is None:
        raise NotBounded("poset has no bottom or no top")
    n = len(poset)
    leq = poset.leq
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            j = _extremum(leq[a] & leq[b], leq, least=True)
            m = _extremum(leq[:, a] & leq[:, b], leq, least=False)
            if j is None or m is None:
                return None
            join[a, b] = join[b, a] = j
            meet[a, b] = meet[b, a] = m
    return LatticeTables(join, meet)


def is_lattice(poset: FinitePoset) -> bool:
    return lattice_tables(poset) is not None


def _require_lattice(poset: FinitePoset) -> LatticeTables:
    tables = lattice_tables(poset)
    if tables is None:
        raise NotLattice("poset is not a lattice")
    return tables


def distributivity_violation(poset: FinitePoset):
    """First triple ``(x, y, z)`` with ``x ^ (y v z) != (x ^ y) v (x ^ z)``, or None."""
    t = _require_lattice(poset)
    n = len(poset)
    for x in range(n):
        for y in range(n):
            lhs = t.meet[x, t.join[y]]
            rhs = t.join[t.meet[x, y], t.meet[x]]
            bad = np.flatnonzero(lhs != rhs)
            if len(bad):
                z = int(bad[0])
                e = poset.elements
                return e[x], e[y], e[z]
    return None


def is_distributive(poset: FinitePoset) -> bool:
    return distributivity_violation(poset) is None


def is_boolean(poset: FinitePoset) -> bool:
    """Isomorphic to the lattice of subsets of its atoms."""
    if len(poset) == 0:
        return False
    try:
        t = lattice_tables(poset)
    except NotBounded:
        return False
    if t is None:
        return False
    bot = poset.bottom()
    atoms = [b for a, b in poset.covers() if a == bot]
    n = len(atoms)
    if len(poset) != 1 << n:
        return False
    image = {}
    for mask in range(1 << n):
        j = bot
        for k in range(n):
            if mask >> k & 1:
                j = int(t.join[j, atoms[k]])
        if j in image:
            return False
        image[j] = mask
    masks = [image[k] for k in range(len(poset))]
    return all(
        bool(poset.leq[a, b]) == (masks[a] & ~masks[b] == 0)
        for a in range(len(poset)) for b in range(len(poset))
    )


def join_distributivity_violation(poset: FinitePoset):
    """First element whose interval up to the join of its upper covers is not Boolean."""
    t = _require_lattice(poset)
    for x in range(len(poset)):
        ups = poset.upper_covers(x)
        if not ups:
            continue
        j = ups[0]
        for u in ups[1:]:
            j = int(t.join[j, u])
        if not is_boolean(poset.interval(x, j)):
            return poset.elements[x]
    return None


def is_join_distributive(poset: FinitePoset | FeasibleFamily) -> bool:
    if isinstance(poset, FeasibleFamily):
        poset = poset_from_family(poset)
    return join_distributivity_violation(poset) is None


@dataclass
class IsomorphismReport:
    ok: bool
    mapping: dict = field(default_factory=dict)
    violation: str | None = None


def bruhat_interval_isomorphism(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> IsomorphismReport:
    """Check that ``A -> w_A`` is an order isomorphism from the family onto ``[e,w]^P``."""
    word = tuple(word)
    fam = feasible_sets(rs, word, p)
    w = subword_element(rs, word, range(1, len(word) + 1))
    target = lower_interval_WP(w, p)
    sets = fam.sorted_sets()
    mapping = {A: subword_element(rs, word, A) for A in sets}
    images = set(mapping.values())
    if len(images) != len(sets):
        return IsomorphismReport(False, mapping, "map is not injective")
    if images != target:
        return IsomorphismReport(False, mapping, "image differs from [e,w]^P")
    for A in sets:
        for B in sets:
            if (A <= B) != bruhat_leq(mapping[A], mapping[B]):
                return IsomorphismReport(False, mapping, f"order mismatch at {sorted(A)}, {sorted(B)}")
    return IsomorphismReport(True, mapping)


def interval_report(rs: RootSystemData, word: Sequence[int], p: ParabolicSpec) -> dict:
    word = tuple(word)
    fam = feasible_sets(rs, word, p)
    poset = poset_from_family(fam)
    violation = antimatroid_violation(fam)
    lattice = is_lattice(poset)
    report = {
        "input": {"type": rs.name, "word": list(word), "parabolic": sorted(p.subset)},
        "family": [sorted(s) for s in fam.sorted_sets()],
        "bitmasks": fam.bitmasks(),
        "size": len(fam),
        "antimatroid": violation is None,
        "antimatroid_violation": None if violation is None
        else {"A": sorted(violation[0]), "B": sorted(violation[1]), "x": violation[2]},
        "lattice": lattice,
        "is_boolean": is_boolean(poset),
        "is_chain": all(poset.leq[a, b] or poset.leq[b, a] for a in range(len(poset)) for b in range(len(poset))),
    }
    if lattice:
        dv = distributivity_violation(poset)
        report["join_distributive"] = is_join_distributive(poset)
        report["distributive"] = dv is None
        report["distributivity_witness"] = None if dv is None else {k: sorted(s) for k, s in zip("xyz", dv)}
    iso = bruhat_interval_isomorphism(rs, word, p)
    report["bruhat_isomorphism"] = {
        "ok": iso.ok,
        "violation": iso.violation,
        "mapping": {",".join(map(str, sorted(A))) or "{}": format_word(v.canonical_word) for A, v in iso.mapping.items()},
    }
    report["hasse_edges"] = [[sorted(poset.elements[a]), sorted(poset.elements[b])] for a, b in poset.covers()]
    return report
