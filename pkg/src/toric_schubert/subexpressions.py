"""Subexpressions of a reduced word: index sets, distinguished and positive ones."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import NotBelow, NotDistinguished, NotReduced
from .root_system import RootSystemData
from .weyl_group import WeylElement, bruhat_leq, element_from_word, format_word, identity, is_reduced


@dataclass(frozen=True)
class Subexpression:
    base_word: tuple[int, ...]
    steps: tuple[bool, ...]
    prefix_elements: tuple[WeylElement, ...]

    @property
    def end(self) -> WeylElement:
        return self.prefix_elements[-1]

    def to_dict(self) -> dict:
        return {
            "base_word": list(self.base_word),
            "steps": [int(s) for s in self.steps],
            "prefixes": [format_word(v.canonical_word) for v in self.prefix_elements],
        }


def make_subexpression(rs: RootSystemData, base_word: Sequence[int], steps: Sequence[bool]) -> Subexpression:
    if len(steps) != len(base_word):
        raise ValueError("steps and base_word differ in length")
    v = identity(rs)
    prefixes = [v]
    for i, take in zip(base_word, steps):
        rs.check_index(i)
        if take:
            v = v.times_simple(i)
        prefixes.append(v)
    return Subexpression(tuple(base_word), tuple(bool(s) for s in steps), tuple(prefixes))


def all_subexpressions(rs: RootSystemData, base_word: Sequence[int]) -> Iterator[Subexpression]:
    for steps in product((False, True), repeat=len(base_word)):
        yield make_subexpression(rs, base_word, steps)


def index_sets(sub: Subexpression) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """``(J+, J°, J-)``: 1-based positions where the prefix goes up, stays, goes down."""
    plus, circ, minus = set(), set(), set()
    v = sub.prefix_elements
    for j in range(1, len(sub.base_word) + 1):
        before, after = v[j - 1].length, v[j].length
        (plus if after > before else circ if after == before else minus).add(j)
    return frozenset(plus), frozenset(circ), frozenset(minus)


def is_distinguished(sub: Subexpression) -> bool:
    v = sub.prefix_elements
    return all(
        bruhat_leq(v[j], v[j - 1].times_simple(i))
        for j, i in enumerate(sub.base_word, start=1)
    )


def is_positive(sub: Subexpression) -> bool:
    v = sub.prefix_elements
    return all(
        v[j - 1].length < v[j - 1].times_simple(i).length
        for j, i in enumerate(sub.base_word, start=1)
    ) and is_distinguished(sub)


def positive_subexpression(rs: RootSystemData, base_word: Sequence[int], v: WeylElement) -> Subexpression:
    """The unique positive subexpression for ``v`` in the reduced word ``base_word``.

    Built right to left, stripping ``s_{i_j}`` whenever it is a right descent of
    the current prefix, then validated.
    """
    base_word = tuple(base_word)
    if not is_reduced(rs, base_word):
        raise NotReduced(f"{format_word(base_word)} is not reduced")
    steps = [False] * len(base_word)
    cur = v
    for j in range(len(base_word) - 1, -1, -1):
        if cur.has_right_descent(base_word[j]):
            cur = cur.times_simple(base_word[j])
            steps[j] = True
    if not cur.is_identity():
        raise NotBelow(f"{v!r} is not below {format_word(base_word)}")
    sub = make_subexpression(rs, base_word, steps)
    assert sub.end == v and is_positive(sub)
    return sub


def deodhar_shape(sub: Subexpression) -> tuple[int, int]:
    """``(|J°|, |J-|)``: torus and affine dimensions of the Deodhar component."""
    if not is_distinguished(sub):
        raise NotDistinguished("subexpression is not distinguished")
    _, circ, minus = index_sets(sub)
    return len(circ), len(minus)


