"""Weyl group elements as integer matrices on the root lattice.

An element stores its matrix, the matrix of its inverse, and a canonical
reduced word (the lexicographically smallest one). Equality and hashing use the
matrix only.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, MismatchedRootSystem, NotMinCosetRep
from .root_system import Matrix, RootSystemData

DEFAULT_ORDER_CAP = 1_036_800


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _column_negative(m: Matrix, j: int) -> bool:
    # images of simple roots are roots, so the sign of any nonzero entry decides
    for row in m:
        if row[j]:
            return row[j] < 0
    raise AssertionError("zero column in a Weyl group matrix")


@dataclass(frozen=True, eq=False)
class WeylElement:
    root_system: RootSystemData
    matrix: Matrix
    inverse_matrix: Matrix = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.root_system == other.root_system and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: WeylElement) -> WeylElement:
        _same_system(self, other)
        return WeylElement(
            self.root_system,
            _matmul(self.matrix, other.matrix),
            _matmul(other.inverse_matrix, self.inverse_matrix),
        )

    def inverse(self) -> WeylElement:
        return WeylElement(self.root_system, self.inverse_matrix, self.matrix)

    def times_simple(self, i: int) -> WeylElement:
        """``w * s_i``."""
        s = self.root_system.reflections[i - 1]
        return WeylElement(self.root_system, _matmul(self.matrix, s), _matmul(s, self.inverse_matrix))

    def simple_times(self, i: int) -> WeylElement:
        """``s_i * w``."""
        s = self.root_system.reflections[i - 1]
        return WeylElement(self.root_system, _matmul(s, self.matrix), _matmul(self.inverse_matrix, s))

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.root_system.rank)

    def has_right_descent(self, i: int) -> bool:
        return _column_negative(self.matrix, i - 1)

    def has_left_descent(self, i: int) -> bool:
        return _column_negative(self.inverse_matrix, i - 1)

    @cached_property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        count = 0
        for root in self.root_system.positive_roots:
            image = [sum(a * b for a, b in zip(row, root)) for row in self.matrix]
            if any(c < 0 for c in image):
                count += 1
        return count

    @cached_property
    def canonical_word(self) -> tuple[int, ...]:
        word = []
        w = self
        while not w.is_identity():
            i = next(k for k in range(1, w.root_system.rank + 1) if w.has_left_descent(k))
            word.append(i)
            w = w.simple_times(i)
        return tuple(word)

    def __repr__(self):
        return f"WeylElement({self.root_system.name}, {format_word(self.canonical_word)})"


def _same_system(u: WeylElement, v: WeylElement) -> None:
    if u.root_system != v.root_system:
        raise MismatchedRootSystem(
            f"elements live in {u.root_system.name} and {v.root_system.name}"
        )


def format_word(word: Sequence[int]) -> str:
    return "e" if not word else "s" + "s".join(str(i) for i in word)


def identity(rs: RootSystemData) -> WeylElement:
    m = _identity(rs.rank)
    return WeylElement(rs, m, m)


def element_from_word(rs: RootSystemData, word: Iterable[int]) -> WeylElement:
    """Product ``s_{i_1} s_{i_2} ... s_{i_k}`` of simple reflections."""
    w = identity(rs)
    for i in word:
        rs.check_index(i)
        w = w.times_simple(i)
    return w


def simple_reflection(rs: RootSystemData, i: int) -> WeylElement:
    return element_from_word(rs, [i])


def length(w: WeylElement) -> int:
    return w.length


def is_reduced(rs: RootSystemData, word: Sequence[int]) -> bool:
    return element_from_word(rs, word).length == len(word)


def support(w: WeylElement) -> frozenset[int]:
    return frozenset(w.canonical_word)


def is_coxeter_type(w: WeylElement) -> bool:
    """True iff ``w`` has a reduced word with pairwise distinct letters."""
    return w.length == len(support(w))


def right_descents(w: WeylElement) -> frozenset[int]:
    return frozenset(i for i in range(1, w.root_system.rank + 1) if w.has_right_descent(i))


def left_descents(w: WeylElement) -> frozenset[int]:
    return frozenset(i for i in range(1, w.root_system.rank + 1) if w.has_left_descent(i))


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison ``v <= w`` via the lifting property."""
    _same_system(v, w)
    return _bruhat_leq(v, w)


@lru_cache(maxsize=1 << 18)
def _bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    if v.length > w.length:
        return False
    if v.is_identity():
        return True
    if v.length == w.length:
        return v == w
    i = next(k for k in range(1, w.root_system.rank + 1) if w.has_left_descent(k))
    if v.has_left_descent(i):
        return _bruhat_leq(v.simple_times(i), w.simple_times(i))
    return _bruhat_leq(v, w.simple_times(i))


@dataclass(frozen=True)
class ParabolicSpec:
    """The subset ``S_P`` of simple-root indices generating ``W_P``."""

    subset: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "subset", frozenset(self.subset))

    def validate(self, rs: RootSystemData) -> None:
        for i in self.subset:
            rs.check_index(i)

    def __contains__(self, i):
        return i in self.subset

    def __str__(self):
        return ",".join(map(str, sorted(self.subset))) or "none"


def is_min_coset_rep(w: WeylElement, p: ParabolicSpec) -> bool:
    p.validate(w.root_system)
    return not any(w.has_right_descent(i) for i in p.subset)


def parabolic_factorization(w: WeylElement, p: ParabolicSpec) -> tuple[WeylElement, WeylElement]:
    """Return ``(u, v)`` with ``w = u v``, ``u`` in ``W^P`` and ``v`` in ``W_P``."""
    p.validate(w.root_system)
    u, v = w, identity(w.root_system)
    while True:
        i = next((k for k in sorted(p.subset) if u.has_right_descent(k)), None)
        if i is None:
            return u, v
        u = u.times_simple(i)
        v = v.simple_times(i)


def longest_element(rs: RootSystemData, subset: Iterable[int] = None) -> WeylElement:
    """Longest element of the parabolic subgroup ``W_J`` (all of ``W`` by default)."""
    J = sorted(range(1, rs.rank + 1) if subset is None else set(subset))
    for j in J:
        rs.check_index(j)
    w = identity(rs)
    while True:
        j = next((k for k in J if not w.has_right_descent(k)), None)
        if j is None:
            return w
        w = w.times_simple(j)


def subword_products(rs: RootSystemData, word: Sequence[int]) -> Iterator[tuple[tuple[bool, ...], WeylElement]]:
    """Yield ``(mask, product)`` for all ``2^len(word)`` subwords."""
    for mask in product((False, True), repeat=len(word)):
        yield mask, element_from_word(rs, [i for i, keep in zip(word, mask) if keep])


def lower_interval(w: WeylElement) -> frozenset[WeylElement]:
    """All ``v <= w`` in Bruhat order."""
    return _lower_interval(w)


@lru_cache(maxsize=4096)
def _lower_interval(w: WeylElement) -> frozenset[WeylElement]:
    if w.is_identity():
        return frozenset([w])
    i = next(k for k in range(1, w.root_system.rank + 1) if w.has_left_descent(k))
    below = _lower_interval(w.simple_times(i))
    return below | frozenset(v.simple_times(i) for v in below)


def lower_interval_WP(w: WeylElement, p: ParabolicSpec) -> frozenset[WeylElement]:
    """``[e, w]`` intersected with ``W^P``."""
    if not is_min_coset_rep(w, p):
        raise NotMinCosetRep(f"{w!r} has a right descent in S_P={{{p}}}")
    if is_coxeter_type(w):
        elements = {v for _, v in subword_products(w.root_system, w.canonical_word)}
    else:
        elements = lower_interval(w)
    return frozenset(v for v in elements if is_min_coset_rep(v, p))


def enumerate_group(rs: RootSystemData, cap: int = DEFAULT_ORDER_CAP) -> list[WeylElement]:
    """Breadth-first closure of the identity under right multiplication.

    The result is ordered by length. Raises :class:`CapExceeded` once more than
    ``cap`` elements have been found.
    """
    start = identity(rs)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, rs.rank + 1):
            if w.has_right_descent(i):
                continue
            u = w.times_simple(i)
            if u not in seen:
                seen.add(u)
                order.append(u)
                if len(order) > cap:
                    raise CapExceeded(f"|W({rs.name})| exceeds cap {cap}")
                queue.append(u)
    return order


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words of ``w``, sorted lexicographically."""
    return sorted(_reduced_words(w))


@lru_cache(maxsize=4096)
def _reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    if w.is_identity():
        return ((),)
    out = []
    for i in range(1, w.root_system.rank + 1):
        if w.has_right_descent(i):
            out.extend(prefix + (i,) for prefix in _reduced_words(w.times_simple(i)))
    return tuple(out)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"2,1,3"`` into ``(2, 1, 3)``; ``""`` or ``"e"`` is the empty word."""
    text = text.strip()
    if text in ("", "e", "none"):
        return ()
    return tuple(int(tok) for tok in text.split(","))


def parse_parabolic(text: str) -> ParabolicSpec:
    return ParabolicSpec(frozenset(parse_word(text)))
