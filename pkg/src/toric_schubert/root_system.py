"""Cartan matrices and simple reflections for finite irreducible types.

Conventions follow Bourbaki numbering. The Cartan matrix is stored row-major
with ``cartan[i][j] = <alpha_i^vee, alpha_j>`` (0-based internally, 1-based in
the public accessors), so in B2 the short root is ``alpha_2`` and
``<alpha_2^vee, alpha_1> = -2``.

All root data lives on the root lattice in the simple-root basis and is exact
integer arithmetic throughout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import IndexOutOfRange, InvalidRank

Matrix = tuple[tuple[int, ...], ...]

TYPE_TAGS = "ABCDEFG"
_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True)
class RootSystemData:
    type_tag: str
    rank: int
    cartan: Matrix = field(repr=False)

    def __post_init__(self):
        a = self.cartan
        n = self.rank
        assert len(a) == n and all(len(row) == n for row in a)
        for i in range(n):
            assert a[i][i] == 2
            for j in range(n):
                if i == j:
                    continue
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
                assert a[i][j] * a[j][i] in (0, 1, 2, 3)

    @property
    def name(self) -> str:
        return f"{self.type_tag}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.type_tag in "ADE"

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"root index {i!r} not in 1..{self.rank} for {self.name}")

    @cached_property
    def reflections(self) -> tuple[Matrix, ...]:
        """Simple reflection matrices ``s_1..s_n`` (0-based tuple)."""
        return tuple(_reflection(self.cartan, i) for i in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            beta = queue.pop()
            for i in range(n):
                pairing = sum(self.cartan[i][j] * beta[j] for j in range(n))
                if pairing == 0:
                    continue
                image = list(beta)
                image[i] -= pairing
                image = tuple(image)
                if all(c >= 0 for c in image) and image not in seen:
                    seen.add(image)
                    queue.append(image)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    def __str__(self):
        return self.name


def _reflection(cartan: Matrix, i: int) -> Matrix:
    # column j is the image of alpha_j: alpha_j - a[i][j] alpha_i
    n = len(cartan)
    rows = []
    for r in range(n):
        if r == i:
            rows.append(tuple(-cartan[i][j] + (1 if j == i else 0) for j in range(n)))
        else:
            rows.append(tuple(int(r == j) for j in range(n)))
    return tuple(rows)


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _valid(type_tag: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(type_tag, False)


@lru_cache(maxsize=None)
def cartan_matrix(type_tag: str, rank: int) -> RootSystemData:
    """Return the Bourbaki-numbered root system data for ``(type_tag, rank)``.

    Raises :class:`InvalidRank` when the pair is not a finite irreducible type.
    D is accepted from rank 3 on (D3 = A3 with a different numbering).
    """
    tag = str(type_tag).upper()
    if not isinstance(rank, int) or not _valid(tag, rank):
        raise InvalidRank(f"{type_tag}{rank} is not a finite irreducible type")
    n = rank
    if tag in "ABC":
        a = _chain(n)
        if tag == "B":
            a[n - 1][n - 2] = -2
        elif tag == "C":
            a[n - 2][n - 1] = -2
    elif tag == "D":
        a = _chain(n - 1) if n > 1 else [[2]]
        a = [row + [0] for row in a] + [[0] * n]
        a[n - 1][n - 1] = 2
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
    elif tag == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif tag == "F":
        a = _chain(4)
        a[2][1] = -2
    else:  # G2: alpha_1 short, alpha_2 long
        a = [[2, -3], [-1, 2]]
    return RootSystemData(tag, n, tuple(tuple(row) for row in a))


def parse_type(text: str) -> RootSystemData:
    """Parse strings such as ``"A3"``, ``"b2"`` or ``"F4"``."""
    m = _TYPE_RE.match(text)
    if not m:
        raise InvalidRank(f"cannot parse root system type {text!r}")
    return cartan_matrix(m.group(1).upper(), int(m.group(2)))


def cartan_integer(rs: RootSystemData, m: int, j: int) -> int:
    """``<alpha_m^vee, alpha_j>`` with 1-based indices."""
    rs.check_index(m)
    rs.check_index(j)
    return rs.cartan[m - 1][j - 1]


def simple_reflection_matrix(rs: RootSystemData, i: int) -> Matrix:
    """Matrix of ``s_i`` acting on column vectors of simple-root coordinates."""
    rs.check_index(i)
    return rs.reflections[i - 1]
