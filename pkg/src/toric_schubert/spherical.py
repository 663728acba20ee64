"""Smoothness of Levi-spherical Schubert varieties via ``w = w_{0,J} c``.

Sphericality of ``X_{wB}`` for ``L_J`` is taken as a hypothesis and never
checked; reports carry ``"sphericality": "assumed"``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FactorizationFails, NotMinCosetRep
from .root_system import RootSystemData
from .smoothness import smooth_by_criterion
from .verdict import SmoothnessVerdict
from .weyl_group import (
    ParabolicSpec,
    WeylElement,
    format_word,
    is_coxeter_type,
    is_min_coset_rep,
    longest_element,
    support,
)


@dataclass(frozen=True)
class LeviFactorization:
    w: WeylElement
    levi: frozenset[int]
    longest: WeylElement
    c: WeylElement
    horospherical: bool

    def to_dict(self) -> dict:
        return {
            "w": format_word(self.w.canonical_word),
            "levi": sorted(self.levi),
            "w0J": format_word(self.longest.canonical_word),
            "c": format_word(self.c.canonical_word),
            "c_inverse_word": list(self.c.inverse().canonical_word),
            "lengths": [self.w.length, self.longest.length, self.c.length],
            "horospherical": self.horospherical,
        }


def levi_factorization(rs: RootSystemData, w: WeylElement, levi) -> LeviFactorization:
    """Split ``w = w_{0,J} c`` with additive lengths and ``c`` of Coxeter type."""
    levi = frozenset(levi)
    w0 = longest_element(rs, levi)
    c = w0.inverse() * w
    if w.length != w0.length + c.length:
        raise FactorizationFails(
            f"l(w)={w.length} != l(w0J)+l(c)={w0.length}+{c.length} for J={sorted(levi)}"
        )
    if not is_coxeter_type(c):
        raise FactorizationFails(f"c={format_word(c.canonical_word)} is not of Coxeter type")
    return LeviFactorization(w, levi, w0, c, not (support(c) & levi))


def spherical_smoothness(rs: RootSystemData, w: WeylElement, levi) -> SmoothnessVerdict:
    """Smoothness of ``X_{wB}`` read off from the toric variety ``X_{c^{-1} P_J}``."""
    fac = levi_factorization(rs, w, levi)
    c_inv = fac.c.inverse()
    p = ParabolicSpec(fac.levi)
    if not is_min_coset_rep(c_inv, p):
        raise NotMinCosetRep(f"c^-1={format_word(c_inv.canonical_word)} is not in W^J")
    verdict = smooth_by_criterion(rs, c_inv.canonical_word, p)
    witness = dict(verdict.witness, factorization=fac.to_dict(), sphericality="assumed")
    return SmoothnessVerdict(verdict.smooth, verdict.method, witness)
