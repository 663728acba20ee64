from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

METHODS = ("direct-criterion", "graph-criterion", "cone-oracle", "trivial-case")


@dataclass(frozen=True)
class SmoothnessVerdict:
    """A smooth/singular decision together with a machine-checkable witness."""

    smooth: bool
    method: str
    witness: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert self.method in METHODS, self.method

    def to_dict(self) -> dict[str, Any]:
        return {"smooth": self.smooth, "method": self.method, "witness": self.witness}
