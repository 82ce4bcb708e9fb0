"""Machine-readable verification outcomes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from .ring import Polynomial, degrevlex_key

PASS = "PASS"
FAIL = "FAIL"
COMPUTED = "COMPUTED"
ERROR = "ERROR"
STATUSES = (PASS, FAIL, COMPUTED, ERROR)


@dataclass
class Report:
    claim: str
    status: str
    payload: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[Any] = field(default_factory=list)
    command: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a FAIL report must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, COMPUTED)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "claim": self.claim,
            "status": self.status,
            "payload": self.payload,
            "witnesses": self.witnesses,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.claim}: {self.status}"]
        for k in sorted(self.payload):
            lines.append(f"  {k}: {_text_value(self.payload[k])}")
        for w in self.witnesses:
            lines.append(f"  witness: {_text_value(w)}")
        return "\n".join(lines)


def _text_value(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text_value(x)}" for k, x in v.items()) + "}"
    return str(v)


def canonical_generators(gens: Sequence[Polynomial]) -> List[Polynomial]:
    """Monic, deduplicated, sorted by order and then degrevlex lead monomial."""
    out: List[Polynomial] = []
    for g in gens:
        if g:
            g = g.monic()
            if g not in out:
                out.append(g)
    out.sort(key=lambda g: (g.order(), degrevlex_key(g.lead_monomial())))
    return out


def format_generators(gens: Sequence[Polynomial], names: Sequence[str] | None = None) -> List[str]:
    return [g.format(names) for g in canonical_generators(gens)]
