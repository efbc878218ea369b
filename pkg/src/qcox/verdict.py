"""Pass/fail outcome of a mechanical check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: str = ""
    violations: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, witness: str, violations: List[str] | None = None) -> "Verdict":
        return cls(False, witness, list(violations or [witness]))

    @classmethod
    def combine(cls, verdicts) -> "Verdict":
        """First failure wins; all pass gives a pass."""
        for v in verdicts:
            if not v.ok:
                return v
        return cls.passed()
