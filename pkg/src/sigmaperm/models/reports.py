"""Verdicts, witnesses and command reports."""

from dataclasses import dataclass, field
from typing import Any, Optional

from ..errors import InvariantViolation


@dataclass(frozen=True)
class Witness:
    """Structured reason for a negative verdict.

    ``kind`` names the failing condition (``label``, ``commutator``,
    ``chief_factor``, ``chain``, ``closure_not_nilpotent``, ``unstable``);
    ``detail`` holds JSON-compatible values describing it.
    """

    kind: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, **self.detail}

    def describe(self) -> str:
        parts = ", ".join(f"{key}={value}" for key, value in self.detail.items())
        return f"{self.kind} ({parts})" if parts else self.kind


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a σ-property check. A false verdict always has a witness."""

    verdict: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if not self.verdict and self.witness is None:
            raise InvariantViolation("negative verdict without a witness")

    def __bool__(self) -> bool:
        return self.verdict

    @classmethod
    def holds(cls) -> "CheckReport":
        return cls(True)

    @classmethod
    def fails(cls, kind: str, **detail: Any) -> "CheckReport":
        return cls(False, Witness(kind, detail))


@dataclass(frozen=True)
class GroupSummary:
    """Degree, order and prime set of a group shown in a report."""

    degree: int
    order: int
    primes: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "order": self.order, "primes": list(self.primes)}


@dataclass
class Report:
    """Everything a CLI command prints, in a stable field order."""

    command: str
    group: GroupSummary
    normal: Optional[GroupSummary] = None
    subgroup: Optional[GroupSummary] = None
    sigma: Optional[str] = None
    verdict: Optional[bool] = None
    least: Optional[str] = None
    witness: Optional[Witness] = None
    millis: int = 0

    SCHEMA = 1

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready mapping; optional fields are omitted when unset."""
        out: dict[str, Any] = {
            "schema": self.SCHEMA,
            "command": self.command,
            "group": self.group.to_dict(),
        }
        if self.normal is not None:
            out["normal"] = self.normal.to_dict()
        if self.subgroup is not None:
            out["subgroup"] = self.subgroup.to_dict()
        if self.sigma is not None:
            out["sigma"] = self.sigma
        if self.verdict is not None:
            out["verdict"] = self.verdict
        if self.least is not None:
            out["least"] = self.least
        if self.verdict is not None or self.witness is not None:
            out["witness"] = self.witness.to_dict() if self.witness else None
        out["millis"] = self.millis
        return out
