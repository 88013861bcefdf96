"""
Lemma verdict records
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class LemmaReport:
    """
    One verified instance. `margin` is signed toward the claim: positive
    values support it. Spectral checks keep graph6 of both graphs so any
    FAIL can be reproduced from the report alone.
    """

    lemma: str
    params: Dict[str, Any]
    verdict: Verdict
    margin: Optional[float] = None
    rho1: Optional[float] = None
    rho2: Optional[float] = None
    graph6_1: Optional[str] = None
    graph6_2: Optional[str] = None
    runtime_s: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self, include_timings: bool = False) -> Dict[str, Any]:
        """Stable field order; runtimes only on request so reports stay reproducible"""
        record: Dict[str, Any] = {
            "lemma": self.lemma,
            "params": self.params,
            "verdict": self.verdict.value,
            "margin": self.margin,
            "rho1": self.rho1,
            "rho2": self.rho2,
            "graph6_1": self.graph6_1,
            "graph6_2": self.graph6_2,
        }
        if self.details:
            record["details"] = self.details
        if include_timings:
            record["runtime_s"] = self.runtime_s
        return record


def verdict_counts(reports) -> Dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for report in reports:
        counts[report.verdict.value] += 1
    return counts
