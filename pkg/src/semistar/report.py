"""Check records and deterministic JSON reports.

Reports are deterministic for a fixed (scenario, seed, cutoff): keys are
sorted and timing is excluded from the serialization unless explicitly
requested.  Exit-code contract: 0 all pass, 1 any fail, 2 inconclusive
results only, 3 usage or parse error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    name: str
    inputs: dict
    verdict: str
    witness: object = None
    detail: dict | None = None
    elapsed: float | None = None

    def as_dict(self, include_timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        if include_timing and self.elapsed is not None:
            out["elapsed"] = self.elapsed
        return out


@dataclass
class Report:
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)

    def record(self, check: CheckRecord):
        self.checks.append(check)

    @property
    def summary(self) -> dict:
        return {
            "pass": sum(1 for c in self.checks if c.verdict == PASS),
            "fail": sum(1 for c in self.checks if c.verdict == FAIL),
            "inconclusive": sum(1 for c in self.checks if c.verdict == INCONCLUSIVE),
        }

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return EXIT_FAIL
        if s["inconclusive"]:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS

    def as_dict(self, include_timing: bool = False) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "seed": self.seed,
            "checks": [c.as_dict(include_timing) for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(
            self.as_dict(include_timing), sort_keys=True, separators=(",", ": "), indent=1
        )
