# tasks/records.py
from dataclasses import dataclass, field
from typing import Dict, List

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class AssertionRecord:
    id: str
    anchor: str
    verdict: str
    values: Dict = field(default_factory=dict)

    @classmethod
    def check(cls, id: str, anchor: str, passed: bool, **values) -> "AssertionRecord":
        return cls(id, anchor, PASS if passed else FAIL, values)

    @classmethod
    def skip(cls, id: str, anchor: str, reason: str) -> "AssertionRecord":
        return cls(id, anchor, SKIPPED, {"reason": reason})

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_json(self):
        return {"id": self.id, "anchor": self.anchor, "verdict": self.verdict, "values": self.values}


@dataclass
class SuiteReport:
    seed: int
    rational_only: bool
    records: List[AssertionRecord] = field(default_factory=list)
    header: Dict = field(default_factory=dict)

    def extend(self, records):
        self.records.extend(records)

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.records)

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.records:
            out[r.verdict] += 1
        return out

    def to_json(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "rational_only": self.rational_only,
            "header": self.header,
            "summary": self.counts(),
            "records": [r.to_json() for r in self.records],
        }

    def summary_lines(self) -> List[str]:
        lines = []
        for r in self.records:
            tail = f" ({r.values['reason']})" if r.verdict == SKIPPED else ""
            lines.append(f"[{r.verdict.upper():7}] {r.id}: {r.anchor}{tail}")
        c = self.counts()
        lines.append(f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return lines
