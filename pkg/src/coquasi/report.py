"""Axiom-check reports shared by every validator."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .exactla import nonzero_mask


@dataclass
class Failure:
    axiom: str
    index: tuple
    detail: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "index": [int(i) for i in self.index]}


@dataclass
class Report:
    subject: str = ""
    failures: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def fail(self, axiom: str, index=(), detail: str = "") -> None:
        self.failures.append(Failure(axiom, tuple(int(i) for i in index), detail))

    def flag(self, name: str) -> None:
        if name not in self.flags:
            self.flags.append(name)

    def failed_axioms(self) -> list[str]:
        seen = []
        for f in self.failures:
            if f.axiom not in seen:
                seen.append(f.axiom)
        return seen

    def has_failure(self, axiom: str) -> bool:
        return any(f.axiom == axiom for f in self.failures)

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for f in other.failures:
            self.failures.append(Failure(prefix + f.axiom, f.index, f.detail))
        for fl in other.flags:
            self.flag(fl)
        self.checked.extend(prefix + c for c in other.checked)
        return self

    def compare(self, axiom: str, lhs, rhs, n_index: int | None = None) -> bool:
        """Record ``axiom`` and fail it at the first entry where ``lhs != rhs``.

        Arrays are laid out with the input basis indices first; the reported
        index is the first ``n_index`` coordinates of the offending entry
        (all of them when ``n_index`` is None).
        """
        self.checked.append(axiom)
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            self.fail(axiom, (), f"shape {lhs.shape} vs {rhs.shape}")
            return False
        bad = np.argwhere(nonzero_mask(lhs - rhs)) if lhs.size else []
        if len(bad) == 0:
            return True
        pos = tuple(int(i) for i in bad[0])
        idx = pos if n_index is None else pos[:n_index]
        self.fail(axiom, idx, f"entry {pos}: {lhs[pos]} != {rhs[pos]}")
        return False

    def require(self, axiom: str, ok: bool, index=(), detail: str = "") -> bool:
        self.checked.append(axiom)
        if not ok:
            self.fail(axiom, index, detail)
        return ok

    def to_json(self) -> dict:
        out = {"pass": self.passed, "failures": [f.to_json() for f in self.failures]}
        if self.flags:
            out["flags"] = list(self.flags)
        return out

    def render_text(self) -> str:
        head = f"{self.subject or 'report'}: {'PASS' if self.passed else 'FAIL'}"
        lines = [head]
        if self.flags:
            lines.append("  flags: " + ", ".join(self.flags))
        if self.failures:
            width = max(len(f.axiom) for f in self.failures)
            lines.append(f"  {'axiom'.ljust(width)}  index")
            for f in self.failures:
                lines.append(f"  {f.axiom.ljust(width)}  {list(f.index)}")
        return "\n".join(lines)

    def __str__(self):
        return self.render_text()


def combine(subject: str, reports: Iterable[Report]) -> Report:
    out = Report(subject)
    for r in reports:
        out.merge(r)
    return out
