from __future__ import annotations

import contextlib
import dataclasses
import enum
import time
import typing

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

    from polynomial_zsigmondy.poly import Poly


class Verdict(enum.Enum):
    VERIFIED_IN_RANGE = "verified-in-range"
    COUNTEREXAMPLE = "counterexample"
    RECORDED_ONLY = "recorded-only"


@dataclasses.dataclass(frozen=True)
class Witness:
    """A failing (or merely recorded) case, with enough data to replay it."""

    indices: tuple[int, ...]
    polys: tuple[tuple[str, Poly], ...] = ()
    note: str = ""

    def poly(self, label: str) -> Poly:
        for name, poly in self.polys:
            if name == label:
                return poly
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "polys": {label: str(poly) for label, poly in self.polys},
            "note": self.note,
        }


@dataclasses.dataclass
class Report:
    """
    Outcome of checking one statement on one sequence. Cases recorded with ``asserted=False``, or any
    case once the report is `recorded_only`, land in `observations` instead of `failures`, so the
    verdict is a counterexample exactly when `failures` is non-empty.
    """

    statement: str
    spec: str
    range: tuple[int, int]
    seed: int = 0
    cases: int = 0
    failures: list[Witness] = dataclasses.field(default_factory=list)
    observations: list[Witness] = dataclasses.field(default_factory=list)
    notes: list[str] = dataclasses.field(default_factory=list)
    recorded_only: bool = False
    ms: int = 0

    @property
    def verdict(self) -> Verdict:
        if self.failures:
            return Verdict.COUNTEREXAMPLE
        if self.recorded_only:
            return Verdict.RECORDED_ONLY
        return Verdict.VERIFIED_IN_RANGE

    def downgrade(self, reason: str) -> None:
        """Hypotheses of the statement do not hold: keep checking, but only record."""
        self.recorded_only = True
        self.notes.append(f"recorded only: {reason}")

    def record(self, ok: bool, witness: typing.Callable[[], Witness], asserted: bool = True) -> bool:
        """Counts one case; `witness` is only built when the case fails."""
        self.cases += 1
        if not ok:
            if asserted and not self.recorded_only:
                self.failures.append(witness())
            else:
                self.observations.append(witness())
        return ok

    def merge(self, other: Report) -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.observations.extend(other.observations)
        self.notes.extend(f"{other.statement}: {note}" for note in other.notes)
        self.ms += other.ms

    @contextlib.contextmanager
    def timed(self, enabled: bool) -> Iterator[None]:
        """Adds wall time to `ms` when enabled; reports stay byte-stable otherwise."""
        start = time.perf_counter()
        try:
            yield
        finally:
            if enabled:
                self.ms += int((time.perf_counter() - start) * 1000)

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "spec": self.spec,
            "range": list(self.range),
            "cases": self.cases,
            "failures": [w.to_json() for w in self.failures],
            "observations": [w.to_json() for w in self.observations],
            "notes": list(self.notes),
            "verdict": self.verdict.value,
            "seed": self.seed,
            "ms": self.ms,
        }

    def to_text(self) -> str:
        lines = [
            f"{self.statement} on {self.spec}",
            f"  range {self.range[0]}..{self.range[1]}, {self.cases} cases: {self.verdict.value}",
        ]
        for label, witnesses in (("failure", self.failures), ("observation", self.observations)):
            for witness in witnesses:
                polys = ", ".join(f"{name} = {poly}" for name, poly in witness.polys)
                lines.append(f"  {label} at {list(witness.indices)}: {witness.note} {polys}".rstrip())
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)
