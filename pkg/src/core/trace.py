"""Step-by-step explanations of a weekday or doomsyear calculation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .types import MethodId, Mod7


@dataclass(frozen=True)
class TraceStep:
    """One labelled intermediate value.

    `display` overrides how the value is printed; Conway half anchors are
    carried as the integer 95 but shown as "95.5".
    """

    label: str
    value: int
    display: Optional[str] = None

    @property
    def text(self) -> str:
        return self.display if self.display is not None else str(int(self.value))

    def line(self) -> str:
        return f"{self.label}: {self.text}"


@dataclass(frozen=True)
class Trace:
    """Ordered steps of a calculation plus its reduced result.

    The last step is always the unreduced sum; a trace whose sum does not
    reduce to `result` cannot be constructed.
    """

    method: MethodId
    steps: Tuple[TraceStep, ...]
    result: Mod7
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "result", Mod7(self.result))
        if not self.steps:
            raise ValueError("Trace needs at least one step")

        final = self.steps[-1]
        if Mod7(final.value) != self.result:
            raise ValueError(
                f"Trace for {self.method.value} ends with {final.label}={final.value}, "
                f"which does not reduce to {int(self.result)}"
            )

        for step in self.steps:
            self._index.setdefault(step.label, step)

    @property
    def labels(self) -> List[str]:
        return [step.label for step in self.steps]

    def step(self, label: str) -> TraceStep:
        """First step carrying `label`."""
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"No step labelled {label!r} in trace (have: {self.labels})") from None

    def value_of(self, label: str) -> int:
        return self.step(label).value

    def lines(self) -> List[str]:
        return [step.line() for step in self.steps]
