from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Union

Counterexample = Union[Dict[str, Any], Callable[[], Dict[str, Any]], None]


@dataclass
class PropertyResult:
    """
    Pass/fail tally for one checked property.

    Only the counterexample with the smallest sample index is kept, so the
    result does not depend on the order in which samples are recorded.
    """
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    witness: Optional[Dict[str, Any]] = None
    _first_failure: Optional[int] = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, counterexample: Counterexample = None, index: Optional[int] = None) -> bool:
        if index is None:
            index = self.checked
        self.checked += 1
        if ok:
            return True
        self.failed += 1
        if self._first_failure is None or index < self._first_failure:
            self._first_failure = index
            # callables defer encoding until a failure is actually kept
            self.counterexample = counterexample() if callable(counterexample) else counterexample
        return False

    def expect_found(self, found: Optional[Dict[str, Any]], missing: Dict[str, Any]) -> bool:
        """Existence property: passes when `found` is not None, which becomes the witness."""
        if found is not None:
            self.witness = found
            return self.record(True)
        return self.record(False, missing)

    def to_dict(self, label: str = "name") -> Dict[str, Any]:
        out = {
            label: self.name,
            "checked": self.checked,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out
