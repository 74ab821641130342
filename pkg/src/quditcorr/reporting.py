"""Report assembly for the command-line surface.

Every numeric check carries the tolerance it was judged against, and
rendering is deterministic (sorted keys, repr floats, no timestamps) so
that identical request + seed produces a byte-identical report.
"""

import json
import math
from dataclasses import dataclass, field, is_dataclass, asdict

import numpy as np

from ._version import __version__


@dataclass
class CheckRecord:
    name: str
    value: float
    holds: bool
    tolerance: float


def jsonable(obj):
    """Recursively convert report values to JSON-safe types.

    Infinities become the strings "inf"/"-inf" (the divergence flag);
    complex numbers become {"re": ..., "im": ...}.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            raise ValueError("refusing to serialize NaN into a report")
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, complex):
        return {"re": jsonable(obj.real), "im": jsonable(obj.imag)}
    if isinstance(obj, np.generic):
        return jsonable(obj.item())
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if is_dataclass(obj):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


@dataclass
class Report:
    request: dict
    seed: int | None
    results: dict
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "tool": {"name": "quditcorr", "version": __version__},
            "request": jsonable(self.request),
            "seed": self.seed,
            "results": jsonable(self.results),
            "checks": [jsonable(c) for c in self.checks],
        }

    def render(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"
