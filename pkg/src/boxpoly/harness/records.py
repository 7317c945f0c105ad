"""Experiment records and their json-lines schema."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from boxpoly.core import (
    CoefficientDistribution,
    IntPolynomial,
    is_palindromic,
    is_strictly_unimodal,
    is_unimodal,
    to_distribution,
)
from boxpoly.invariants import (
    DEFAULT_CAP,
    CapExceeded,
    InvariantViolation,
    find_non_idp_witness,
    gcd_criterion,
    hstar,
    idp_certificate,
    local_hstar,
)
from boxpoly.simplex import DegenerateRowError, OneRowSimplex

SCHEMA_VERSION = 1

IDP_MODES = ("skip", "height2", "exhaustive")


@dataclass(frozen=True)
class ExperimentRecord:
    simplex: OneRowSimplex
    box: IntPolynomial
    hstar: IntPolynomial
    box_distribution: CoefficientDistribution | None  # None when the box polynomial vanishes
    unimodal: bool
    strictly_unimodal: bool
    gcd_criterion: bool | None  # None when M is undefined (a zero entry or sum(a) <= 1)
    idp_witness_found: str  # "yes", "no" or "skipped"
    wall_time: float  # milliseconds

    @property
    def spec(self) -> str:
        return self.simplex.spec()

    def check_consistency(self) -> None:
        """Raise ``InvariantViolation`` if the polynomial fields disagree."""
        s = self.simplex
        if len(self.box) != s.d + 1 or len(self.hstar) != s.d + 1:
            raise InvariantViolation(f"{s}: stored vectors must have length d + 1")
        if any(self.box[i] > self.hstar[i] for i in range(s.d + 1)):
            raise InvariantViolation(f"{s}: box exceeds h* coefficient-wise")
        if self.hstar(1) != s.N:
            raise InvariantViolation(f"{s}: h*(1) = {self.hstar(1)} != N")
        if self.box[0]:
            raise InvariantViolation(f"{s}: box has a constant term")
        if not is_palindromic(self.box, 1, s.d):
            raise InvariantViolation(f"{s}: B/z is not palindromic")
        if self.box.is_zero():
            if self.box_distribution is not None:
                raise InvariantViolation(f"{s}: distribution attached to a zero box")
        else:
            dist = self.box_distribution
            if dist is None or dist != to_distribution(self.box):
                raise InvariantViolation(f"{s}: distribution not derived from box")
            if sum(dist.probs, Fraction(0)) != 1:
                raise InvariantViolation(f"{s}: distribution does not sum to 1")
        if self.unimodal != is_unimodal(self.box):
            raise InvariantViolation(f"{s}: stale unimodal flag")
        if self.strictly_unimodal != is_strictly_unimodal(self.box):
            raise InvariantViolation(f"{s}: stale strict unimodal flag")

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        dist = self.box_distribution
        return {
            "schema": SCHEMA_VERSION,
            "a": list(self.simplex.a),
            "N": str(self.simplex.N),
            "d": self.simplex.d,
            "box": [str(c) for c in self.box],
            "hstar": [str(c) for c in self.hstar],
            "box_dist": [] if dist is None else [[str(p.numerator), str(p.denominator)] for p in dist],
            "unimodal": self.unimodal,
            "strictly_unimodal": self.strictly_unimodal,
            "gcd_criterion": self.gcd_criterion,
            "idp_witness": self.idp_witness_found,
            # Zeroed unless requested so that reruns are byte-identical.
            "ms": round(self.wall_time, 3) if timings else 0.0,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> ExperimentRecord:
        if obj.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {obj.get('schema')!r}")
        if "degenerate" in obj:
            raise ValueError("degenerate entries carry no simplex")
        s = OneRowSimplex(tuple(int(x) for x in obj["a"]), int(obj["N"]))
        box = IntPolynomial(int(c) for c in obj["box"])
        dist = None
        if obj["box_dist"]:
            dist = CoefficientDistribution(
                tuple(Fraction(int(n), int(d)) for n, d in obj["box_dist"])
            )
        return cls(
            simplex=s,
            box=box,
            hstar=IntPolynomial(int(c) for c in obj["hstar"]),
            box_distribution=dist,
            unimodal=obj["unimodal"],
            strictly_unimodal=obj["strictly_unimodal"],
            gcd_criterion=obj["gcd_criterion"],
            idp_witness_found=obj["idp_witness"],
            wall_time=float(obj["ms"]),
        )


@dataclass(frozen=True)
class DegenerateEntry:
    """A row that admits no simplex under the chosen volume policy (``M`` undefined)."""

    a: tuple[int, ...]
    reason: str

    @property
    def spec(self) -> str:
        return ",".join(str(x) for x in self.a) + ";?"

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "a": list(self.a),
            "N": None,
            "d": len(self.a) + 1,
            "degenerate": self.reason,
        }


def _idp_status(s: OneRowSimplex, mode: str, cap: int) -> str:
    if mode == "skip":
        return "skipped"
    try:
        if mode == "height2":
            witness = find_non_idp_witness(s, 2, cap)
        elif mode == "exhaustive":
            witness = idp_certificate(s, cap)
        else:
            raise ValueError(f"unknown idp mode {mode!r}; expected one of {IDP_MODES}")
    except CapExceeded:
        return "skipped"
    return "yes" if witness is not None else "no"


def build_record(s: OneRowSimplex, idp: str = "skip", cap: int = DEFAULT_CAP) -> ExperimentRecord:
    start = time.perf_counter()
    box = local_hstar(s)
    h = hstar(s)
    try:
        gcd_ok: bool | None = gcd_criterion(s)
    except DegenerateRowError:
        gcd_ok = None
    status = _idp_status(s, idp, cap)
    record = ExperimentRecord(
        simplex=s,
        box=box,
        hstar=h,
        box_distribution=None if box.is_zero() else to_distribution(box),
        unimodal=is_unimodal(box),
        strictly_unimodal=is_strictly_unimodal(box),
        gcd_criterion=gcd_ok,
        idp_witness_found=status,
        wall_time=(time.perf_counter() - start) * 1000.0,
    )
    record.check_consistency()
    return record


def dumps(entry: ExperimentRecord | DegenerateEntry, timings: bool = False) -> str:
    return json.dumps(entry.to_json(timings), separators=(",", ":"))


def loads(line: str) -> ExperimentRecord | DegenerateEntry:
    obj = json.loads(line)
    if "degenerate" in obj:
        return DegenerateEntry(tuple(int(x) for x in obj["a"]), obj["degenerate"])
    return ExperimentRecord.from_json(obj)
