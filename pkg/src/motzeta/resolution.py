"""Combinatorial data of a strict-normal-crossings resolution.

The tuple (strata ids, multiplicities N, discrepancies nu, form orders alpha,
auxiliary orders M, stratum-cover classes) is trusted input; only the
combinatorial invariants that are checkable from the data are validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import MissingDiscrepancy, ValidationError
from .ring import MotivicClass


@dataclass(frozen=True)
class StratumDatum:
    id: str
    N: int
    nu: int | None = None
    alpha: int | None = None
    M: tuple | None = None

    def __post_init__(self):
        if self.M is not None:
            object.__setattr__(self, "M", tuple(int(m) for m in self.M))


@dataclass(frozen=True)
class GaugeSpec:
    mode: str = "explicit_alpha"  # or "gelfand_leray"

    def __post_init__(self):
        if self.mode not in ("explicit_alpha", "gelfand_leray"):
            raise ValidationError(f"unknown gauge mode {self.mode!r}")

    def alpha(self, stratum: StratumDatum) -> int:
        if self.mode == "gelfand_leray":
            if stratum.nu is None:
                raise MissingDiscrepancy(
                    f"stratum {stratum.id!r} has no discrepancy for the Gelfand-Leray gauge")
            return stratum.nu - stratum.N
        if stratum.alpha is None:
            raise ValidationError(f"stratum {stratum.id!r} has no explicit form order")
        return stratum.alpha


GELFAND_LERAY = GaugeSpec("gelfand_leray")
EXPLICIT = GaugeSpec("explicit_alpha")


@dataclass(frozen=True)
class ResolutionData:
    d: int
    base: str
    strata: tuple
    classes: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(
            self, "classes",
            {frozenset(I): cls for I, cls in self.classes.items() if not cls.is_zero()})

    def stratum(self, sid: str) -> StratumDatum:
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def subsets(self):
        """The nonempty subsets I carrying a nonzero class, as sorted id tuples."""
        order = {s.id: i for i, s in enumerate(self.strata)}
        for I, cls in sorted(self.classes.items(), key=lambda kv: sorted(kv[0])):
            yield tuple(sorted(I, key=lambda sid: order[sid])), cls

    def N_I(self, I) -> int:
        g = 0
        for sid in I:
            g = gcd(g, self.stratum(sid).N)
        return g

    def with_classes(self, classes) -> "ResolutionData":
        return ResolutionData(self.d, self.base, self.strata, dict(classes))


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def render(self) -> str:
        lines = [f"ERROR: {e}" for e in self.errors]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines) if lines else "valid"


def validate(data: ResolutionData) -> ValidationReport:
    report = ValidationReport()
    if data.d < 0:
        report.errors.append(f"relative dimension must be >= 0, got {data.d}")
    ids = [s.id for s in data.strata]
    if len(set(ids)) != len(ids):
        report.errors.append("duplicate stratum ids")
    r = None
    for s in data.strata:
        if s.N < 1:
            report.errors.append(f"stratum {s.id!r}: multiplicity N must be >= 1")
        if s.nu is not None and s.nu < 1:
            report.errors.append(f"stratum {s.id!r}: discrepancy nu must be >= 1")
        if s.M is not None:
            if any(m < 0 for m in s.M):
                report.errors.append(f"stratum {s.id!r}: auxiliary orders must be >= 0")
            if r is None:
                r = len(s.M)
            elif len(s.M) != r:
                report.errors.append(f"stratum {s.id!r}: auxiliary order vector length mismatch")
    known = set(ids)
    for I, cls in data.classes.items():
        unknown = set(I) - known
        if unknown:
            report.errors.append(f"class indexed by unknown strata {sorted(unknown)}")
            continue
        if cls.base != data.base:
            report.errors.append(
                f"class for {sorted(I)} has base {cls.base!r}, expected {data.base!r}")
        nI = data.N_I(tuple(I))
        for sym in cls.terms:
            if nI % sym.mu_order != 0:
                report.errors.append(
                    f"class for {sorted(I)}: symbol {sym.name!r} has mu_order "
                    f"{sym.mu_order}, which does not divide N_I = {nI}")
        if len(I) > data.d + 1:
            report.warnings.append(
                f"class for {sorted(I)}: |I| = {len(I)} exceeds d + 1 = {data.d + 1}")
    for I, _ in data.classes.items():
        if len(I) == 2:
            total = sum(data.stratum(sid).N for sid in I)
            if total <= 2:
                report.warnings.append(
                    f"intersecting pair {sorted(I)} has N_i + N_j = {total}; "
                    "a separating resolution may be needed for per-level formulas")
    return report
