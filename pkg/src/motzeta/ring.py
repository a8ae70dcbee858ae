"""Free-module model of equivariant Grothendieck rings of varieties.

Classes are finite sums of mu-tagged stratum symbols over a named base, with
Laurent coefficients in L.  No cut-and-paste relations are enforced: equality
is structural, and all downstream identities are arranged over shared symbol
alphabets so that structural equality suffices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BaseMismatch, MissingSymbol, ValidationError
from .laurent import LaurentPoly

PT = "pt"


@dataclass(frozen=True)
class GeneratorSymbol:
    """A mu_m-tagged stratum symbol over a named base variety."""

    name: str
    mu_order: int = 1
    base: str = "k"

    def __post_init__(self):
        if not self.name:
            raise ValidationError("symbol name must be nonempty")
        if self.mu_order < 1:
            raise ValidationError(f"mu_order must be >= 1, got {self.mu_order}")
        if self.name == PT and self.mu_order != 1:
            raise ValidationError("the unit symbol 'pt' must have mu_order 1")


def pt(base: str = "k") -> GeneratorSymbol:
    return GeneratorSymbol(PT, 1, base)


class MotivicClass:
    """Element of the free module over GeneratorSymbols with LaurentPoly coefficients."""

    __slots__ = ("base", "terms")

    def __init__(self, base: str, terms=None):
        self.base = base
        clean = {}
        if terms:
            for sym, coeff in terms.items():
                if sym.base != base:
                    raise BaseMismatch(
                        f"symbol {sym.name} has base {sym.base!r}, class has base {base!r}")
                if coeff:
                    if sym in clean:
                        clean[sym] = clean[sym] + coeff
                    else:
                        clean[sym] = coeff
            clean = {s: c for s, c in clean.items() if c}
        # one mu_order per symbol name within a class
        seen = {}
        for sym in clean:
            if sym.name in seen and seen[sym.name] != sym.mu_order:
                raise ValidationError(
                    f"symbol {sym.name!r} used with mu_order {seen[sym.name]} and {sym.mu_order}")
            seen[sym.name] = sym.mu_order
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(base: str = "k") -> "MotivicClass":
        return MotivicClass(base)

    @staticmethod
    def unit(base: str = "k") -> "MotivicClass":
        return MotivicClass(base, {pt(base): LaurentPoly.one()})

    @staticmethod
    def of_symbol(sym: GeneratorSymbol, coeff: LaurentPoly | None = None) -> "MotivicClass":
        return MotivicClass(sym.base, {sym: coeff if coeff is not None else LaurentPoly.one()})

    @staticmethod
    def lefschetz(base: str = "k", exp: int = 1) -> "MotivicClass":
        return MotivicClass(base, {pt(base): LaurentPoly.L(exp)})

    # -- module / ring structure --------------------------------------

    def __add__(self, other: "MotivicClass") -> "MotivicClass":
        if self.base != other.base:
            raise BaseMismatch(f"cannot add classes over {self.base!r} and {other.base!r}")
        out = dict(self.terms)
        for sym, coeff in other.terms.items():
            out[sym] = out[sym] + coeff if sym in out else coeff
        return MotivicClass(self.base, out)

    def __neg__(self) -> "MotivicClass":
        return MotivicClass(self.base, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "MotivicClass") -> "MotivicClass":
        return self + (-other)

    def scale(self, poly: LaurentPoly) -> "MotivicClass":
        return MotivicClass(self.base, {s: c * poly for s, c in self.terms.items()})

    def scale_int(self, n: int) -> "MotivicClass":
        return self.scale(LaurentPoly.const(n))

    def __mul__(self, other: "MotivicClass") -> "MotivicClass":
        if self.base != other.base:
            raise BaseMismatch(f"cannot multiply classes over {self.base!r} and {other.base!r}")
        out = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                sym = _symbol_product(s1, s2)
                coeff = c1 * c2
                out[sym] = out[sym] + coeff if sym in out else coeff
        return MotivicClass(self.base, out)

    def push(self, new_base: str) -> "MotivicClass":
        """Relabel the base of the class and every symbol in it."""
        return MotivicClass(
            new_base,
            {GeneratorSymbol(s.name, s.mu_order, new_base): c for s, c in self.terms.items()},
        )

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MotivicClass)
                and self.base == other.base and self.terms == other.terms)

    def __hash__(self):
        return hash((self.base, frozenset(self.terms.items())))

    def render(self) -> str:
        """Canonical text rendering; terms sorted by symbol name."""
        if not self.terms:
            return "0"
        parts = []
        for sym in sorted(self.terms, key=lambda s: s.name):
            poly = self.terms[sym].render()
            if " + " in poly:
                poly = f"({poly})"
            parts.append(f"{poly} * [{sym.name}; mu={sym.mu_order}; base={sym.base}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"MotivicClass({self.render()})"

    def diff(self, other: "MotivicClass") -> str:
        """Human-readable term-level diff, for verification reports."""
        lines = []
        keys = {(s.name, s.mu_order) for s in self.terms} | {
            (s.name, s.mu_order) for s in other.terms}
        for name, mu in sorted(keys):
            a = next((c for s, c in self.terms.items() if s.name == name), LaurentPoly.zero())
            b = next((c for s, c in other.terms.items() if s.name == name), LaurentPoly.zero())
            if a != b:
                lines.append(f"  [{name}; mu={mu}]: {a.render()}  vs  {b.render()}")
        return "\n".join(lines) if lines else "  (no differing terms)"


def _symbol_product(a: GeneratorSymbol, b: GeneratorSymbol) -> GeneratorSymbol:
    """Commutative, associative product on symbols; 'pt' is the unit.

    Compound names are the sorted multiset of atomic names joined by '⊗'.
    """
    atoms = [n for n in a.name.split("⊗") + b.name.split("⊗") if n != PT]
    if not atoms:
        return pt(a.base)
    name = "⊗".join(sorted(atoms))
    return GeneratorSymbol(name, math.lcm(a.mu_order, b.mu_order), a.base)


@dataclass
class SpecializationMap:
    """Ring homomorphism out of the free module: L -> lefschetz_value, symbols -> ints."""

    lefschetz_value: LaurentPoly = field(default_factory=LaurentPoly.one)
    symbol_values: dict = field(default_factory=dict)
    missing_policy: str = "error"  # or "zero"

    def value_of(self, sym: GeneratorSymbol) -> int:
        if sym.name == PT:
            return self.symbol_values.get(PT, 1)
        if sym.name in self.symbol_values:
            return self.symbol_values[sym.name]
        # compound product symbols specialize multiplicatively
        atoms = sym.name.split("⊗")
        if len(atoms) > 1 and all(a in self.symbol_values or a == PT for a in atoms):
            v = 1
            for a in atoms:
                v *= self.symbol_values.get(a, 1)
            return v
        if self.missing_policy == "zero":
            return 0
        raise MissingSymbol(f"no specialization value for symbol {sym.name!r}")

    def apply(self, cls: MotivicClass) -> LaurentPoly:
        total = LaurentPoly.zero()
        for sym, coeff in cls.terms.items():
            total = total + coeff.substitute(self.lefschetz_value).scale(self.value_of(sym))
        return total


def euler_specialization(symbol_values: dict, missing_policy: str = "error") -> SpecializationMap:
    """Euler characteristic with compact supports: L -> 1."""
    return SpecializationMap(LaurentPoly.one(), dict(symbol_values), missing_policy)


# operation-style aliases matching the module contract

def mc_add(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    return a + b


def mc_mul(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    return a * b


def mc_push(a: MotivicClass, new_base: str) -> MotivicClass:
    return a.push(new_base)


def mc_specialize(a: MotivicClass, m: SpecializationMap) -> LaurentPoly:
    return m.apply(a)
