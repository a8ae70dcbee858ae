"""Exact Laurent polynomials in the Lefschetz symbol L with integer coefficients.

The coefficient ring for every motivic class in the package.  Polynomials are
canonical: no zero coefficients are stored, equality is structural.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Finite map {exponent: nonzero int coefficient} representing sum c_e * L^e."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def L(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by L^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, value: "LaurentPoly") -> "LaurentPoly":
        """Evaluate at L = value.  Negative exponents require value = +-L^k."""
        out = LaurentPoly.zero()
        for e, c in self.terms.items():
            if e >= 0:
                out = out + (value ** e).scale(c)
            else:
                inv = _invert_monomial(value)
                out = out + (inv ** (-e)).scale(c)
        return out

    def eval_rational(self, value: Fraction) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * value ** e
        return total

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms with exponents descending.

        Grammar: term := INT | [-]L^INT | INT*L^INT, joined by " + ".
        """
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"L^{e}")
            elif c == -1:
                parts.append(f"-L^{e}")
            else:
                parts.append(f"{c}*L^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


def _invert_monomial(p: LaurentPoly) -> LaurentPoly:
    if len(p.terms) != 1:
        raise ValueError("cannot invert a non-monomial Laurent polynomial")
    (e, c), = p.terms.items()
    if c not in (1, -1):
        raise ValueError("cannot invert a monomial with coefficient != +-1")
    return LaurentPoly({-e: c})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
L = LaurentPoly.L()
L_MINUS_ONE = LaurentPoly({1: 1, 0: -1})
ONE_MINUS_L = LaurentPoly({0: 1, 1: -1})
