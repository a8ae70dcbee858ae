"""JSON input/output for resolution data and verification documents.

A resolution document is an object with
    d        relative dimension (int)
    base     base stratum name (string)
    strata   array of {id, N, nu?, alpha?, M?}
    classes  array of {I: [ids], class: [{symbol, mu, base?, coeff: {exp: int}}]}
plus two optional extensions used by the command line:
    gauge    "explicit" or "gelfand_leray" (default inferred from the data)
    chi      map symbol name -> integer Euler characteristic, consumed by
             the euler specialization

Verification documents carry a "kind" discriminator:
    identity  {kind, d1, data_f, data_ftilde}
    unit      {kind, a, b, ident: {symbol: symbol}}
    hadamard  {kind, a, b}
    ell       {kind, data, gamma: "q/p", ells: [[a, b], ...]}

`dumps(loads(text))` is byte-identical for canonical files (sorted keys,
two-space indent, trailing newline).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .laurent import LaurentPoly
from .resolution import (EXPLICIT, GELFAND_LERAY, GaugeSpec, ResolutionData,
                         StratumDatum)
from .ring import GeneratorSymbol, MotivicClass

_GAUGE_NAMES = {"explicit": EXPLICIT, "gelfand_leray": GELFAND_LERAY}


@dataclass(frozen=True)
class DataDocument:
    data: ResolutionData
    gauge: GaugeSpec
    chi: dict = field(default_factory=dict)


@dataclass(frozen=True)
class IdentityDocument:
    d1: int
    data_f: ResolutionData
    data_ftilde: ResolutionData


@dataclass(frozen=True)
class UnitDocument:
    a: ResolutionData
    b: ResolutionData
    ident: dict


@dataclass(frozen=True)
class HadamardDocument:
    a: DataDocument
    b: DataDocument


@dataclass(frozen=True)
class EllDocument:
    doc: DataDocument
    gamma: Fraction
    ells: tuple


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _expect(obj, key, types, where, optional=False, default=None):
    if key not in obj:
        if optional:
            return default
        raise InputError(f"{where}: missing required field {key!r}")
    value = obj[key]
    if not isinstance(value, types):
        raise InputError(f"{where}.{key}: expected {types}, got {type(value).__name__}")
    return value


def _parse_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_class(items, base, where) -> MotivicClass:
    if not isinstance(items, list):
        raise InputError(f"{where}: class must be an array of term objects")
    terms = {}
    for i, term in enumerate(items):
        here = f"{where}[{i}]"
        if not isinstance(term, dict):
            raise InputError(f"{here}: expected an object")
        name = _expect(term, "symbol", str, here)
        mu = _parse_int(_expect(term, "mu", int, here), f"{here}.mu")
        sym_base = _expect(term, "base", str, here, optional=True, default=base)
        coeff_obj = _expect(term, "coeff", dict, here)
        coeffs = {}
        for exp, c in coeff_obj.items():
            try:
                e = int(exp)
            except ValueError:
                raise InputError(f"{here}.coeff: exponent key {exp!r} is not an integer")
            coeffs[e] = _parse_int(c, f"{here}.coeff[{exp!r}]")
        sym = GeneratorSymbol(name, mu, sym_base)
        poly = LaurentPoly(coeffs)
        terms[sym] = terms.get(sym, LaurentPoly.zero()) + poly
    return MotivicClass(base, terms)


def parse_data(obj, where="$") -> ResolutionData:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    d = _parse_int(_expect(obj, "d", int, where), f"{where}.d")
    base = _expect(obj, "base", str, where)
    strata = []
    for i, s in enumerate(_expect(obj, "strata", list, where)):
        here = f"{where}.strata[{i}]"
        if not isinstance(s, dict):
            raise InputError(f"{here}: expected an object")
        sid = _expect(s, "id", str, here)
        N = _parse_int(_expect(s, "N", int, here), f"{here}.N")
        nu = _expect(s, "nu", int, here, optional=True)
        alpha = _expect(s, "alpha", int, here, optional=True)
        M = _expect(s, "M", list, here, optional=True)
        if M is not None:
            M = tuple(_parse_int(m, f"{here}.M[{j}]") for j, m in enumerate(M))
        strata.append(StratumDatum(sid, N, nu=nu, alpha=alpha, M=M))
    classes = {}
    for i, entry in enumerate(_expect(obj, "classes", list, where)):
        here = f"{where}.classes[{i}]"
        if not isinstance(entry, dict):
            raise InputError(f"{here}: expected an object")
        I = _expect(entry, "I", list, here)
        if not I or not all(isinstance(x, str) for x in I):
            raise InputError(f"{here}.I: expected a nonempty array of stratum ids")
        key = frozenset(I)
        cls = parse_class(_expect(entry, "class", list, here), base, f"{here}.class")
        if key in classes:
            raise InputError(f"{here}.I: duplicate subset {sorted(key)}")
        classes[key] = cls
    return ResolutionData(d, base, tuple(strata), classes)


def _infer_gauge(data: ResolutionData) -> GaugeSpec:
    if any(s.alpha is not None for s in data.strata):
        return EXPLICIT
    return GELFAND_LERAY


def parse_gauge(obj, data, where="$") -> GaugeSpec:
    name = _expect(obj, "gauge", str, where, optional=True)
    if name is None:
        return _infer_gauge(data)
    if name not in _GAUGE_NAMES:
        raise InputError(f"{where}.gauge: expected one of {sorted(_GAUGE_NAMES)}, got {name!r}")
    return _GAUGE_NAMES[name]


def parse_chi(obj, where="$") -> dict:
    chi = _expect(obj, "chi", dict, where, optional=True, default={})
    return {name: _parse_int(v, f"{where}.chi[{name!r}]") for name, v in chi.items()}


def parse_data_document(obj, where="$") -> DataDocument:
    data = parse_data(obj, where)
    return DataDocument(data, parse_gauge(obj, data, where), parse_chi(obj, where))


def parse_gamma(value, where) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{where}: cannot parse rational {value!r}")
    raise InputError(f"{where}: expected an integer or a 'q/p' string")


def parse_document(obj, where="$"):
    """Dispatch on the optional `kind` field; plain data has no kind."""
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object at top level")
    kind = _expect(obj, "kind", str, where, optional=True, default="data")
    if kind == "data":
        return parse_data_document(obj, where)
    if kind == "identity":
        d1 = _parse_int(_expect(obj, "d1", int, where), f"{where}.d1")
        return IdentityDocument(
            d1,
            parse_data(_expect(obj, "data_f", dict, where), f"{where}.data_f"),
            parse_data(_expect(obj, "data_ftilde", dict, where), f"{where}.data_ftilde"))
    if kind == "unit":
        ident = _expect(obj, "ident", dict, where)
        if not all(isinstance(v, str) for v in ident.values()):
            raise InputError(f"{where}.ident: expected a map of symbol names")
        return UnitDocument(
            parse_data(_expect(obj, "a", dict, where), f"{where}.a"),
            parse_data(_expect(obj, "b", dict, where), f"{where}.b"),
            dict(ident))
    if kind == "hadamard":
        return HadamardDocument(
            parse_data_document(_expect(obj, "a", dict, where), f"{where}.a"),
            parse_data_document(_expect(obj, "b", dict, where), f"{where}.b"))
    if kind == "ell":
        doc = parse_data_document(_expect(obj, "data", dict, where), f"{where}.data")
        gamma = parse_gamma(_expect(obj, "gamma", (int, str), where), f"{where}.gamma")
        ells = []
        for i, pair in enumerate(_expect(obj, "ells", list, where)):
            here = f"{where}.ells[{i}]"
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InputError(f"{here}: expected a pair [a, b]")
            ells.append((_parse_int(pair[0], here), _parse_int(pair[1], here)))
        return EllDocument(doc, gamma, tuple(ells))
    raise InputError(f"{where}.kind: unknown document kind {kind!r}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def class_to_obj(cls: MotivicClass) -> list:
    items = []
    for sym in sorted(cls.terms, key=lambda s: s.name):
        poly = cls.terms[sym]
        term = {"symbol": sym.name, "mu": sym.mu_order,
                "coeff": {str(e): c for e, c in sorted(poly.terms.items())}}
        if sym.base != cls.base:
            term["base"] = sym.base
        items.append(term)
    return items


def data_to_obj(data: ResolutionData, gauge: GaugeSpec = None, chi: dict = None) -> dict:
    strata = []
    for s in data.strata:
        entry = {"id": s.id, "N": s.N}
        if s.nu is not None:
            entry["nu"] = s.nu
        if s.alpha is not None:
            entry["alpha"] = s.alpha
        if s.M is not None:
            entry["M"] = list(s.M)
        strata.append(entry)
    classes = [{"I": list(I), "class": class_to_obj(cls)} for I, cls in data.subsets()]
    obj = {"d": data.d, "base": data.base, "strata": strata, "classes": classes}
    if gauge is not None and gauge != _infer_gauge(data):
        obj["gauge"] = next(k for k, v in _GAUGE_NAMES.items() if v == gauge)
    if chi:
        obj["chi"] = dict(sorted(chi.items()))
    return obj


def document_to_obj(doc) -> dict:
    if isinstance(doc, DataDocument):
        return data_to_obj(doc.data, doc.gauge, doc.chi)
    if isinstance(doc, IdentityDocument):
        return {"kind": "identity", "d1": doc.d1,
                "data_f": data_to_obj(doc.data_f),
                "data_ftilde": data_to_obj(doc.data_ftilde)}
    if isinstance(doc, UnitDocument):
        return {"kind": "unit", "a": data_to_obj(doc.a), "b": data_to_obj(doc.b),
                "ident": dict(sorted(doc.ident.items()))}
    if isinstance(doc, HadamardDocument):
        return {"kind": "hadamard",
                "a": document_to_obj(doc.a), "b": document_to_obj(doc.b)}
    if isinstance(doc, EllDocument):
        gamma = doc.gamma
        return {"kind": "ell", "data": document_to_obj(doc.doc),
                "gamma": str(gamma) if gamma.denominator != 1 else int(gamma),
                "ells": [list(pair) for pair in doc.ells]}
    raise InputError(f"cannot serialize a {type(doc).__name__}")


def dumps(obj) -> str:
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def load_path(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    return parse_document(loads(text), where=path)
