"""Exact rational polyhedral cones in the open orthant.

Cones are cut out of R^I_{>0} by homogeneous integral constraints with mixed
strict/non-strict relations.  Feasibility, dimension and the Euler
characteristic with compact supports are decided exactly by Fourier-Motzkin
elimination over the integers; no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import EmptyCone, ValidationError

GE = ">="
GT = ">"
EQ = "="
RELATIONS = (GE, GT, EQ)


@dataclass(frozen=True)
class Constraint:
    """Homogeneous constraint: coeffs . k  REL  0."""

    coeffs: tuple
    rel: str = GE

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.rel not in RELATIONS:
            raise ValidationError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class Cone:
    """Rational cone in the open orthant over the ordered variable set `vars`."""

    vars: tuple
    constraints: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.coeffs) != len(self.vars):
                raise ValidationError("constraint arity does not match variable count")

    @property
    def nvars(self) -> int:
        return len(self.vars)


# ---------------------------------------------------------------------------
# Affine inequality machinery (internal): rows are (coeffs, const, strict)
# meaning coeffs . k + const >= 0, strict when flagged.  Exact integers.
# ---------------------------------------------------------------------------


def _normalize_row(coeffs, const, strict):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    g = gcd(g, abs(const))
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        const = const // g
    return (tuple(coeffs), const, strict)


def _fm_eliminate(rows, j):
    """Eliminate variable j from inequality rows; returns rows over remaining vars."""
    pos, neg, rest = [], [], []
    for coeffs, const, strict in rows:
        c = coeffs[j]
        trimmed = coeffs[:j] + coeffs[j + 1:]
        if c > 0:
            pos.append((trimmed, const, strict, c))
        elif c < 0:
            neg.append((trimmed, const, strict, -c))
        else:
            rest.append((trimmed, const, strict))
    out = set(_normalize_row(*r) for r in rest)
    for pc, pconst, pstrict, pcoef in pos:
        for nc, nconst, nstrict, ncoef in neg:
            coeffs = tuple(ncoef * a + pcoef * b for a, b in zip(pc, nc))
            const = ncoef * pconst + pcoef * nconst
            out.add(_normalize_row(coeffs, const, pstrict or nstrict))
    return list(out)


def _rows_feasible(rows, nvars):
    """Exact feasibility over Q of a system of affine >=0 / >0 rows."""
    rows = [_normalize_row(*r) for r in rows]
    for _ in range(nvars):
        rows = _fm_eliminate(rows, 0)
        # prune tautologies early to limit growth
        pruned = []
        for coeffs, const, strict in rows:
            if any(coeffs):
                pruned.append((coeffs, const, strict))
            elif const < 0 or (const == 0 and strict):
                return False
        rows = pruned
    for coeffs, const, strict in rows:
        if const < 0 or (const == 0 and strict):
            return False
    return True


def _project_axis(rows, nvars, axis):
    """Eliminate every variable except `axis`; return one-variable rows."""
    # move the kept axis to the front, then repeatedly eliminate column 1
    def reorder(coeffs):
        return (coeffs[axis],) + coeffs[:axis] + coeffs[axis + 1:]

    rows = [_normalize_row(reorder(c), k, s) for c, k, s in rows]
    for _ in range(nvars - 1):
        rows = _fm_eliminate(rows, 1)
        rows = [r for r in rows if any(r[0]) or r[1] < 0 or (r[1] == 0 and r[2])]
        if any(not any(c) and (k < 0 or (k == 0 and s)) for c, k, s in rows):
            return None  # infeasible
    return rows


def axis_bounds(rows, nvars, axis):
    """Exact rational bounds of a variable over the solution set.

    Returns (lo, hi) Fractions, either possibly None for unbounded; returns
    None if the system is infeasible.
    """
    projected = _project_axis(rows, nvars, axis)
    if projected is None:
        return None
    lo, hi = None, None
    for coeffs, const, strict in projected:
        (a,) = coeffs
        if a == 0:
            if const < 0 or (const == 0 and strict):
                return None
            continue
        bound = Fraction(-const, a)
        if a > 0:
            if lo is None or bound > lo:
                lo = bound
        else:
            if hi is None or bound < hi:
                hi = bound
    if lo is not None and hi is not None and (lo > hi):
        return None
    return (lo, hi)


# ---------------------------------------------------------------------------
# Cone-level operations
# ---------------------------------------------------------------------------


def _constraint_rows(constraints):
    rows = []
    for c in constraints:
        if c.rel == GE:
            rows.append((c.coeffs, 0, False))
        elif c.rel == GT:
            rows.append((c.coeffs, 0, True))
        else:
            rows.append((c.coeffs, 0, False))
            rows.append((tuple(-x for x in c.coeffs), 0, False))
    return rows


def _orthant_rows(nvars, strict=True):
    rows = []
    for i in range(nvars):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        rows.append((e, 0, strict))
    return rows


def cone_rows(cone: Cone, closed: bool = False):
    """Inequality rows of the cone; `closed` relaxes every strict relation."""
    rows = _constraint_rows(cone.constraints) + _orthant_rows(cone.nvars, strict=not closed)
    if closed:
        rows = [(c, k, False) for c, k, s in rows]
    return rows


def feasible(vars, constraints) -> bool:
    """True iff a rational point of the open orthant satisfies all constraints."""
    cone = Cone(tuple(vars), tuple(constraints))
    return _rows_feasible(cone_rows(cone), cone.nvars)


def cone_feasible(cone: Cone) -> bool:
    return _rows_feasible(cone_rows(cone), cone.nvars)


def _rank(forms):
    """Rank over Q of integer row vectors, by fraction-free elimination."""
    mat = [list(f) for f in forms if any(f)]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while mat and col < ncols:
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                a, b = mat[rank][col], mat[i][col]
                mat[i] = [a * x - b * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def cone_dim(cone: Cone) -> int:
    """Dimension of the affine hull: |I| minus rank of implied equalities."""
    if not cone_feasible(cone):
        raise EmptyCone("dimension of an empty cone")
    implied = [c.coeffs for c in cone.constraints if c.rel == EQ]
    base_rows = cone_rows(cone)
    for c in cone.constraints:
        if c.rel != GE:
            continue
        probe = base_rows + [(c.coeffs, 0, True)]
        if not _rows_feasible(probe, cone.nvars):
            implied.append(c.coeffs)
    return cone.nvars - _rank(implied)


# -- Euler characteristic with compact supports ----------------------------


def _normalize_form(coeffs):
    """Canonical hyperplane representative: gcd 1, first nonzero positive.

    Returns (form, sign) with coeffs = sign * form, or None for the zero form.
    """
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    if g == 0:
        return None
    form = tuple(c // g for c in coeffs)
    for c in form:
        if c > 0:
            return (form, 1)
        if c < 0:
            return (tuple(-x for x in form), -1)
    return None


_ALLOWED = {GE: {"+", "0"}, GT: {"+"}, EQ: {"0"}}


def _cell_signature(cone: Cone):
    """Distinct hyperplanes of the cone's constraints plus per-constraint sign sets."""
    hyperplanes = []
    index = {}
    requirements = []  # (hyperplane idx, allowed signs)
    for c in cone.constraints:
        norm = _normalize_form(c.coeffs)
        if norm is None:
            if c.rel == GT:
                requirements.append((None, set()))  # 0 > 0: empty
            continue
        form, sign = norm
        if form not in index:
            index[form] = len(hyperplanes)
            hyperplanes.append(form)
        allowed = _ALLOWED[c.rel]
        if sign < 0:
            allowed = {{"+": "-", "-": "+", "0": "0"}[a] for a in allowed}
        requirements.append((index[form], allowed))
    return hyperplanes, requirements


def iter_cells(cone: Cone):
    """Feasible cells of the constraint-hyperplane arrangement inside the cone.

    Yields (sign_vector, dim) for every nonempty relatively open cell of the
    arrangement (restricted to the open orthant) that is contained in the cone.
    """
    hyperplanes, requirements = _cell_signature(cone)
    if any(not allowed for _, allowed in requirements):
        return
    nvars = cone.nvars
    for signs in itertools.product("+0-", repeat=len(hyperplanes)):
        if any(signs[h] not in allowed for h, allowed in requirements):
            continue
        rows = _orthant_rows(nvars, strict=True)
        zero_forms = []
        for form, s in zip(hyperplanes, signs):
            if s == "+":
                rows.append((form, 0, True))
            elif s == "-":
                rows.append((tuple(-c for c in form), 0, True))
            else:
                rows.append((form, 0, False))
                rows.append((tuple(-c for c in form), 0, False))
                zero_forms.append(form)
        if _rows_feasible(rows, nvars):
            yield signs, nvars - _rank(zero_forms)


def chi(cone: Cone) -> int:
    """Euler characteristic with compact supports of the cone as a point set.

    Each relatively open convex cell contributes (-1)^dim; an empty cone has
    chi 0.
    """
    return sum((-1) ** dim for _, dim in iter_cells(cone))


def chi_union(cones) -> int:
    """chi of a finite union of cones over the same variable set.

    Cells are taken relative to the combined hyperplane arrangement; a cell
    counts if it lies inside at least one of the cones.
    """
    cones = list(cones)
    if not cones:
        return 0
    nvars = cones[0].nvars
    if any(c.nvars != nvars for c in cones):
        raise ValidationError("chi_union requires a common variable set")
    merged = Cone(cones[0].vars, tuple(c for cone in cones for c in cone.constraints))
    hyperplanes, _ = _cell_signature(merged)
    signatures = []
    for cone in cones:
        _, reqs = _cell_signature(Cone(merged.vars, cone.constraints))
        # re-index against the merged hyperplane list
        remapped = []
        local_hyps, local_reqs = _cell_signature(cone)
        ok = True
        for h, allowed in local_reqs:
            if not allowed:
                ok = False
                break
            remapped.append((hyperplanes.index(local_hyps[h]), allowed))
        signatures.append(remapped if ok else None)
    total = 0
    for signs in itertools.product("+0-", repeat=len(hyperplanes)):
        if not any(sig is not None and all(signs[h] in allowed for h, allowed in sig)
                   for sig in signatures):
            continue
        rows = _orthant_rows(nvars, strict=True)
        zero_forms = []
        for form, s in zip(hyperplanes, signs):
            if s == "+":
                rows.append((form, 0, True))
            elif s == "-":
                rows.append((tuple(-c for c in form), 0, True))
            else:
                rows.append((form, 0, False))
                rows.append((tuple(-c for c in form), 0, False))
                zero_forms.append(form)
        if _rows_feasible(rows, nvars):
            total += (-1) ** (nvars - _rank(zero_forms))
    return total


def restrict(cone: Cone, coeffs, rel) -> Cone:
    """Cone with one extra constraint."""
    return Cone(cone.vars, cone.constraints + (Constraint(tuple(coeffs), rel),))
