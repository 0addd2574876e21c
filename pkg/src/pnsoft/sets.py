"""The possibility neutrosophic soft set data model and its set operators.

A set is a dense parameters x universe matrix. Each cell holds a
neutrosophic triple plus a possibility degree weighting how credible that
assignment is. Every operator is pure and returns a new set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    DEFAULT_PROFILE,
    NeutrosophicTriple,
    NormProfile,
    ONE,
    ZERO,
    as_unit,
    n_conorm,
    n_norm,
    negate_triple,
    triple_leq,
)
from .errors import IncompatibleError, SchemaError


@dataclass(frozen=True)
class PossValue:
    """One cell: a triple and its possibility degree."""

    triple: NeutrosophicTriple
    mu: Fraction

    def __post_init__(self):
        if not isinstance(self.triple, NeutrosophicTriple):
            object.__setattr__(self, "triple", NeutrosophicTriple(*self.triple))
        object.__setattr__(self, "mu", as_unit(self.mu, "mu"))


@dataclass(frozen=True)
class PnsSet:
    """Labeled matrix of PossValue, one row per parameter, one column per element.

    The bare constructor stores what it is given. Use `from_rows` for
    checked construction, or `validate` to audit an instance built by hand.
    """

    parameters: tuple
    universe: tuple
    cells: tuple

    @classmethod
    def from_rows(cls, parameters, universe, rows) -> "PnsSet":
        """Build a set from nested (t, i, f, mu) cells with full checking.

        `rows` is one sequence per parameter, each holding one cell per
        universe element. A cell may be a PossValue, a (triple, mu) pair or
        a flat (t, i, f, mu) tuple. Shape or range problems raise
        SchemaError naming the offending coordinates.
        """
        parameters = tuple(str(p) for p in parameters)
        universe = tuple(str(u) for u in universe)
        if not parameters or not universe:
            raise SchemaError("parameter and universe label lists must be non-empty")
        if len(set(parameters)) != len(parameters):
            raise SchemaError("duplicate parameter labels")
        if len(set(universe)) != len(universe):
            raise SchemaError("duplicate universe labels")
        rows = list(rows)
        if len(rows) != len(parameters):
            raise SchemaError(
                f"expected {len(parameters)} rows, got {len(rows)}")
        matrix = []
        for p, row in zip(parameters, rows):
            row = list(row)
            if len(row) != len(universe):
                raise SchemaError(
                    f"row {p!r}: expected {len(universe)} cells, got {len(row)}")
            out_row = []
            for u, cell in zip(universe, row):
                try:
                    out_row.append(_as_cell(cell))
                except ValueError as exc:
                    raise SchemaError(f"cell ({p}, {u}): {exc}") from None
            matrix.append(tuple(out_row))
        return cls(parameters=parameters, universe=universe, cells=tuple(matrix))

    def cell(self, parameter, element) -> PossValue:
        i = self.parameters.index(parameter)
        j = self.universe.index(element)
        return self.cells[i][j]

    @property
    def shape(self):
        return (len(self.parameters), len(self.universe))


def _as_cell(cell) -> PossValue:
    if isinstance(cell, PossValue):
        return cell
    cell = tuple(cell)
    if len(cell) == 2:
        return PossValue(triple=cell[0] if isinstance(cell[0], NeutrosophicTriple)
                         else NeutrosophicTriple(*cell[0]), mu=cell[1])
    if len(cell) == 4:
        return PossValue(triple=NeutrosophicTriple(cell[0], cell[1], cell[2]), mu=cell[3])
    raise ValueError(f"cannot interpret cell of length {len(cell)}")


def validate(obj) -> list:
    """Audit a PnsSet (or a raw document dict) and list every violation.

    Returns a list of human readable strings, one per problem, each naming
    the (parameter, element) coordinates where that is meaningful. An empty
    list means the object is valid. Never raises.
    """
    if isinstance(obj, dict):
        return _validate_document(obj)
    violations = []
    parameters = getattr(obj, "parameters", None)
    universe = getattr(obj, "universe", None)
    cells = getattr(obj, "cells", None)
    if not parameters:
        violations.append("parameter list is empty")
    if not universe:
        violations.append("universe list is empty")
    if parameters and len(set(parameters)) != len(parameters):
        violations.append("duplicate parameter labels")
    if universe and len(set(universe)) != len(universe):
        violations.append("duplicate universe labels")
    rows = list(cells) if cells is not None else []
    if parameters is not None and len(rows) != len(parameters):
        violations.append(
            f"matrix has {len(rows)} rows for {len(parameters)} parameters")
    for i, row in enumerate(rows):
        p = parameters[i] if parameters and i < len(parameters) else f"row {i}"
        row = list(row)
        if universe is not None and len(row) != len(universe):
            violations.append(
                f"row {p!r} has {len(row)} cells for {len(universe)} elements")
        for j, cell in enumerate(row):
            u = universe[j] if universe and j < len(universe) else f"col {j}"
            try:
                _as_cell(cell)
            except (ValueError, TypeError) as exc:
                violations.append(f"cell ({p}, {u}): {exc}")
    return violations


def _validate_document(doc) -> list:
    """Check a parsed JSON document against the canonical layout."""
    violations = []
    for key in ("parameters", "universe", "cells"):
        if key not in doc:
            violations.append(f"missing key {key!r}")
    if violations:
        return violations
    parameters = doc["parameters"]
    universe = doc["universe"]
    cells = doc["cells"]
    if not isinstance(parameters, list) or not all(isinstance(p, str) for p in parameters):
        violations.append("'parameters' must be a list of strings")
        return violations
    if not isinstance(universe, list) or not all(isinstance(u, str) for u in universe):
        violations.append("'universe' must be a list of strings")
        return violations
    if not parameters:
        violations.append("parameter list is empty")
    if not universe:
        violations.append("universe list is empty")
    if len(set(parameters)) != len(parameters):
        violations.append("duplicate parameter labels")
    if len(set(universe)) != len(universe):
        violations.append("duplicate universe labels")
    if not isinstance(cells, list):
        violations.append("'cells' must be a list of rows")
        return violations
    if len(cells) != len(parameters):
        violations.append(f"matrix has {len(cells)} rows for {len(parameters)} parameters")
    for i, row in enumerate(cells):
        p = parameters[i] if i < len(parameters) else f"row {i}"
        if not isinstance(row, list):
            violations.append(f"row {p!r} is not a list")
            continue
        if len(row) != len(universe):
            violations.append(f"row {p!r} has {len(row)} cells for {len(universe)} elements")
        for j, cell in enumerate(row):
            u = universe[j] if j < len(universe) else f"col {j}"
            if not isinstance(cell, dict):
                violations.append(f"cell ({p}, {u}): not an object")
                continue
            for field in ("t", "i", "f", "mu"):
                if field not in cell:
                    violations.append(f"cell ({p}, {u}): missing {field!r}")
                    continue
                try:
                    as_unit(cell[field], field)
                except ValueError as exc:
                    violations.append(f"cell ({p}, {u}): {exc}")
    return violations


def null_set(parameters, universe) -> PnsSet:
    """Bottom of the subset order: every triple (0,1,1) with possibility 0."""
    return _constant_set(parameters, universe, PossValue(ZERO, 0))


def universal_set(parameters, universe) -> PnsSet:
    """Top of the subset order: every triple (1,0,0) with possibility 1."""
    return _constant_set(parameters, universe, PossValue(ONE, 1))


def _constant_set(parameters, universe, value):
    parameters = tuple(str(p) for p in parameters)
    universe = tuple(str(u) for u in universe)
    if not parameters or not universe:
        raise SchemaError("parameter and universe label lists must be non-empty")
    row = (value,) * len(universe)
    return PnsSet(parameters=parameters, universe=universe,
                  cells=(row,) * len(parameters))


def _require_same_labels(f: PnsSet, g: PnsSet):
    # reordering is a deliberate separate step, never done implicitly
    if f.parameters != g.parameters or f.universe != g.universe:
        raise IncompatibleError(
            "operands must share parameter and universe labels in the same order; "
            f"got {f.parameters}x{f.universe} vs {g.parameters}x{g.universe}")


def _cellwise(f: PnsSet, g: PnsSet, op) -> PnsSet:
    cells = tuple(
        tuple(op(a, b) for a, b in zip(fr, gr))
        for fr, gr in zip(f.cells, g.cells)
    )
    return PnsSet(parameters=f.parameters, universe=f.universe, cells=cells)


def is_subset(f: PnsSet, g: PnsSet) -> bool:
    """Cellwise order: possibility degrees and triples must both dominate."""
    _require_same_labels(f, g)
    return all(
        a.mu <= b.mu and triple_leq(a.triple, b.triple)
        for fr, gr in zip(f.cells, g.cells)
        for a, b in zip(fr, gr)
    )


def equals(f: PnsSet, g: PnsSet) -> bool:
    _require_same_labels(f, g)
    return is_subset(f, g) and is_subset(g, f)


def union(f: PnsSet, g: PnsSet, profile: NormProfile | None = None) -> PnsSet:
    """Cellwise n-conorm on triples, t-conorm on possibility degrees."""
    _require_same_labels(f, g)
    p = profile if profile is not None else DEFAULT_PROFILE
    return _cellwise(
        f, g, lambda a, b: PossValue(n_conorm(a.triple, b.triple, p),
                                     p.tconorm(a.mu, b.mu)))


def intersection(f: PnsSet, g: PnsSet, profile: NormProfile | None = None) -> PnsSet:
    """Cellwise n-norm on triples, t-norm on possibility degrees."""
    _require_same_labels(f, g)
    p = profile if profile is not None else DEFAULT_PROFILE
    return _cellwise(
        f, g, lambda a, b: PossValue(n_norm(a.triple, b.triple, p),
                                     p.tnorm(a.mu, b.mu)))


def complement(f: PnsSet, profile: NormProfile | None = None) -> PnsSet:
    """Negate every triple and every possibility degree."""
    p = profile if profile is not None else DEFAULT_PROFILE
    cells = tuple(
        tuple(PossValue(negate_triple(c.triple, p), p.scalar_negation(c.mu))
              for c in row)
        for row in f.cells
    )
    return PnsSet(parameters=f.parameters, universe=f.universe, cells=cells)


@dataclass(frozen=True)
class PartMatrix:
    """One membership component of a set, each entry paired with its mu."""

    parameters: tuple
    universe: tuple
    entries: tuple  # rows of (component, mu) pairs


def decompose(f: PnsSet):
    """Split into truth, indeterminacy and falsity part matrices."""
    def part(pick):
        return PartMatrix(
            parameters=f.parameters,
            universe=f.universe,
            entries=tuple(
                tuple((pick(c.triple), c.mu) for c in row) for row in f.cells
            ),
        )

    return (
        part(lambda t: t.truth),
        part(lambda t: t.indeterminacy),
        part(lambda t: t.falsity),
    )


def recompose(truth: PartMatrix, indeterminacy: PartMatrix, falsity: PartMatrix) -> PnsSet:
    """Inverse of decompose. The three parts must agree on labels and mu."""
    if not (truth.parameters == indeterminacy.parameters == falsity.parameters
            and truth.universe == indeterminacy.universe == falsity.universe):
        raise IncompatibleError("part matrices must share labels")
    rows = []
    for tr, ir, fr in zip(truth.entries, indeterminacy.entries, falsity.entries):
        row = []
        for (t, mt), (i, mi), (fv, mf) in zip(tr, ir, fr):
            if not (mt == mi == mf):
                raise IncompatibleError("part matrices disagree on possibility degrees")
            row.append(PossValue(NeutrosophicTriple(t, i, fv), mt))
        rows.append(tuple(row))
    return PnsSet(parameters=truth.parameters, universe=truth.universe, cells=tuple(rows))
