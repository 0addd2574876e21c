"""AND and OR products: combine two sets over the same universe into a set
indexed by ordered parameter pairs.

Both products are defined with plain min and max, independent of whatever
norm profile drives union and intersection. The worked decision matrices
are reproducible only that way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import NeutrosophicTriple
from .errors import IncompatibleError
from .sets import PnsSet, PossValue


@dataclass(frozen=True)
class ProductPnsSet:
    """Result of a product: rows are (first parameter, second parameter) pairs.

    Pair rows enumerate the Cartesian product in row major order, the first
    operand's parameter being the outer index.
    """

    pairs: tuple  # of (label, label)
    universe: tuple
    cells: tuple

    @property
    def shape(self):
        return (len(self.pairs), len(self.universe))


def _require_same_universe(f: PnsSet, g: PnsSet):
    if f.universe != g.universe:
        raise IncompatibleError(
            f"products need a shared universe; got {f.universe} vs {g.universe}")


def _product(f, g, combine_triple, combine_mu):
    _require_same_universe(f, g)
    pairs = []
    rows = []
    for k, fp in enumerate(f.parameters):
        for l, gp in enumerate(g.parameters):
            pairs.append((fp, gp))
            rows.append(tuple(
                PossValue(combine_triple(a.triple, b.triple), combine_mu(a.mu, b.mu))
                for a, b in zip(f.cells[k], g.cells[l])
            ))
    return ProductPnsSet(pairs=tuple(pairs), universe=f.universe, cells=tuple(rows))


def and_product(f: PnsSet, g: PnsSet) -> ProductPnsSet:
    """Pessimistic combination: min truth, max indeterminacy and falsity, min mu."""
    return _product(
        f, g,
        lambda a, b: NeutrosophicTriple(min(a.truth, b.truth),
                                        max(a.indeterminacy, b.indeterminacy),
                                        max(a.falsity, b.falsity)),
        min,
    )


def or_product(f: PnsSet, g: PnsSet) -> ProductPnsSet:
    """Optimistic combination: max truth, min indeterminacy and falsity, max mu."""
    return _product(
        f, g,
        lambda a, b: NeutrosophicTriple(max(a.truth, b.truth),
                                        min(a.indeterminacy, b.indeterminacy),
                                        min(a.falsity, b.falsity)),
        max,
    )


def to_pns_set(p: ProductPnsSet, separator: str = "*") -> PnsSet:
    """Flatten pair labels so a product can be saved or fed back in."""
    labels = tuple(f"{a}{separator}{b}" for a, b in p.pairs)
    if len(set(labels)) != len(labels):
        raise IncompatibleError(
            f"separator {separator!r} does not keep pair labels distinct")
    return PnsSet(parameters=labels, universe=p.universe, cells=p.cells)
