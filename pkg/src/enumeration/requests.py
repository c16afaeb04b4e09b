from bisect import insort
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.algebra.symfunc import FixFn
from src.species.cycle_index import VirtualSpecies
from src.species.expr import SpeciesExpr

FAMILIES = ("digraph", "graph", "bicolored")


class PreconditionError(ValueError):
    """A mathematical precondition of a pipeline does not hold."""


class BoundError(PreconditionError):
    def __init__(self, message: str, required: int):
        self.required = required
        super().__init__(f"{message} (required: {required})")


class NotACountError(PreconditionError):
    """
    A pipeline produced a fractional or negative cell. Virtual G (e.g. E_1 - E_2)
    parses and evaluates fine but need not count anything.
    """


def exact_count(value: Fraction, what: str) -> int:
    """Turn an orbit count into an int."""
    if value.denominator != 1 or value < 0:
        raise NotACountError(f"{what} is not a nonnegative integer: {value} (is G a virtual species?)")
    return int(value)


@dataclass
class EnumerationRequest:
    family: str
    species: Union[SpeciesExpr, FixFn, VirtualSpecies]
    loops: bool = False
    max_vertices: int = 1
    max_y: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.max_vertices < 1:
            raise PreconditionError(f"max_vertices must be positive, got {self.max_vertices}")
        self.species = VirtualSpecies.of(self.species)
        if self.family == "graph" and self.species.degree() is None:
            raise PreconditionError(
                f"G-graphs are defined only for strictly finite G, got {self.species.name}"
            )
        if self.max_y is not None and self.family == "digraph":
            raise PreconditionError("max_y applies to graph and bicolored requests only")


@dataclass
class CountTable:
    """
    Exact counts keyed by row labels, e.g. ("n",) or ("n", "k") or ("n", "e").
    Rows are kept sorted so rendering is deterministic.
    """

    keys: Tuple[str, ...]
    rows: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)

    def add(self, key: Sequence[int], count: int):
        if count < 0:
            raise ArithmeticError(f"negative count {count} at {tuple(key)}")
        insort(self.rows, (tuple(key), count))

    def count(self, *key: int) -> int:
        for k, value in self.rows:
            if k == tuple(key):
                return value
        raise KeyError(key)

    def as_dict(self) -> Dict[Tuple[int, ...], int]:
        return {k: v for k, v in self.rows}

    def series(self) -> List[int]:
        """Counts in row order, for single-key tables."""
        if len(self.keys) != 1:
            raise ValueError(f"series() needs a single-key table, this one has keys {self.keys}")
        return [v for _, v in self.rows]

    def merge(self, other: "CountTable") -> "CountTable":
        if other.keys != self.keys:
            raise ValueError(f"cannot merge tables with keys {self.keys} and {other.keys}")
        out = CountTable(self.keys, list(self.rows), dict(self.provenance))
        for key, value in other.rows:
            out.add(key, value)
        return out
