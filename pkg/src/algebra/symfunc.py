"""
One-sort symmetric-function series in the power-sum basis.

A PSeries is Σ_λ c_λ p_λ with exact rational coefficients, truncated at an
explicit degree bound. Cycle indices live here: Z_F = Σ_λ fix F[λ] p_λ / z_λ,
so c_λ = fix F[λ] / z_λ and the two views are interchangeable through
fix_counts / from_fix.

Binary operations re-truncate to the smaller of the operands' bounds.
"""
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.partitions import (
    EMPTY,
    Partition,
    canonical_key,
    enumerate_partitions,
    partitions_up_to,
    z_of,
)
from src.utils.logging import get_logger

logger = get_logger("symfunc")

Number = Union[int, Fraction]

SPECIALIZATIONS = ("egf", "iso_types")


class SeriesError(ValueError):
    pass


class ConvergenceError(SeriesError):
    pass


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def _max_degree(*degrees: Optional[int]) -> Optional[int]:
    if any(d is None for d in degrees):
        return None
    return max(degrees) if degrees else 0


class PSeries:
    """
    Truncated series Σ c_λ p_λ. Treat instances as immutable.

    bound   -- largest retained degree
    degree  -- if not None, the series is known to vanish above this degree
               (cycle index of a strictly finite species)
    """

    __slots__ = ("_coeffs", "bound", "degree")

    def __init__(
        self,
        coeffs: Optional[Mapping] = None,
        bound: int = 0,
        degree: Optional[int] = None,
    ):
        if bound < 0:
            raise SeriesError(f"bound must be nonnegative, got {bound}")
        if degree is not None and degree < 0:
            raise SeriesError(f"degree must be nonnegative, got {degree}")
        clean: Dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = _as_partition(lam)
            if lam.size > bound:
                continue
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self._coeffs = {lam: c for lam, c in clean.items() if c}
        self.bound = bound
        self.degree = degree

    @classmethod
    def _make(cls, coeffs: Dict[Partition, Fraction], bound: int, degree: Optional[int]) -> "PSeries":
        # coeffs must already be truncated; zeros are dropped here
        obj = cls.__new__(cls)
        obj._coeffs = {lam: c for lam, c in coeffs.items() if c}
        obj.bound = bound
        obj.degree = degree
        return obj

    # -- inspection -----------------------------------------------------

    def coefficient(self, lam) -> Fraction:
        return self._coeffs.get(_as_partition(lam), Fraction(0))

    def items(self) -> List[Tuple[Partition, Fraction]]:
        """Terms in canonical order: by degree, decreasing lexicographic within a degree."""
        return sorted(self._coeffs.items(), key=lambda kv: canonical_key(kv[0]))

    def support(self) -> List[Partition]:
        return [lam for lam, _ in self.items()]

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_term(self) -> Fraction:
        return self._coeffs.get(EMPTY, Fraction(0))

    def min_degree(self) -> Optional[int]:
        """Smallest degree carrying a nonzero term, None for the zero series."""
        if not self._coeffs:
            return None
        return min(lam.size for lam in self._coeffs)

    def is_polynomial(self) -> bool:
        """True when every term of the untruncated series is present."""
        return self.degree is not None and self.degree <= self.bound

    def homogeneous(self, d: int) -> "PSeries":
        return PSeries._make({lam: c for lam, c in self._coeffs.items() if lam.size == d}, self.bound, d)

    def truncate(self, bound: int) -> "PSeries":
        bound = min(bound, self.bound)
        if bound == self.bound:
            return self
        return PSeries._make(
            {lam: c for lam, c in self._coeffs.items() if lam.size <= bound}, bound, self.degree
        )

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "PSeries") -> "PSeries":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "PSeries") -> "PSeries":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "PSeries":
        return self.scaled(-1)

    def scaled(self, factor: Number) -> "PSeries":
        factor = Fraction(factor)
        return PSeries._make({lam: factor * c for lam, c in self._coeffs.items()}, self.bound, self.degree)

    def __mul__(self, other):
        if isinstance(other, PSeries):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, PSeries):
            return NotImplemented
        return self.bound == other.bound and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self) -> str:
        return f"PSeries({self}, bound={self.bound})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for lam, c in self.items():
            mono = "1" if not lam else "p[" + ",".join(map(str, lam)) + "]"
            terms.append(mono if c == 1 and lam else f"{c}*{mono}" if lam else str(c))
        return " + ".join(terms).replace("+ -", "- ")


class FixFn:
    """
    fix F[λ] as a total rule on partitions with exact rational values.
    Nonnegative integer values describe an ordinary species, signed or
    rational values a virtual or weighted one.

    degree -- if not None, values vanish on partitions larger than this.
    """

    __slots__ = ("_rule", "name", "degree")

    def __init__(self, rule: Callable[[Partition], Number], name: str = "fix", degree: Optional[int] = None):
        self._rule = rule
        self.name = name
        self.degree = degree

    def __call__(self, lam) -> Fraction:
        lam = _as_partition(lam)
        if self.degree is not None and lam.size > self.degree:
            return Fraction(0)
        return Fraction(self._rule(lam))

    @classmethod
    def from_mapping(cls, values: Mapping, name: str = "table", degree: Optional[int] = None) -> "FixFn":
        table = {_as_partition(lam): Fraction(v) for lam, v in values.items() if v}
        return cls(lambda lam: table.get(lam, 0), name=name, degree=degree)

    @classmethod
    def constant(cls, value: Number = 1) -> "FixFn":
        value = Fraction(value)
        return cls(lambda lam: value, name=f"constant {value}")

    @classmethod
    def zero(cls) -> "FixFn":
        return cls(lambda lam: 0, name="zero", degree=0)

    @classmethod
    def even_size(cls) -> "FixFn":
        return cls(lambda lam: 1 if lam.size % 2 == 0 else 0, name="1 if |λ| even else 0")

    @classmethod
    def of_size(cls, k: int) -> "FixFn":
        return cls(lambda lam: 1 if lam.size == k else 0, name=f"1 if |λ| = {k} else 0", degree=k)

    def scaled(self, factor: Number) -> "FixFn":
        factor = Fraction(factor)
        rule = self._rule
        return FixFn(lambda lam: factor * Fraction(rule(lam)), name=f"{factor}*({self.name})", degree=self.degree)

    def __add__(self, other: "FixFn") -> "FixFn":
        a, b = self, other
        return FixFn(lambda lam: a(lam) + b(lam), name=f"({a.name}) + ({b.name})", degree=_max_degree(a.degree, b.degree))

    def __sub__(self, other: "FixFn") -> "FixFn":
        return self + other.scaled(-1)

    def __neg__(self) -> "FixFn":
        return self.scaled(-1)

    def __repr__(self) -> str:
        return f"FixFn({self.name!r}, degree={self.degree})"


# -- constructors -------------------------------------------------------


def zero(bound: int = 0) -> PSeries:
    return PSeries._make({}, bound, 0)


def one(bound: int = 0) -> PSeries:
    return PSeries._make({EMPTY: Fraction(1)}, bound, 0)


def monomial(lam, coeff: Number = 1, bound: Optional[int] = None) -> PSeries:
    lam = _as_partition(lam)
    bound = lam.size if bound is None else bound
    return PSeries({lam: coeff}, bound, degree=lam.size)


def power_sum(k: int, bound: Optional[int] = None) -> PSeries:
    return monomial(Partition((k,)), 1, bound)


def complete(k: int, bound: int) -> PSeries:
    """h_k = Σ_{λ⊢k} p_λ / z_λ, the cycle index of E_k."""
    coeffs = {}
    if k <= bound:
        coeffs = {lam: Fraction(1, z_of(lam)) for lam in enumerate_partitions(k)}
    return PSeries._make(coeffs, bound, k)


def complete_series(bound: int) -> PSeries:
    """Σ_λ p_λ / z_λ truncated at bound, the cycle index of E."""
    return PSeries._make({lam: Fraction(1, z_of(lam)) for lam in partitions_up_to(bound)}, bound, None)


# -- ring operations ----------------------------------------------------


def linear_combine(terms: Sequence[Tuple[Number, PSeries]], bound: Optional[int] = None) -> PSeries:
    """Σ a_i f_i, re-truncated at the smallest bound among the inputs (and bound, if given)."""
    bounds = [f.bound for _, f in terms]
    if bound is not None:
        bounds.append(bound)
    if not bounds:
        raise SeriesError("linear_combine of no terms needs an explicit bound")
    limit = min(bounds)
    acc: Dict[Partition, Fraction] = {}
    for a, f in terms:
        a = Fraction(a)
        if not a:
            continue
        for lam, c in f._coeffs.items():
            if lam.size <= limit:
                acc[lam] = acc.get(lam, 0) + a * c
    degree = _max_degree(*(f.degree for a, f in terms if a)) if terms else 0
    return PSeries._make(acc, limit, degree)


def _sized_terms(f: PSeries, bound: int) -> List[Tuple[Partition, int, Fraction]]:
    terms = [(lam, lam.size, c) for lam, c in f._coeffs.items() if lam.size <= bound]
    terms.sort(key=lambda t: t[1])
    return terms


def multiply(f: PSeries, g: PSeries) -> PSeries:
    """p_λ · p_μ = p_{λ∪μ}; products above the common bound are discarded."""
    bound = min(f.bound, g.bound)
    f_terms = _sized_terms(f, bound)
    g_terms = _sized_terms(g, bound)
    acc: Dict[Partition, Fraction] = {}
    for lam, a, c in f_terms:
        room = bound - a
        for mu, b, d in g_terms:
            if b > room:
                break
            key = lam.join(mu)
            acc[key] = acc.get(key, 0) + c * d
    degree = None if f.degree is None or g.degree is None else f.degree + g.degree
    return PSeries._make(acc, bound, degree)


def kronecker(f: PSeries, g: PSeries) -> PSeries:
    """Internal product: coefficient of p_λ is z_λ c_λ(f) c_λ(g) (Cartesian product of species)."""
    bound = min(f.bound, g.bound)
    small, large = (f, g) if len(f) <= len(g) else (g, f)
    acc = {}
    for lam, c in small._coeffs.items():
        d = large._coeffs.get(lam)
        if d is not None and lam.size <= bound:
            acc[lam] = z_of(lam) * c * d
    degrees = [d for d in (f.degree, g.degree) if d is not None]
    return PSeries._make(acc, bound, min(degrees) if degrees else None)


def scalar_product(f: PSeries, g: PSeries) -> Fraction:
    """⟨f, g⟩ = Σ_λ z_λ c_λ(f) c_λ(g)."""
    bound = min(f.bound, g.bound)
    total = Fraction(0)
    for lam, c in f._coeffs.items():
        d = g._coeffs.get(lam)
        if d is not None and lam.size <= bound:
            total += z_of(lam) * c * d
    return total


def adams(g: PSeries, k: int) -> PSeries:
    """p_k ∘ g: every p_i becomes p_{ki}."""
    if k == 1:
        return g
    acc = {lam.scaled(k): c for lam, c in g._coeffs.items() if lam.size * k <= g.bound}
    return PSeries._make(acc, g.bound, None if g.degree is None else g.degree * k)


class PlethysticPowers:
    """
    Cache of (p_k ∘ g)^e for one inner argument g, so that p_λ ∘ g for every
    term of an outer series reuses earlier products. Works for any series
    type given its Adams map, product and unit.
    """

    def __init__(self, adams_fn: Callable[[int], object], multiply_fn: Callable, unit):
        self._adams = adams_fn
        self._multiply = multiply_fn
        self._unit = unit
        self._base: Dict[int, object] = {}
        self._powers: Dict[Tuple[int, int], object] = {}

    def power(self, k: int, e: int):
        if e == 0:
            return self._unit
        key = (k, e)
        cached = self._powers.get(key)
        if cached is None:
            base = self._base.get(k)
            if base is None:
                base = self._base[k] = self._adams(k)
            cached = base if e == 1 else self._multiply(self.power(k, e - 1), base)
            self._powers[key] = cached
        return cached

    def monomial(self, lam: Partition):
        """p_λ ∘ g = Π_k (p_k ∘ g)^{m_k(λ)}."""
        result = None
        for k, e in lam.multiplicities().items():
            factor = self.power(k, e)
            result = factor if result is None else self._multiply(result, factor)
        return self._unit if result is None else result


def plethysm(f: PSeries, g: PSeries) -> PSeries:
    """
    f ∘ g determined by p_n ∘ g = g with p_i ↦ p_{ni}, extended additively
    and multiplicatively. g must have no constant term unless f is a polynomial.
    """
    constant = g.constant_term()
    if constant and not f.is_polynomial():
        raise ConvergenceError(
            "composition does not converge: inner series has constant term "
            f"{constant} and the outer series is not a polynomial"
        )
    low = g.min_degree()
    if f.is_polynomial() or low is None:
        bound = g.bound
    else:
        # outer terms of degree > f.bound would contribute from degree (f.bound + 1) * low on
        bound = min(g.bound, (f.bound + 1) * low - 1)
    inner = g.truncate(bound)
    unit = one(bound)
    powers = PlethysticPowers(lambda k: adams(inner, k), multiply, unit)
    acc: Dict[Partition, Fraction] = {}
    for lam, c in f._coeffs.items():
        if low and lam.size * low > bound:
            continue
        for mu, d in powers.monomial(lam)._coeffs.items():
            acc[mu] = acc.get(mu, 0) + c * d
    if f.degree == 0 or g.degree == 0:
        degree = 0
    else:
        degree = None if f.degree is None or g.degree is None else f.degree * g.degree
    logger.debug(f"plethysm: {len(f)} outer terms, bound {bound}, {len(acc)} result terms")
    return PSeries._make(acc, bound, degree)


def plethystic_exp(g: PSeries) -> PSeries:
    """
    Z_E ∘ g = exp(Σ_k (p_k ∘ g) / k), built one degree at a time from
    n·H_n = Σ_j j·A_j·H_{n-j} where A = Σ_k (p_k ∘ g) / k. Same result as
    plethysm(complete_series(...), g) at a fraction of the cost when A is sparse.
    """
    if g.constant_term():
        raise ConvergenceError("exp of a series with a nonzero constant term does not converge")
    bound = g.bound
    exponent: List[Dict[Partition, Fraction]] = [{} for _ in range(bound + 1)]
    for lam, c in g._coeffs.items():
        for k in range(1, bound // lam.size + 1):
            slot = exponent[lam.size * k]
            key = lam.scaled(k)
            slot[key] = slot.get(key, 0) + c / k
    layers: List[Dict[Partition, Fraction]] = [{EMPTY: Fraction(1)}]
    for n in range(1, bound + 1):
        acc: Dict[Partition, Fraction] = {}
        for j in range(1, n + 1):
            lower = layers[n - j]
            if not exponent[j] or not lower:
                continue
            for lam, a in exponent[j].items():
                weight = j * a
                for mu, h in lower.items():
                    key = lam.join(mu)
                    acc[key] = acc.get(key, 0) + weight * h
        layers.append({lam: c / n for lam, c in acc.items() if c})
    coeffs = {lam: c for layer in layers for lam, c in layer.items()}
    return PSeries._make(coeffs, bound, 0 if g.is_zero() else None)


def p1_derivative(f: PSeries) -> PSeries:
    """∂/∂p_1, treating the p_i as independent variables; the bound drops by one."""
    bound = max(f.bound - 1, 0)
    acc = {}
    for lam, c in f._coeffs.items():
        m1 = lam.count(1)
        if m1 and lam.size - 1 <= bound:
            acc[lam.without_ones(1)] = m1 * c
    degree = None if f.degree is None else max(f.degree - 1, 0)
    return PSeries._make(acc, bound, degree)


# -- fix counts and specializations --------------------------------------


def fix_counts(f: PSeries) -> FixFn:
    """fix F[λ] = z_λ c_λ; zero outside the stored support."""
    return FixFn.from_mapping({lam: z_of(lam) * c for lam, c in f._coeffs.items()}, name="fix", degree=f.degree)


def from_fix(fn: FixFn, bound: int) -> PSeries:
    """Σ_{|λ| ≤ bound} fn(λ) p_λ / z_λ."""
    limit = bound if fn.degree is None else min(bound, fn.degree)
    acc = {}
    for lam in partitions_up_to(limit):
        value = fn(lam)
        if value:
            acc[lam] = value / z_of(lam)
    return PSeries._make(acc, bound, fn.degree)


def specialize(f: PSeries, mode: str) -> List[Fraction]:
    """
    Univariate coefficients indexed by degree 0..bound.
    egf:       p_1 ↦ x, p_i ↦ 0 for i > 1
    iso_types: p_i ↦ x^i
    """
    if mode not in SPECIALIZATIONS:
        raise SeriesError(f"unknown specialization {mode!r}; expected one of {SPECIALIZATIONS}")
    coeffs = [Fraction(0)] * (f.bound + 1)
    for lam, c in f._coeffs.items():
        if mode == "egf" and any(p != 1 for p in lam):
            continue
        coeffs[lam.size] += c
    return coeffs
