"""
Two-sort series Σ c_{λμ} p_λ(x) p_μ(y).

Keys are (λ, μ) pairs stored jointly; x and y are truncated independently
at bound_x and bound_y. The x-section at μ is the PSeries Σ_λ c_{λμ} p_λ(x).
"""
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra.partitions import EMPTY, Partition, canonical_key, partitions_up_to, z_of
from src.algebra.symfunc import (
    ConvergenceError,
    Number,
    PlethysticPowers,
    PSeries,
    SeriesError,
    multiply,
)
from src.utils.logging import get_logger

logger = get_logger("multisort")

Key = Tuple[Partition, Partition]


def _key(lam, mu) -> Key:
    return (
        lam if isinstance(lam, Partition) else Partition(lam),
        mu if isinstance(mu, Partition) else Partition(mu),
    )


class BiSeries:
    """Truncated two-sort series. Treat instances as immutable."""

    __slots__ = ("_coeffs", "bound_x", "bound_y")

    def __init__(self, coeffs: Optional[Mapping] = None, bound_x: int = 0, bound_y: int = 0):
        if bound_x < 0 or bound_y < 0:
            raise SeriesError(f"bounds must be nonnegative, got ({bound_x}, {bound_y})")
        clean: Dict[Key, Fraction] = {}
        for (lam, mu), c in (coeffs or {}).items():
            key = _key(lam, mu)
            if key[0].size > bound_x or key[1].size > bound_y:
                continue
            clean[key] = clean.get(key, 0) + Fraction(c)
        self._coeffs = {k: c for k, c in clean.items() if c}
        self.bound_x = bound_x
        self.bound_y = bound_y

    @classmethod
    def _make(cls, coeffs: Dict[Key, Fraction], bound_x: int, bound_y: int) -> "BiSeries":
        obj = cls.__new__(cls)
        obj._coeffs = {k: c for k, c in coeffs.items() if c}
        obj.bound_x = bound_x
        obj.bound_y = bound_y
        return obj

    @classmethod
    def from_x(cls, f: PSeries, bound_y: int = 0) -> "BiSeries":
        """f(x) viewed as a two-sort series with no y dependence."""
        return cls._make({(lam, EMPTY): c for lam, c in f._coeffs.items()}, f.bound, bound_y)

    @classmethod
    def from_y(cls, g: PSeries, bound_x: int = 0) -> "BiSeries":
        """g placed in the y sort."""
        return cls._make({(EMPTY, mu): c for mu, c in g._coeffs.items()}, bound_x, g.bound)

    def coefficient(self, lam, mu) -> Fraction:
        return self._coeffs.get(_key(lam, mu), Fraction(0))

    def items(self) -> List[Tuple[Key, Fraction]]:
        return sorted(
            self._coeffs.items(), key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1]))
        )

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_term(self) -> Fraction:
        return self._coeffs.get((EMPTY, EMPTY), Fraction(0))

    def min_degrees(self) -> Optional[Tuple[int, int, int]]:
        """(min x-degree, min y-degree, min total degree) over the nonzero terms."""
        if not self._coeffs:
            return None
        xs = [lam.size for lam, _ in self._coeffs]
        ys = [mu.size for _, mu in self._coeffs]
        totals = [lam.size + mu.size for lam, mu in self._coeffs]
        return min(xs), min(ys), min(totals)

    def x_sections(self) -> Dict[Partition, PSeries]:
        """μ -> Σ_λ c_{λμ} p_λ(x), for every μ carrying a nonzero term."""
        grouped: Dict[Partition, Dict[Partition, Fraction]] = {}
        for (lam, mu), c in self._coeffs.items():
            grouped.setdefault(mu, {})[lam] = c
        return {mu: PSeries._make(sec, self.bound_x, None) for mu, sec in grouped.items()}

    def x_section(self, mu) -> PSeries:
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        return PSeries._make(
            {lam: c for (lam, nu), c in self._coeffs.items() if nu == mu}, self.bound_x, None
        )

    def truncate(self, bound_x: int, bound_y: int) -> "BiSeries":
        bx, by = min(bound_x, self.bound_x), min(bound_y, self.bound_y)
        if (bx, by) == (self.bound_x, self.bound_y):
            return self
        return BiSeries._make(
            {(lam, mu): c for (lam, mu), c in self._coeffs.items() if lam.size <= bx and mu.size <= by},
            bx,
            by,
        )

    def scaled(self, factor: Number) -> "BiSeries":
        factor = Fraction(factor)
        return BiSeries._make({k: factor * c for k, c in self._coeffs.items()}, self.bound_x, self.bound_y)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        return bi_linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return bi_linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "BiSeries":
        return self.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            return bi_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.bound_x, self.bound_y) == (other.bound_x, other.bound_y) and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self) -> str:
        return f"BiSeries({self}, bound_x={self.bound_x}, bound_y={self.bound_y})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for (lam, mu), c in self.items():
            mono = []
            if lam:
                mono.append("p[" + ",".join(map(str, lam)) + "](x)")
            if mu:
                mono.append("p[" + ",".join(map(str, mu)) + "](y)")
            body = "*".join(mono)
            if not body:
                terms.append(str(c))
            else:
                terms.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(terms).replace("+ -", "- ")


def bi_zero(bound_x: int = 0, bound_y: int = 0) -> BiSeries:
    return BiSeries._make({}, bound_x, bound_y)


def bi_one(bound_x: int = 0, bound_y: int = 0) -> BiSeries:
    return BiSeries._make({(EMPTY, EMPTY): Fraction(1)}, bound_x, bound_y)


def bi_linear_combine(
    terms: Sequence[Tuple[Number, BiSeries]], bounds: Optional[Tuple[int, int]] = None
) -> BiSeries:
    xs = [h.bound_x for _, h in terms]
    ys = [h.bound_y for _, h in terms]
    if bounds is not None:
        xs.append(bounds[0])
        ys.append(bounds[1])
    if not xs:
        raise SeriesError("bi_linear_combine of no terms needs explicit bounds")
    bx, by = min(xs), min(ys)
    acc: Dict[Key, Fraction] = {}
    for a, h in terms:
        a = Fraction(a)
        if not a:
            continue
        for (lam, mu), c in h._coeffs.items():
            if lam.size <= bx and mu.size <= by:
                key = (lam, mu)
                acc[key] = acc.get(key, 0) + a * c
    return BiSeries._make(acc, bx, by)


def _sized(h: BiSeries, bx: int, by: int) -> List[Tuple[Partition, Partition, int, int, Fraction]]:
    terms = [
        (lam, mu, lam.size, mu.size, c)
        for (lam, mu), c in h._coeffs.items()
        if lam.size <= bx and mu.size <= by
    ]
    terms.sort(key=lambda t: t[2])
    return terms


def bi_multiply(f: BiSeries, g: BiSeries) -> BiSeries:
    """Concatenation of power-sum indices in each sort independently."""
    bx, by = min(f.bound_x, g.bound_x), min(f.bound_y, g.bound_y)
    f_terms = _sized(f, bx, by)
    g_terms = _sized(g, bx, by)
    acc: Dict[Key, Fraction] = {}
    for lam, mu, a, b, c in f_terms:
        room_x, room_y = bx - a, by - b
        for nu, rho, a2, b2, d in g_terms:
            if a2 > room_x:
                break
            if b2 > room_y:
                continue
            key = (lam.join(nu), mu.join(rho))
            acc[key] = acc.get(key, 0) + c * d
    return BiSeries._make(acc, bx, by)


def cartesian_y(f: BiSeries, g: BiSeries) -> BiSeries:
    """
    Cartesian product in Y: the section at μ is z_μ times the x-product of
    the two sections at μ.
    """
    bx, by = min(f.bound_x, g.bound_x), min(f.bound_y, g.bound_y)
    g_sections = g.x_sections()
    acc: Dict[Key, Fraction] = {}
    for mu, f_sec in f.x_sections().items():
        g_sec = g_sections.get(mu)
        if g_sec is None or mu.size > by:
            continue
        z = z_of(mu)
        for lam, c in multiply(f_sec.truncate(bx), g_sec.truncate(bx))._coeffs.items():
            acc[(lam, mu)] = z * c
    return BiSeries._make(acc, bx, by)


def scalar_y(f: BiSeries, g: BiSeries) -> PSeries:
    """⟨f, g⟩_Y = Σ_μ z_μ · (x-section of f at μ)(x-section of g at μ), a series in x."""
    bx, by = min(f.bound_x, g.bound_x), min(f.bound_y, g.bound_y)
    g_sections = g.x_sections()
    acc: Dict[Partition, Fraction] = {}
    for mu, f_sec in f.x_sections().items():
        g_sec = g_sections.get(mu)
        if g_sec is None or mu.size > by:
            continue
        z = z_of(mu)
        for lam, c in multiply(f_sec.truncate(bx), g_sec.truncate(bx))._coeffs.items():
            acc[lam] = acc.get(lam, 0) + z * c
    return PSeries._make(acc, bx, None)


def scalar_y_by_degree(f: BiSeries, g: BiSeries) -> List[PSeries]:
    """The terms of ⟨f, g⟩_Y split by the y-degree |μ| they come from."""
    bx, by = min(f.bound_x, g.bound_x), min(f.bound_y, g.bound_y)
    g_sections = g.x_sections()
    layers: List[Dict[Partition, Fraction]] = [{} for _ in range(by + 1)]
    for mu, f_sec in f.x_sections().items():
        g_sec = g_sections.get(mu)
        if g_sec is None or mu.size > by:
            continue
        z = z_of(mu)
        layer = layers[mu.size]
        for lam, c in multiply(f_sec.truncate(bx), g_sec.truncate(bx))._coeffs.items():
            layer[lam] = layer.get(lam, 0) + z * c
    return [PSeries._make(layer, bx, None) for layer in layers]


def set_y_one(f: BiSeries) -> PSeries:
    """Every p_μ(y) ↦ 1."""
    acc: Dict[Partition, Fraction] = {}
    for (lam, _), c in f._coeffs.items():
        acc[lam] = acc.get(lam, 0) + c
    return PSeries._make(acc, f.bound_x, None)


def iso_types_xy(f: BiSeries) -> List[List[Fraction]]:
    """Table t[a][b] = coefficient of x^a y^b under p_i(x) ↦ x^i, p_i(y) ↦ y^i."""
    table = [[Fraction(0)] * (f.bound_y + 1) for _ in range(f.bound_x + 1)]
    for (lam, mu), c in f._coeffs.items():
        table[lam.size][mu.size] += c
    return table


def bi_adams(h: BiSeries, k: int) -> BiSeries:
    """p_k ∘ h: p_i(x) ↦ p_{ki}(x) and p_i(y) ↦ p_{ki}(y)."""
    if k == 1:
        return h
    acc = {
        (lam.scaled(k), mu.scaled(k)): c
        for (lam, mu), c in h._coeffs.items()
        if lam.size * k <= h.bound_x and mu.size * k <= h.bound_y
    }
    return BiSeries._make(acc, h.bound_x, h.bound_y)


def bi_plethysm(f: PSeries, h: BiSeries) -> BiSeries:
    """
    f ∘ h for a one-sort outer series. When f is not a polynomial its bound
    must reach every term that can land inside (bound_x, bound_y).
    """
    constant = h.constant_term()
    if constant and not f.is_polynomial():
        raise ConvergenceError(
            f"composition does not converge: inner series has constant term {constant} "
            "and the outer series is not a polynomial"
        )
    bx, by = h.bound_x, h.bound_y
    lows = h.min_degrees()
    if lows is not None and not f.is_polynomial():
        needed = (bx + by) // lows[2] if lows[2] else 0
        if f.bound < needed:
            raise SeriesError(
                f"outer series bound {f.bound} is too small for inner bounds ({bx}, {by}); need {needed}"
            )
    powers = PlethysticPowers(lambda k: bi_adams(h, k), bi_multiply, bi_one(bx, by))
    acc: Dict[Key, Fraction] = {}
    for lam, c in f._coeffs.items():
        if lows is not None:
            n = lam.size
            mx, my, mt = lows
            if n * mx > bx or n * my > by or n * mt > bx + by:
                continue
        for key, d in powers.monomial(lam)._coeffs.items():
            acc[key] = acc.get(key, 0) + c * d
    logger.debug(f"bi_plethysm: {len(f)} outer terms, bounds ({bx}, {by}), {len(acc)} result terms")
    return BiSeries._make(acc, bx, by)


def bi_plethystic_exp(h: BiSeries) -> BiSeries:
    """
    Z_E ∘ h by the degreewise recurrence n·H_n = Σ_j j·A_j·H_{n-j}, graded by
    total degree, with A = Σ_k (p_k ∘ h) / k.
    """
    if h.constant_term():
        raise ConvergenceError("exp of a series with a nonzero constant term does not converge")
    bx, by = h.bound_x, h.bound_y
    top = bx + by
    exponent: List[Dict[Key, Fraction]] = [{} for _ in range(top + 1)]
    for (lam, mu), c in h._coeffs.items():
        k = 1
        while lam.size * k <= bx and mu.size * k <= by:
            slot = exponent[(lam.size + mu.size) * k]
            key = (lam.scaled(k), mu.scaled(k))
            slot[key] = slot.get(key, 0) + c / k
            k += 1
    layers: List[Dict[Key, Fraction]] = [{(EMPTY, EMPTY): Fraction(1)}]
    for n in range(1, top + 1):
        acc: Dict[Key, Fraction] = {}
        for j in range(1, n + 1):
            lower = layers[n - j]
            if not exponent[j] or not lower:
                continue
            for (lam, mu), a in exponent[j].items():
                weight = j * a
                for (nu, rho), c in lower.items():
                    if lam.size + nu.size > bx or mu.size + rho.size > by:
                        continue
                    key = (lam.join(nu), mu.join(rho))
                    acc[key] = acc.get(key, 0) + weight * c
        layers.append({key: c / n for key, c in acc.items() if c})
    coeffs = {key: c for layer in layers for key, c in layer.items()}
    logger.debug(f"bi_plethystic_exp: bounds ({bx}, {by}), {len(coeffs)} terms")
    return BiSeries._make(coeffs, bx, by)


def bi_fix_counts(f: BiSeries) -> Dict[Key, Fraction]:
    """fix F[λ, μ] = z_λ z_μ c_{λμ} on the stored support."""
    return {(lam, mu): z_of(lam) * z_of(mu) * c for (lam, mu), c in f._coeffs.items()}


def bi_from_fix(rule: Callable[[Partition, Partition], Number], bound_x: int, bound_y: int) -> BiSeries:
    acc: Dict[Key, Fraction] = {}
    for mu in partitions_up_to(bound_y):
        for lam in partitions_up_to(bound_x):
            value = Fraction(rule(lam, mu))
            if value:
                acc[(lam, mu)] = value / (z_of(lam) * z_of(mu))
    return BiSeries._make(acc, bound_x, bound_y)
