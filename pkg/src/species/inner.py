"""
The Φ map and inner plethysm, computed through fix counts.

Φ(F)[X, Y] is the two-sort species of functions from an X-set into
F-structures on a Y-set. For a pair of permutations (β, σ) of types (λ, μ),
a fixed function sends each β-cycle of length k to a structure fixed by σ^k,
so fix Φ(F)[λ, μ] = Π_k fix F[σ^k]^{m_k(λ)}.

Inner plethysm F ⊛ G assembles F-structures over the set of G-structures;
its fix counts come from the character χ(σ) = fix G[σ] by the rule
p_λ[χ](σ) = Π_k χ(σ^k)^{m_k(λ)}.
"""
from fractions import Fraction
from typing import Dict, List, Tuple

from src.algebra.multisort import BiSeries
from src.algebra.partitions import (
    Partition,
    partitions_up_to,
    power_type,
    z_of,
)
from src.algebra.symfunc import (
    FixFn,
    PSeries,
    SeriesError,
    adams,
    fix_counts,
    multiply,
    one,
)
from src.utils.logging import get_logger

logger = get_logger("inner")


def _power_values(fix: FixFn, mu: Partition, count: int) -> List[Fraction]:
    """[fix(σ^1), ..., fix(σ^count)] for σ of type μ (index 0 unused)."""
    return [Fraction(0)] + [fix(power_type(mu, k)) for k in range(1, count + 1)]


def phi_fix(fix: FixFn, lam: Partition, mu: Partition) -> Fraction:
    """fix Φ(F)[λ, μ] = Π_k fix F[power_type(μ, k)]^{m_k(λ)}."""
    value = Fraction(1)
    for k, m in lam.multiplicities().items():
        value *= fix(power_type(mu, k)) ** m
        if not value:
            break
    return value


def phi_diagonal_fix(fix: FixFn, lam: Partition) -> Fraction:
    """Fix count of the diagonal ∇Φ(F): the same permutation acts on both sorts."""
    return phi_fix(fix, lam, lam)


def phi_cycle_index(fix: FixFn, bound_x: int, bound_y: int) -> BiSeries:
    """
    Z_Φ(F) = Σ_μ exp(Σ_i fix F[σ^i] p_i(x) / i) p_μ(y) / z_μ, truncated.
    Signed fix counts give the cycle index of Φ of a virtual species.
    """
    coeffs: Dict[Tuple[Partition, Partition], Fraction] = {}
    for mu in partitions_up_to(bound_y):
        values = _power_values(fix, mu, bound_x)
        z_mu = z_of(mu)
        for lam in partitions_up_to(bound_x):
            value = Fraction(1)
            for k, m in lam.multiplicities().items():
                value *= values[k] ** m
                if not value:
                    break
            if value:
                coeffs[(lam, mu)] = value / (z_of(lam) * z_mu)
    logger.debug(f"phi_cycle_index: bounds ({bound_x}, {bound_y}), {len(coeffs)} terms")
    return BiSeries._make(coeffs, bound_x, bound_y)


def _require_polynomial(f: PSeries):
    if not f.is_polynomial():
        raise SeriesError(
            "inner plethysm needs a strictly finite outer species (a polynomial cycle index)"
        )


def inner_plethysm(f: PSeries, g: PSeries) -> PSeries:
    """
    f ⊛ g. Each degree n of g is handled separately: for μ ⊢ n the
    coefficient of p_μ is f[χ](μ) / z_μ with χ = fix g on partitions of n.
    """
    _require_polynomial(f)
    chi = fix_counts(g)
    outer = f.items()
    coeffs: Dict[Partition, Fraction] = {}
    for mu in partitions_up_to(g.bound):
        powers: Dict[int, Fraction] = {}
        total = Fraction(0)
        for lam, c in outer:
            term = c
            for k, m in lam.multiplicities().items():
                if k not in powers:
                    powers[k] = chi(power_type(mu, k))
                term *= powers[k] ** m
                if not term:
                    break
            total += term
        if total:
            coeffs[mu] = total / z_of(mu)
    degree = g.degree if not f.constant_term() else None
    return PSeries._make(coeffs, g.bound, degree)


def inner_plethysm_y(f: PSeries, g: BiSeries) -> BiSeries:
    """
    f ⊛_Y g: G-structures assembled by F share their Y-points.

    χ(μ) = z_μ · (x-section of g at μ) is a central function with values in
    series over x, and p_λ[χ](μ) = Π_{parts ℓ of λ} p_ℓ ∘ χ(power_type(μ, ℓ)).
    The x-truncation of g is exact here since p_ℓ ∘ only raises x-degree.
    """
    _require_polynomial(f)
    bound_x, bound_y = g.bound_x, g.bound_y
    sections = g.x_sections()
    unit = one(bound_x)
    outer = f.items()
    chi_cache: Dict[Partition, PSeries] = {}
    adams_cache: Dict[Tuple[Partition, int, int], PSeries] = {}

    def chi(nu: Partition) -> PSeries:
        if nu not in chi_cache:
            section = sections.get(nu)
            chi_cache[nu] = unit.scaled(0) if section is None else section.scaled(z_of(nu))
        return chi_cache[nu]

    def adams_power(nu: Partition, ell: int, e: int) -> PSeries:
        key = (nu, ell, e)
        if key not in adams_cache:
            if e == 1:
                adams_cache[key] = adams(chi(nu), ell)
            else:
                adams_cache[key] = multiply(adams_power(nu, ell, e - 1), adams_power(nu, ell, 1))
        return adams_cache[key]

    coeffs: Dict[Tuple[Partition, Partition], Fraction] = {}
    for mu in partitions_up_to(bound_y):
        acc: Dict[Partition, Fraction] = {}
        for lam, c in outer:
            value = unit
            for ell, m in lam.multiplicities().items():
                value = multiply(value, adams_power(power_type(mu, ell), ell, m))
                if value.is_zero():
                    break
            for nu, d in value.items():
                acc[nu] = acc.get(nu, 0) + c * d
        z_mu = z_of(mu)
        for nu, d in acc.items():
            if d:
                coeffs[(nu, mu)] = d / z_mu
    logger.debug(f"inner_plethysm_y: bounds ({bound_x}, {bound_y}), {len(coeffs)} terms")
    return BiSeries._make(coeffs, bound_x, bound_y)
