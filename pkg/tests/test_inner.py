from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.algebra.multisort import BiSeries, cartesian_y, iso_types_xy
from src.algebra.partitions import Partition, enumerate_partitions, partitions_up_to, z_of
from src.algebra.symfunc import (
    FixFn,
    SeriesError,
    complete,
    complete_series,
    fix_counts,
    multiply,
    power_sum,
)
from src.oracle.structures import brute_inner_plethysm_fix
from src.species.cycle_index import cycle_index
from src.species.inner import (
    inner_plethysm,
    inner_plethysm_y,
    phi_cycle_index,
    phi_diagonal_fix,
    phi_fix,
)
from src.species.parser import parse_species

PAIRED_VERTICES = {
    ((2, 2), (4,)): Fraction(1, 4),
    ((4,), (4,)): Fraction(1, 4),
    ((2, 2), (2, 1, 1)): Fraction(3, 8),
    ((1, 1, 1, 1), (2, 1, 1)): Fraction(1, 8),
    ((2, 2), (2, 2)): Fraction(7, 16),
    ((1, 1, 1, 1), (2, 2)): Fraction(1, 16),
    ((2, 1, 1), (2, 2)): Fraction(1, 4),
    ((2, 2), (1, 1, 1, 1)): Fraction(1, 16),
    ((1, 1, 1, 1), (1, 1, 1, 1)): Fraction(3, 16),
}


def test_phi_of_zero_is_set_of_y():
    assert phi_cycle_index(FixFn.zero(), 3, 4) == BiSeries.from_y(complete_series(4), bound_x=3)


def test_phi_of_set_species_fixes_everything():
    one_everywhere = FixFn.constant(1)
    assert phi_fix(one_everywhere, Partition((1, 1)), Partition((3,))) == 1
    assert phi_fix(one_everywhere, Partition((2, 1)), Partition((2, 2))) == 1


def test_diagonal_of_phi_counts_relations():
    vertex = fix_counts(multiply(complete_series(3), complete_series(3)))
    counts = [
        sum(phi_diagonal_fix(vertex, lam) / z_of(lam) for lam in enumerate_partitions(n))
        for n in (1, 2, 3)
    ]
    assert counts == [2, 10, 104]


def test_phi_cycle_index_agrees_with_phi_fix():
    fix = fix_counts(complete(2, 3) - power_sum(1, 3))
    series = phi_cycle_index(fix, 3, 3)
    for lam in enumerate_partitions(3):
        for mu in enumerate_partitions(2):
            assert series.coefficient(lam, mu) * z_of(lam) * z_of(mu) == phi_fix(fix, lam, mu)


def test_inner_plethysm_with_singleton_is_identity():
    g = cycle_index(parse_species("E*E_2"), 5)
    assert inner_plethysm(power_sum(1), g) == g


def test_pairs_of_pairs():
    result = fix_counts(inner_plethysm(complete(2, 2), complete(2, 2)))
    brute = brute_inner_plethysm_fix("E_2", "E_2", 2)
    assert all(result(lam) == value for lam, value in brute.items())
    assert result((1, 1)) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("g_name", ["E*E", "E_1*E", "E_2*E", "E"])
def test_inner_plethysm_agrees_with_direct_count(k, g_name):
    g = cycle_index(parse_species(g_name), 3)
    result = fix_counts(inner_plethysm(complete(k, k), g))
    for n in range(1, 4):
        brute = brute_inner_plethysm_fix(f"E_{k}", g_name, n)
        for lam, value in brute.items():
            assert result(lam) == value, (g_name, k, lam)


def test_inner_plethysm_is_linear_across_degrees():
    g1, g2 = complete(2, 3), complete(3, 3)
    f = complete(2, 2)
    assert inner_plethysm(f, g1 + g2) == inner_plethysm(f, g1) + inner_plethysm(f, g2)


def test_inner_plethysm_needs_polynomial_outer():
    with pytest.raises(SeriesError):
        inner_plethysm(complete_series(3), complete(2, 3))
    with pytest.raises(SeriesError):
        inner_plethysm_y(complete_series(3), BiSeries({}, 2, 2))


def test_two_vertex_classes_sharing_half_edges():
    g = cycle_index(parse_species("E_2(X*E_2(Y))"), 4, 4)
    result = inner_plethysm_y(complete(2, 2), g)
    assert result == BiSeries(PAIRED_VERTICES, 4, 4)
    table = iso_types_xy(result)
    assert table[4][4] == 2
    assert sum(sum(row) for row in table) == 2


def test_inner_plethysm_y_with_singleton_is_identity():
    g = cycle_index(parse_species("E_2(X*E_2(Y))"), 4, 4)
    assert inner_plethysm_y(power_sum(1), g) == g


_SMALL = list(partitions_up_to(3))


@st.composite
def signed_fix(draw):
    """Fix counts of a virtual species, signed, on partitions of size at most 3."""
    values = draw(st.lists(st.integers(-3, 3), min_size=len(_SMALL), max_size=len(_SMALL)))
    return FixFn.from_mapping(dict(zip(_SMALL, values)), name="drawn")


@given(signed_fix(), signed_fix())
def test_phi_turns_sums_into_cartesian_products_in_y(a, b):
    assert phi_cycle_index(a + b, 3, 3) == cartesian_y(phi_cycle_index(a, 3, 3), phi_cycle_index(b, 3, 3))


def test_phi_of_a_difference_cancels_against_the_subtrahend():
    e2 = FixFn.of_size(2)
    difference = FixFn.even_size() - e2
    assert phi_cycle_index(difference + e2, 3, 3) == cartesian_y(
        phi_cycle_index(difference, 3, 3), phi_cycle_index(e2, 3, 3)
    )
    assert phi_cycle_index(FixFn.zero(), 3, 3) == cartesian_y(
        phi_cycle_index(e2, 3, 3), phi_cycle_index(-e2, 3, 3)
    )
