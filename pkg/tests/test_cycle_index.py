from fractions import Fraction

import pytest

from src.algebra.multisort import BiSeries
from src.algebra.partitions import partitions_up_to, z_of
from src.algebra.symfunc import (
    FixFn,
    PSeries,
    complete,
    complete_series,
    multiply,
    one,
    plethysm,
    power_sum,
)
from src.species.cycle_index import (
    SortError,
    VirtualSpecies,
    clear_cache,
    cycle_index,
    species_fix,
)
from src.oracle.structures import brute_composition_fix
from src.species.parser import parse_species


def ci(text, bound, bound_y=None):
    return cycle_index(parse_species(text), bound, bound_y)


def test_set_of_two():
    assert ci("E_2", 4) == PSeries({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}, 4)


def test_constants_at_any_bound():
    for bound in range(5):
        assert ci("1", bound) == one(bound)
        assert ci("0", bound).is_zero()


def test_sum_product_and_difference():
    assert ci("E_2 + X", 3) == complete(2, 3) + power_sum(1, 3)
    assert ci("X*E", 4) == multiply(power_sum(1, 4), complete_series(4))
    assert ci("E - Eplus", 5) == one(5)


def test_derivative_of_set_species():
    assert ci("E'", 5) == complete_series(5)
    assert ci("E_3''", 3) == power_sum(1, 3)


def test_composition_uses_exact_outer_polynomial():
    assert ci("E_2(E_3)", 6) == plethysm(complete(2, 6), complete(3, 6))


@pytest.mark.parametrize("inner", ["X", "E_2", "E_3", "Eplus"])
@pytest.mark.parametrize("outer", ["X", "E_2", "E_3", "E"])
def test_composition_matches_direct_count(outer, inner):
    z = ci(f"{outer}({inner})", 6)
    for n in range(1, 7):
        brute = brute_composition_fix(outer, inner, n)
        for lam, value in brute.items():
            assert z.coefficient(lam) * z_of(lam) == value, (n, lam)



def test_x_inside_composition():
    assert ci("E_2(X)", 4) == ci("E_2", 4)


def test_two_sort_half_edge_pairs():
    z_g = ci("E_2(X*E_2(Y))", 2, 4)
    assert isinstance(z_g, BiSeries)
    assert z_g.coefficient((2,), (4,)) == Fraction(1, 4)
    assert z_g.coefficient((1, 1), (1, 1, 1, 1)) == Fraction(1, 8)
    assert len(z_g) == 5


def test_y_free_expression_with_y_bound_lifts_to_two_sorts():
    lifted = ci("E_2", 3, 2)
    assert lifted == BiSeries.from_x(complete(2, 3), 2)


def test_sort_errors():
    with pytest.raises(SortError):
        ci("E(Y)", 3)
    with pytest.raises(SortError):
        ci("(X*Y)'", 2, 2)
    with pytest.raises(SortError):
        ci("(X + Y)(X)", 2, 2)


def test_negative_bound_rejected():
    with pytest.raises(ValueError):
        ci("E", -1)


def test_cache_does_not_change_results():
    first = ci("E(E_2)", 6)
    clear_cache()
    assert ci("E(E_2)", 6) == first


def test_species_fix_of_set_species():
    fix = species_fix(parse_species("E"), 4)
    assert all(fix(lam) == 1 for lam in partitions_up_to(4))


def test_virtual_species_views():
    expr_view = VirtualSpecies.of(parse_species("E_3 - E_1"))
    assert expr_view.degree() == 3
    fix_view = VirtualSpecies.of(expr_view.fix_fn(3))
    assert fix_view.cycle_index(3) == expr_view.cycle_index(3)
    assert fix_view.fix_fn(3)((1,)) == -1
    with pytest.raises(ValueError):
        VirtualSpecies()
    assert VirtualSpecies.of(FixFn.even_size()).name == "1 if |λ| even else 0"
