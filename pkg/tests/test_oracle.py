import pytest

from src.algebra.partitions import Partition, enumerate_partitions
from src.enumeration.digraphs import digraph_counts, outdegree_counts
from src.enumeration.graphs import graph_counts
from src.enumeration.requests import EnumerationRequest
from src.oracle.burnside import (
    burnside_count,
    check_action,
    check_budget,
    check_class_invariance,
    cycle_type,
    fixed_counts_by_type,
    permutation_of_type,
)
from src.oracle.families import (
    BudgetExceeded,
    all_digraphs,
    family_for,
    outdegree_digraphs,
    regular_multigraphs,
    relations,
)
from src.oracle.structures import brute_composition_fix, brute_inner_plethysm_fix, set_partitions
from src.species.expr import SetOfSize, SetSpecies


def test_family_sizes():
    assert outdegree_digraphs(1, 3).size == 8
    assert relations(2).size == 16
    assert regular_multigraphs(3, 2).size == 1
    assert len(list(regular_multigraphs(3, 2))) == 1


def test_known_orbit_counts():
    assert burnside_count(outdegree_digraphs(2, 5)) == 79
    assert burnside_count(relations(2)) == 10
    assert burnside_count(regular_multigraphs(3, 4)) == 3


def test_exhaustive_and_class_weighted_sums_agree():
    family = all_digraphs(3)
    assert burnside_count(family, exhaustive=True) == burnside_count(family) == 16


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_outdegree_digraphs_agree_with_engine(k, n):
    for loops in (False, True):
        engine = outdegree_counts(k, n, loops=loops).count(n)
        assert burnside_count(outdegree_digraphs(k, n, loops)) == engine


def test_relations_agree_with_engine():
    request = EnumerationRequest("digraph", SetSpecies(), loops=True, max_vertices=4)
    engine = digraph_counts(request).as_dict()
    for n in range(1, 5):
        assert burnside_count(relations(n)) == engine[(n,)]


@pytest.mark.parametrize("loops", [False, True])
def test_regular_multigraphs_agree_with_engine(loops):
    request = EnumerationRequest("graph", SetOfSize(3), loops=loops, max_vertices=6)
    engine = graph_counts(request).as_dict()
    for n in range(1, 7):
        assert burnside_count(regular_multigraphs(3, n, loops)) == engine[(n,)]


def test_loops_add_two_to_the_degree():
    # a single vertex of degree 2 is one loop; degree 3 is impossible
    assert regular_multigraphs(2, 1, loops=True).size == 1
    assert regular_multigraphs(3, 1, loops=True).size == 0


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as info:
        burnside_count(relations(3), budget=100)
    assert info.value.required == 512 * 6
    assert info.value.budget == 100
    assert check_budget(relations(2), budget=100) == 32
    assert info.value.exact


def test_family_without_closed_form_is_refused_after_a_short_listing():
    family = regular_multigraphs(3, 6)
    listed = []
    full_listing = family.generate

    def counting_listing():
        for structure in full_listing():
            listed.append(structure)
            yield structure

    family.generate = counting_listing
    with pytest.raises(BudgetExceeded) as info:
        burnside_count(family, budget=5 * 720)
    assert len(listed) == 6
    assert family.known_size is None
    assert not info.value.exact
    assert info.value.required == 6 * 720
    assert "needs more than" in str(info.value)


def test_large_regular_family_refused_under_small_budget():
    with pytest.raises(BudgetExceeded):
        burnside_count(regular_multigraphs(3, 10), budget=10 ** 7)


def test_size_at_most():
    family = regular_multigraphs(3, 4)
    assert family.size_at_most(1) is None
    assert family.known_size is None
    assert family.size_at_most(1000) == family.size
    assert family.known_size is not None
    assert relations(2).size_at_most(15) is None
    assert relations(2).size_at_most(16) == 16


def test_permutations_and_cycle_types():
    perm = permutation_of_type(Partition((3, 2)))
    assert perm == (1, 2, 0, 4, 3)
    assert cycle_type(perm) == Partition((3, 2))


def test_fixed_counts_depend_only_on_cycle_type():
    family = outdegree_digraphs(1, 4)
    for lam in enumerate_partitions(4):
        assert check_class_invariance(family, lam, seed=len(lam))


def test_actions_are_group_actions():
    assert check_action(relations(3))
    assert check_action(regular_multigraphs(2, 3, loops=True))


def test_fixed_counts_by_type():
    table = fixed_counts_by_type(relations(2))
    assert table[Partition((1, 1))] == 16
    assert table[Partition((2,))] == 4


def test_family_lookup():
    assert family_for("outdegree-set", frozenset({1, 3}), 3).name == "outdegree in [1, 3] digraphs"
    with pytest.raises(ValueError):
        family_for("tournament", None, 3)


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_direct_inner_plethysm_counts():
    assert brute_inner_plethysm_fix("X", "E*E", 2) == {Partition((2,)): 2, Partition((1, 1)): 4}
    assert brute_inner_plethysm_fix("E_2", "E_2", 2) == {Partition((2,)): 1, Partition((1, 1)): 1}
    with pytest.raises(BudgetExceeded):
        brute_inner_plethysm_fix("E_3", "E*E", 4, budget=10)


def test_direct_composition_counts():
    # E(Eplus) on 3 points: set partitions of {0,1,2}
    assert brute_composition_fix("E", "Eplus", 3) == {
        Partition((3,)): 2,
        Partition((2, 1)): 3,
        Partition((1, 1, 1)): 5,
    }
    with pytest.raises(ValueError):
        brute_composition_fix("E", "E", 2)
