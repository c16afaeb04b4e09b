import pytest

from src.algebra.symfunc import FixFn
from src.enumeration.graphs import graph_counts, graph_edge_counts, required_bound_y
from src.enumeration.loops import loopless_graph_solution
from src.enumeration.requests import BoundError, EnumerationRequest, PreconditionError
from src.species.cycle_index import VirtualSpecies
from src.species.expr import Derivative, Difference, SetOfSize
from src.species.parser import parse_species


def graphs(text, max_n, loops=False, max_y=None):
    request = EnumerationRequest("graph", parse_species(text), loops=loops, max_vertices=max_n, max_y=max_y)
    return graph_counts(request)


def test_cubic_multigraphs_without_loops():
    assert graphs("E_3", 10).series() == [0, 1, 0, 3, 0, 9, 0, 32, 0, 135]


def test_perfect_matchings():
    assert graphs("E_1", 4).series() == [0, 1, 0, 1]


def test_two_regular_multigraphs_are_cycle_partitions():
    # parts of size 2 are double edges, and with loops parts of size 1 are loops
    assert graphs("E_2", 6).series() == [0, 1, 1, 2, 2, 4]
    assert graphs("E_2", 6, loops=True).series() == [1, 2, 3, 5, 7, 11]


def test_cubic_multigraphs_with_loops_on_two_vertices():
    # a triple edge, or one edge with a loop at each end
    assert graphs("E_3", 2, loops=True).series() == [0, 2]


def test_virtual_half_edge_species_from_fix_counts():
    fix = FixFn.of_size(3)
    request = EnumerationRequest("graph", VirtualSpecies(fix=fix), max_vertices=4)
    assert graph_counts(request).series() == [0, 1, 0, 3]


def test_edge_counts_with_loops():
    request = EnumerationRequest("graph", SetOfSize(2), loops=True, max_vertices=3)
    table = graph_edge_counts(request)
    assert table.as_dict() == {(1, 1): 1, (2, 2): 2, (3, 3): 3}


def test_edge_counts_need_loops():
    request = EnumerationRequest("graph", SetOfSize(2), loops=False, max_vertices=3)
    with pytest.raises(PreconditionError):
        graph_edge_counts(request)


def test_half_edge_bound_must_cover_every_vertex():
    with pytest.raises(BoundError) as info:
        graphs("E_3", 4, max_y=5)
    assert info.value.required == 12
    assert graphs("E_3", 4, max_y=12).series() == [0, 1, 0, 3]


def test_required_bound():
    assert required_bound_y(VirtualSpecies.of(SetOfSize(3)), 10) == 30


def test_graphs_need_strictly_finite_species():
    with pytest.raises(PreconditionError):
        EnumerationRequest("graph", parse_species("E"), max_vertices=3)


def test_loopless_graph_solution():
    assert loopless_graph_solution(SetOfSize(3)) == Difference(SetOfSize(3), Derivative(SetOfSize(3), 2))
    assert loopless_graph_solution(SetOfSize(1)) == SetOfSize(1)
    with pytest.raises(PreconditionError):
        loopless_graph_solution(parse_species("Eplus"))


def test_provenance():
    table = graphs("E_3", 2)
    assert table.provenance["bound_y"] == 6
    assert table.provenance["solver"] == "E_3 - E_3''"


def test_cubic_multigraphs_need_an_even_number_of_vertices():
    counts = graphs("E_3", 11).series()
    assert counts[1::2] == [1, 3, 9, 32, 135]
    assert counts[0::2] == [0] * 6
