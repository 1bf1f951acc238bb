"""
Graph operations and their predicted distance Seidel spectra
"""
import math

import pytest

from analyzers.operation_analyzer import (OperationAnalyzer, compare_prediction, double_graph, edc,
                                          energy_corollary, join, join_union, lex_k2,
                                          predict_double_spectrum, predict_edc_spectrum,
                                          predict_join_spectrum, predict_join_union_spectrum,
                                          predict_lex_spectrum, predict_prism_spectrum, prism)
from utils.errors import DisconnectedGraphError, InvalidParameterError
from utils.graph_core import (complete_bipartite_graph, complete_graph, cycle_graph, empty_graph,
                              encode_graph6, graph_invariants, is_complete_multipartite,
                              is_connected, is_regular,
                              path_graph, petersen_graph)


def test_constructions():
    assert double_graph(complete_graph(2)) == cycle_graph(4)
    assert encode_graph6(double_graph(complete_graph(2))) == 'Cl'
    assert lex_k2(complete_graph(2)) == complete_graph(4)
    assert edc(complete_graph(3)).m == complete_bipartite_graph(3, 3).m
    assert is_complete_multipartite(edc(complete_graph(3))) == (3, 3)
    assert prism(complete_graph(3)).m == 9
    wheel = join(complete_graph(1), cycle_graph(4))
    assert wheel.n == 5 and wheel.degrees == (4, 3, 3, 3, 3)
    friendship = join_union(complete_graph(1), complete_graph(2), complete_graph(2))
    assert friendship.m == 6


def test_double_of_single_vertex_is_disconnected():
    assert not is_connected(double_graph(complete_graph(1)))
    with pytest.raises(DisconnectedGraphError):
        predict_double_spectrum(complete_graph(1))


def test_edc_always_connected(small_catalog):
    assert all(is_connected(edc(g)) for g in small_catalog)


def test_double_graph_prediction_on_k2():
    predicted = predict_double_spectrum(complete_graph(2))
    assert predicted.eigenvalues() == pytest.approx([3, 3, -1, -5])
    assert compare_prediction(predicted, double_graph(complete_graph(2)))['matches']


def test_prism_prediction_on_triangle():
    predicted = predict_prism_spectrum(complete_graph(3))
    assert predicted.hypothesis_ok
    assert predicted.eigenvalues() == pytest.approx([5, 3, 3, -1, -1, -9])


def test_edc_prediction_on_c5():
    predicted = predict_edc_spectrum(cycle_graph(5))
    values = predicted.eigenvalues()
    assert values[-1] == pytest.approx(-25)
    assert sum(values) == pytest.approx(0, abs=1e-9)
    assert values == pytest.approx(sorted([-25, 9.4721360, 9.4721360, 0.5278640, 0.5278640, 1,
                                           -3.4721360, -3.4721360, 5.4721360, 5.4721360],
                                          reverse=True), abs=1e-6)
    assert compare_prediction(predicted, edc(cycle_graph(5)))['matches']


def test_wheel_join_prediction():
    predicted = predict_join_spectrum(complete_graph(1), cycle_graph(4))
    root = math.sqrt(41)
    assert predicted.eigenvalues() == pytest.approx(
        sorted([3, 3, -1, (-5 + root) / 2, (-5 - root) / 2], reverse=True), abs=1e-9)


def test_join_union_gives_friendship_spectrum():
    predicted = predict_join_union_spectrum(complete_graph(1), complete_graph(2), complete_graph(2))
    root = math.sqrt(65)
    assert predicted.eigenvalues() == pytest.approx(
        sorted([5, 1, 1, (-7 + root) / 2, (-7 - root) / 2], reverse=True), abs=1e-9)


REGULAR_PAIRS = [
    (complete_graph(1), cycle_graph(4)),
    (complete_graph(2), cycle_graph(4)),
    (cycle_graph(5), complete_graph(3)),
    (complete_graph(3), complete_graph(3)),
    (petersen_graph(), complete_graph(1)),
    (empty_graph(3), complete_graph(2)),
    (cycle_graph(6), empty_graph(2)),
    (complete_bipartite_graph(2, 2), cycle_graph(5)),
    (complete_graph(4), complete_graph(1)),
    (cycle_graph(3), cycle_graph(7)),
]


@pytest.mark.parametrize('g1,g2', REGULAR_PAIRS)
def test_join_prediction_on_regular_pairs(g1, g2):
    predicted = predict_join_spectrum(g1, g2)
    assert predicted.hypothesis_ok
    comparison = compare_prediction(predicted, join(g1, g2))
    assert comparison['matches'], comparison['maxDiff']


@pytest.mark.parametrize('g0,g1,g2', [
    (complete_graph(1), complete_graph(2), complete_graph(2)),
    (complete_graph(2), complete_graph(1), cycle_graph(4)),
    (cycle_graph(4), complete_graph(3), complete_graph(1)),
    (empty_graph(2), complete_graph(2), cycle_graph(5)),
    (complete_graph(3), cycle_graph(5), cycle_graph(4)),
])
def test_join_union_prediction_on_regular_triples(g0, g1, g2):
    predicted = predict_join_union_spectrum(g0, g1, g2)
    assert predicted.hypothesis_ok
    assert compare_prediction(predicted, join_union(g0, g1, g2))['matches']


def test_single_input_operations_on_catalog(small_catalog):
    irregular = 0
    for g in small_catalog:
        assert compare_prediction(predict_lex_spectrum(g), lex_k2(g))['matches']
        # the double of K1 is disconnected
        if g.n >= 2:
            assert compare_prediction(predict_double_spectrum(g), double_graph(g))['matches']
        prism_prediction = predict_prism_spectrum(g)
        assert compare_prediction(prism_prediction, prism(g))['matches'], g.adjacency
        if not prism_prediction.hypothesis_ok:
            irregular += 1
    assert irregular > 100


def test_edc_on_regular_diameter_two_graphs(small_catalog, petersen):
    candidates = [g for g in small_catalog
                  if is_regular(g) is not None and graph_invariants(g).diameter <= 2]
    assert len(candidates) >= 5
    for g in candidates + [petersen]:
        predicted = predict_edc_spectrum(g)
        assert predicted.hypothesis_ok
        assert compare_prediction(predicted, edc(g))['matches']


def test_energy_corollaries_hold():
    g = cycle_graph(5)
    for op, builder in (('double', double_graph), ('lex-k2', lex_k2), ('prism', prism)):
        corollary = energy_corollary(op, g, builder(g))
        assert corollary['satisfied']
    assert energy_corollary('join', g, g) is None


def test_operation_analyzer_process():
    analyzer = OperationAnalyzer()
    result = analyzer.process('double', [complete_graph(2)], predict=True)
    assert result['graph6'] == 'Cl'
    assert result['analyzer'] == 'operation_analyzer'
    assert result['comparison']['matches']
    assert result['comparison']['maxDiff'] < 1e-6
    assert result['energyCorollary']['satisfied']


def test_unmet_hypothesis_is_reported_not_raised():
    result = OperationAnalyzer().process('prism', [path_graph(3)], predict=True)
    assert result['prediction']['hypothesisOk'] is False


@pytest.mark.parametrize('op,inputs', [('join', [complete_graph(2)]), ('bogus', [complete_graph(2)]),
                                       ('double', [complete_graph(2), complete_graph(2)])])
def test_operation_analyzer_rejects_bad_requests(op, inputs):
    with pytest.raises(InvalidParameterError):
        OperationAnalyzer().process(op, inputs)
