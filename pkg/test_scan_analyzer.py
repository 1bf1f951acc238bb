"""
Catalog scans: cospectral classes, integral graphs, characterizations, corollaries
"""
from pathlib import Path

import pytest

from analyzers.scan_analyzer import (ScanAnalyzer, ScanOptions, analyze_catalog_line,
                                     complete_join_integral, verify_cospectral_corollaries,
                                     verify_integral_corollaries, verify_operation_corollaries)
from utils.catalog_loader import CatalogLoader, generated_catalog
from utils.errors import InvalidParameterError
from utils.graph_core import (complete_bipartite_graph, complete_graph, complete_multipartite_graph,
                              cycle_graph, encode_graph6, from_edges, is_complete,
                              is_complete_multipartite, parse_graph6, path_graph, petersen_graph)
from utils.report_format import dump_json

DATA = Path(__file__).parent / 'data'
ALL_FIND = frozenset({'cospectral', 'integral', 'd-cospectral'})
CHARACTERIZATIONS = frozenset({'kn-characterization', 'multipartite-characterization'})


def _numbered(lines):
    return list(CatalogLoader().iter_graphs(lines))


def _scan(lines, **options):
    return ScanAnalyzer(ScanOptions(**options)).scan_catalog(_numbered(lines))


def test_sample_catalog():
    lines = CatalogLoader().load_catalog(str(DATA / 'sample-catalog.g6'))
    report = _scan(lines, find=ALL_FIND, verify=CHARACTERIZATIONS)
    assert (report.total, report.connected, report.disconnected) == (6, 4, 1)
    assert len(report.parse_errors) == 1
    assert report.parse_errors[0]['line'] == 4
    assert report.parse_errors[0]['message'].startswith('line 4: ')
    assert report.cospectral_classes == [['Cl', 'Cl']]
    assert report.integral_graphs == ['Cl', 'Bw', 'C~', 'Cl']
    assert report.characterization_failures == []


def test_non_ascii_lines_are_parse_errors(tmp_path):
    path = tmp_path / 'latin.g6'
    path.write_bytes(b'Cl\nC\xe9\nCl\xa0\n')
    report = _scan(CatalogLoader().load_catalog(str(path)), find=ALL_FIND)
    assert [e['line'] for e in report.parse_errors] == [2, 3]
    assert (report.connected, report.disconnected) == (1, 0)
    assert report.integral_graphs == ['Cl']


def test_order_four_integral_graphs():
    report = _scan(generated_catalog(4, min_order=4), find=ALL_FIND, verify=CHARACTERIZATIONS)
    integral = [parse_graph6(text) for text in report.integral_graphs]
    assert any(is_complete(g) for g in integral)
    assert any(is_complete_multipartite(g) == (2, 2) for g in integral)
    assert report.characterization_failures == []
    assert report.connected == 6


def test_complete_bipartite_and_cocktail_party_integral():
    lines = [encode_graph6(complete_bipartite_graph(3, 3)),
             encode_graph6(complete_multipartite_graph((2, 2, 2)))]
    report = _scan(lines, find=frozenset({'integral'}))
    assert report.integral_graphs == lines


def test_cospectral_grouping_is_exact():
    relabelled_c4 = encode_graph6(from_edges(4, [(0, 2), (1, 2), (1, 3), (0, 3)]))
    assert relabelled_c4 != 'Cl'
    lines = ['Cl', 'C~', encode_graph6(path_graph(4)), relabelled_c4, 'Bw']
    report = _scan(lines, find=frozenset({'cospectral'}))
    assert report.cospectral_classes == [['Cl', relabelled_c4]]


def test_characterizations_on_small_catalog():
    report = _scan(generated_catalog(6), verify=CHARACTERIZATIONS)
    assert report.characterization_failures == []


@pytest.mark.slow
def test_characterizations_and_bounds_on_order_seven():
    report = _scan(generated_catalog(7, min_order=7),
                   verify=CHARACTERIZATIONS | {'bounds', 'prop-regular-diameter2'})
    assert report.connected == 853
    assert report.characterization_failures == []
    assert report.bound_violations == []
    assert report.proposition_counterexamples == []


def test_bounds_and_regular_diameter_two_on_small_catalog():
    report = _scan(generated_catalog(6), verify=frozenset({'bounds', 'prop-regular-diameter2'}))
    assert report.bound_violations == []
    assert report.proposition_counterexamples == []


def test_worker_record_for_single_line():
    record = analyze_catalog_line((3, 'C~', frozenset(), frozenset(CHARACTERIZATIONS), 1e-7))
    assert record['status'] == 'ok'
    assert record['charPoly'] == (1, 0, -6, 8, -3)
    assert record['integral'] and record['failures'] == []
    assert analyze_catalog_line((1, 'C?', frozenset(), frozenset(), 1e-7))['status'] == 'disconnected'


def test_report_keys_follow_options():
    lines = generated_catalog(3)
    assert set(ScanAnalyzer(ScanOptions()).process(_numbered(lines))[0]) == {
        'total', 'connected', 'disconnected', 'parseErrors', 'analyzer', 'timestamp'}
    result, _ = ScanAnalyzer(ScanOptions(find=frozenset({'integral'}),
                                         verify=frozenset({'bounds'}))).process(_numbered(lines))
    assert 'integralGraphs' in result and 'boundViolations' in result
    assert 'cospectralClasses' not in result


@pytest.mark.parametrize('options', [dict(find=frozenset({'everything'})),
                                     dict(verify=frozenset({'nothing'})), dict(jobs=0)])
def test_invalid_scan_options(options):
    with pytest.raises(InvalidParameterError):
        ScanOptions(**options)


def test_worker_pool_output_identical():
    lines = generated_catalog(6)
    options = dict(find=ALL_FIND, verify=CHARACTERIZATIONS | {'bounds'})
    serial = ScanAnalyzer(ScanOptions(jobs=1, **options)).scan_catalog(_numbered(lines))
    pooled = ScanAnalyzer(ScanOptions(jobs=4, **options)).scan_catalog(_numbered(lines))
    assert dump_json(serial.to_dict(ScanOptions(**options))) == \
        dump_json(pooled.to_dict(ScanOptions(**options)))
    assert serial.rows == pooled.rows


def test_operation_corollaries_on_identical_pair():
    results = verify_operation_corollaries([(cycle_graph(5), cycle_graph(5))])
    assert results[0]['holds'] and results[0]['lexK2'] and results[0]['double']


def test_cospectral_corollaries(petersen):
    distance = verify_cospectral_corollaries([(petersen, petersen)], 'distance')[0]
    assert distance['transmissionRegular'] and distance['distanceSeidel'] and distance['holds']
    regular = verify_cospectral_corollaries([(cycle_graph(5), cycle_graph(5))], 'adjacency-regular')[0]
    assert regular['join'] and regular['edc'] and regular['hypothesisOk']
    with pytest.raises(InvalidParameterError):
        verify_cospectral_corollaries([], 'seidel')


@pytest.mark.parametrize('graph', [complete_graph(4), complete_bipartite_graph(3, 3),
                                   petersen_graph()])
def test_integral_corollaries(graph):
    result = verify_integral_corollaries(graph)
    assert result['dsIntegral'] and result['distanceIntegral'] and result['holds']
    assert result['lexK2Integral'] and result['doubleIntegral'] and result['prismIntegral']
    assert result['edcIntegral']


def test_non_integral_graph_skips_corollaries():
    result = verify_integral_corollaries(cycle_graph(5))
    assert not result['dsIntegral'] and 'lexK2Integral' not in result


def test_complete_join_integral():
    assert all(complete_join_integral(a, b) for a in range(1, 5) for b in range(1, 5))


def test_corollaries_option_reports_every_kind():
    lines = [encode_graph6(complete_graph(4)), encode_graph6(cycle_graph(5)),
             encode_graph6(cycle_graph(5))]
    options = ScanOptions(find=ALL_FIND, verify=frozenset({'prop-regular-diameter2', 'corollaries'}))
    report = ScanAnalyzer(options).scan_catalog(_numbered(lines))
    assert set(report.corollaries) == {'operation', 'distance', 'regular', 'integral'}
    assert len(report.corollaries['operation']) == 1
    assert len(report.corollaries['regular']) == 1
    assert all(entry['holds'] for entries in report.corollaries.values() for entry in entries)
