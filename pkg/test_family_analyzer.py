"""
Closed-form spectra, characteristic polynomials and energies of graph families
"""
import math
from itertools import combinations_with_replacement

import pytest

from analyzers.family_analyzer import (FamilyAnalyzer, FamilySpec, _kab_minus_edge_quartic,
                                       build_family_graph,
                                       charpoly_complete_multipartite, charpoly_kab_minus_edge,
                                       closed_form_energy, closed_form_spectrum, cycle_spectrum,
                                       printed_charpoly_complete_multipartite, printed_energy,
                                       transmission_regular_spectrum)
from analyzers.spectrum_analyzer import spectral_summary
from utils.errors import InvalidParameterError
from utils.exact_linalg import ExactPoly, jacobi_eigenvalues
from utils.graph_core import complete_multipartite_graph, cycle_graph, path_graph, star_graph


def _partitions(total, parts_min=2):
    for q in range(parts_min, total + 1):
        for parts in combinations_with_replacement(range(1, total + 1), q):
            if sum(parts) == total:
                yield tuple(sorted(parts, reverse=True))


def _fixture_specs(max_order=10):
    specs = [('complete', (n,)) for n in range(1, max_order + 1)]
    specs += [('complete_minus_edge', (n,)) for n in range(3, max_order + 1)]
    specs += [('complete_bipartite', (a, b)) for a in range(1, max_order)
              for b in range(a, max_order + 1 - a)]
    specs += [('star', (n,)) for n in range(2, max_order + 1)]
    specs += [('cycle', (n,)) for n in range(3, max_order + 1)]
    specs += [('wheel', (n,)) for n in range(4, max_order + 1)]
    specs += [('complete_split', (n, p)) for n in range(2, max_order + 1) for p in range(1, n + 1)]
    specs += [('friendship', (n,)) for n in range(1, (max_order - 1) // 2 + 1)]
    specs += [('balanced_multipartite', (n, q)) for n in range(1, max_order // 2 + 1)
              for q in range(2, max_order // n + 1)]
    specs += [('cocktail_party', (n,)) for n in range(2, max_order // 2 + 1)]
    specs += [('complete_multipartite', parts) for total in range(2, max_order)
              for parts in _partitions(total)]
    specs += [('complete_bipartite_minus_edge', (a, b)) for a in range(2, max_order - 1)
              for b in range(a, max_order + 1 - a)]
    return [FamilySpec(family, params) for family, params in specs]


@pytest.mark.parametrize('spec', _fixture_specs(), ids=lambda s: f"{s.family}{list(s.params)}")
def test_closed_form_matches_constructed_graph(spec):
    closed = closed_form_spectrum(spec)
    graph = build_family_graph(spec)
    assert graph.n == spec.order
    numeric = spectral_summary(graph).spectrum
    assert closed.eigenvalues == pytest.approx(numeric.eigenvalues, abs=1e-7)
    assert [m for _, m in closed.groups] == [m for _, m in numeric.groups]


@pytest.mark.parametrize('parts', [p for total in range(2, 10) for p in _partitions(total)])
def test_multipartite_char_poly_exact(parts):
    graph = complete_multipartite_graph(parts)
    assert charpoly_complete_multipartite(parts) == spectral_summary(graph).char_poly


def test_printed_multipartite_form_agrees_for_two_parts_only():
    for parts in [(1, 1), (2, 3), (4, 1)]:
        assert printed_charpoly_complete_multipartite(parts) == charpoly_complete_multipartite(parts)
    for parts in [(1, 1, 1), (2, 2, 2)]:
        assert printed_charpoly_complete_multipartite(parts) != charpoly_complete_multipartite(parts)


@pytest.mark.parametrize('a,b', [(a, b) for a in range(2, 8) for b in range(a, 10 - a)])
def test_kab_minus_edge_char_poly_exact(a, b):
    graph = build_family_graph(FamilySpec('complete_bipartite_minus_edge', (a, b)))
    poly = charpoly_kab_minus_edge(a, b)
    assert poly == spectral_summary(graph).char_poly
    assert (poly(3) == 0) == (a + b > 4)
    assert ExactPoly(_kab_minus_edge_quartic(a, b))(3) == -128 * (a - 1) * (b - 1)


def test_p4_is_k22_minus_edge():
    assert charpoly_kab_minus_edge(2, 2).coefficients == (1, 0, -46, 72, -11)
    assert spectral_summary(path_graph(4)).char_poly.coefficients == (1, 0, -46, 72, -11)


@pytest.mark.parametrize('a,b,energy,tolerance', [(2, 2, 14.94, 0.01), (2, 3, 20.41, 0.02),
                                                  (3, 3, 25.6, 0.05)])
def test_kab_minus_edge_energies(a, b, energy, tolerance):
    graph = build_family_graph(FamilySpec('complete_bipartite_minus_edge', (a, b)))
    assert spectral_summary(graph).energy == pytest.approx(energy, abs=tolerance)


def test_star_energy():
    spec = FamilySpec('star', (10,))
    assert closed_form_energy(spec) == pytest.approx(24 + math.sqrt(612))
    assert spectral_summary(star_graph(10)).energy == pytest.approx(48.7386, abs=1e-4)


@pytest.mark.parametrize('spec,expected', [
    (FamilySpec('complete', (6,)), 10.0),
    (FamilySpec('complete_minus_edge', (6,)), 12.0),
    (FamilySpec('complete_bipartite', (2, 2)), 12.0),
    (FamilySpec('complete_bipartite', (3, 4)), 30.0),
    (FamilySpec('balanced_multipartite', (3, 2)), 24.0),
    (FamilySpec('balanced_multipartite', (1, 4)), 6.0),
    (FamilySpec('friendship', (2,)), 7 + math.sqrt(65)),
])
def test_closed_form_energy_matches_numeric(spec, expected):
    assert closed_form_energy(spec) == pytest.approx(expected)
    assert spectral_summary(build_family_graph(spec)).energy == pytest.approx(expected)


def test_printed_energies_flagged_where_they_differ():
    assert printed_energy(FamilySpec('complete_minus_edge', (4,))) == 8.0
    assert closed_form_energy(FamilySpec('complete_minus_edge', (4,))) == pytest.approx(
        4 + 2 * math.sqrt(5))
    assert printed_energy(FamilySpec('balanced_multipartite', (3, 2))) == 12.0
    assert printed_energy(FamilySpec('cycle', (5,))) is None


def test_cycle_spectrum_of_c5():
    spectrum = cycle_spectrum(5)
    assert [v for v, _ in spectrum.groups] == pytest.approx([4.2360680, -0.2360680, -8.0], abs=1e-6)
    with pytest.raises(InvalidParameterError):
        cycle_spectrum(2)


def test_transmission_regular_rule(petersen):
    spectrum = transmission_regular_spectrum(petersen)
    assert [(round(v, 9), m) for v, m in spectrum.groups] == [(5.0, 5), (-1.0, 4), (-21.0, 1)]
    assert transmission_regular_spectrum(star_graph(4)) is None
    assert transmission_regular_spectrum(cycle_graph(6)).eigenvalues == pytest.approx(
        jacobi_eigenvalues([[0, -1, -3, -5, -3, -1], [-1, 0, -1, -3, -5, -3],
                            [-3, -1, 0, -1, -3, -5], [-5, -3, -1, 0, -1, -3],
                            [-3, -5, -3, -1, 0, -1], [-1, -3, -5, -3, -1, 0]]), abs=1e-9)


@pytest.mark.parametrize('name,params', [('cycle', [2]), ('wheel', [3]), ('split', [3, 4]),
                                         ('kab', [2]), ('multipartite', [3]), ('nope', [1]),
                                         ('kab-e', [1, 4]), ('balanced', [2, 1])])
def test_invalid_family_parameters(name, params):
    with pytest.raises(InvalidParameterError):
        FamilySpec.from_cli(name, params)


def test_family_analyzer_report():
    result = FamilyAnalyzer().process(FamilySpec.from_cli('star', [10]))
    assert result['analyzer'] == 'family_analyzer'
    assert result['maxDiff'] < 1e-7
    assert result['multiplicitiesMatch']
    assert result['closedFormEnergy'] == pytest.approx(48.7386, abs=1e-4)
    assert result['printedEnergyMatches']


def test_family_analyzer_flags_cited_discrepancies():
    kn_minus_edge = FamilyAnalyzer().process(FamilySpec.from_cli('kn-e', [4]))
    assert not kn_minus_edge['printedEnergyMatches']

    triangle = FamilyAnalyzer().process(FamilySpec.from_cli('multipartite', [1, 1, 1]))
    assert triangle['charPolyMatches']
    assert not triangle['printedCharPolyMatches']

    kab_minus_edge = FamilyAnalyzer().process(FamilySpec.from_cli('kab-e', [2, 3]))
    assert kab_minus_edge['charPolyMatches']
