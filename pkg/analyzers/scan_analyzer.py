"""
Scan Analyzer - stream a graph6 catalog, key every connected graph by its
exact distance Seidel characteristic polynomial, and report cospectral
classes, integral graphs, characterization failures and bound violations
"""
import logging
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, FrozenSet, List, Sequence, Tuple

import config
from analyzers.bounds_analyzer import bounds_report
from analyzers.operation_analyzer import double_graph, edc, join, lex_k2, prism
from analyzers.spectrum_analyzer import adjacency_matrix, distance_matrix, distance_seidel_matrix
from utils.errors import GraphFormatError, InvalidParameterError
from utils.exact_linalg import (char_poly_exact, integer_roots, jacobi_eigenvalues,
                                root_multiplicity)
from utils.graph_core import (Graph, all_pairs_distances, complete_graph, encode_graph6, graph_invariants,
                              is_complete, is_complete_multipartite, is_connected, is_regular,
                              parse_graph6)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanOptions:
    find: FrozenSet[str] = frozenset()
    verify: FrozenSet[str] = frozenset()
    jobs: int = config.DEFAULT_JOBS
    tol: float = config.HYPOTHESIS_TOLERANCE

    def __post_init__(self):
        unknown = (set(self.find) - set(config.FIND_OPTIONS)) | \
                  (set(self.verify) - set(config.VERIFY_OPTIONS))
        if unknown:
            raise InvalidParameterError(f"unknown scan option(s): {', '.join(sorted(unknown))}")
        if self.jobs < 1:
            raise InvalidParameterError(f"--jobs must be >= 1, got {self.jobs}")


@dataclass
class ScanReport:
    total: int = 0
    connected: int = 0
    disconnected: int = 0
    parse_errors: List[Dict] = field(default_factory=list)
    cospectral_classes: List[List[str]] = field(default_factory=list)
    d_cospectral_classes: List[List[str]] = field(default_factory=list)
    integral_graphs: List[str] = field(default_factory=list)
    characterization_failures: List[Dict] = field(default_factory=list)
    bound_violations: List[Dict] = field(default_factory=list)
    proposition_counterexamples: List[Dict] = field(default_factory=list)
    corollaries: Dict[str, List[Dict]] = field(default_factory=dict)
    rows: List[Dict] = field(default_factory=list)

    def to_dict(self, options: ScanOptions) -> Dict:
        result = {
            'total': self.total,
            'connected': self.connected,
            'disconnected': self.disconnected,
            'parseErrors': self.parse_errors,
        }
        if 'cospectral' in options.find:
            result['cospectralClasses'] = self.cospectral_classes
        if 'd-cospectral' in options.find:
            result['dCospectralClasses'] = self.d_cospectral_classes
        if 'integral' in options.find:
            result['integralGraphs'] = self.integral_graphs
        if options.verify & {'kn-characterization', 'multipartite-characterization'}:
            result['characterizationFailures'] = self.characterization_failures
        if 'bounds' in options.verify:
            result['boundViolations'] = self.bound_violations
        if 'prop-regular-diameter2' in options.verify:
            result['propositionCounterexamples'] = self.proposition_counterexamples
        if 'corollaries' in options.verify:
            result['corollaries'] = self.corollaries
        return result


# Per-graph work, run in worker processes

def characterization_failures(g: Graph, eigs: Sequence[float], poly, verify,
                              tol: float = config.HYPOTHESIS_TOLERANCE) -> List[Dict]:
    failures = []
    n, largest = g.n, eigs[0]
    if 'kn-characterization' in verify and n >= 2:
        top_is_one = abs(largest - 1) <= tol and poly(1) == 0
        if top_is_one != is_complete(g):
            failures.append({'check': 'kn-characterization', 'largest': largest,
                             'complete': is_complete(g)})
    if 'multipartite-characterization' in verify:
        threes = root_multiplicity(poly, 3)
        top_is_three = abs(largest - 3) <= tol and 1 <= threes <= n - 2
        parts = is_complete_multipartite(g)
        multipartite = parts is not None and 2 <= len(parts) <= n - 1
        consistent = top_is_three == multipartite and (not multipartite or threes == n - len(parts))
        if not consistent:
            failures.append({'check': 'multipartite-characterization', 'largest': largest,
                             'multiplicityOfThree': threes, 'parts': list(parts or [])})
    return failures


def analyze_catalog_line(task) -> Dict:
    """Everything the scan needs from one graph6 line"""
    line_number, text, find, verify, tol = task
    record = {'line': line_number, 'graph6': text}
    try:
        g = parse_graph6(text, line_number=line_number)
    except GraphFormatError as e:
        record.update(status='error', message=str(e))
        return record
    if not is_connected(g) or g.n == 0:
        record['status'] = 'disconnected'
        return record

    dist = all_pairs_distances(g)
    ds = distance_seidel_matrix(g, dist)
    eigs = jacobi_eigenvalues(ds)
    poly = char_poly_exact(ds)
    record.update(
        status='ok',
        n=g.n,
        charPoly=poly.coefficients,
        energy=sum(abs(x) for x in eigs),
        radius=max(abs(x) for x in eigs),
        integral=integer_roots(poly, eigs) is not None,
        failures=characterization_failures(g, eigs, poly, verify, tol),
    )
    if 'd-cospectral' in find:
        record['distancePoly'] = char_poly_exact(distance_matrix(g, dist)).coefficients
    if 'bounds' in verify and g.n >= 2:
        record['violations'] = [r.name for r in bounds_report(g).violations()]
    if 'prop-regular-diameter2' in verify:
        k = is_regular(g)
        if k is not None and graph_invariants(g, dist).diameter <= 2:
            record['regular'] = k
            record['adjacencyPoly'] = char_poly_exact(adjacency_matrix(g)).coefficients
    return record


def _classes(records: List[Dict], key: str) -> List[List[Dict]]:
    groups = OrderedDict()
    for r in records:
        groups.setdefault(tuple(r[key]), []).append(r)
    return [members for members in groups.values() if len(members) > 1]


# Corollaries on constructed instances

def _ds_poly(g: Graph):
    return char_poly_exact(distance_seidel_matrix(g))


def _ds_integral(g: Graph) -> bool:
    ds = distance_seidel_matrix(g)
    return integer_roots(char_poly_exact(ds), jacobi_eigenvalues(ds)) is not None


def verify_operation_corollaries(pairs: Sequence[Tuple[Graph, Graph]]) -> List[Dict]:
    """Lex-K2 products and double graphs of D^S-cospectral graphs are D^S-cospectral"""
    results = []
    for g, h in pairs:
        entry = {
            'pair': [encode_graph6(g), encode_graph6(h)],
            'lexK2': _ds_poly(lex_k2(g)) == _ds_poly(lex_k2(h)),
            'double': (_ds_poly(double_graph(g)) == _ds_poly(double_graph(h))
                       if g.n >= 2 else None),
        }
        entry['holds'] = entry['lexK2'] and entry['double'] is not False
        results.append(entry)
    return results


def verify_cospectral_corollaries(pairs: Sequence[Tuple[Graph, Graph]], relation: str) -> List[Dict]:
    """
    relation='distance': D-cospectral pairs give D^S-cospectral prisms, and
    D^S-cospectral graphs when both are transmission regular with equal k.
    relation='adjacency-regular': regular A-cospectral pairs give
    D^S-cospectral joins with a regular graph and D^S-cospectral EDCs.
    """
    results = []
    for g, h in pairs:
        entry = {'pair': [encode_graph6(g), encode_graph6(h)], 'relation': relation}
        if relation == 'distance':
            kg = graph_invariants(g).transmission_regular
            kh = graph_invariants(h).transmission_regular
            entry['prism'] = _ds_poly(prism(g)) == _ds_poly(prism(h))
            entry['transmissionRegular'] = kg is not None and kg == kh
            if entry['transmissionRegular']:
                entry['distanceSeidel'] = _ds_poly(g) == _ds_poly(h)
            entry['holds'] = entry['prism'] and entry.get('distanceSeidel', True)
        elif relation == 'adjacency-regular':
            helpers = (complete_graph(1), complete_graph(3))
            entry['join'] = all(_ds_poly(join(g, H)) == _ds_poly(join(h, H)) for H in helpers)
            diameter_two = (graph_invariants(g).diameter <= 2 and graph_invariants(h).diameter <= 2)
            entry['edc'] = _ds_poly(edc(g)) == _ds_poly(edc(h))
            entry['hypothesisOk'] = diameter_two
            entry['holds'] = entry['join'] and (entry['edc'] or not diameter_two)
        else:
            raise InvalidParameterError(f"unknown cospectrality relation '{relation}'")
        results.append(entry)
    return results


def complete_join_integral(a: int, b: int) -> bool:
    return _ds_integral(join(complete_graph(a), complete_graph(b)))


def verify_integral_corollaries(g: Graph) -> Dict:
    """Integrality carried by the double graph, lex-K2, prism and EDC"""
    dist = all_pairs_distances(g)
    d_matrix = distance_matrix(g, dist)
    d_roots = integer_roots(char_poly_exact(d_matrix), jacobi_eigenvalues(d_matrix))
    result = {
        'graph6': encode_graph6(g),
        'dsIntegral': _ds_integral(g),
        'distanceIntegral': d_roots is not None,
    }
    distance_integral = result['distanceIntegral']
    holds = True
    if result['dsIntegral']:
        result['lexK2Integral'] = _ds_integral(lex_k2(g))
        holds &= result['lexK2Integral']
        if g.n >= 2:
            result['doubleIntegral'] = _ds_integral(double_graph(g))
            holds &= result['doubleIntegral']
    if distance_integral:
        result['prismIntegral'] = _ds_integral(prism(g))
        holds &= result['prismIntegral']
    k = is_regular(g)
    if k is not None and graph_invariants(g, dist).diameter <= 2:
        a_matrix = adjacency_matrix(g)
        if integer_roots(char_poly_exact(a_matrix), jacobi_eigenvalues(a_matrix)) is not None:
            result['edcIntegral'] = _ds_integral(edc(g))
            holds &= result['edcIntegral']
    result['holds'] = holds
    return result


class ScanAnalyzer:
    def __init__(self, options=None):
        self.options = options or ScanOptions()

    def run_records(self, lines):
        tasks = [(number, text, self.options.find, self.options.verify, self.options.tol)
                 for number, text in lines]
        if self.options.jobs == 1:
            return [analyze_catalog_line(t) for t in tasks]
        with ProcessPoolExecutor(max_workers=self.options.jobs) as pool:
            return list(pool.map(analyze_catalog_line, tasks, chunksize=16))

    def scan_catalog(self, lines):
        """Merge per-line records in input order"""
        options = self.options
        report = ScanReport()
        records = self.run_records(lines)
        report.total = len(records)

        good = []
        for r in records:
            if r['status'] == 'error':
                report.parse_errors.append({'line': r['line'], 'message': r['message']})
                logger.warning(f"⚠️ Skipping line {r['line']}: {r['message']}")
            elif r['status'] == 'disconnected':
                report.disconnected += 1
            else:
                good.append(r)
        report.connected = len(good)

        for r in good:
            report.rows.append({'graph6': r['graph6'], 'energy': r['energy'],
                                'radius': r['radius'], 'integral': r['integral']})
            for failure in r['failures']:
                report.characterization_failures.append({'graph6': r['graph6'], **failure})
            for name in r.get('violations', []):
                report.bound_violations.append({'graph6': r['graph6'], 'bound': name})

        report.integral_graphs = [r['graph6'] for r in good if r['integral']]
        ds_classes = _classes(good, 'charPoly')
        report.cospectral_classes = [[r['graph6'] for r in c] for c in ds_classes]
        d_classes = _classes(good, 'distancePoly') if 'd-cospectral' in options.find else []
        report.d_cospectral_classes = [[r['graph6'] for r in c] for c in d_classes]

        regular_pairs = []
        if 'prop-regular-diameter2' in options.verify:
            report.proposition_counterexamples, regular_pairs = self.check_regular_diameter2(good)

        if 'corollaries' in options.verify:
            report.corollaries = self.check_corollaries(ds_classes, d_classes, regular_pairs,
                                                        report.integral_graphs)

        logger.info(f"Scanned {report.total} lines: {report.connected} connected, "
                    f"{report.disconnected} disconnected, {len(report.parse_errors)} rejected")
        return report

    def check_regular_diameter2(self, records):
        """Equal-degree regular diameter-2 graphs: A-cospectral iff D^S-cospectral"""
        groups = OrderedDict()
        for r in records:
            if 'regular' in r:
                groups.setdefault((r['n'], r['regular']), []).append(r)
        counterexamples, a_pairs = [], []
        for members in groups.values():
            for i, first in enumerate(members):
                for second in members[i + 1:]:
                    a_equal = first['adjacencyPoly'] == second['adjacencyPoly']
                    ds_equal = first['charPoly'] == second['charPoly']
                    if a_equal:
                        a_pairs.append((first['graph6'], second['graph6']))
                    if a_equal != ds_equal:
                        counterexamples.append({'pair': [first['graph6'], second['graph6']],
                                                'adjacencyCospectral': a_equal,
                                                'distanceSeidelCospectral': ds_equal})
        for c in counterexamples:
            logger.warning(f"regular diameter-2 counterexample: {c['pair']}")
        return counterexamples, a_pairs

    def check_corollaries(self, ds_classes, d_classes, regular_pairs, integral_graphs):
        def pairs_of(classes):
            return [(parse_graph6(c[0]['graph6']), parse_graph6(r['graph6']))
                    for c in classes for r in c[1:]]

        corollaries = {
            'operation': verify_operation_corollaries(pairs_of(ds_classes)),
            'distance': verify_cospectral_corollaries(pairs_of(d_classes), 'distance'),
            'regular': verify_cospectral_corollaries(
                [(parse_graph6(a), parse_graph6(b)) for a, b in regular_pairs], 'adjacency-regular'),
            'integral': [verify_integral_corollaries(parse_graph6(g6)) for g6 in integral_graphs],
        }
        for kind, entries in corollaries.items():
            failed = [e for e in entries if not e['holds']]
            if failed:
                logger.warning(f"{len(failed)} {kind} corollary instance(s) failed")
        return corollaries

    def process(self, lines):
        logger.info(f"ScanAnalyzer processing {len(lines)} lines with {self.options.jobs} job(s)")
        report = self.scan_catalog(lines)
        result = report.to_dict(self.options)
        result.update({
            'analyzer': 'scan_analyzer',
            'timestamp': self.get_timestamp(),
        })
        return result, report

    def get_timestamp(self):
        return datetime.now().isoformat()
