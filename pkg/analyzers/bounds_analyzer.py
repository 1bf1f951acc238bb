"""
Bounds Analyzer - spectral radius bounds, energy bounds and identities,
interlacing chains and edge-deletion checks for the distance Seidel
matrix, each reported with its hypothesis, satisfaction and equality flags
"""
import logging
import math
from dataclasses import dataclass
from datetime import datetime
from decimal import Decimal, localcontext
from typing import Dict, List, Optional, Tuple

import config
from analyzers.family_analyzer import FamilySpec, build_family_graph
from analyzers.spectrum_analyzer import (adjacency_matrix, distance_matrix,
                                         distance_seidel_matrix, spectral_summary)
from utils.errors import InvalidParameterError
from utils.exact_linalg import IntSymMatrix, char_poly_exact, jacobi_eigenvalues
from utils.graph_core import (DistanceMatrix, Graph, GraphInvariants, all_pairs_distances,
                              complete_bipartite_graph, complete_graph, edge_deleted,
                              graph_invariants, is_bipartite_partition, is_connected)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundRecord:
    name: str
    observed: float
    satisfied: bool
    equality: bool
    hypothesis_ok: bool
    lower: Optional[float] = None
    upper: Optional[float] = None
    detail: Optional[Dict] = None

    def to_dict(self) -> Dict:
        result = {'name': self.name}
        if self.lower is not None:
            result['lower'] = self.lower
        if self.upper is not None:
            result['upper'] = self.upper
        result.update({
            'observed': self.observed,
            'satisfied': self.satisfied,
            'equality': self.equality,
            'hypothesisOk': self.hypothesis_ok,
        })
        if self.detail:
            result['detail'] = self.detail
        return result


@dataclass(frozen=True)
class BoundsReport:
    records: Tuple[BoundRecord, ...]
    scalars: Dict

    def record(self, name: str) -> BoundRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def violations(self) -> List[BoundRecord]:
        return [r for r in self.records if r.hypothesis_ok and not r.satisfied]

    def to_dict(self) -> Dict:
        return {'bounds': [r.to_dict() for r in self.records], 'scalars': dict(self.scalars)}


@dataclass(frozen=True)
class GraphSpectra:
    """Everything the bounds share, computed once per graph"""
    graph: Graph
    dist: DistanceMatrix
    invariants: GraphInvariants
    ds: IntSymMatrix
    ds_eigs: Tuple[float, ...]
    d_eigs: Tuple[float, ...]
    a_eigs: Tuple[float, ...]
    row_sums: Tuple[int, ...]
    T: int
    det: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def energy(self) -> float:
        return sum(abs(x) for x in self.ds_eigs)

    @property
    def radius(self) -> float:
        return max(abs(x) for x in self.ds_eigs)

    @property
    def distance_energy(self) -> float:
        return sum(abs(x) for x in self.d_eigs)

    def distance_sign_counts(self, tol=config.HYPOTHESIS_TOLERANCE) -> Tuple[int, int]:
        plus = sum(1 for x in self.d_eigs if x >= -tol)
        return plus, self.n - plus


def graph_spectra(g: Graph) -> GraphSpectra:
    if g.n < 2:
        raise InvalidParameterError("bounds need a connected graph on at least 2 vertices")
    dist = all_pairs_distances(g)
    ds = distance_seidel_matrix(g, dist)
    poly = char_poly_exact(ds)
    row_sums = tuple(-sum(row) for row in ds.entries)
    T = sum(x * x for row in ds.entries for x in row) // 2

    return GraphSpectra(
        graph=g,
        dist=dist,
        invariants=graph_invariants(g, dist),
        ds=ds,
        ds_eigs=tuple(jacobi_eigenvalues(ds)),
        d_eigs=tuple(jacobi_eigenvalues(distance_matrix(g, dist))),
        a_eigs=tuple(jacobi_eigenvalues(adjacency_matrix(g))),
        row_sums=row_sums,
        T=T,
        det=(-1) ** g.n * poly.constant_term(),
    )


def det_power(det_abs: int, n: int) -> float:
    """|det|^(2/n) through arbitrary-precision log/exp"""
    if det_abs == 0:
        return 0.0
    with localcontext() as ctx:
        ctx.prec = config.DECIMAL_PRECISION
        return float((Decimal(det_abs).ln() * 2 / n).exp())


def _close(a: float, b: float, tol: float = config.HYPOTHESIS_TOLERANCE) -> bool:
    return abs(a - b) <= tol * (1 + abs(b))


def _le(a: float, b: float) -> bool:
    return a <= b + config.BOUND_SLACK * (1 + abs(b))


def _upper(name, value, observed, hypothesis_ok=True, detail=None) -> BoundRecord:
    return BoundRecord(name=name, upper=value, observed=observed,
                       satisfied=_le(observed, value), equality=_close(observed, value),
                       hypothesis_ok=hypothesis_ok, detail=detail)


def _lower(name, value, observed, hypothesis_ok=True, detail=None) -> BoundRecord:
    return BoundRecord(name=name, lower=value, observed=observed,
                       satisfied=_le(value, observed), equality=_close(observed, value),
                       hypothesis_ok=hypothesis_ok, detail=detail)


def _between(name, low, high, observed, hypothesis_ok=True) -> BoundRecord:
    return BoundRecord(name=name, lower=low, upper=high, observed=observed,
                       satisfied=_le(low, observed) and _le(observed, high),
                       equality=_close(observed, low) or _close(observed, high),
                       hypothesis_ok=hypothesis_ok)


# Spectral radius

def _degree_lower(spectra: GraphSpectra) -> float:
    n, inv = spectra.n, spectra.invariants
    return math.sqrt((3 * n - 2 * inv.max_degree - 3) * (3 * n - 2 * inv.second_max_degree - 3))


def _min_degree_upper(spectra: GraphSpectra) -> float:
    n, inv = spectra.n, spectra.invariants
    w = inv.diameter

    def f(d):
        return -2 * d * (w - 1) + w * (1 - w) + 2 * n * w - n - 1

    return math.sqrt(f(inv.min_degree) * f(inv.second_min_degree))


def radius_bounds(g: Graph, spectra: Optional[GraphSpectra] = None) -> List[BoundRecord]:
    spectra = spectra or graph_spectra(g)
    n, rho, R = spectra.n, spectra.radius, spectra.row_sums
    weights = [[-x for x in row] for row in spectra.ds.entries]

    row_sum_upper = max(sum(weights[r][t] * math.sqrt(R[t] / R[r]) for t in range(n) if t != r)
                        for r in range(n))
    rms_lower = math.sqrt(sum(x * x for x in R) / n)
    alpha, beta = _degree_lower(spectra), _min_degree_upper(spectra)

    records = [
        _upper('radius_row_sum_upper', row_sum_upper, rho),
        _lower('radius_rms_lower', rms_lower, rho),
        _lower('radius_degree_lower', alpha, rho),
        _upper('radius_min_degree_upper', beta, rho),
        _between('radius_degree_sandwich', alpha, beta, rho),
    ]

    partition = is_bipartite_partition(g)
    if partition is not None:
        P, Q = partition
        p, q = len(P), len(Q)
        max_p = max(g.degrees[v] for v in P)
        max_q = max(g.degrees[v] for v in Q)
        disc = 9 * n * n - 36 * p * q + 4 * (5 * p - 4 * max_q) * (5 * q - 4 * max_p)
        value = (3 * n - 6 + math.sqrt(disc)) / 2
        records.append(_lower('radius_bipartite_lower', value, rho,
                              detail={'p': p, 'q': q, 'maxDegreeP': max_p, 'maxDegreeQ': max_q}))
    else:
        records.append(BoundRecord(name='radius_bipartite_lower', observed=rho, satisfied=True,
                                   equality=False, hypothesis_ok=False))
    return records


# Energy

def energy_bounds(g: Graph, spectra: Optional[GraphSpectra] = None) -> List[BoundRecord]:
    spectra = spectra or graph_spectra(g)
    n, m = spectra.n, g.m
    energy, rho = spectra.energy, spectra.radius
    tol = config.HYPOTHESIS_TOLERANCE
    a_plus, a_minus = spectra.distance_sign_counts()
    e_d = spectra.distance_energy
    ds_negative = sum(1 for x in spectra.ds_eigs if x < -tol)

    records = [
        _upper('half_energy', energy / 2, rho),
        _lower('energy_radius', 2 * rho, energy, detail={'negativeEigenvalues': ds_negative}),
    ]

    # transmission regular graphs with no distance eigenvalue strictly inside (-1, 0)
    tail = spectra.d_eigs[1:]
    open_interval_free = all(not (-1 + tol < x < -tol) for x in tail)
    identity = 2 * (a_plus - n + e_d)
    tr_ok = spectra.invariants.transmission_regular is not None and open_interval_free
    records.append(BoundRecord(name='transmission_energy_identity', lower=identity, upper=identity,
                               observed=energy, satisfied=_close(energy, identity),
                               equality=_close(energy, identity), hypothesis_ok=tr_ok))

    negatives_ok = all(not (-0.5 + tol < x < -tol) for x in spectra.d_eigs if x < -tol)
    positives_ok = all(x >= (n - 1) / 2 - tol for x in spectra.d_eigs if x >= -tol)
    records.append(_lower('distance_energy_lower', 2 * e_d - 2 * a_minus, energy,
                          hypothesis_ok=negatives_ok and positives_ok))

    records.append(_lower('energy_rms_lower',
                          2 * math.sqrt(sum(x * x for x in spectra.row_sums) / n), energy))
    records.append(_lower('energy_degree_lower', 2 * _degree_lower(spectra), energy))

    det_term = n * (n - 1) * det_power(abs(spectra.det), n)
    records.append(_between('mcclelland', math.sqrt(2 * spectra.T + det_term),
                            math.sqrt(2 * n * spectra.T), energy))

    diameter_two = spectra.invariants.diameter <= 2
    records.append(_between('diameter2_mcclelland',
                            math.sqrt(9 * n * n - 9 * n - 16 * m + det_term),
                            math.sqrt(max(9 * n ** 3 - 9 * n * n - 16 * m * n, 0)),
                            energy, hypothesis_ok=diameter_two))
    return records


# Interlacing

def _chain(name, lows, highs, values, hypothesis_ok) -> BoundRecord:
    slacks = [min(v - lo, hi - v) for lo, hi, v in zip(lows, highs, values)]
    failing = [i + 1 for i, (lo, hi, v) in enumerate(zip(lows, highs, values))
               if not (_le(lo, v) and _le(v, hi))]
    return BoundRecord(name=name, observed=min(slacks), satisfied=not failing,
                       equality=any(abs(s) <= config.HYPOTHESIS_TOLERANCE for s in slacks),
                       hypothesis_ok=hypothesis_ok,
                       detail={'failingIndices': failing} if failing else None)


def interlacing_checks(g: Graph, spectra: Optional[GraphSpectra] = None) -> List[BoundRecord]:
    spectra = spectra or graph_spectra(g)
    n = spectra.n
    ds, lam, d = spectra.ds_eigs, spectra.a_eigs, spectra.d_eigs

    adjacency = _chain('interlacing_adjacency',
                       [3 - 3 * n + 2 * x for x in lam], [3 + 2 * x for x in lam], ds,
                       spectra.invariants.diameter <= 2)
    flipped = d[::-1]
    distance = _chain('interlacing_distance',
                      [-1 - 2 * x for x in flipped], [n - 1 - 2 * x for x in flipped], ds, True)
    return [adjacency, distance]


def edge_deletion_radius_check(g: Graph, spectra: Optional[GraphSpectra] = None) -> BoundRecord:
    """Deleting an edge that keeps G connected strictly raises the radius"""
    spectra = spectra or graph_spectra(g)
    rho = spectra.radius
    increases = []
    for u, v in g.edges():
        h = edge_deleted(g, u, v)
        if not is_connected(h):
            continue
        rho_h = max(abs(x) for x in jacobi_eigenvalues(distance_seidel_matrix(h)))
        increases.append({'edge': [u, v], 'increase': rho_h - rho})
    smallest = min((e['increase'] for e in increases), default=0.0)
    return BoundRecord(name='radius_edge_deletion', observed=smallest,
                       satisfied=all(e['increase'] > 0 for e in increases),
                       equality=any(abs(e['increase']) <= config.HYPOTHESIS_TOLERANCE
                                    for e in increases),
                       hypothesis_ok=bool(increases),
                       detail={'edges': increases})


def bounds_report(g: Graph, edge_monotonicity: bool = False) -> BoundsReport:
    spectra = graph_spectra(g)
    records = radius_bounds(g, spectra) + energy_bounds(g, spectra) + interlacing_checks(g, spectra)
    if edge_monotonicity:
        records.append(edge_deletion_radius_check(g, spectra))

    a_plus, a_minus = spectra.distance_sign_counts()
    scalars = {
        'T': spectra.T,
        'aPlus': a_plus,
        'aMinus': a_minus,
        'distanceEnergy': spectra.distance_energy,
        'detAbs': abs(spectra.det),
        'det': spectra.det,
        'rowSums': list(spectra.row_sums),
    }
    return BoundsReport(records=tuple(records), scalars=scalars)


# Edge deletion energies

@dataclass(frozen=True)
class EdgeDeletionRecord:
    a: int
    b: int
    energy_before: float
    energy_after: float
    increased: bool
    printed_before: Optional[float] = None
    printed_after: Optional[float] = None

    @property
    def printed_mismatch(self) -> bool:
        if self.printed_before is None:
            return False
        return (abs(self.printed_before - self.energy_before) > 0.05 or
                abs(self.printed_after - self.energy_after) > 0.05)

    def to_dict(self) -> Dict:
        result = {
            'a': self.a,
            'b': self.b,
            'energyBefore': self.energy_before,
            'energyAfter': self.energy_after,
            'increased': self.increased,
        }
        if self.printed_before is not None:
            result.update({
                'printedBefore': self.printed_before,
                'printedAfter': self.printed_after,
                'printedMismatch': self.printed_mismatch,
            })
        return result


def check_kab_edge_deletion(a: int, b: int) -> EdgeDeletionRecord:
    if a < 2 or b < 2:
        raise InvalidParameterError(f"edge deletion check needs a, b >= 2, got ({a}, {b})")
    before = spectral_summary(complete_bipartite_graph(a, b)).energy
    after = spectral_summary(build_family_graph(
        FamilySpec('complete_bipartite_minus_edge', (a, b)))).energy
    printed = config.PRINTED_EDGE_DELETION_ENERGIES.get((a, b), (None, None))
    record = EdgeDeletionRecord(a=a, b=b, energy_before=before, energy_after=after,
                                increased=after > before,
                                printed_before=printed[0], printed_after=printed[1])
    if record.printed_mismatch:
        logger.warning(f"K_({a},{b}): cited energies {printed} differ from computed "
                       f"({before:.4f}, {after:.4f})")
    return record


def kn_minus_edge_energy_gain(n: int) -> Dict:
    """E(K_n - e) > E(K_n) on the constructed graphs"""
    if n < 3:
        raise InvalidParameterError(f"K_n - e needs n >= 3, got {n}")
    before = spectral_summary(complete_graph(n)).energy
    after = spectral_summary(edge_deleted(complete_graph(n), 0, 1)).energy
    return {'n': n, 'energyBefore': before, 'energyAfter': after, 'increased': after > before}


class BoundsAnalyzer:
    def __init__(self, edge_monotonicity=False):
        self.edge_monotonicity = edge_monotonicity

    def process(self, graph):
        """Evaluate every bound on one graph"""
        logger.info(f"BoundsAnalyzer processing graph n={graph.n} m={graph.m}")

        report = bounds_report(graph, self.edge_monotonicity)
        violations = report.violations()
        for record in violations:
            logger.warning(f"bound {record.name} violated: observed {record.observed}")
        for record in report.records:
            if not record.hypothesis_ok:
                logger.info(f"bound {record.name}: hypotheses not met")

        result = report.to_dict()
        result.update({
            'violations': [r.name for r in violations],
            'analyzer': 'bounds_analyzer',
            'timestamp': self.get_timestamp(),
        })
        logger.info(f"Evaluated {len(report.records)} bounds, {len(violations)} violations")
        return result

    def process_edge_deletion(self, a, b):
        logger.info(f"BoundsAnalyzer checking edge deletion for K_({a},{b})")
        result = check_kab_edge_deletion(a, b).to_dict()
        result.update({
            'analyzer': 'bounds_analyzer',
            'timestamp': self.get_timestamp(),
        })
        return result

    def get_timestamp(self):
        return datetime.now().isoformat()
