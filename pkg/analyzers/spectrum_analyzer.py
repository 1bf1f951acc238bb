"""
Spectrum Analyzer - distance Seidel matrix D^S = J - I - 2D of a connected
graph: spectrum, energy, spectral radius, Wiener identity, cospectrality
"""
import logging
from dataclasses import dataclass, field, replace
from datetime import datetime
from fractions import Fraction
from typing import Dict, Optional, Tuple

import config
from utils.exact_linalg import (ExactPoly, IntSymMatrix, Spectrum, char_poly_exact,
                                group_multiplicities, integer_roots, jacobi_eigenvalues,
                                trace_of_square)
from utils.graph_core import (DistanceMatrix, Graph, all_pairs_distances, encode_graph6,
                              graph_invariants)
from utils.report_format import spectrum_to_json

logger = logging.getLogger(__name__)


def adjacency_matrix(g: Graph) -> IntSymMatrix:
    rows = [[1 if g.has_edge(r, t) else 0 for t in range(g.n)] for r in range(g.n)]
    return IntSymMatrix.from_rows(rows)


def seidel_matrix(g: Graph) -> IntSymMatrix:
    rows = [[0 if r == t else (-1 if g.has_edge(r, t) else 1) for t in range(g.n)]
            for r in range(g.n)]
    return IntSymMatrix.from_rows(rows)


def distance_matrix(g: Graph, dist: Optional[DistanceMatrix] = None) -> IntSymMatrix:
    dist = dist or all_pairs_distances(g)
    return IntSymMatrix(n=dist.n, entries=dist.d)


def distance_seidel_matrix(g: Graph, dist: Optional[DistanceMatrix] = None) -> IntSymMatrix:
    dist = dist or all_pairs_distances(g)
    rows = tuple(tuple(0 if r == t else 1 - 2 * d for t, d in enumerate(row))
                 for r, row in enumerate(dist.d))
    return IntSymMatrix(n=dist.n, entries=rows)


def numeric_spectrum(matrix: IntSymMatrix, tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    return group_multiplicities(jacobi_eigenvalues(matrix), tol)


def sign_counts(eigenvalues, exact_roots: Optional[Tuple[int, ...]] = None,
                tol: float = config.GROUPING_TOLERANCE) -> Tuple[int, int]:
    """(nonnegative, negative) eigenvalue counts"""
    if exact_roots is not None:
        plus = sum(1 for z in exact_roots if z >= 0)
        return plus, len(exact_roots) - plus
    plus = sum(1 for x in eigenvalues if x >= -tol)
    return plus, len(eigenvalues) - plus


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    m: int
    spectrum: Spectrum
    energy: float
    spectral_radius: float
    a_plus: int
    a_minus: int
    char_poly: ExactPoly
    integral: bool
    integer_spectrum: Optional[Tuple[int, ...]] = None
    companion_energies: Dict[str, float] = field(default_factory=dict)
    distance_integral: Optional[bool] = None

    def to_dict(self) -> Dict:
        result = {
            'n': self.n,
            'm': self.m,
            'spectrum': spectrum_to_json(self.spectrum),
            'energy': self.energy,
            'radius': self.spectral_radius,
            'aPlus': self.a_plus,
            'aMinus': self.a_minus,
            'charPoly': self.char_poly.to_json(),
            'integral': self.integral,
        }
        if self.companion_energies:
            result['energies'] = dict(self.companion_energies)
            result['distanceIntegral'] = self.distance_integral
        return result


def spectral_summary(g: Graph, tol: float = config.GROUPING_TOLERANCE,
                     dist: Optional[DistanceMatrix] = None) -> SpectralSummary:
    dist = dist or all_pairs_distances(g)
    ds = distance_seidel_matrix(g, dist)
    eigs = jacobi_eigenvalues(ds)
    poly = char_poly_exact(ds)
    roots = integer_roots(poly, eigs)
    plus, minus = sign_counts(eigs, roots, tol)

    return SpectralSummary(
        n=g.n,
        m=g.m,
        spectrum=group_multiplicities(eigs, tol),
        energy=float(sum(abs(x) for x in eigs)),
        spectral_radius=max((abs(x) for x in eigs), default=0.0),
        a_plus=plus,
        a_minus=minus,
        char_poly=poly,
        integral=roots is not None,
        integer_spectrum=roots,
    )


def extended_summary(g: Graph, tol: float = config.GROUPING_TOLERANCE) -> SpectralSummary:
    """Summary plus Seidel, adjacency and distance energies"""
    dist = all_pairs_distances(g)
    summary = spectral_summary(g, tol, dist)
    d_matrix = distance_matrix(g, dist)
    d_eigs = jacobi_eigenvalues(d_matrix)
    d_roots = integer_roots(char_poly_exact(d_matrix), d_eigs)

    energies = {
        'distanceSeidel': summary.energy,
        'seidel': sum(abs(x) for x in jacobi_eigenvalues(seidel_matrix(g))),
        'adjacency': sum(abs(x) for x in jacobi_eigenvalues(adjacency_matrix(g))),
        'distance': sum(abs(x) for x in d_eigs),
    }
    return replace(summary, companion_energies=energies, distance_integral=d_roots is not None)


@dataclass(frozen=True)
class WienerCheck:
    lhs: int
    rhs: Fraction
    residual: Fraction

    def to_dict(self) -> Dict:
        return {'lhs': self.lhs, 'rhs': self.rhs, 'residual': self.residual}


def wiener_identity_check(g: Graph, dist: Optional[DistanceMatrix] = None) -> WienerCheck:
    """W(G) = (n(n-1) - sum (d^S)^2 + 4 sum d^2) / 8 with traces taken exactly"""
    dist = dist or all_pairs_distances(g)
    wiener = graph_invariants(g, dist).wiener
    n = g.n
    rhs = Fraction(n * (n - 1)
                   - trace_of_square(distance_seidel_matrix(g, dist))
                   + 4 * trace_of_square(distance_matrix(g, dist)), 8)
    return WienerCheck(lhs=wiener, rhs=rhs, residual=abs(wiener - rhs))


def are_ds_cospectral(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    return (char_poly_exact(distance_seidel_matrix(g1)) ==
            char_poly_exact(distance_seidel_matrix(g2)))


def are_d_cospectral(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    return char_poly_exact(distance_matrix(g1)) == char_poly_exact(distance_matrix(g2))


class SpectrumAnalyzer:
    def __init__(self, tol=config.GROUPING_TOLERANCE):
        self.tol = tol

    def process(self, graph, detail='spectrum'):
        """Spectral summary; detail='analyze' adds invariants and the Wiener identity"""
        logger.info(f"SpectrumAnalyzer processing graph n={graph.n} m={graph.m} ({detail})")

        if detail == 'analyze':
            dist = all_pairs_distances(graph)
            summary = extended_summary(graph, self.tol)
            result = summary.to_dict()
            result['graph6'] = encode_graph6(graph)
            result['invariants'] = graph_invariants(graph, dist).to_dict()
            result['wiener'] = wiener_identity_check(graph, dist).to_dict()
        else:
            result = spectral_summary(graph, self.tol).to_dict()

        result.update({
            'analyzer': 'spectrum_analyzer',
            'timestamp': self.get_timestamp(),
        })
        logger.info(f"Spectrum: energy={result['energy']:.6f} radius={result['radius']:.6f}")
        return result

    def get_timestamp(self):
        return datetime.now().isoformat()
