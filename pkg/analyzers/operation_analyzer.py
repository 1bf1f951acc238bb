"""
Operation Analyzer - graph constructions (join, join over a union, double
graph, prism, lexicographic product with K2, extended double cover) and
their predicted distance Seidel spectra checked against the eigensolver
"""
import logging
import math
from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import config
from analyzers.spectrum_analyzer import (adjacency_matrix, distance_matrix,
                                         distance_seidel_matrix)
from utils.errors import DisconnectedGraphError, InvalidParameterError, InvariantViolation
from utils.exact_linalg import fraction_roots, jacobi_eigenvalues
from utils.graph_core import (Graph, all_pairs_distances, disjoint_union, encode_graph6,
                              from_edges, graph_invariants, is_connected, is_regular)

logger = logging.getLogger(__name__)


# Constructions

def join(g1: Graph, g2: Graph) -> Graph:
    """G1 block first, then G2; every G1 vertex adjacent to every G2 vertex"""
    base = disjoint_union(g1, g2)
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return from_edges(base.n, base.edges() + cross)


def join_union(g0: Graph, g1: Graph, g2: Graph) -> Graph:
    return join(g0, disjoint_union(g1, g2))


def double_graph(g: Graph) -> Graph:
    """v'_r adjacent to N(v_r) and to the primes of N(v_r); no edge v_r v'_r"""
    n = g.n
    edges = []
    for u, v in g.edges():
        edges += [(u, v), (u, v + n), (u + n, v), (u + n, v + n)]
    return from_edges(2 * n, edges)


def prism(g: Graph) -> Graph:
    """Cartesian product with K2"""
    n = g.n
    edges = g.edges() + [(u + n, v + n) for u, v in g.edges()] + [(r, r + n) for r in range(n)]
    return from_edges(2 * n, edges)


def lex_k2(g: Graph) -> Graph:
    """Lexicographic product G[K2]"""
    return from_edges(2 * g.n, double_graph(g).edges() + [(r, r + g.n) for r in range(g.n)])


def edc(g: Graph) -> Graph:
    """Extended double cover: v-side 0..n-1, u-side n..2n-1, v_r ~ u_t iff t in N[r]"""
    n = g.n
    edges = [(r, r + n) for r in range(n)]
    for u, v in g.edges():
        edges += [(u, v + n), (v, u + n)]
    return from_edges(2 * n, edges)


CONSTRUCTIONS = {
    'join': (join, 2),
    'join-union': (join_union, 3),
    'double': (double_graph, 1),
    'prism': (prism, 1),
    'lex-k2': (lex_k2, 1),
    'edc': (edc, 1),
}


# Predictions

@dataclass(frozen=True)
class PredictedSpectrum:
    operation: str
    values: Tuple[Tuple[float, str], ...]
    hypothesis_ok: bool

    def eigenvalues(self) -> List[float]:
        return sorted((v for v, _ in self.values), reverse=True)

    def to_dict(self) -> Dict:
        return {
            'operation': self.operation,
            'hypothesisOk': self.hypothesis_ok,
            'values': [{'value': v, 'source': tag} for v, tag in
                       sorted(self.values, key=lambda item: -item[0])],
        }


def _nonempty(*graphs: Graph):
    for g in graphs:
        if g.n == 0:
            raise InvalidParameterError("operation inputs must have at least one vertex")


def _regularity(g: Graph) -> Tuple[Fraction, bool]:
    """Degree (average degree when irregular) and whether g is regular"""
    k = is_regular(g)
    if k is not None:
        return Fraction(k), True
    return Fraction(2 * g.m, g.n), False


def _non_perron(g: Graph) -> List[float]:
    return jacobi_eigenvalues(adjacency_matrix(g))[1:]


def predict_join_spectrum(g1: Graph, g2: Graph) -> PredictedSpectrum:
    _nonempty(g1, g2)
    (k1, reg1), (k2, reg2) = _regularity(g1), _regularity(g2)
    n1, n2 = g1.n, g2.n

    values = [(3 + 2 * lam, '3+2*lambda(G1)') for lam in _non_perron(g1)]
    values += [(3 + 2 * lam, '3+2*lambda(G2)') for lam in _non_perron(g2)]

    b = float(3 * n1 + 3 * n2 - 2 * k1 - 2 * k2 - 6)
    c = float((3 * n1 - 2 * k1 - 3) * (3 * n2 - 2 * k2 - 3) - n1 * n2)
    root = math.sqrt(max(b * b - 4 * c, 0.0))
    values += [((-b + root) / 2, 'quotient'), ((-b - root) / 2, 'quotient')]
    return PredictedSpectrum('join', tuple(values), reg1 and reg2)


def join_union_quotient(g0: Graph, g1: Graph, g2: Graph) -> List[List[Fraction]]:
    (k0, _), (k1, _), (k2, _) = (_regularity(g) for g in (g0, g1, g2))
    n0, n1, n2 = g0.n, g1.n, g2.n
    return [
        [3 - 3 * n0 + 2 * k0, Fraction(-n1), Fraction(-n2)],
        [Fraction(-n0), 3 - 3 * n1 + 2 * k1, Fraction(-3 * n2)],
        [Fraction(-n0), Fraction(-3 * n1), 3 - 3 * n2 + 2 * k2],
    ]


def predict_join_union_spectrum(g0: Graph, g1: Graph, g2: Graph) -> PredictedSpectrum:
    _nonempty(g0, g1, g2)
    values = []
    for label, g in (('G0', g0), ('G1', g1), ('G2', g2)):
        values += [(3 + 2 * lam, f'3+2*lambda({label})') for lam in _non_perron(g)]
    values += [(x, 'quotient') for x in fraction_roots(join_union_quotient(g0, g1, g2))]
    regular = all(is_regular(g) is not None for g in (g0, g1, g2))
    return PredictedSpectrum('join-union', tuple(values), regular)


def predict_double_spectrum(g: Graph) -> PredictedSpectrum:
    if g.n < 2:
        raise DisconnectedGraphError("the double graph of K1 is disconnected")
    ds = jacobi_eigenvalues(distance_seidel_matrix(g))
    values = [(2 * x - 3, '2*dS-3') for x in ds] + [(3.0, 'antisymmetric')] * g.n
    return PredictedSpectrum('double', tuple(values), True)


def predict_prism_spectrum(g: Graph) -> PredictedSpectrum:
    dist = all_pairs_distances(g)
    d_eigs = jacobi_eigenvalues(distance_matrix(g, dist))
    values = [(-1 - 4 * x, '-1-4*d') for x in d_eigs]
    values += [(2.0 * g.n - 1, '2n-1')] + [(-1.0, 'antisymmetric')] * (g.n - 1)
    tr_regular = graph_invariants(g, dist).transmission_regular is not None
    return PredictedSpectrum('prism', tuple(values), tr_regular)


def predict_lex_spectrum(g: Graph) -> PredictedSpectrum:
    _nonempty(g)
    ds = jacobi_eigenvalues(distance_seidel_matrix(g))
    values = [(2 * x - 1, '2*dS-1') for x in ds] + [(1.0, 'antisymmetric')] * g.n
    return PredictedSpectrum('lex-k2', tuple(values), True)


def predict_edc_spectrum(g: Graph) -> PredictedSpectrum:
    _nonempty(g)
    dist = all_pairs_distances(g)
    lam = jacobi_eigenvalues(adjacency_matrix(g))
    k = is_regular(g)
    diameter = graph_invariants(g, dist).diameter
    top = float(k) if k is not None else lam[0]
    n = g.n

    values = [(-8.0 * n + 4 * top + 7, '-8n+4k+7'), (2.0 * n - 4 * top - 1, '2n-4k-1')]
    values += [(7 + 4 * x, '7+4*lambda') for x in lam[1:]]
    values += [(-1 - 4 * x, '-1-4*lambda') for x in lam[1:]]
    return PredictedSpectrum('edc', tuple(values), k is not None and diameter <= 2)


PREDICTORS = {
    'join': predict_join_spectrum,
    'join-union': predict_join_union_spectrum,
    'double': predict_double_spectrum,
    'prism': predict_prism_spectrum,
    'lex-k2': predict_lex_spectrum,
    'edc': predict_edc_spectrum,
}


def compare_prediction(predicted: PredictedSpectrum, constructed: Graph,
                       tol: float = config.PREDICTION_TOLERANCE) -> Dict:
    if not is_connected(constructed):
        return {'connected': False, 'matches': False, 'maxDiff': None}
    numeric = jacobi_eigenvalues(distance_seidel_matrix(constructed))
    expected = predicted.eigenvalues()
    if len(numeric) != len(expected):
        raise InvariantViolation(
            f"{predicted.operation}: predicted {len(expected)} values for order {len(numeric)}")
    max_diff = max((abs(a - b) for a, b in zip(expected, numeric)), default=0.0)
    return {
        'connected': True,
        'matches': max_diff <= tol,
        'maxDiff': max_diff,
        'numeric': numeric,
    }


def _energy(g: Graph, matrix_builder=distance_seidel_matrix) -> float:
    return sum(abs(x) for x in jacobi_eigenvalues(matrix_builder(g)))


def energy_corollary(op: str, g: Graph, constructed: Graph) -> Optional[Dict]:
    """E(D2 G) <= 2E(G)+6n, E(G[K2]) <= 2E(G)+2n, E(G x K2) <= 4E_D(G)+4n-2"""
    n = g.n
    if op == 'double':
        bound = 2 * _energy(g) + 6 * n
    elif op == 'lex-k2':
        bound = 2 * _energy(g) + 2 * n
    elif op == 'prism':
        bound = 4 * _energy(g, distance_matrix) + 4 * n - 2
    else:
        return None
    observed = _energy(constructed)
    return {
        'upper': bound,
        'observed': observed,
        'satisfied': observed <= bound * (1 + config.BOUND_SLACK) + config.BOUND_SLACK,
    }


class OperationAnalyzer:
    def __init__(self, tol=config.PREDICTION_TOLERANCE):
        self.tol = tol

    def construct(self, op, inputs):
        if op not in CONSTRUCTIONS:
            raise InvalidParameterError(
                f"unknown operation '{op}', expected one of {', '.join(config.OPERATION_NAMES)}")
        builder, arity = CONSTRUCTIONS[op]
        if len(inputs) != arity:
            raise InvalidParameterError(f"operation '{op}' takes {arity} input graph(s), got {len(inputs)}")
        return builder(*inputs)

    def process(self, op, inputs, predict=False):
        """Build the operation graph and optionally check its predicted spectrum"""
        logger.info(f"OperationAnalyzer processing {op} on {len(inputs)} input graph(s)")

        constructed = self.construct(op, inputs)
        result = {
            'operation': op,
            'inputs': [encode_graph6(g) for g in inputs],
            'graph6': encode_graph6(constructed),
            'n': constructed.n,
            'm': constructed.m,
            'connected': is_connected(constructed),
        }

        if predict:
            predicted = PREDICTORS[op](*inputs)
            comparison = compare_prediction(predicted, constructed, self.tol)
            result['prediction'] = predicted.to_dict()
            result['comparison'] = {k: v for k, v in comparison.items() if k != 'numeric'}
            if comparison['connected'] and len(inputs) == 1:
                corollary = energy_corollary(op, inputs[0], constructed)
                if corollary is not None:
                    result['energyCorollary'] = corollary

            if not predicted.hypothesis_ok:
                logger.warning(f"{op}: hypotheses not met, prediction reported for diagnostics only")
            elif not comparison['matches']:
                raise InvariantViolation(
                    f"{op}: predicted spectrum differs from numeric by {comparison['maxDiff']}")

        result.update({
            'analyzer': 'operation_analyzer',
            'timestamp': self.get_timestamp(),
        })
        logger.info(f"Constructed {result['graph6']} (n={constructed.n}, m={constructed.m})")
        return result

    def get_timestamp(self):
        return datetime.now().isoformat()
