"""
Family Analyzer - closed-form distance Seidel spectra, characteristic
polynomials and energies of named graph families, compared with the
numeric spectrum of the explicitly constructed graph
"""
import logging
import math
from dataclasses import dataclass
from datetime import datetime
from itertools import groupby
from typing import Dict, List, Optional, Tuple

import config
from analyzers.operation_analyzer import join
from analyzers.spectrum_analyzer import distance_matrix, spectral_summary
from utils.errors import InvalidParameterError
from utils.exact_linalg import (ExactPoly, Spectrum, jacobi_eigenvalues, poly_add,
                                poly_multiply, poly_power, real_roots, spectrum_from_values)
from utils.graph_core import (Graph, complete_bipartite_graph, complete_graph,
                              complete_multipartite_graph, cycle_graph, disjoint_union,
                              edge_deleted, empty_graph, graph_invariants,
                              star_graph)

logger = logging.getLogger(__name__)

# family -> (parameter names, minimums)
FAMILY_PARAMETERS = {
    'complete': (('n',), (1,)),
    'complete_minus_edge': (('n',), (3,)),
    'complete_bipartite': (('a', 'b'), (1, 1)),
    'star': (('n',), (2,)),
    'cycle': (('n',), (3,)),
    'wheel': (('n',), (4,)),
    'complete_split': (('n', 'p'), (2, 1)),
    'friendship': (('n',), (1,)),
    'balanced_multipartite': (('n', 'q'), (1, 2)),
    'cocktail_party': (('n',), (2,)),
    'complete_multipartite': (None, None),
    'complete_bipartite_minus_edge': (('a', 'b'), (2, 2)),
}

ENERGY_FAMILIES = {'complete', 'complete_minus_edge', 'complete_bipartite', 'star',
                   'balanced_multipartite', 'friendship', 'complete_split'}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_PARAMETERS:
            raise InvalidParameterError(f"unknown family '{self.family}'")
        names, minimums = FAMILY_PARAMETERS[self.family]
        if names is None:
            if len(self.params) < 2 or min(self.params) < 1:
                raise InvalidParameterError(
                    "complete_multipartite needs at least two parts, each of size >= 1")
            return
        if len(self.params) != len(names):
            raise InvalidParameterError(
                f"{self.family} takes parameters ({', '.join(names)}), got {list(self.params)}")
        for name, value, low in zip(names, self.params, minimums):
            if value < low:
                raise InvalidParameterError(f"{self.family}: {name}={value} must be >= {low}")
        if self.family == 'complete_split' and self.params[1] > self.params[0]:
            raise InvalidParameterError(f"complete_split: p={self.params[1]} exceeds n={self.params[0]}")

    @property
    def order(self) -> int:
        f, p = self.family, self.params
        if f in ('complete_bipartite', 'complete_bipartite_minus_edge'):
            return p[0] + p[1]
        if f == 'friendship':
            return 2 * p[0] + 1
        if f == 'balanced_multipartite':
            return p[0] * p[1]
        if f == 'cocktail_party':
            return 2 * p[0]
        if f == 'complete_multipartite':
            return sum(p)
        return p[0]

    @classmethod
    def from_cli(cls, name, params):
        if name not in config.FAMILY_NAMES:
            raise InvalidParameterError(
                f"unknown family '{name}', expected one of {', '.join(config.FAMILY_NAMES)}")
        return cls(config.FAMILY_NAMES[name], tuple(int(p) for p in params))


def _quadratic(b: float, c: float) -> List[float]:
    """Roots of x^2 + b x + c"""
    root = math.sqrt(max(b * b - 4 * c, 0.0))
    return [(-b + root) / 2, (-b - root) / 2]


def cycle_spectrum(n: int, tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    """
    Circulant distance eigenvalues of C_n mapped by the transmission
    regular rule: n-1-2k for the all-ones vector, -1-2d_j otherwise
    """
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    k = n * n // 4
    values = [float(n - 1 - 2 * k)]
    for j in range(1, n):
        d_j = sum(min(t, n - t) * math.cos(2 * math.pi * j * t / n) for t in range(1, n))
        values.append(-1 - 2 * d_j)
    return spectrum_from_values(values, tol)


def _multipartite_values(parts) -> List[float]:
    parts = sorted(parts, reverse=True)
    values = [3.0] * (sum(parts) - len(parts))
    for size, group in groupby(parts):
        count = len(list(group))
        values += [3.0 - 2 * size] * (count - 1)
    values += real_roots(_multipartite_secular(parts))
    return values


def _multipartite_secular(parts) -> Tuple[int, ...]:
    """prod(x-3+2s) + sum c_s s prod_{t != s}(x-3+2t) over distinct sizes s with counts c_s"""
    sizes = sorted({s: parts.count(s) for s in parts}.items(), reverse=True)
    product = (1,)
    for s, _ in sizes:
        product = poly_multiply(product, (1, 2 * s - 3))
    total = product
    for s, count in sizes:
        others = (1,)
        for t, _ in sizes:
            if t != s:
                others = poly_multiply(others, (1, 2 * t - 3))
        total = poly_add(total, tuple(count * s * c for c in others))
    return total


def _closed_form_values(spec: FamilySpec) -> List[float]:
    f, p = spec.family, spec.params
    if f == 'complete':
        n = p[0]
        return [1.0] * (n - 1) + [1.0 - n]
    if f == 'complete_minus_edge':
        n = p[0]
        return [3.0] + [1.0] * (n - 3) + _quadratic(n, n - 5)
    if f == 'complete_bipartite':
        a, b = p
        disc = math.sqrt(9 * a * a + 9 * b * b - 14 * a * b)
        return [3.0] * (a + b - 2) + [(3 * (2 - a - b) + disc) / 2, (3 * (2 - a - b) - disc) / 2]
    if f == 'star':
        n = p[0]
        disc = math.sqrt(9 * n * n - 32 * n + 32)
        return [3.0] * (n - 2) + [(6 - 3 * n + disc) / 2, (6 - 3 * n - disc) / 2]
    if f == 'cycle':
        return list(cycle_spectrum(p[0]).eigenvalues)
    if f == 'wheel':
        n = p[0]
        disc = math.sqrt(9 * n * n - 56 * n + 96)
        rim = [3 + 4 * math.cos(2 * math.pi * t / (n - 1)) for t in range(1, n - 1)]
        return rim + [(10 - 3 * n + disc) / 2, (10 - 3 * n - disc) / 2]
    if f == 'complete_split':
        n, q = p
        if q == n:
            return _closed_form_values(FamilySpec('complete', (n,)))
        disc = math.sqrt(12 * q * q + 9 * n * n + 16 * q - 12 * n - 20 * n * q + 4)
        return ([1.0] * (q - 1) + [3.0] * (n - q - 1)
                + [(2 * q - 3 * n + 4 + disc) / 2, (2 * q - 3 * n + 4 - disc) / 2])
    if f == 'friendship':
        n = p[0]
        disc = math.sqrt(36 * n * n - 52 * n + 25)
        return [1.0] * n + [5.0] * (n - 1) + [(5 - 6 * n + disc) / 2, (5 - 6 * n - disc) / 2]
    if f == 'balanced_multipartite':
        n, q = p
        return [3.0] * (q * (n - 1)) + [3.0 - 2 * n] * (q - 1) + [3.0 - n * (q + 2)]
    if f == 'cocktail_party':
        n = p[0]
        return [3.0] * n + [-1.0] * (n - 1) + [-1.0 - 2 * n]
    if f == 'complete_multipartite':
        return _multipartite_values(p)
    if f == 'complete_bipartite_minus_edge':
        a, b = p
        return [3.0] * (a + b - 4) + real_roots(_kab_minus_edge_quartic(a, b))
    raise InvalidParameterError(f"no closed form for {f}")


def closed_form_spectrum(spec: FamilySpec, tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    return spectrum_from_values(_closed_form_values(spec), tol)


def charpoly_complete_multipartite(parts) -> ExactPoly:
    """
    (x-3)^(n-q) * (prod(x-3+2n_r) + sum_r n_r prod_{t != r}(x-3+2n_t)),
    the determinant of the quotient over the parts
    """
    parts = tuple(parts)
    if len(parts) < 2 or min(parts) < 1:
        raise InvalidParameterError(f"need at least two parts of size >= 1, got {list(parts)}")
    n, q = sum(parts), len(parts)
    product = (1,)
    for s in parts:
        product = poly_multiply(product, (1, 2 * s - 3))
    total = product
    for r, s in enumerate(parts):
        others = (1,)
        for t, size in enumerate(parts):
            if t != r:
                others = poly_multiply(others, (1, 2 * size - 3))
        total = poly_add(total, tuple(s * c for c in others))
    return ExactPoly(poly_multiply(poly_power((1, -3), n - q), total))


def printed_charpoly_complete_multipartite(parts) -> ExactPoly:
    """The cited form with x-3+4n_r factors and a minus sign; agrees for two parts only"""
    parts = tuple(parts)
    n, q = sum(parts), len(parts)
    product = (1,)
    for s in parts:
        product = poly_multiply(product, (1, 4 * s - 3))
    total = product
    for r, s in enumerate(parts):
        others = (1,)
        for t, size in enumerate(parts):
            if t != r:
                others = poly_multiply(others, (1, 4 * size - 3))
        total = poly_add(total, tuple(-s * c for c in others))
    return ExactPoly(poly_multiply(poly_power((1, -3), n - q), total))


def _kab_minus_edge_quartic(a: int, b: int) -> Tuple[int, ...]:
    return (
        1,
        -(12 - 3 * a - 3 * b),
        -(-30 + 27 * a + 27 * b - 8 * a * b),
        -(-132 - 33 * a - 33 * b + 48 * a * b),
        -(551 - 191 * a - 191 * b + 56 * a * b),
    )


def charpoly_kab_minus_edge(a: int, b: int) -> ExactPoly:
    """Monic form of the cited (x-3)^(a+b-4) times quartic expression"""
    if a < 2 or b < 2:
        raise InvalidParameterError(f"K_(a,b) - e needs a, b >= 2, got ({a}, {b})")
    quartic = _kab_minus_edge_quartic(a, b)
    return ExactPoly(poly_multiply(poly_power((1, -3), a + b - 4), quartic))


def transmission_regular_spectrum(g: Graph,
                                  tol: float = config.GROUPING_TOLERANCE) -> Optional[Spectrum]:
    k = graph_invariants(g).transmission_regular
    if k is None:
        return None
    d_eigs = jacobi_eigenvalues(distance_matrix(g))
    values = [float(g.n - 1 - 2 * k)] + [-1 - 2 * x for x in d_eigs[1:]]
    return spectrum_from_values(values, tol)


def closed_form_energy(spec: FamilySpec) -> float:
    f, p = spec.family, spec.params
    if f not in ENERGY_FAMILIES:
        raise InvalidParameterError(f"no closed-form energy for {f}")
    if f == 'complete':
        return 2.0 * p[0] - 2
    if f == 'complete_minus_edge' and p[0] >= 5:
        return 2.0 * p[0]
    if f == 'complete_bipartite' and min(p) >= 2:
        return 6.0 * (p[0] + p[1] - 2)
    if f == 'star':
        n = p[0]
        return 3 * n - 6 + math.sqrt(9 * n * n - 32 * n + 32)
    if f == 'balanced_multipartite':
        n, q = p
        return 6.0 * q * (n - 1) if n >= 2 else 2.0 * (q - 1)
    if f == 'friendship':
        n = p[0]
        return 6 * n - 5 + math.sqrt(36 * n * n - 52 * n + 25)
    return sum(abs(x) for x in _closed_form_values(spec))


def printed_energy(spec: FamilySpec) -> Optional[float]:
    """Energy expression as cited for the family, where one is cited"""
    f, p = spec.family, spec.params
    if f == 'complete_minus_edge':
        return 2.0 * p[0]
    if f == 'balanced_multipartite':
        return 3.0 * p[1] * (p[0] - 1)
    if f == 'complete_split':
        n, q = p
        return 2 * q - 3 * n + 4 - math.sqrt(12 * q * q + 9 * n * n + 16 * q - 12 * n - 20 * n * q + 4)
    if f in ENERGY_FAMILIES:
        return closed_form_energy(spec)
    return None


def build_family_graph(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f == 'complete':
        return complete_graph(p[0])
    if f == 'complete_minus_edge':
        return edge_deleted(complete_graph(p[0]), 0, 1)
    if f == 'complete_bipartite':
        return complete_bipartite_graph(*p)
    if f == 'star':
        return star_graph(p[0])
    if f == 'cycle':
        return cycle_graph(p[0])
    if f == 'wheel':
        return join(complete_graph(1), cycle_graph(p[0] - 1))
    if f == 'complete_split':
        n, q = p
        return join(complete_graph(q), empty_graph(n - q))
    if f == 'friendship':
        return join(complete_graph(1), disjoint_union(*[complete_graph(2)] * p[0]))
    if f == 'balanced_multipartite':
        n, q = p
        return complete_multipartite_graph([n] * q)
    if f == 'cocktail_party':
        return complete_multipartite_graph([2] * p[0])
    if f == 'complete_multipartite':
        return complete_multipartite_graph(p)
    if f == 'complete_bipartite_minus_edge':
        a, b = p
        # u_a = a-1 loses its edge to v_1 = a
        return edge_deleted(complete_bipartite_graph(a, b), a - 1, a)
    raise InvalidParameterError(f"unknown family '{f}'")


class FamilyAnalyzer:
    def __init__(self, tol=config.GROUPING_TOLERANCE):
        self.tol = tol

    def process(self, spec):
        """Closed-form spectrum vs the eigensolver on the constructed graph"""
        logger.info(f"FamilyAnalyzer processing {spec.family}{list(spec.params)}")

        closed = closed_form_spectrum(spec, self.tol)
        graph = build_family_graph(spec)
        numeric = spectral_summary(graph, self.tol)
        max_diff = max(abs(a - b) for a, b in zip(closed.eigenvalues, numeric.spectrum.eigenvalues))
        multiplicities_match = ([m for _, m in closed.groups] ==
                                [m for _, m in numeric.spectrum.groups])

        result = {
            'family': spec.family,
            'params': list(spec.params),
            'n': graph.n,
            'closedForm': [{'value': v, 'mult': m} for v, m in closed.groups],
            'numeric': [{'value': v, 'mult': m} for v, m in numeric.spectrum.groups],
            'maxDiff': max_diff,
            'multiplicitiesMatch': multiplicities_match,
            'numericEnergy': numeric.energy,
        }

        if spec.family in ENERGY_FAMILIES:
            energy = closed_form_energy(spec)
            printed = printed_energy(spec)
            result['closedFormEnergy'] = energy
            result['printedEnergy'] = printed
            result['printedEnergyMatches'] = abs(printed - numeric.energy) <= 1e-6 * (1 + numeric.energy)
            if not result['printedEnergyMatches']:
                logger.warning(f"{spec.family}{list(spec.params)}: cited energy {printed:.6f} "
                               f"differs from computed {numeric.energy:.6f}")

        if spec.family == 'complete_multipartite':
            exact = charpoly_complete_multipartite(spec.params)
            result['charPoly'] = exact.to_json()
            result['charPolyMatches'] = exact == numeric.char_poly
            result['printedCharPolyMatches'] = (
                printed_charpoly_complete_multipartite(spec.params) == numeric.char_poly)
        elif spec.family == 'complete_bipartite_minus_edge':
            exact = charpoly_kab_minus_edge(*spec.params)
            result['charPoly'] = exact.to_json()
            result['charPolyMatches'] = exact == numeric.char_poly

        result.update({
            'analyzer': 'family_analyzer',
            'timestamp': self.get_timestamp(),
        })
        logger.info(f"{spec.family}: max deviation {max_diff:.3e}")
        return result

    def get_timestamp(self):
        return datetime.now().isoformat()
