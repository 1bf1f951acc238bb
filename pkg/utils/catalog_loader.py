"""
Catalog loader - graph6 catalogs from files or stdin, single-graph inputs,
and the built-in exhaustive generator of connected graphs up to order 7
"""
import logging
import sys
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, List, Tuple

import config
from utils.errors import GraphFormatError, InvalidParameterError
from utils.graph_core import Graph, encode_graph6, from_edges, parse_edge_list, parse_graph6

logger = logging.getLogger(__name__)


# Canonical forms

def _refine(g: Graph) -> List[int]:
    """Stable colouring by iterated neighbour-colour signatures, starting from degrees"""
    colours = list(g.degrees)
    while True:
        signatures = [(colours[v], tuple(sorted(colours[u] for u in g.adjacency[v])))
                      for v in range(g.n)]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colours)):
            return refined
        colours = refined


def _code(g: Graph, order: Tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        nbrs = g.adjacency[order[j]]
        for i in range(j):
            code = (code << 1) | (order[i] in nbrs)
    return code


def canonical_form(g: Graph) -> Tuple[int, Graph]:
    """
    Minimum adjacency code over the vertex orders that respect the
    refined colour classes, and the graph relabelled by that order
    """
    colours = _refine(g)
    cells = [tuple(v for v in range(g.n) if colours[v] == c) for c in sorted(set(colours))]
    best_code, best_order = None, None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for cell in choice for v in cell)
        code = _code(g, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order

    position = {v: i for i, v in enumerate(best_order or ())}
    relabelled = from_edges(g.n, [(position[u], position[v]) for u, v in g.edges()])
    return best_code or 0, relabelled


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> Tuple[Graph, ...]:
    """
    All connected graphs of order n up to isomorphism. Every connected
    graph has a non-cut vertex, so each one extends a connected graph of
    order n-1 by a vertex with a nonempty neighbourhood.
    """
    if n < 1 or n > config.MAX_GENERATOR_ORDER:
        raise InvalidParameterError(
            f"built-in generator covers orders 1..{config.MAX_GENERATOR_ORDER}, got {n}")
    if n == 1:
        return (from_edges(1, []),)

    found = {}
    for base in connected_graphs(n - 1):
        edges = base.edges()
        for mask in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            code, canon = canonical_form(from_edges(n, edges + extra))
            found.setdefault(code, canon)
    logger.info(f"Generated {len(found)} connected graphs of order {n}")
    return tuple(found[code] for code in sorted(found))


def generated_catalog(max_order: int, min_order: int = 1) -> List[str]:
    return [encode_graph6(g) for n in range(min_order, max_order + 1) for g in connected_graphs(n)]


ASCII_WHITESPACE = ' \t\r\n\f\v'


def split_lines(text: str) -> List[str]:
    """Lines separated by '\\n' only, without the empty tail after a final newline"""
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    return lines


class CatalogLoader:
    def __init__(self):
        self.loaded_catalogs = {}

    def read_text(self, path):
        """File contents one character per byte, or standard input for '-'"""
        if path in (None, '-'):
            return sys.stdin.read()
        with open(path, 'r', encoding='latin-1') as f:
            return f.read()

    def load_catalog(self, path=None, generate=None):
        """graph6 lines of a catalog file / stdin, or of the built-in generator"""
        if generate is not None:
            lines = generated_catalog(generate)
            source = f'generated(n<={generate})'
        else:
            lines = split_lines(self.read_text(path))
            source = path or '-'
        self.loaded_catalogs[source] = len(lines)
        logger.info(f"✅ Loaded {len(lines)} catalog lines from {source}")
        return lines

    def load_graph(self, path=None, fmt='graph6'):
        """The single graph of an input file"""
        text = self.read_text(path)
        if fmt == 'edges':
            return parse_edge_list(text)
        for number, line in enumerate(split_lines(text), start=1):
            if line.strip(ASCII_WHITESPACE):
                return parse_graph6(line, line_number=number)
        raise GraphFormatError(f"no graph6 line in {path or 'standard input'}")

    def iter_graphs(self, lines) -> Iterator[Tuple[int, str]]:
        """(line number, stripped line) for every non-empty line"""
        for number, line in enumerate(lines, start=1):
            line = line.strip(ASCII_WHITESPACE)
            if line:
                yield number, line
