"""
Configuration settings for the distance Seidel spectra toolkit
"""
import os

# Logging
LOG_LEVEL = os.environ.get('SEIDEL_LOG_LEVEL', 'WARNING').upper()

# Numeric engine
JACOBI_TOLERANCE = 1e-12  # relative off-diagonal norm at convergence
JACOBI_MAX_SWEEPS = 100
GROUPING_TOLERANCE = 1e-7  # eigenvalues closer than this (relative) are one group
HYPOTHESIS_TOLERANCE = 1e-7  # open-interval endpoints and equality cases
PREDICTION_TOLERANCE = 1e-6  # predicted vs numeric spectra of constructed graphs
BOUND_SLACK = 1e-9  # relative slack when checking an inequality numerically
DECIMAL_PRECISION = 40  # digits for |det|^(2/n)

# Output
OUTPUT_SIGNIFICANT_DIGITS = 12

# Catalogs
MAX_GENERATOR_ORDER = 7
DEFAULT_JOBS = int(os.environ.get('SEIDEL_JOBS', '1'))

# CLI vocabulary
FAMILY_NAMES = {
    'kn': 'complete',
    'kn-e': 'complete_minus_edge',
    'kab': 'complete_bipartite',
    'kab-e': 'complete_bipartite_minus_edge',
    'star': 'star',
    'cycle': 'cycle',
    'wheel': 'wheel',
    'split': 'complete_split',
    'friendship': 'friendship',
    'multipartite': 'complete_multipartite',
    'balanced': 'balanced_multipartite',
    'cocktail': 'cocktail_party',
}

OPERATION_NAMES = ['join', 'join-union', 'double', 'prism', 'lex-k2', 'edc']

FIND_OPTIONS = ['cospectral', 'integral', 'd-cospectral']
VERIFY_OPTIONS = ['kn-characterization', 'multipartite-characterization', 'bounds',
                  'prop-regular-diameter2', 'corollaries']

# Published energies before/after deleting an edge of K_{a,b}
PRINTED_EDGE_DELETION_ENERGIES = {
    (2, 2): (8.0, 14.94),
    (2, 3): (19.627, 20.41),
    (3, 2): (19.627, 20.41),
    (3, 3): (24.0, 25.6),
}
