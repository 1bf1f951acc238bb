"""
Numeric eigenvalues (cyclic Jacobi) and exact integer characteristic
polynomials for the small dense matrices built from graphs
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

import config
from utils.errors import InvariantViolation

logger = logging.getLogger(__name__)

Rows = Sequence[Sequence[int]]


@dataclass(frozen=True)
class IntSymMatrix:
    n: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Rows) -> 'IntSymMatrix':
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(entries)
        for r, row in enumerate(entries):
            if len(row) != n:
                raise InvariantViolation(f"row {r} has length {len(row)}, expected {n}")
            for t in range(r):
                if row[t] != entries[t][r]:
                    raise InvariantViolation(f"matrix not symmetric at ({r}, {t})")
        return cls(n=n, entries=entries)

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)


def _rows(matrix: Union[IntSymMatrix, Rows]) -> Tuple[Tuple[int, ...], ...]:
    if isinstance(matrix, IntSymMatrix):
        return matrix.entries
    return tuple(tuple(int(x) for x in row) for row in matrix)


# Polynomials: integer coefficient tuples, degree-descending

@dataclass(frozen=True)
class ExactPoly:
    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return poly_eval(self.coefficients, x)

    def constant_term(self) -> int:
        return self.coefficients[-1]

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            coeff = '' if mag == 1 and power > 0 else str(mag)
            var = '' if power == 0 else ('x' if power == 1 else f'x^{power}')
            sign = '-' if c < 0 else '+'
            terms.append((sign, f"{coeff}{var}"))
        if not terms:
            return '0'
        head_sign, head = terms[0]
        text = ('-' if head_sign == '-' else '') + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(coeffs: Sequence, x):
    """Horner evaluation; exact for int/Fraction x"""
    value = 0
    for c in coeffs:
        value = value * x + c
    return value


def poly_multiply(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    width = max(len(a), len(b))
    a = [0] * (width - len(a)) + list(a)
    b = [0] * (width - len(b)) + list(b)
    return tuple(x + y for x, y in zip(a, b))


def poly_power(a: Sequence[int], k: int) -> Tuple[int, ...]:
    out = (1,)
    for _ in range(k):
        out = poly_multiply(out, a)
    return out


def poly_divide(a: Sequence[int], b: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Quotient and remainder of a by a monic divisor b"""
    if not b or b[0] != 1:
        raise InvariantViolation("divisor must be monic")
    rem = list(a)
    if len(rem) < len(b):
        return (0,), tuple(rem)
    quotient = []
    for i in range(len(a) - len(b) + 1):
        q = rem[i]
        quotient.append(q)
        if q:
            for j in range(1, len(b)):
                rem[i + j] -= q * b[j]
    remainder = tuple(rem[len(a) - len(b) + 1:]) or (0,)
    return tuple(quotient), remainder


def divide_linear(p: Sequence[int], z: int) -> Optional[Tuple[int, ...]]:
    """p / (x - z) when the division is exact, else None"""
    quotient, remainder = poly_divide(p, (1, -z))
    if any(remainder):
        return None
    return quotient


def root_multiplicity(p: ExactPoly, z: int) -> int:
    coeffs, count = p.coefficients, 0
    while len(coeffs) > 1:
        reduced = divide_linear(coeffs, z)
        if reduced is None:
            break
        coeffs, count = reduced, count + 1
    return count


def trace_of_square(matrix: Union[IntSymMatrix, Rows]) -> int:
    """tr(M^2) for symmetric M: the sum of squared entries"""
    return sum(x * x for row in _rows(matrix) for x in row)


# Exact characteristic polynomial and determinant

def _matmul(a, b):
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n)] for i in range(n)]


def char_poly_exact(matrix: Union[IntSymMatrix, Rows]) -> ExactPoly:
    """
    Monic characteristic polynomial by the Faddeev-LeVerrier recurrence
    over Python integers. Works for any square integer matrix.
    """
    a = [list(row) for row in _rows(matrix)]
    n = len(a)
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = _matmul(a, m)
        for i in range(n):
            m[i][i] += coeffs[-1]
        am = _matmul(a, m)
        trace = sum(am[i][i] for i in range(n))
        if trace % k:
            raise InvariantViolation(f"Faddeev-LeVerrier step {k}: trace {trace} not divisible")
        coeffs.append(-trace // k)
    return ExactPoly(tuple(coeffs))


def bareiss_determinant(matrix: Union[IntSymMatrix, Rows]) -> int:
    """Fraction-free Gaussian elimination"""
    a = [list(row) for row in _rows(matrix)]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if num % prev:
                    raise InvariantViolation("Bareiss step left a remainder")
                a[i][j] = num // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# Numeric spectra

def jacobi_eigenvalues(matrix: Union[IntSymMatrix, np.ndarray],
                       tol: float = config.JACOBI_TOLERANCE,
                       max_sweeps: int = config.JACOBI_MAX_SWEEPS) -> List[float]:
    """Eigenvalues, descending, by cyclic-by-row Jacobi rotations"""
    a = matrix.to_array() if isinstance(matrix, IntSymMatrix) else np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return []
    full_norm = np.linalg.norm(a)
    threshold = tol * (1.0 + full_norm)

    for sweep in range(max_sweeps + 1):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= threshold:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n})")
            return sorted((float(x) for x in np.diag(a)), reverse=True)
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0

    raise InvariantViolation(f"Jacobi did not converge after {max_sweeps} sweeps (n={n})")


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: Tuple[float, ...]
    groups: Tuple[Tuple[float, int], ...]
    source_tolerance: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def energy(self) -> float:
        return float(sum(abs(x) for x in self.eigenvalues))

    @property
    def radius(self) -> float:
        return max((abs(x) for x in self.eigenvalues), default=0.0)

    def multiplicity(self, value: float) -> int:
        for rep, mult in self.groups:
            if abs(rep - value) <= self.source_tolerance * (1 + abs(value)):
                return mult
        return 0


def group_multiplicities(eigs: Sequence[float],
                         tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    groups: List[List[float]] = []
    for value in eigs:
        if groups:
            rep = sum(groups[-1]) / len(groups[-1])
            if abs(rep - value) <= tol * (1 + abs(value)):
                groups[-1].append(value)
                continue
        groups.append([value])
    return Spectrum(
        eigenvalues=tuple(float(x) for x in eigs),
        groups=tuple((sum(g) / len(g), len(g)) for g in groups),
        source_tolerance=tol,
    )


def spectrum_from_values(values: Sequence[float],
                         tol: float = config.GROUPING_TOLERANCE) -> Spectrum:
    return group_multiplicities(sorted(values, reverse=True), tol)


# Real roots of real-rooted integer polynomials

def _derivative(coeffs: Sequence) -> Tuple:
    d = len(coeffs) - 1
    return tuple(c * (d - i) for i, c in enumerate(coeffs[:-1]))


def _bisect(coeffs, lo: float, hi: float) -> float:
    f_lo = poly_eval(coeffs, lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        f_mid = poly_eval(coeffs, mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(coeffs: Sequence) -> List[float]:
    """
    All roots, descending, of a polynomial whose roots are all real.
    Critical points (roots of the derivative) split the line into
    monotone pieces; each sign change is bisected and a critical point
    where the polynomial vanishes is a multiple root.
    """
    coeffs = [float(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    lead = coeffs[0]
    coeffs = [c / lead for c in coeffs]
    if degree == 1:
        return [-coeffs[1]]

    bound = 1.0 + max(abs(c) for c in coeffs[1:])
    critical = sorted(real_roots(_derivative(coeffs)))

    def scale(x):
        return sum(abs(c) * abs(x) ** (degree - i) for i, c in enumerate(coeffs))

    roots: List[float] = []
    points = [-bound]
    i = 0
    while i < len(critical):
        c = critical[i]
        j = i
        while j + 1 < len(critical) and abs(critical[j + 1] - c) <= 1e-9 * (1 + abs(c)):
            j += 1
        if abs(poly_eval(coeffs, c)) <= 1e-9 * scale(c):
            roots.extend([c] * (j - i + 2))
        points.append(c)
        i = j + 1
    points.append(bound)

    for lo, hi in zip(points, points[1:]):
        f_lo, f_hi = poly_eval(coeffs, lo), poly_eval(coeffs, hi)
        if abs(f_lo) <= 1e-9 * scale(lo) or abs(f_hi) <= 1e-9 * scale(hi):
            continue
        if (f_lo < 0) != (f_hi < 0):
            roots.append(_bisect(coeffs, lo, hi))

    roots = sorted(roots, reverse=True)[:degree]
    if len(roots) != degree:
        logger.warning(f"found {len(roots)} real roots for a degree-{degree} polynomial")
    return roots


def integer_roots(p: ExactPoly,
                  approximations: Optional[Sequence[float]] = None) -> Optional[Tuple[int, ...]]:
    """
    Full integer root multiset (descending) when p splits into integer
    linear factors, else None. Candidates come from rounding the numeric
    roots; each is confirmed by exact division.
    """
    if approximations is None:
        approximations = real_roots(p.coefficients)
    coeffs = p.coefficients
    found = []
    for approx in approximations:
        if len(coeffs) == 1:
            break
        z = int(round(approx))
        reduced = divide_linear(coeffs, z)
        if reduced is None:
            return None
        coeffs = reduced
        found.append(z)
    if len(coeffs) != 1:
        return None
    return tuple(sorted(found, reverse=True))


def fraction_roots(rows: Sequence[Sequence[Fraction]]) -> List[float]:
    """
    Eigenvalues of a small rational matrix similar to a symmetric one:
    scale to integers, take the exact characteristic polynomial, solve
    """
    denominators = [Fraction(x).denominator for row in rows for x in row]
    scale = 1
    for d in denominators:
        scale = scale * d // math.gcd(scale, d)
    scaled = [[int(Fraction(x) * scale) for x in row] for row in rows]
    poly = char_poly_exact(scaled)
    return [r / scale for r in real_roots(poly.coefficients)]
