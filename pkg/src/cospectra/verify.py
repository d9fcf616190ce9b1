# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import logging

from dataclasses import dataclass, field

import numpy as np

from .exact import dot, exact_rank, ExactMatrix, ExactScalar, ONE, ZERO
from .synthesis import InternalInvariantViolation, scale_to_numeric

logger = logging.getLogger(__name__)

EIGENVALUES = (-1, 0, 1, 2)
CONVERGENCE_TOLERANCE = 1e-12
MATCH_TOLERANCE = 1e-9
MAX_SWEEPS = 100


class NonConvergenceError(ArithmeticError):
    pass


class AnnihilatorNotVerified(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str = ''

    def __post_init__(self):
        if not self.passed and not self.detail:
            raise ValueError(f'Failed verdict {self.name!r} needs a locating detail.')

    def __str__(self):
        return f'{self.name}: {"pass" if self.passed else "FAIL"}{f" ({self.detail})" if self.detail else ""}'


@dataclass
class SpectrumReport:
    """
    Exact eigenvalue multiplicities (keyed by eigenvalue in lambda-units) and,
    once computed, the numeric eigenvalues at a concrete lambda with their
    largest distance from {-lambda, 0, lambda, 2*lambda}.
    """
    exact: dict
    numeric: list = field(default_factory=list)
    max_deviation: float = None
    lam: float = 1.0

    @property
    def n(self):
        return sum(self.exact.values())

    def distinct(self):
        return [mu for mu in EIGENVALUES if self.exact.get(mu, 0)]


def check_pattern(m, g):
    """
    The off-diagonal nonzero pattern of `m` must equal the edge set of `g`.
    """
    if m.n != g.n:
        raise DimensionMismatchError(f'Matrix of dimension {m.n} cannot belong to a graph on {g.n} vertices.')
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            nonzero = bool(m[u - 1, v - 1])
            if nonzero != g.adjacent(u, v):
                what = 'nonzero entry without edge' if nonzero else 'zero entry on edge'
                return Verdict('pattern', False, f'{what} at ({u},{v})')
    return Verdict('pattern', True)


def check_diagonal(m):
    for i, x in enumerate(m.diagonal()):
        if x not in (ZERO, ONE):
            return Verdict('diagonal', False, f'entry {x} at ({i + 1},{i + 1})')
    return Verdict('diagonal', True)


def _product(rows, m):
    cols = list(zip(*m.rows))
    return [[dot(row, col) for col in cols] for row in rows]


def check_annihilator(m):
    """
    Check (M + I) M (M - I) (M - 2I) = 0 exactly, which holds for a symmetric
    matrix iff its eigenvalues lie in {-1, 0, 1, 2} (lambda-units).
    """
    rows = m.shift(-1).rows
    for mu in (0, 1, 2):
        rows = _product(rows, m.shift(mu))
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x:
                return Verdict('annihilator', False, f'nonzero product entry {x} at ({i + 1},{j + 1})')
    return Verdict('annihilator', True)


def exact_multiplicities(m, *, annihilator=None, row_order=None):
    """
    Compute the multiplicity of every eigenvalue mu in {-1, 0, 1, 2} as
    n - rank(M - mu*I).

    :param m: ExactMatrix.
    :param annihilator: The Verdict of check_annihilator if already known.
    :param row_order: Optional row permutation passed to the elimination.
    :return: SpectrumReport with the exact part filled in.
    :raises AnnihilatorNotVerified: If the annihilator check fails.
    """
    annihilator = annihilator or check_annihilator(m)
    if not annihilator.passed:
        raise AnnihilatorNotVerified(f'Exact multiplicities need a verified annihilator: {annihilator.detail}')
    exact = {mu: m.n - exact_rank(m.shift(mu), row_order=row_order) for mu in EIGENVALUES}
    if sum(exact.values()) != m.n:
        raise InternalInvariantViolation(f'Multiplicities {exact} do not sum to {m.n}')
    return SpectrumReport(exact=exact)


def check_predicted(m, predicted, *, report=None):
    """
    Compare the exact multiplicities with the ones predicted by the case
    tally.
    """
    report = report or exact_multiplicities(m)
    expected = predicted.as_dict()
    for mu in EIGENVALUES:
        if report.exact.get(mu, 0) != expected[mu]:
            return Verdict('predicted', False,
                           f'eigenvalue {mu}: exact multiplicity {report.exact.get(mu, 0)}, predicted {expected[mu]}')
    return Verdict('predicted', True)


def check_dspec_size(report):
    distinct = report.distinct()
    if len(distinct) > 4:
        return Verdict('dspec_size', False, f'{len(distinct)} distinct eigenvalues')
    return Verdict('dspec_size', True, f'{len(distinct)} distinct')


def check_eigenbasis(m, pairs):
    """
    Every vector must satisfy M x = mu x exactly, and the vectors must be
    exactly orthonormal.
    """
    for i, pair in enumerate(pairs):
        residual = m.matvec(pair.vector)
        for u, (mx, x) in enumerate(zip(residual, pair.vector), start=1):
            if mx != x * pair.eigenvalue:
                return Verdict('eigenbasis', False, f'vector #{i}: nonzero residual at vertex {u}')
    for i, p in enumerate(pairs):
        for j in range(i, len(pairs)):
            if dot(p.vector, pairs[j].vector) != (ONE if i == j else ZERO):
                return Verdict('eigenbasis', False, f'inner product of vectors #{i} and #{j}')
    return Verdict('eigenbasis', True)


def numeric_eigenvalues(a):
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, swept
    until the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F.

    :param a: Square array-like, symmetric within 1e-12 relative.
    :return: Sorted list of eigenvalues.
    :raises NonConvergenceError: If 100 sweeps do not suffice.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f'Jacobi iteration needs a square matrix, got shape {a.shape}.')
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if np.max(np.abs(a - a.T), initial=0.0) > CONVERGENCE_TOLERANCE * max(1.0, norm):
        raise ValueError('Jacobi iteration needs a symmetric matrix.')

    def off(a):
        return np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))

    tol = CONVERGENCE_TOLERANCE * norm
    for sweep in range(MAX_SWEEPS):
        if off(a) <= tol:
            logger.debug('Jacobi converged after %d sweeps', sweep)
            return sorted(float(x) for x in np.diag(a))

        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                # theta * theta would overflow
                if abs(a[p, q]) < abs(diff) * 1e-36:
                    t = a[p, q] / diff
                else:
                    theta = diff / (2.0 * a[p, q])
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * ap - s * aq, s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * ap - s * aq, s * ap + c * aq
                a[p, q] = a[q, p] = 0.0

    if off(a) <= tol:
        return sorted(float(x) for x in np.diag(a))
    raise NonConvergenceError(f'Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off(a):g}).')


def numeric_spectrum(report, m, lam):
    """
    Fill in the numeric part of a SpectrumReport at the given lambda.
    """
    report.lam = lam
    report.numeric = numeric_eigenvalues(scale_to_numeric(m, lam))
    targets = [mu * lam for mu in EIGENVALUES]
    report.max_deviation = max((min(abs(x - t) for t in targets) for x in report.numeric), default=0.0)
    return report


def check_numeric(report):
    """
    Pair the sorted numeric eigenvalues with the sorted exact multiset scaled
    by lambda; every pair must agree within 1e-9 * max(1, |lambda|).
    """
    lam = report.lam
    expected = sorted(mu * lam for mu in EIGENVALUES for _ in range(report.exact.get(mu, 0)))
    if len(expected) != len(report.numeric):
        return Verdict('numeric', False, f'{len(report.numeric)} numeric eigenvalues for {len(expected)} exact ones')
    tol = MATCH_TOLERANCE * max(1.0, abs(lam))
    for i, (x, e) in enumerate(zip(report.numeric, expected)):
        if abs(x - e) > tol:
            return Verdict('numeric', False, f'eigenvalue #{i}: numeric {x!r}, exact {e!r}')
    return Verdict('numeric', True)


def perturb(m, i, j, delta):
    """
    Add `delta` to the entries (i, j) and (j, i) (0-based) of a matrix.
    """
    delta = ExactScalar.coerce(delta)
    rows = [list(row) for row in m.rows]
    rows[i][j] = rows[i][j] + delta
    if i != j:
        rows[j][i] = rows[j][i] + delta
    return ExactMatrix(rows)


def certify(m, g, predicted, *, lam=1.0, basis=None):
    """
    Run every check on a synthesized matrix.

    :param m: The ExactMatrix in lambda-units.
    :param g: The graph the matrix should belong to.
    :param predicted: PredictedSpectrum of the synthesis.
    :param lam: The lambda of the numeric cross-check.
    :param basis: Optional list of EigenPairs to check as well.
    :return: Pair of the list of Verdicts and the SpectrumReport (None if the
        annihilator check failed).
    """
    verdicts = [check_pattern(m, g), check_diagonal(m)]
    annihilator = check_annihilator(m)
    verdicts.append(annihilator)

    report = None
    if annihilator.passed:
        report = exact_multiplicities(m, annihilator=annihilator)
        verdicts.append(check_predicted(m, predicted, report=report))
        verdicts.append(check_dspec_size(report))
        try:
            numeric_spectrum(report, m, lam)
            verdicts.append(check_numeric(report))
        except NonConvergenceError as e:
            verdicts.append(Verdict('numeric', False, str(e)))
    else:
        verdicts.append(Verdict('predicted', False, 'annihilator not verified'))

    if basis is not None:
        verdicts.append(check_eigenbasis(m, basis))

    for verdict in verdicts:
        logger.debug('%s', verdict)
    return verdicts, report
