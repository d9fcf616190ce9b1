# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import logging

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exact import ExactMatrix, INV_SQRT2, ONE, ZERO
from .graph import eliminate_twins, Graph, TwinKind
from .recognize import P4Witness

logger = logging.getLogger(__name__)


class NotACographError(ValueError):
    """
    Raised when a construction needs a cograph. `witness` is the P4Witness
    found during recognition.
    """

    def __init__(self, witness):
        super().__init__(f'Not a cograph, induced P4: {witness}')
        self.witness = witness


class InternalInvariantViolation(AssertionError):
    pass


class Case(Enum):
    """
    The four ways of adding a twin v' of v to the matrix, selected by the twin
    kind and the current diagonal entry m_vv. The value holds the 2x2 block on
    {v, v'} (diagonal, off-diagonal) and the eigenvalue of the new
    eigenvector, all in lambda-units.
    """
    FALSE_ZERO = (1, 0, 0, 0)
    FALSE_LAMBDA = (2, 1, 0, 1)
    TRUE_ZERO = (3, 1, -1, 2)
    TRUE_LAMBDA = (4, 0, 1, -1)

    @property
    def number(self):
        return self.value[0]

    @property
    def diagonal(self):
        return self.value[1]

    @property
    def offdiagonal(self):
        return self.value[2]

    @property
    def eigenvalue(self):
        return self.value[3]

    @classmethod
    def select(cls, kind, diagonal):
        if diagonal == ZERO:
            return cls.TRUE_ZERO if kind is TwinKind.TRUE_TWIN else cls.FALSE_ZERO
        if diagonal == ONE:
            return cls.TRUE_LAMBDA if kind is TwinKind.TRUE_TWIN else cls.FALSE_LAMBDA
        raise InternalInvariantViolation(f'Diagonal entry {diagonal} is outside of {{0, lambda}}')


@dataclass(frozen=True)
class TwinStep:
    added: int
    twin_of: int
    kind: TwinKind

    def __post_init__(self):
        if self.added == self.twin_of:
            raise ValueError(f'Vertex {self.added} cannot be its own twin.')


@dataclass(frozen=True)
class TwinSequence:
    """
    Ordered twin additions building a cograph from the single vertex `base`.
    """
    base: int
    steps: tuple

    @property
    def n(self):
        return len(self.steps) + 1

    def replay(self):
        """
        Rebuild the graph by performing the twin additions.

        :return: The reconstructed Graph.
        """
        adj = {self.base: set()}
        for step in self.steps:
            if step.twin_of not in adj or step.added in adj:
                raise ValueError(f'Invalid twin step: {step}')
            neighbors = set(adj[step.twin_of])
            if step.kind is TwinKind.TRUE_TWIN:
                neighbors.add(step.twin_of)
            adj[step.added] = neighbors
            for w in neighbors:
                adj[w].add(step.added)
        if sorted(adj) != list(range(1, len(adj) + 1)):
            raise ValueError(f'Twin sequence does not cover the vertices 1..{len(adj)}.')
        return Graph(len(adj), ((u, w) for u in adj for w in adj[u] if u < w))


@dataclass(frozen=True)
class PredictedSpectrum:
    """
    Eigenvalue multiplicities (in lambda-units) predicted by the case tally.
    """
    mult_minus: int = 0
    mult_zero: int = 0
    mult_lambda: int = 0
    mult_two: int = 0

    @classmethod
    def from_cases(cls, cases):
        counts = {-1: 0, 0: 1, 1: 0, 2: 0}
        for case in cases:
            counts[case.eigenvalue] += 1
        return cls.from_dict(counts)

    @classmethod
    def from_dict(cls, counts):
        return cls(mult_minus=counts.get(-1, 0), mult_zero=counts.get(0, 0),
                   mult_lambda=counts.get(1, 0), mult_two=counts.get(2, 0))

    def as_dict(self):
        return {-1: self.mult_minus, 0: self.mult_zero, 1: self.mult_lambda, 2: self.mult_two}

    @property
    def n(self):
        return self.mult_minus + self.mult_zero + self.mult_lambda + self.mult_two


@dataclass(frozen=True)
class EigenPair:
    vector: tuple
    eigenvalue: int


def twin_sequence(g):
    """
    Extract the twin-addition sequence of a cograph. Deterministic: twins are
    eliminated in lexicographic order, always removing the larger vertex of the
    pair, and the sequence replays the eliminations backwards.

    :param g: A cograph.
    :return: The TwinSequence.
    :raises NotACographError: If g contains an induced P4.
    """
    survivors, eliminations, witness = eliminate_twins(g)
    if witness is not None:
        raise NotACographError(P4Witness(witness))
    return TwinSequence(base=survivors[0],
                        steps=tuple(TwinStep(added=removed, twin_of=kept, kind=kind)
                                    for removed, kept, kind in reversed(eliminations)))


def synthesize(seq):
    """
    Build a matrix M in S(G) whose eigenvalues lie in {-1, 0, 1, 2} (in
    lambda-units) by replaying the twin additions, starting from M = [0].
    Adding v' as twin of v scales row/column v by 1/sqrt(2), copies it to
    v', and sets the 2x2 block on {v, v'} according to the selected Case.

    :param seq: A valid TwinSequence.
    :return: Triple (matrix, predicted spectrum, list of Cases per step).
    """
    m = {seq.base: {seq.base: ZERO}}
    cases = []
    for step_cnt, step in enumerate(seq.steps):
        v, v2 = step.twin_of, step.added
        case = Case.select(step.kind, m[v][v])
        cases.append(case)
        logger.debug('Step #%d: %d is %s twin of %d, case %d (eigenvalue %+d)',
                     step_cnt, v2, step.kind.value, v, case.number, case.eigenvalue)

        m[v2] = {}
        for u, row in m.items():
            if u in (v, v2):
                continue
            x = row[v].div_sqrt2()
            row[v] = row[v2] = m[v][u] = m[v2][u] = x
        m[v][v] = m[v2][v2] = ONE * case.diagonal
        m[v][v2] = m[v2][v] = ONE * case.offdiagonal

    order = sorted(m)
    matrix = ExactMatrix([[m[u][w] for w in order] for u in order])
    return matrix, PredictedSpectrum.from_cases(cases), cases


def eigenbasis(seq):
    """
    Lift an orthonormal eigenbasis along the twin additions: every earlier
    vector x gets x(v)/sqrt(2) at both v and v', and the new vector is
    (e_v - e_v')/sqrt(2), whose eigenvalue is the one of the Case fired.

    :param seq: A valid TwinSequence.
    :return: List of EigenPairs (vectors indexed like the rows of the matrix).
    """
    _, _, cases = synthesize(seq)

    vectors = [({seq.base: ONE}, 0)]
    for step, case in zip(seq.steps, cases):
        v, v2 = step.twin_of, step.added
        for x, _ in vectors:
            x[v] = x[v2] = x.get(v, ZERO).div_sqrt2()
        vectors.append(({v: INV_SQRT2, v2: -INV_SQRT2}, case.eigenvalue))

    order = range(1, seq.n + 1)
    return [EigenPair(vector=tuple(x.get(u, ZERO) for u in order), eigenvalue=mu) for x, mu in vectors]


def scale_to_numeric(m, lam):
    """
    Evaluate the lambda-unit matrix at a concrete lambda.

    :param m: ExactMatrix in lambda-units.
    :param lam: Nonzero real.
    :return: numpy float64 array.
    """
    if lam == 0:
        raise ValueError('lambda must be nonzero.')
    return np.array([[lam * float(x) for x in row] for row in m.rows], dtype=np.float64).reshape(m.n, m.n)
