# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import math

from functools import total_ordering


SQRT2 = math.sqrt(2)


def _odd_part(x):
    x = abs(x)
    return x >> ((x & -x).bit_length() - 1)


@total_ordering
class ExactScalar:
    """
    Element (a + b*sqrt(2)) / 2**k of the ring Z[sqrt(2), 1/2].

    The representation is canonical: common factors of 2 are cancelled from
    a and b as long as k > 0, and zero is always (0, 0, 0). Hence equality is
    equality of the triples.
    """

    __slots__ = ('a', 'b', 'k')

    def __init__(self, a, b=0, k=0):
        if k < 0:
            a, b, k = a << -k, b << -k, 0
        if not a and not b:
            k = 0
        elif k:
            ab = a | b
            shift = min(k, (ab & -ab).bit_length() - 1)
            a, b, k = a >> shift, b >> shift, k - shift
        self.a = a
        self.b = b
        self.k = k

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f'Cannot convert {x!r} to {cls.__name__}')

    @classmethod
    def from_triple(cls, triple):
        a, b, k = triple
        return cls(int(a), int(b), int(k))

    def as_triple(self):
        return self.a, self.b, self.k

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.k == other.k

    def __hash__(self):
        # Consistent with equality against plain integers.
        if not self.b and not self.k:
            return hash(self.a)
        return hash((self.a, self.b, self.k))

    def __lt__(self, other):
        return (self - ExactScalar.coerce(other)).sign() < 0

    def sign(self):
        """
        Exact sign of the value: -1, 0 or 1.
        """
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 1 if a or b else 0
        if a <= 0 and b <= 0:
            return -1
        # Opposite signs: compare a**2 with 2*b**2.
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.k)

    def __add__(self, other):
        if isinstance(other, int):
            other = ExactScalar(other)
        elif not isinstance(other, ExactScalar):
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        k = max(self.k, other.k)
        sa, oa = k - self.k, k - other.k
        return ExactScalar((self.a << sa) + (other.a << oa), (self.b << sa) + (other.b << oa), k)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = ExactScalar(other)
        elif not isinstance(other, ExactScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ExactScalar(self.a * other, self.b * other, self.k)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if not self or not other:
            return ZERO
        a, b, c, d = self.a, self.b, other.a, other.b
        return ExactScalar(a * c + 2 * b * d, a * d + b * c, self.k + other.k)

    __rmul__ = __mul__

    def div_sqrt2(self):
        """
        Divide by sqrt(2), i.e., multiply by sqrt(2)/2.
        """
        return ExactScalar(2 * self.b, self.a, self.k + 1)

    def conjugate(self):
        return ExactScalar(self.a, -self.b, self.k)

    def exact_div(self, other):
        """
        Divide by `other` within the ring.

        :raises ZeroDivisionError: If `other` is zero.
        :raises ArithmeticError: If the quotient is not in Z[sqrt(2), 1/2].
        """
        other = ExactScalar.coerce(other)
        if not other:
            raise ZeroDivisionError('Division by exact zero')
        if not self:
            return ZERO
        c, d = other.a, other.b
        norm = c * c - 2 * d * d
        # x / y = x * conj(y) * 2**l / (2**k * norm)
        pa = self.a * c - 2 * self.b * d
        pb = self.b * c - self.a * d
        odd = _odd_part(norm)
        if pa % odd or pb % odd:
            raise ArithmeticError(f'{self} is not divisible by {other} in Z[sqrt(2), 1/2]')
        if norm < 0:
            pa, pb = -pa, -pb
        twos = (abs(norm) // odd).bit_length() - 1
        return ExactScalar(pa // odd, pb // odd, self.k - other.k + twos)

    def __float__(self):
        return math.ldexp(float(self.a) + float(self.b) * SQRT2, -self.k)

    def __repr__(self):
        return f'{self.__class__.__name__}({self.a!r}, {self.b!r}, {self.k!r})'

    def __str__(self):
        if not self.b:
            num = str(self.a)
        elif not self.a:
            num = f'{self.b}√2' if self.b != 1 else '√2'
        else:
            num = f'({self.a}{self.b:+}√2)'
        return num if not self.k else f'{num}/{1 << self.k}'


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
INV_SQRT2 = ExactScalar(0, 1, 1)


def dot(x, y):
    """
    Exact inner product of two equal-length vectors of ExactScalars.
    """
    total = ZERO
    for xi, yi in zip(x, y):
        if xi and yi:
            total = total + xi * yi
    return total


class ExactMatrix:
    """
    Immutable symmetric n x n matrix over Z[sqrt(2), 1/2]. Entries are
    addressed 0-based, like ``m[i, j]``; row/column i belongs to vertex i + 1.
    """

    __slots__ = ('n', 'rows')

    def __init__(self, rows):
        rows = tuple(tuple(ExactScalar.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError('Matrix is not square.')
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f'Matrix is not symmetric at ({i}, {j}).')
        self.n = n
        self.rows = rows

    @classmethod
    def zeros(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_triples(cls, triples):
        return cls([[ExactScalar.from_triple(t) for t in row] for row in triples])

    def to_triples(self):
        return [[list(x.as_triple()) for x in row] for row in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def diagonal(self):
        return [self.rows[i][i] for i in range(self.n)]

    def trace(self):
        total = ZERO
        for x in self.diagonal():
            total = total + x
        return total

    def shift(self, mu):
        """
        :return: M - mu*I.
        """
        mu = ExactScalar.coerce(mu)
        return ExactMatrix([[x - mu if i == j else x for j, x in enumerate(row)] for i, row in enumerate(self.rows)])

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_dim(other)
        return ExactMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_dim(other)
        return ExactMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def multiply(self, other):
        """
        Matrix product as a list of rows. The product of two symmetric
        matrices need not be symmetric, hence no ExactMatrix is built.
        """
        other_rows = other.rows if isinstance(other, ExactMatrix) else other
        cols = list(zip(*other_rows))
        return [[dot(row, col) for col in cols] for row in self.rows]

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_dim(other)
        return ExactMatrix(self.multiply(other))

    def matvec(self, x):
        if len(x) != self.n:
            raise ValueError(f'Vector of length {len(x)} does not fit matrix of dimension {self.n}.')
        return [dot(row, x) for row in self.rows]

    def is_zero(self):
        return not any(x for row in self.rows for x in row)

    def _check_dim(self, other):
        if self.n != other.n:
            raise ValueError(f'Dimension mismatch: {self.n} != {other.n}')

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f'{self.__class__.__name__}({[[str(x) for x in row] for row in self.rows]!r})'


def exact_rank(rows, *, row_order=None):
    """
    Rank by fraction-free (Bareiss) elimination over Z[sqrt(2), 1/2]. The
    pivot is the first nonzero entry of the current column; every division
    by the previous pivot is exact.

    :param rows: ExactMatrix or a list of rows of ExactScalars.
    :param row_order: Optional permutation of the row indices applied before
        elimination.
    :return: The rank.
    """
    if isinstance(rows, ExactMatrix):
        rows = rows.rows
    order = row_order if row_order is not None else range(len(rows))
    work = [list(rows[i]) for i in order]
    ncols = len(work[0]) if work else 0

    rank = 0
    prev = ONE
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank]
        p = pivot[col]
        for r in range(rank + 1, len(work)):
            row = work[r]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - f * pivot[j]).exact_div(prev)
            row[col] = ZERO
        prev = p
        rank += 1
        if rank == len(work):
            break
    return rank
