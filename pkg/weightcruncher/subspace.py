"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Subspaces of F_q^n in canonical reduced row echelon form.
"""

import itertools

import numpy as np

from .errors import cap_exceeded
from .bounds import gaussian

GRASSMANNIAN_CAP = 10**6


def row_reduce(mat, q):
    """
    Reduced row echelon form of a matrix over F_q.

    Parameters
    ----------
    mat : array-like of int
        The matrix.
    q : int
        Prime modulus.

    Returns
    -------
    rref : numpy.ndarray
        The nonzero rows of the reduced matrix.
    pivots : list of int
        The pivot column of each row.
    """
    m = np.array(mat, dtype=np.int64) % q
    if m.ndim != 2:
        raise ValueError('Expected a matrix, got an array of shape {0}'.format(m.shape))

    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break

        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue

        p = r + nz[0]
        if p != r:
            m[[r, p]] = m[[p, r]]

        m[r] = m[r] * pow(int(m[r, c]), -1, q) % q
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % q

        pivots.append(c)
        r += 1

    return m[:r], pivots


def rank(mat, q):
    """ Rank of a matrix over F_q.
    """
    return len(row_reduce(mat, q)[1])


class wc_pivot_profile:
    """
    Pivot machinery of a subspace.

    Attributes
    ----------
    v : tuple of int
        Binary pivot indicator of length n and weight k.
    I : tuple of int
        The n - k non-pivot positions, sorted.
    CP : numpy.ndarray
        (n - k) x n selector matrix with the single one of row r at I[r].
    """
    def __init__(self, n, pivots):
        """ Constructor.
        """
        self.v = tuple(1 if c in pivots else 0 for c in range(n))
        self.I = tuple(c for c in range(n) if c not in pivots)
        self.CP = np.zeros((len(self.I), n), dtype=np.int64)
        for r, c in enumerate(self.I):
            self.CP[r, c] = 1


class wc_subspace:
    """
    A k-dimensional subspace of F_q^n held as its unique RREF generator
    matrix. Equality is by exact matrix equality.

    Attributes
    ----------
    ctx : wc_field
        The field whose coordinate space contains the subspace.
    k : int
        The dimension.
    rref : tuple of tuple of int
        The k x n generator matrix in reduced row echelon form.
    pivots : tuple of int
        Pivot column of each row.
    """
    __slots__ = ('ctx', 'k', 'rref', 'pivots', '_elements')

    def __init__(self, ctx, rref, pivots):
        """ Constructor. Use rref_of() to build a subspace from any vectors.
        """
        self.ctx = ctx
        self.rref = tuple(tuple(int(a) for a in row) for row in rref)
        self.k = len(self.rref)
        self.pivots = tuple(int(p) for p in pivots)
        self._elements = None

    @property
    def n(self):
        return self.ctx.n

    def matrix(self):
        """ The generator matrix as a numpy array.
        """
        return np.array(self.rref, dtype=np.int64).reshape(self.k, self.ctx.n)

    def key(self):
        """ Sort key of the canonical code order (the serialized rows).
        """
        return self.rref

    def __eq__(self, other):
        return (isinstance(other, wc_subspace) and self.ctx == other.ctx and
                self.rref == other.rref)

    def __hash__(self):
        return hash(self.rref)

    def __repr__(self):
        return 'wc_subspace(k={0}, rref={1})'.format(self.k, [list(r) for r in self.rref])

    def serialize(self):
        """ The k rows as strings of digits.
        """
        return [''.join(str(a) for a in row) for row in self.rref]


def rref_of(ctx, vectors):
    """
    The subspace spanned by a collection of vectors.

    Parameters
    ----------
    ctx : wc_field
        The field context, defining q and n.
    vectors : sequence of n-long vectors over F_q
        Spanning vectors. The zero span gives the k = 0 subspace.

    Returns
    -------
    object : wc_subspace
        The subspace in canonical form.
    """
    vectors = list(vectors)
    if not vectors:
        return wc_subspace(ctx, (), ())

    if any(len(v) != ctx.n for v in vectors):
        raise ValueError('All vectors must have length {0}'.format(ctx.n))

    rref, pivots = row_reduce(vectors, ctx.q)
    return wc_subspace(ctx, rref, pivots)


def parse_subspace(ctx, rows):
    """ Build a subspace from its serialized rows (strings of digits).
    """
    vectors = []
    for row in rows:
        if len(row) != ctx.n or not row.isdigit():
            raise ValueError('Malformed subspace row \'{0}\''.format(row))

        v = tuple(int(a) for a in row)
        if any(a >= ctx.q for a in v):
            raise ValueError('Row \'{0}\' has symbols outside F_{1}'.format(row, ctx.q))

        vectors.append(v)

    return rref_of(ctx, vectors)


def _combinations(q, k):
    """ All q^k coefficient vectors, digit r of the counter on row r.
    """
    idx = np.arange(q**k, dtype=np.int64)
    return np.stack([(idx // q**r) % q for r in range(k)], axis=1) if k else \
        np.zeros((1, 0), dtype=np.int64)


def element_vectors(X):
    """ All q^k vectors of a subspace, as a numpy array.
    """
    q = X.ctx.q
    return _combinations(q, X.k) @ X.matrix() % q


def elements(X):
    """
    The q^k field elements of a subspace.

    Parameters
    ----------
    X : wc_subspace
        The subspace.

    Returns
    -------
    elements : list of wc_element
        All F_q-linear combinations of the rows, in base-q counter order;
        the first one is zero.
    """
    if X._elements is None:
        ctx = X.ctx
        X._elements = tuple(ctx.element_of(v) for v in element_vectors(X))

    return list(X._elements)


def _check_ctx(U, V):
    if U.ctx != V.ctx:
        raise ValueError('Subspaces belong to different fields: {0} and {1}'.format(U.ctx, V.ctx))


def intersection_dim(U, V):
    """ dim(U ∩ V) = dim U + dim V - rank of both bases stacked.
    """
    _check_ctx(U, V)
    if U.k == 0 or V.k == 0:
        return 0

    stacked = np.vstack([U.matrix(), V.matrix()])
    return U.k + V.k - rank(stacked, U.ctx.q)


def subspace_distance(U, V):
    """ The subspace distance dim U + dim V - 2 dim(U ∩ V).
    """
    return U.k + V.k - 2 * intersection_dim(U, V)


def pivot_profile(X):
    """ The pivot indicator v(X), non-pivots I(X) and selector CP(X).
    """
    return wc_pivot_profile(X.ctx.n, X.pivots)


def _colex_pivots(n, k):
    return sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])


def enumerate_grassmannian(ctx, k, cap=GRASSMANNIAN_CAP):
    """
    All k-dimensional subspaces of F_q^n.

    Parameters
    ----------
    ctx : wc_field
        The field context.
    k : int
        The dimension, 0 <= k <= n.
    cap : int
        Maximal allowed Gaussian coefficient.

    Returns
    -------
    subspaces : list of wc_subspace
        Every subspace once: pivot indicators in colexicographic order,
        then free entries counted in base q.
    """
    q, n = ctx.q, ctx.n
    if k < 0 or k > n:
        raise ValueError('Dimension {0} is out of range [0, {1}]'.format(k, n))

    total = gaussian(n, k, q)
    if total > cap:
        raise cap_exceeded('G_{0}({1},{2}) has {3} subspaces, cap is {4}'.format(q, n, k,
                                                                               total, cap))

    result = []
    for pivots in _colex_pivots(n, k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n)
                if c not in pivots]
        for digits in itertools.product(range(q), repeat=len(free)):
            m = np.zeros((k, n), dtype=np.int64)
            for r, p in enumerate(pivots):
                m[r, p] = 1

            # Counter order: the first free entry is the least significant.
            for (r, c), a in zip(free, reversed(digits)):
                m[r, c] = a

            result.append(wc_subspace(ctx, m, pivots))

    return result


def cyclic_shift(X):
    """ The subspace alpha * X.
    """
    ctx = X.ctx
    shifted = [ctx.vector_of(ctx.mul_alpha(x)) for x in elements(X) if not x.is_zero()]
    return rref_of(ctx, shifted)
