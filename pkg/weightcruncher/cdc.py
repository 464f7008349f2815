"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Constant dimension codes: spreads, full Grassmannians, the lifted
[2m-1, 2m-2, m]_q code, greedy search and code files.
"""

import warnings

import numpy as np
from tqdm import tqdm

from .errors import code_format_error, verification_error
from .field import build_field
from .subspace import (rref_of, elements, enumerate_grassmannian, cyclic_shift,
                       parse_subspace, rank, subspace_distance, GRASSMANNIAN_CAP)

PAIR_CAP = 10**8

TAGS = ('spread', 'grassmannian', 'lemma1', 'search', 'file')


def _dim_from_size(size, q):
    d = 0
    while size > 1:
        size //= q
        d += 1

    return d


def pairwise_min_distance(words, progress=False):
    """
    Minimal pairwise subspace distance of a list of subspaces.

    The intersection of two subspaces is read off their element sets,
    |U ∩ V| = q^dim(U ∩ V).

    Returns
    -------
    d : int or None
        The minimal distance, None for less than two words.
    witness : tuple of int
        Indices of a pair attaining it.
    """
    if len(words) < 2:
        return None, None

    q = words[0].ctx.q
    sets = [frozenset(elements(X)) for X in words]
    best, witness = None, None
    for i in tqdm(range(len(words)), disable=not progress):
        for j in range(i + 1, len(words)):
            inter = _dim_from_size(len(sets[i] & sets[j]), q)
            d = words[i].k + words[j].k - 2 * inter
            if best is None or d < best:
                best, witness = d, (i, j)

    return best, witness


class wc_cdc:
    """
    A constant dimension code [n, d, k]_q.

    Attributes
    ----------
    ctx : wc_field
        The field GF(q^n).
    k : int
        The dimension of every codeword.
    declared_d : int
        The declared (even) minimum subspace distance.
    words : list of wc_subspace
        The codewords in canonical order (sorted by their RREF rows).
    tag : string
        Provenance: 'spread', 'grassmannian', 'lemma1', 'search' or 'file'.
    verified : bool
        Whether the minimum distance has been checked exhaustively.
    lift_map : dict or None
        For a lifted code, the word index of every c in GF(q^m) and of the
        pendant word (key `None`).
    """
    def __init__(self, ctx, k, declared_d, words, tag, verify=True, cap=PAIR_CAP,
                 progress=False):
        """
        Constructor.

        Parameters
        ----------
        ctx : wc_field
            The field GF(q^n).
        k : int
            The dimension of every codeword.
        declared_d : int
            The declared minimum subspace distance.
        words : sequence of wc_subspace
            The codewords, in any order.
        tag : string
            Provenance tag.
        verify : bool
            Check the minimum distance exhaustively (below the cap).
        cap : int
            Maximal number of pairs to check.
        progress : bool
            Show a progress bar while verifying.
        """
        if tag not in TAGS:
            raise ValueError('Unknown code provenance \'{0}\''.format(tag))

        if declared_d % 2:
            raise ValueError('Subspace distance must be even, got {0}'.format(declared_d))

        words = sorted(words, key=lambda X: X.key())
        for X in words:
            if X.ctx != ctx or X.k != k:
                raise ValueError('{0} is not a {1}-dimensional subspace of F_{2}^{3}'.format(
                                 X, k, ctx.q, ctx.n))

        for a, b in zip(words, words[1:]):
            if a == b:
                raise ValueError('Duplicate codeword {0}'.format(a))

        self.ctx = ctx
        self.k = k
        self.declared_d = declared_d
        self.words = words
        self.tag = tag
        self.verified = False
        self._index = {X.key(): i for i, X in enumerate(words)}
        self.lift_map = None

        if verify:
            self.verify(cap=cap, progress=progress)

    @property
    def n(self):
        return self.ctx.n

    @property
    def q(self):
        return self.ctx.q

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    def __contains__(self, X):
        return X.key() in self._index

    def __repr__(self):
        return '[{0}, {1}, {2}]_{3} code ({4}, {5} words)'.format(self.n, self.declared_d,
                                                                self.k, self.q, self.tag,
                                                                len(self))

    def min_distance(self, progress=False):
        """ Exhaustive minimal pairwise subspace distance and a witness pair.
        """
        return pairwise_min_distance(self.words, progress=progress)

    def verify(self, cap=PAIR_CAP, progress=False):
        """
        Check that the minimal pairwise distance is at least declared_d.
        Above the cap the code is trusted with a warning.
        """
        pairs = len(self) * (len(self) - 1) // 2
        if pairs > cap:
            warnings.warn('{0}: {1} pairs exceed the verification cap {2}, '
                          'minimum distance not verified'.format(self, pairs, cap))
            self.verified = False
            return False

        d, witness = self.min_distance(progress=progress)
        if d is not None and d < self.declared_d:
            msg = '{0}: words {1} and {2} are at distance {3}'.format(self, witness[0],
                                                                     witness[1], d)
            raise verification_error(msg, claim='d>={0}'.format(self.declared_d),
                                     witness=witness)

        self.verified = True
        return True


def spread(ctx, k, progress=False):
    """
    The spread {H_i} of GF(q^n) by k-dimensional subspaces, where
    H_i = {alpha^i, alpha^(r+i), ..., alpha^((q^k-2)r+i)} and
    r = (q^n - 1)/(q^k - 1).

    Parameters
    ----------
    ctx : wc_field
        The field GF(q^n).
    k : int
        The dimension; must divide n.

    Returns
    -------
    object : wc_cdc
        An [n, 2k, k]_q code of size r.
    """
    q, n = ctx.q, ctx.n
    if k < 1 or n % k:
        raise ValueError('A spread of F_{0}^{1} by {2}-dimensional subspaces requires k | n'.format(
                         q, n, k))

    r = (q**n - 1) // (q**k - 1)
    words = []
    for i in range(r):
        H = [ctx.vector_of(ctx.power(j * r + i)) for j in range(q**k - 1)]
        words.append(rref_of(ctx, H))

    return wc_cdc(ctx, k, 2 * k, words, 'spread', progress=progress)


def full_grassmannian(ctx, k, cap=GRASSMANNIAN_CAP, progress=False):
    """ All k-dimensional subspaces of F_q^n, an [n, 2, k]_q code.
    """
    return wc_cdc(ctx, k, 2, enumerate_grassmannian(ctx, k, cap=cap), 'grassmannian',
                  progress=progress)


def lemma1_matrix(inner, c):
    """
    The m x (m-1) matrix M_c over F_q whose column j is the coordinate
    vector of c * alpha^j in GF(q^m).
    """
    m = inner.n
    cols = [inner.vector_of(inner.mul(c, inner.power(j))) for j in range(m - 1)]
    return np.array(cols, dtype=np.int64).T.reshape(m, m - 1)


def lemma1_code(m, q, poly=None, progress=False):
    """
    An [2m-1, 2m-2, m]_q code of size q^m + 1.

    The words are the row spaces of [I_m | M_c] for every c in GF(q^m)
    (a lifted rank-metric code of rank distance m-1), and the subspace
    spanned by the last m unit vectors.

    Parameters
    ----------
    m : int
        m >= 2.
    q : int
        Prime modulus.
    poly : sequence of int (optional)
        Primitive polynomial of degree 2m-1 for the outer field.
    progress : bool
        Show a progress bar while verifying.

    Returns
    -------
    object : wc_cdc
        The code, over GF(q^(2m-1)). Its `lift_map` sends every c in GF(q^m)
        to the index of the word [I_m | M_c], and `None` to the pendant word.
    """
    if m < 2:
        raise ValueError('Lifted code requires m >= 2, got {0}'.format(m))

    inner = build_field(q, m)
    ctx = build_field(q, 2 * m - 1, poly=poly)
    ident = np.eye(m, dtype=np.int64)

    lifted = {}
    for c in inner.elements():
        lifted[c] = rref_of(ctx, np.hstack([ident, lemma1_matrix(inner, c)]))

    pendant = np.zeros((m, 2 * m - 1), dtype=np.int64)
    pendant[:, m - 1:] = np.eye(m, dtype=np.int64)
    pendant = rref_of(ctx, pendant)

    code = wc_cdc(ctx, m, 2 * m - 2, list(lifted.values()) + [pendant], 'lemma1',
                  progress=progress)
    code.lift_map = {c: code._index[X.key()] for c, X in lifted.items()}
    code.lift_map[None] = code._index[pendant.key()]
    return code


def lemma1_rank_distances(m, q):
    """
    Ranks of M_c - M_c' over all pairs c != c' of GF(q^m); all equal m-1
    for the lifted code to have subspace distance 2m-2.
    """
    inner = build_field(q, m)
    mats = [lemma1_matrix(inner, c) for c in inner.elements()]
    return {rank((a - b) % q, q) for i, a in enumerate(mats) for b in mats[i + 1:]}


def greedy_search(ctx, k, d, order_seed=None, cap=GRASSMANNIAN_CAP, progress=False):
    """
    Greedy [n, d, k]_q code: scan G_q(n, k) and keep every subspace at
    distance >= d from all the kept ones.

    Parameters
    ----------
    ctx : wc_field
        The field GF(q^n).
    k : int
        The dimension.
    d : int
        The required minimum distance.
    order_seed : int (optional)
        If provided, the canonical scan order is permuted with a generator
        seeded by it. Searches are reproducible given the seed.
    cap : int
        Maximal allowed Gaussian coefficient.
    progress : bool
        Show a progress bar.

    Returns
    -------
    object : wc_cdc
        The verified code.
    """
    candidates = enumerate_grassmannian(ctx, k, cap=cap)
    if order_seed is not None:
        perm = np.random.default_rng(order_seed).permutation(len(candidates))
        candidates = [candidates[i] for i in perm]

    kept = []
    for X in tqdm(candidates, disable=not progress):
        if all(subspace_distance(X, Y) >= d for Y in kept):
            kept.append(X)

    return wc_cdc(ctx, k, d, kept, 'search', progress=progress)


def is_cyclic(code):
    """ Check if a constant dimension code is closed under multiplication by alpha.
    """
    return all(cyclic_shift(X) in code for X in code)


def ea_encode(code, i):
    """ The i-th codeword in canonical order.
    """
    if i < 0 or i >= len(code):
        raise ValueError('Index {0} is out of range [0, {1}]'.format(i, len(code) - 1))

    return code.words[i]


def ea_decode(code, X):
    """ The canonical index of a codeword.
    """
    i = code._index.get(X.key())
    if i is None or X.ctx != code.ctx:
        raise ValueError('{0} is not a codeword of {1}'.format(X, code))

    return i


def _poly_str(poly):
    return ','.join(str(c) for c in poly)


def save_code(code, path):
    """
    Write a constant dimension code file: the header line
    'q n poly k d tag count', then every subspace as k rows of n digits,
    separated by blank lines.
    """
    with open(path, 'wt') as f:
        f.write('{0} {1} {2} {3} {4} {5} {6}\n'.format(code.q, code.n, _poly_str(code.ctx.poly),
                                                      code.k, code.declared_d, code.tag,
                                                      len(code)))
        for X in code:
            f.write('\n')
            for row in X.serialize():
                f.write(row + '\n')


def load_code(path, verify=True, cap=PAIR_CAP, progress=False):
    """
    Read a constant dimension code file written by save_code().

    The minimum distance is re-verified when the number of pairs is below
    the cap, else the code is flagged as not verified.
    """
    with open(path, 'rt') as f:
        lines = [l.strip() for l in f]

    lines = [l for l in lines if l and not l.startswith('#')]
    if not lines:
        raise code_format_error('{0}: empty code file'.format(path))

    header = lines[0].split()
    if len(header) != 7:
        raise code_format_error('{0}: malformed header \'{1}\''.format(path, lines[0]))

    try:
        q, n = int(header[0]), int(header[1])
        poly = [int(c) for c in header[2].split(',')]
        k, d, count = int(header[3]), int(header[4]), int(header[6])
    except ValueError as err:
        raise code_format_error('{0}: malformed header \'{1}\''.format(path, lines[0])) from err

    tag = header[5]
    rows = lines[1:]
    if len(rows) != k * count:
        raise code_format_error('{0}: expected {1} subspaces of {2} rows, found {3} rows'.format(
                                path, count, k, len(rows)))

    try:
        ctx = build_field(q, n, poly=poly)
        words = []
        for i in range(count):
            X = parse_subspace(ctx, rows[i * k:(i + 1) * k])
            if X.k != k:
                raise ValueError('Subspace {0} has dimension {1}, not {2}'.format(i, X.k, k))

            words.append(X)

        code = wc_cdc(ctx, k, d, words, tag, verify=False)
    except ValueError as err:
        raise code_format_error('{0}: {1}'.format(path, err)) from err

    if verify:
        code.verify(cap=cap, progress=progress)

    return code
