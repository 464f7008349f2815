"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

From dimension to weight: constant weight codes from the cosets of the
codewords of a constant dimension code.
"""

import numpy as np

from .errors import code_format_error
from .field import FIELD_CAP
from .subspace import elements, pivot_profile, rref_of


class wc_word:
    """
    A binary word held as its support.

    Attributes
    ----------
    N : int
        The length.
    support : tuple of int
        Strictly increasing positions of the ones, in [0, N - 1].
    """
    __slots__ = ('N', 'support')

    def __init__(self, N, support):
        """ Constructor.
        """
        support = tuple(sorted(int(p) for p in support))
        for a, b in zip(support, support[1:]):
            if a == b:
                raise ValueError('Repeated position {0} in support'.format(a))

        if support and (support[0] < 0 or support[-1] >= N):
            raise ValueError('Support {0} is out of range [0, {1}]'.format(support, N - 1))

        self.N = N
        self.support = support

    @property
    def weight(self):
        return len(self.support)

    def bitmap(self):
        """ The word as a numpy array of 0/1 of length N.
        """
        b = np.zeros(self.N, dtype=np.uint8)
        b[list(self.support)] = 1
        return b

    def __eq__(self, other):
        return (isinstance(other, wc_word) and self.N == other.N and
                self.support == other.support)

    def __hash__(self):
        return hash((self.N, self.support))

    def __lt__(self, other):
        return self.support < other.support

    def __repr__(self):
        return 'wc_word({0}, {1})'.format(self.N, list(self.support))


class wc_code:
    """
    A binary code of length N, usually of constant weight.

    Attributes
    ----------
    N : int
        The length.
    w : int or None
        The weight of every word, None if the weights are not constant.
    declared_d : int
        The declared minimum Hamming distance.
    words : list of wc_word
        The codewords.
    origin : list of tuple (optional)
        For codes built from a constant dimension code, the
        (codeword index, coset index) each word comes from.
    """
    def __init__(self, N, w, declared_d, words, origin=None):
        """ Constructor.
        """
        words = list(words)
        for c in words:
            if c.N != N:
                raise ValueError('{0} does not have length {1}'.format(c, N))

            if w is not None and c.weight != w:
                raise ValueError('{0} does not have weight {1}'.format(c, w))

        if origin is not None and len(origin) != len(words):
            raise ValueError('Origin table does not match the number of words')

        self.N = N
        self.w = w
        self.declared_d = declared_d
        self.words = words
        self.origin = origin

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    def params(self):
        """ The (N, d, w, size) parameters.
        """
        return (self.N, self.declared_d, self.w, len(self))

    def bitmaps(self):
        """ All words as the rows of a uint8 matrix.
        """
        b = np.zeros((len(self), self.N), dtype=np.uint8)
        for i, c in enumerate(self.words):
            b[i, list(c.support)] = 1

        return b

    def __repr__(self):
        w = '-' if self.w is None else self.w
        return '({0}, {1}, {2}) code of size {3}'.format(self.N, self.declared_d, w, len(self))


def word_of(ctx, elems):
    """ The characteristic vector ch(A) of a set of field elements.
    """
    return wc_word(ctx.size, [ctx.char_index(x) for x in elems])


def word_elements(ctx, word):
    """ The field elements of a characteristic vector.
    """
    if word.N != ctx.size:
        raise ValueError('Word of length {0} does not belong to GF({1}^{2})'.format(word.N,
                                                                                 ctx.q, ctx.n))

    return [ctx.element_at(p) for p in word.support]


def digits(j, q, length):
    """ B(j): the base-q expansion of j, most significant digit first.
    """
    out = []
    for _ in range(length):
        out.append(j % q)
        j //= q

    return tuple(reversed(out))


def transversal_element(X, j):
    """ The coset representative element_of(B(j) * CP(X)).
    """
    ctx = X.ctx
    prof = pivot_profile(X)
    v = [0] * ctx.n
    for c, a in zip(prof.I, digits(j, ctx.q, len(prof.I))):
        v[c] = a

    return ctx.element_of(v)


def coset_transversal(X):
    """
    One representative of every coset of X.

    Parameters
    ----------
    X : wc_subspace
        A k-dimensional subspace.

    Returns
    -------
    reps : list of wc_element
        q^(n-k) representatives; representative j is B(j) * CP(X), the
        first one is zero.
    """
    q, n = X.ctx.q, X.ctx.n
    return [transversal_element(X, j) for j in range(q**(n - X.k))]


def coset(X, beta):
    """ The elements of beta + X.
    """
    ctx = X.ctx
    return [ctx.add(beta, x) for x in elements(X)]


def predicted_params(cdc):
    """
    Parameters of the code built from an [n, 2t, k]_q code C:
    (q^n, 2q^k - 2q^(k-t), q^k) with q^(n-k)|C| words.
    """
    q, n, k = cdc.q, cdc.n, cdc.k
    t = cdc.declared_d // 2
    return (q**n, 2 * q**k - 2 * q**(k - t), q**k, q**(n - k) * len(cdc))


def shortened_params(cdc, b):
    """
    Parameters of the code shortened at the zero coordinate: for b = 1,
    (q^n - 1, d, q^k - 1) of size |C|, for b = 0, (q^n - 1, d, q^k) of
    size (q^(n-k) - 1)|C|.
    """
    N, d, w, size = predicted_params(cdc)
    if b == 1:
        return (N - 1, d, w - 1, len(cdc))

    if b == 0:
        return (N - 1, d, w, size - len(cdc))

    raise ValueError('Shortening bit must be 0 or 1, got {0}'.format(b))


def fdtw_construct(cdc, cap=FIELD_CAP):
    """
    Constant weight code from a constant dimension code: the characteristic
    vectors of all the cosets of all the codewords.

    Parameters
    ----------
    cdc : wc_cdc
        The source code.
    cap : int
        Maximal allowed code length q^n.

    Returns
    -------
    object : wc_code
        The code, words ordered by (source index, coset index).
    """
    ctx = cdc.ctx
    if ctx.size > cap:
        raise ValueError('Code length {0} exceeds the cap {1}'.format(ctx.size, cap))

    N, d, w, size = predicted_params(cdc)
    words = []
    origin = []
    for i, X in enumerate(cdc):
        for j, beta in enumerate(coset_transversal(X)):
            words.append(word_of(ctx, coset(X, beta)))
            origin.append((i, j))

    if len(set(words)) != len(words):
        raise RuntimeError('Duplicate words from {0}, the source code is not valid'.format(cdc))

    return wc_code(N, w, d, words, origin=origin)


def source_subspace(cdc, word):
    """
    Translate a word back by the negative of its first element and locate
    the resulting subspace in the source code.

    Returns
    -------
    i : int
        The index of the subspace in cdc, or -1 if the translated set is
        not a codeword.
    """
    ctx = cdc.ctx
    Y = word_elements(ctx, word)
    if not Y:
        return -1

    s = Y[0]
    shifted = {ctx.sub(y, s) for y in Y}
    X = rref_of(ctx, [ctx.vector_of(z) for z in shifted])
    if set(elements(X)) != shifted or X not in cdc:
        return -1

    return cdc._index[X.key()]


def shorten(code, i, b):
    """
    The shortened code: keep the words whose i-th bit is b and delete
    coordinate i.

    Parameters
    ----------
    code : wc_code
        The code.
    i : int
        The coordinate, 0 <= i < N.
    b : int
        The bit, 0 or 1.

    Returns
    -------
    object : wc_code
        A code of length N - 1 with the same declared distance.
    """
    if i < 0 or i >= code.N:
        raise ValueError('Coordinate {0} is out of range [0, {1}]'.format(i, code.N - 1))

    if b not in (0, 1):
        raise ValueError('Shortening bit must be 0 or 1, got {0}'.format(b))

    words = []
    origin = [] if code.origin is not None else None
    for idx, c in enumerate(code):
        if (i in c.support) != bool(b):
            continue

        words.append(wc_word(code.N - 1, [p if p < i else p - 1 for p in c.support if p != i]))
        if origin is not None:
            origin.append(code.origin[idx])

    w = code.w
    if w is not None and b == 1:
        w -= 1

    return wc_code(code.N - 1, w, code.declared_d, words, origin=origin)


def pad_hadamard(code):
    """
    Join the all-zero and the all-one words to the code built from all the
    (n-1)-dimensional subspaces of F_2^n, giving the Hadamard code of
    length 2^n with 2^(n+1) words and minimum distance 2^(n-1).
    """
    N = code.N
    n = N.bit_length() - 1
    if N != 2**n or n < 1 or code.w != N // 2 or len(code) != 2**(n + 1) - 2:
        raise ValueError('{0} is not built from all the hyperplanes of F_2^{1}'.format(code, n))

    return wc_code(N, None, N // 2,
                   code.words + [wc_word(N, ()), wc_word(N, range(N))],
                   origin=None)


def save_code(code, path, comments=None):
    """
    Write a binary code file: optional '#' comment lines, the header line
    'N w d count', then one word per line as comma-separated support
    positions ('-' for the empty word, '*' as w for non-constant weight).
    """
    with open(path, 'wt') as f:
        for line in comments or []:
            f.write('# {0}\n'.format(line))

        w = '*' if code.w is None else code.w
        f.write('{0} {1} {2} {3}\n'.format(code.N, w, code.declared_d, len(code)))
        for c in code:
            f.write((','.join(str(p) for p in c.support) or '-') + '\n')


def load_code(path):
    """ Read a binary code file written by save_code().
    """
    with open(path, 'rt') as f:
        lines = [l.strip() for l in f]

    lines = [l for l in lines if l and not l.startswith('#')]
    if not lines:
        raise code_format_error('{0}: empty code file'.format(path))

    try:
        N, w, d, count = lines[0].split()
        N, d, count = int(N), int(d), int(count)
        w = None if w == '*' else int(w)
        if len(lines) - 1 != count:
            raise ValueError('expected {0} words, found {1}'.format(count, len(lines) - 1))

        words = []
        for l in lines[1:]:
            support = [] if l == '-' else [int(p) for p in l.split(',')]
            words.append(wc_word(N, support))

        return wc_code(N, w, d, words)
    except ValueError as err:
        raise code_format_error('{0}: {1}'.format(path, err)) from err
