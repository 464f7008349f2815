"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Encoding, decoding and error correction for codes built from constant
dimension codes.
"""

from collections import Counter

from .cdc import ea_encode, ea_decode
from .errors import decoding_failure
from .field import ZERO
from .fdtw import word_of, word_elements, transversal_element, coset
from .subspace import rref_of, elements, pivot_profile


class wc_info_word:
    """
    An information word (i, j): i selects the subspace of the constant
    dimension code, j selects its coset.
    """
    __slots__ = ('i', 'j')

    def __init__(self, i, j):
        """ Constructor.
        """
        self.i = i
        self.j = j

    def __eq__(self, other):
        return isinstance(other, wc_info_word) and (self.i, self.j) == (other.i, other.j)

    def __hash__(self):
        return hash((self.i, self.j))

    def __repr__(self):
        return '({0}, {1})'.format(self.i, self.j)


def info_range(cdc):
    """ The number of information words, |C| * q^(n-k).
    """
    return len(cdc) * cdc.q**(cdc.n - cdc.k)


def encode(cdc, info):
    """
    Encode an information word into the characteristic vector
    ch(B(j) * CP(X) + X), where X is the i-th codeword of cdc.

    Parameters
    ----------
    cdc : wc_cdc
        The constant dimension code.
    info : wc_info_word
        The information word.

    Returns
    -------
    word : wc_word
        A codeword of weight q^k.
    """
    cosets = cdc.q**(cdc.n - cdc.k)
    if info.j < 0 or info.j >= cosets:
        raise ValueError('Coset index {0} is out of range [0, {1}]'.format(info.j, cosets - 1))

    X = ea_encode(cdc, info.i)
    return word_of(cdc.ctx, coset(X, transversal_element(X, info.j)))


def encode_all(cdc):
    """ All (information word, codeword) pairs in (i, j) order.
    """
    cosets = cdc.q**(cdc.n - cdc.k)
    return [(wc_info_word(i, j), encode(cdc, wc_info_word(i, j)))
            for i in range(len(cdc)) for j in range(cosets)]


def decode(cdc, word):
    """
    Recover the information word of a codeword.

    Parameters
    ----------
    cdc : wc_cdc
        The constant dimension code.
    word : wc_word
        A codeword of the code built from cdc.

    Returns
    -------
    info : wc_info_word
        The information word.
    """
    ctx = cdc.ctx
    try:
        Y = word_elements(ctx, word)
    except ValueError as err:
        raise decoding_failure('bad-weight', str(err)) from err

    if len(Y) != cdc.q**cdc.k:
        raise decoding_failure('bad-weight', 'weight {0}, expected {1}'.format(len(Y),
                                                                              cdc.q**cdc.k))

    s = Y[0]
    shifted = {ctx.sub(y, s) for y in Y}
    X = rref_of(ctx, [ctx.vector_of(z) for z in shifted])
    if X.k != cdc.k or set(elements(X)) != shifted:
        raise decoding_failure('not-subspace', 'the word is not a coset of a subspace')

    try:
        i = ea_decode(cdc, X)
    except ValueError as err:
        raise decoding_failure('not-in-code', str(err)) from err

    # Reduce s by RE(X), what is left is B(j) * CP(X).
    q = ctx.q
    res = list(ctx.vector_of(s))
    for row, p in zip(X.rref, X.pivots):
        a = res[p]
        if a:
            res = [(x - a * y) % q for x, y in zip(res, row)]

    j = 0
    for c in pivot_profile(X).I:
        j = j * q + res[c]

    return wc_info_word(i, j)


def diff_multiset(ctx, Y):
    """
    The multiset T(Y) of differences of the 2-subsets of Y.

    For q even there is one difference per unordered pair, for q odd both
    y_i - y_j and y_j - y_i are counted.

    Parameters
    ----------
    ctx : wc_field
        The field.
    Y : sequence of wc_element
        At least two distinct elements.

    Returns
    -------
    counts : collections.Counter
        Element -> number of appearances.
    """
    Y = list(Y)
    if len(Y) < 2:
        raise ValueError('Differences need at least two elements, got {0}'.format(len(Y)))

    counts = Counter()
    for a in range(len(Y)):
        for b in range(a + 1, len(Y)):
            counts[ctx.sub(Y[a], Y[b])] += 1
            if ctx.q % 2:
                counts[ctx.sub(Y[b], Y[a])] += 1

    return counts


def correct(cdc, received):
    """
    Correct a received word of weight q^k.

    The q^k - 1 most frequent nonzero differences of the received elements,
    together with zero, form a subspace Z; a received element beta which
    forms at least 3q^k/4 elements of Z selects the coset beta + Z.
    Recovery is guaranteed if less than q^k/2 errors occurred.

    Parameters
    ----------
    cdc : wc_cdc
        The constant dimension code.
    received : wc_word
        The received word.

    Returns
    -------
    word : wc_word
        The corrected codeword.
    """
    ctx = cdc.ctx
    size = cdc.q**cdc.k
    if received.N != ctx.size or received.weight != size:
        raise decoding_failure('bad-weight', 'expected a word of length {0} and weight {1}'.format(
                               ctx.size, size))

    Y = word_elements(ctx, received)
    counts = diff_multiset(ctx, Y)
    ranked = sorted(counts.items(), key=lambda e: (-e[1], ctx.char_index(e[0])))
    if len(ranked) < size - 1:
        raise decoding_failure('not-subspace', 'only {0} distinct differences'.format(len(ranked)))

    if len(ranked) > size - 1 and ranked[size - 2][1] == ranked[size - 1][1]:
        raise decoding_failure('ambiguous-tie', 'frequency {0} straddles the cut'.format(
                               ranked[size - 2][1]))

    Z = {e for e, _ in ranked[:size - 1]}
    Z.add(ZERO)
    X = rref_of(ctx, [ctx.vector_of(z) for z in Z])
    if X.k != cdc.k or set(elements(X)) != Z:
        raise decoding_failure('not-subspace', 'the most frequent differences do not form a subspace')

    if X not in cdc:
        raise decoding_failure('not-in-code', '{0} is not a codeword'.format(X))

    threshold = -(-3 * size // 4)
    members = set(Y)
    for beta in sorted(Y, key=ctx.char_index):
        used = sum(1 for z in Z if ctx.add(beta, z) in members)
        if used >= threshold:
            return word_of(ctx, coset(X, beta))

    raise decoding_failure('no-beta', 'no element reaches {0} uses'.format(threshold))


def correct_batch(cdc, words):
    """
    Correct a list of received words.

    Returns
    -------
    results : list
        Per word, the corrected wc_word or the decoding_failure raised.
    """
    results = []
    for w in words:
        try:
            results.append(correct(cdc, w))
        except decoding_failure as err:
            results.append(err)

    return results
