"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Exhaustive verification of binary codes: minimum distance, Steiner
property, cyclicity and optical orthogonal codes.
"""

import itertools
import math
import warnings
from collections import Counter

import numpy as np

from .cdc import PAIR_CAP
from .errors import cap_exceeded, verification_error
from .fdtw import wc_word

try:
    from . import cwkernels as ck
except ImportError:
    ck = None

_BLOCK = 1024


class wc_report:
    """
    Outcome of a verification.

    Attributes
    ----------
    claim : string
        What was checked, e.g. 'd>=6'.
    method : string
        How it was checked.
    value : int
        The measured quantity.
    ok : bool
        Whether the claim holds.
    witness : tuple
        A pair (or block) attaining the value, or refuting the claim.
    """
    def __init__(self, name, claim, value, ok, witness=None, method='exhaustive'):
        """ Constructor.
        """
        self.name = name
        self.claim = claim
        self.method = method
        self.value = value
        self.ok = ok
        self.witness = witness

    def __str__(self):
        s = '{0}={1} {2} (claim {3}: {4})'.format(self.name, self.value, self.method,
                                                  self.claim, 'ok' if self.ok else 'FAILED')
        if self.witness is not None and not self.ok:
            s += ' witness={0}'.format(self.witness)

        return s


def _min_distance_numpy(bitmaps):
    m = bitmaps.shape[0]
    b = bitmaps.astype(np.int32)
    wt = b.sum(axis=1)
    best, bi, bj = -1, -1, -1
    for lo in range(0, m, _BLOCK):
        block = b[lo:lo + _BLOCK]
        dist = wt[lo:lo + _BLOCK, None] + wt[None, :] - 2 * (block @ b.T)
        rows = np.arange(lo, lo + block.shape[0])
        # Keep only pairs i < j.
        dist[np.arange(m)[None, :] <= rows[:, None]] = np.iinfo(np.int32).max
        idx = np.unravel_index(np.argmin(dist), dist.shape)
        d = int(dist[idx])
        if d != np.iinfo(np.int32).max and (best < 0 or d < best):
            best, bi, bj = d, lo + int(idx[0]), int(idx[1])

    return best, bi, bj


def min_distance_witness(code, cap=PAIR_CAP):
    """
    Exhaustive minimal pairwise Hamming distance of a code.

    Parameters
    ----------
    code : wc_code
        The code, with at least two words.
    cap : int
        Maximal number of pairs.

    Returns
    -------
    d : int
        The minimum distance.
    i, j : int
        Indices of a pair at distance d.
    """
    m = len(code)
    if m < 2:
        raise ValueError('Minimum distance needs at least two words, got {0}'.format(m))

    if m * (m - 1) // 2 > cap:
        raise cap_exceeded('{0}: {1} pairs exceed the cap {2}'.format(code, m * (m - 1) // 2, cap))

    bitmaps = np.ascontiguousarray(code.bitmaps())
    if ck is not None:
        return ck.min_pairwise_distance(bitmaps)

    return _min_distance_numpy(bitmaps)


def min_distance(code, cap=PAIR_CAP):
    """ Exhaustive minimal pairwise Hamming distance of a code.
    """
    return min_distance_witness(code, cap=cap)[0]


def distance_report(code, declared=None, cap=PAIR_CAP):
    """ Check the minimum distance of a code against its declared value.
    """
    if declared is None:
        declared = code.declared_d

    d, i, j = min_distance_witness(code, cap=cap)
    return wc_report('d', 'd>={0}'.format(declared), d, d >= declared, witness=(i, j))


def check_steiner(code, t):
    """
    Check if the words of a code are the blocks of a Steiner system
    S(t, w, N): every t-subset of [0, N-1] is in exactly one word.

    Returns
    -------
    ok : bool
        The outcome.
    counterexample : tuple
        (t-subset, number of containing words) on failure, else None.
    """
    counts = Counter()
    for c in code:
        counts.update(itertools.combinations(c.support, t))

    for block, n in counts.items():
        if n != 1:
            return False, (block, n)

    if len(counts) != math.comb(code.N, t):
        for block in itertools.combinations(range(code.N), t):
            if block not in counts:
                return False, (block, 0)

    return True, None


def _shift(support, s, n):
    return tuple(sorted((p + s) % n for p in support))


def is_cyclic(code):
    """ Check if a code is closed under the cyclic shift p -> (p + 1) mod N.
    """
    words = {c.support for c in code}
    return all(_shift(s, 1, code.N) in words for s in words)


def _max_correlation(supports, n, distinct_sets):
    if not supports:
        return 0, -1, -1, -1

    arr = np.ascontiguousarray(supports, dtype=np.int_)
    if ck is not None:
        return ck.max_correlation(arr, n, distinct_sets)

    w = arr.shape[1]
    best, witness = 0, (-1, -1, -1)
    for a in range(len(arr)):
        for b in range(a, len(arr)):
            counts = np.bincount(((arr[a][:, None] - arr[b][None, :]) % n).ravel(),
                                 minlength=n)
            if distinct_sets:
                counts[counts == w] = -1
            elif a == b:
                counts[0] = -1

            s = int(np.argmax(counts))
            if counts[s] >= 0 and (witness[0] < 0 or counts[s] > best):
                best, witness = int(counts[s]), (a, b, s)

    return (best,) + witness


def cyclic_correlation(code):
    """
    Maximal intersection of two distinct cyclic shifts of any two (possibly
    equal) words of a constant weight code.

    Returns
    -------
    value : int
        The correlation.
    witness : tuple
        (a, b, s): word b shifted by s meets word a in 'value' positions.
    """
    if code.w is None:
        raise ValueError('Correlation is defined for constant weight codes only')

    best, a, b, s = _max_correlation([c.support for c in code], code.N, True)
    return best, (a, b, s)


class wc_ooc:
    """
    An (n, w, lambda) optical orthogonal code.

    Attributes
    ----------
    n : int
        The cyclic length.
    w : int
        The weight.
    lam : int
        The maximal correlation.
    reps : list of wc_word
        One representative per cyclic orbit of size n.
    discarded : list of tuple
        (representative, orbit size) of the orbits of size less than n.
    """
    def __init__(self, n, w, lam, reps, discarded=None):
        """ Constructor.
        """
        self.n = n
        self.w = w
        self.lam = lam
        self.reps = list(reps)
        self.discarded = discarded if discarded is not None else []

    def __len__(self):
        return len(self.reps)

    def __repr__(self):
        return '({0}, {1}, {2}) OOC of size {3}'.format(self.n, self.w, self.lam, len(self))


def ooc_correlation(ooc):
    """ Maximal auto/cross correlation of an OOC over all shift pairs.
    """
    return _max_correlation([r.support for r in ooc.reps], ooc.n, False)


def ooc_check(ooc):
    """
    Check exhaustively that all correlations are at most lambda; a word
    against its own zero shift is not compared.
    """
    return ooc_correlation(ooc)[0] <= ooc.lam


def ooc_extract(code, lam_expected=None):
    """
    Optical orthogonal code from a cyclic constant weight code: one
    representative (the least support) of every orbit of size N.

    Parameters
    ----------
    code : wc_code
        A cyclic constant weight code.
    lam_expected : int (optional)
        An upper bound on the correlation. By default lambda is w - d/2 and
        the measured correlation must equal it whenever an orbit is kept.

    Returns
    -------
    object : wc_ooc
        The verified OOC.
    """
    if code.w is None:
        raise ValueError('{0} is not a constant weight code'.format(code))

    if not is_cyclic(code):
        raise ValueError('{0} is not cyclic'.format(code))

    n = code.N
    lam = code.w - code.declared_d // 2 if lam_expected is None else lam_expected
    seen = set()
    reps = []
    discarded = []
    for c in code:
        if c.support in seen:
            continue

        orbit = {_shift(c.support, s, n) for s in range(n)}
        seen |= orbit
        rep = wc_word(n, min(orbit))
        if len(orbit) == n:
            reps.append(rep)
        else:
            discarded.append((rep, len(orbit)))

    if discarded:
        warnings.warn('{0} orbit(s) shorter than {1} discarded: {2}'.format(
                      len(discarded), n, [(list(r.support), l) for r, l in discarded]))

    reps.sort()
    ooc = wc_ooc(n, code.w, lam, reps, discarded)
    value, a, b, s = ooc_correlation(ooc)
    if value > lam:
        raise verification_error('{0}: correlation {1} of words {2}, {3} at shift {4}'.format(
                                 ooc, value, a, b, s), claim='lambda<={0}'.format(lam),
                                 witness=(a, b, s))

    if lam_expected is None and reps and value != lam:
        raise verification_error('{0}: correlation {1}, expected w - d/2 = {2}'.format(
                                 ooc, value, lam), claim='lambda={0}'.format(lam),
                                 witness=(a, b, s))

    return ooc
