"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Exact bounds and size formulas for constant weight and constant dimension
codes. No floating point is used anywhere in this module.
"""

import math
from fractions import Fraction


def gaussian(n, l, q):
    """
    The q-ary Gaussian coefficient [n l]_q, the number of l-dimensional
    subspaces of F_q^n.

    Parameters
    ----------
    n : int
        Dimension of the ambient space.
    l : int
        Dimension of the subspaces, 0 <= l <= n.
    q : int
        Size of the base field.

    Returns
    -------
    value : int
        The exact coefficient.
    """
    if l < 0 or l > n:
        raise ValueError('Invalid Gaussian coefficient [{0} {1}]'.format(n, l))

    num = 1
    den = 1
    for i in range(l):
        num *= q**(n - i) - 1
        den *= q**(i + 1) - 1

    return num // den


def johnson_step(n, d, w, a_prev):
    """
    One step of the Johnson bound, A(n, d, w) <= floor(n/w A(n-1, d, w-1)).

    Parameters
    ----------
    n : int
        Code length.
    d : int
        Minimum distance.
    w : int
        Weight, n >= w > 0.
    a_prev : int
        An upper bound on A(n-1, d, w-1).

    Returns
    -------
    value : int
        floor(n * a_prev / w).
    """
    if not n >= w > 0:
        raise ValueError('Johnson bound requires n >= w > 0, got n={0} w={1}'.format(n, w))

    return n * a_prev // w


def johnson_chain(n, d, w, base, steps):
    """
    Apply johnson_step() repeatedly, starting from an upper bound 'base' on
    A(n - steps, d, w - steps) and ending at a bound on A(n, d, w).
    """
    value = base
    for s in range(steps - 1, -1, -1):
        value = johnson_step(n - s, d, w - s, value)

    return value


def _frac(x):
    """ Fractional part {x} = x - floor(x) of a rational.
    """
    return x - math.floor(x)


def avz_b(n, delta, w, M):
    """
    The quantity b(M) of the implicit bound on A(n, 2 delta, w):
    b = delta - w(n-w)/n + (n/M^2){M w/n}{M (n-w)/n}.

    Returns
    -------
    b : fractions.Fraction
        The exact value.
    """
    if M < 1:
        raise ValueError('Code size M must be positive, got {0}'.format(M))

    if not 0 < w <= n:
        raise ValueError('Weight {0} is out of range (0, {1}]'.format(w, n))

    return (Fraction(delta) - Fraction(w * (n - w), n) +
            Fraction(n, M * M) * _frac(Fraction(M * w, n)) * _frac(Fraction(M * (n - w), n)))


def avz_excludes(n, delta, w, M):
    """ Check if a code size M is ruled out: b(M) > 0 and M > floor(delta / b(M)).
    """
    b = avz_b(n, delta, w, M)
    return b > 0 and M > math.floor(Fraction(delta) / b)


def avz_bound(n, delta, w, cap):
    """
    Upper bound on A(n, 2 delta, w) from the implicit b(M) bound.

    Every candidate size M in [1, cap] is examined, b(M) is not assumed to
    be monotone.

    Parameters
    ----------
    n : int
        Code length.
    delta : int
        Half of the minimum distance.
    w : int
        Weight.
    cap : int
        Any valid upper bound on A(n, 2 delta, w).

    Returns
    -------
    value : int
        The largest M <= cap which is not excluded.
    """
    for M in range(cap, 0, -1):
        if not avz_excludes(n, delta, w, M):
            return M

    return 0


def eq2_lower_bound(n, k, q):
    """ A_q(n, 2k, k) >= (q^n - q^k(q^r - 1) - 1)/(q^k - 1), r = n mod k.
    """
    r = n % k
    return (q**n - q**k * (q**r - 1) - 1) // (q**k - 1)


def fdtw_size_from_eq2(n, k, q):
    """ Size of the (q^n, 2q^k - 2, q^k) code built from the eq2_lower_bound() code.
    """
    r = n % k
    return (q**(2 * n - k) - q**n * (q**r - 1) - q**(n - k)) // (q**k - 1)


def spread_fdtw_upper_bound(n, k, q):
    """ The bound A(q^n, 2q^k - 2, q^k) <= floor(q^(n-k) floor((q^n - 1)/(q^k - 1))).
    """
    return johnson_step(q**n, 2 * q**k - 2, q**k, (q**n - 1) // (q**k - 1))


def theorem5_values(m):
    """
    The exact values A(2^(2m-1) - 1, 2^(m+1) - 4, 2^m - 1) = 2^m + 1 and
    A(2^(2m-1), 2^(m+1) - 4, 2^m) = 2^(2m-1) + 2^(m-1).

    Only m >= 3 is accepted: at m = 2 the second value would be 10, but
    the Steiner system S(3, 4, 8) is an (8, 4, 4) code of size 14.
    """
    if m < 3:
        raise ValueError('Optimal values are stated for m >= 3, got m={0}'.format(m))

    return (2**m + 1, 2**(2 * m - 1) + 2**(m - 1))


def steiner_size(t, w, n):
    """ Number of blocks of a Steiner system S(t, w, n), C(n,t)/C(w,t).
    """
    num, den = math.comb(n, t), math.comb(w, t)
    if num % den:
        raise ValueError('No Steiner system S({0},{1},{2}): {3}/{4} is not an integer'.format(
                         t, w, n, num, den))

    return num // den


def steiner_distance(t, w):
    """ Minimum distance of a Steiner system S(t, w, n) as a constant weight code.
    """
    return 2 * (w - t + 1)


def q_steiner_size(t, k, n, q):
    """ Number of blocks of a q-Steiner system S_q[t, k, n].
    """
    num, den = gaussian(n, t, q), gaussian(k, t, q)
    if num % den:
        raise ValueError('No q-Steiner system S_{0}[{1},{2},{3}]'.format(q, t, k, n))

    return num // den


def q_steiner_distance(t, k):
    """ Subspace distance of a q-Steiner system S_q[t, k, n].
    """
    return 2 * (k - t + 1)
