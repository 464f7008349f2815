"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers

Arithmetic in GF(q^n), q prime, through log/antilog tables, and the
isomorphism between GF(q^n) and F_q^n.
"""

import itertools
import warnings

FIELD_CAP = 2**20

# Primitive polynomials, coefficients low-to-high (monic).
PRIMITIVE_POLYS = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1),
    (2, 15): (1, 1) + (0,) * 13 + (1,),
    (2, 16): (1, 1, 0, 1) + (0,) * 8 + (1, 0, 0, 0, 1),
    (2, 17): (1, 0, 0, 1) + (0,) * 13 + (1,),
    (2, 18): (1, 0, 0, 0, 0, 0, 0, 1) + (0,) * 10 + (1,),
    (2, 19): (1, 1, 1, 0, 0, 1) + (0,) * 13 + (1,),
    (2, 20): (1, 0, 0, 1) + (0,) * 16 + (1,),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 1, 1),
}


def is_prime(q):
    """ Check if an integer is a prime number.
    """
    if q < 2:
        return False

    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1

    return True


def _poly_mod(a, b, q):
    """ Remainder of a(x) modulo b(x) over F_q (coefficients low-to-high).
    """
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]

    inv = pow(b[-1], -1, q)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % q
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % q

    return a[:db]


def is_irreducible(poly, q):
    """
    Check a polynomial over F_q for irreducibility by trial division.

    Parameters
    ----------
    poly : sequence of int
        Coefficients, low-to-high.
    q : int
        Prime modulus.
    """
    n = len(poly) - 1
    if n < 1:
        return False

    if n > 1 and poly[0] % q == 0:
        return False

    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(q), repeat=d):
            if not any(_poly_mod(poly, low + (1,), q)):
                return False

    return True


def _power_table(q, n, poly):
    """
    Powers of x modulo poly, as coordinate vectors. Returns None if x does
    not have multiplicative order exactly q^n - 1.
    """
    order = q**n - 1
    one = (1,) + (0,) * (n - 1)
    table = [one]
    seen = {one}
    v = one
    for _ in range(order - 1):
        top = v[n - 1]
        shifted = (0,) + v[:n - 1]
        v = tuple((shifted[j] - top * poly[j]) % q for j in range(n))
        if v in seen:
            return None

        seen.add(v)
        table.append(v)

    top = v[n - 1]
    shifted = (0,) + v[:n - 1]
    if tuple((shifted[j] - top * poly[j]) % q for j in range(n)) != one:
        return None

    return table


def find_primitive_poly(q, n):
    """ Search for the first primitive polynomial of degree n over F_q.
    """
    for low in itertools.product(range(q), repeat=n):
        if low[0] == 0:
            continue

        poly = low + (1,)
        if _power_table(q, n, poly) is not None:
            return poly

    raise RuntimeError('No primitive polynomial of degree {0} over GF({1})'.format(n, q))


class wc_element:
    """
    An element of GF(q^n): either zero or a power alpha^e of the primitive
    element. Equality is by exponent.

    Attributes
    ----------
    exp : int or None
        The exponent e, reduced modulo q^n - 1. None for the zero element.
    """
    __slots__ = ('exp',)

    def __init__(self, exp=None):
        """ Constructor.
        """
        self.exp = exp

    def is_zero(self):
        return self.exp is None

    def __eq__(self, other):
        return isinstance(other, wc_element) and self.exp == other.exp

    def __hash__(self):
        return hash(self.exp)

    def __repr__(self):
        if self.exp is None:
            return 'Zero'

        return 'Power({0})'.format(self.exp)


ZERO = wc_element()


class wc_field:
    """
    A finite field GF(q^n) with q prime.

    Attributes
    ----------
    q : int
        The prime modulus.
    n : int
        The extension degree.
    size : int
        The number of elements, q^n.
    poly : tuple of int
        The primitive polynomial, coefficients low-to-high.
    antilog : list of tuple
        antilog[e] is the coordinate vector of alpha^e.
    log : dictionary (tuple : int)
        Inverse of antilog.
    """
    def __init__(self, q, n, poly=None, cap=FIELD_CAP):
        """
        Constructor.

        Parameters
        ----------
        q : int
            Prime modulus.
        n : int
            Extension degree, n >= 1.
        poly : sequence of int (optional)
            Monic primitive polynomial of degree n, low-to-high. If not
            provided, the built-in table is consulted.
        cap : int
            Maximal allowed q^n.
        """
        if not is_prime(q):
            raise ValueError('q={0} is not a prime'.format(q))

        if n < 1:
            raise ValueError('Extension degree must be positive, got {0}'.format(n))

        if q**n > cap:
            raise ValueError('GF({0}^{1}) exceeds the field size cap {2}'.format(q, n, cap))

        self.q = q
        self.n = n
        self.size = q**n

        if poly is None:
            poly = PRIMITIVE_POLYS.get((q, n))
            table = None if poly is None else _power_table(q, n, poly)
            if table is None:
                if poly is not None:
                    warnings.warn('Tabulated polynomial for GF({0}^{1}) is not primitive, '
                                  'searching'.format(q, n))
                poly = find_primitive_poly(q, n)
                table = _power_table(q, n, poly)
        else:
            poly = tuple(int(c) for c in poly)
            if len(poly) != n + 1:
                raise ValueError('Polynomial {0} is not of degree {1}'.format(poly, n))

            if any(c < 0 or c >= q for c in poly):
                raise ValueError('Polynomial {0} has coefficients outside F_{1}'.format(poly, q))

            if poly[n] != 1:
                raise ValueError('Polynomial {0} is not monic'.format(poly))

            if not is_irreducible(poly, q):
                raise ValueError('Polynomial {0} is not irreducible over F_{1}'.format(poly, q))

            table = _power_table(q, n, poly)
            if table is None:
                raise ValueError('Polynomial {0} is not primitive over F_{1}'.format(poly, q))

        self.poly = tuple(poly)
        self.antilog = table
        self.log = {v: e for e, v in enumerate(table)}
        self.zero_vector = (0,) * n

    def descriptor(self):
        """ The (q, n, poly) triple that identifies this field.
        """
        return (self.q, self.n, self.poly)

    def __eq__(self, other):
        return isinstance(other, wc_field) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return 'wc_field(q={0}, n={1}, poly={2})'.format(self.q, self.n, self.poly)

    def power(self, e):
        """ The element alpha^e.
        """
        return wc_element(e % (self.size - 1))

    def one(self):
        return wc_element(0)

    def elements(self):
        """ All field elements, ordered by characteristic index.
        """
        return [wc_element(e) for e in range(self.size - 1)] + [ZERO]

    def vector_of(self, x):
        """ The coordinate vector of a field element.
        """
        if x.exp is None:
            return self.zero_vector

        return self.antilog[x.exp]

    def element_of(self, v):
        """ The field element with a given coordinate vector.
        """
        v = tuple(int(c) % self.q for c in v)
        if len(v) != self.n:
            raise ValueError('Vector of length {0} does not belong to GF({1}^{2})'.format(len(v),
                                                                                     self.q,
                                                                                     self.n))

        e = self.log.get(v)
        return ZERO if e is None else wc_element(e)

    def add(self, a, b):
        if a.exp is None:
            return b

        if b.exp is None:
            return a

        q = self.q
        va, vb = self.antilog[a.exp], self.antilog[b.exp]
        e = self.log.get(tuple((x + y) % q for x, y in zip(va, vb)))
        return ZERO if e is None else wc_element(e)

    def neg(self, a):
        if a.exp is None or self.q == 2:
            return a

        # -1 = alpha^((q^n - 1) / 2) for odd q.
        return wc_element((a.exp + (self.size - 1) // 2) % (self.size - 1))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a.exp is None or b.exp is None:
            return ZERO

        return wc_element((a.exp + b.exp) % (self.size - 1))

    def scalar_mul(self, c, x):
        """ Multiply a field element by a scalar c of the prime field.
        """
        c %= self.q
        if c == 0 or x.exp is None:
            return ZERO

        return self.element_of(tuple(c * a for a in self.vector_of(x)))

    def mul_alpha(self, x):
        """ Multiply by the primitive element.
        """
        if x.exp is None:
            return x

        return wc_element((x.exp + 1) % (self.size - 1))

    def char_index(self, x):
        """
        Position of a field element in a characteristic vector: alpha^i is
        at position i, zero is at the last position q^n - 1.
        """
        if x.exp is None:
            return self.size - 1

        return x.exp

    def element_at(self, pos):
        """ Inverse of char_index().
        """
        if pos < 0 or pos >= self.size:
            raise ValueError('Position {0} is out of range [0, {1}]'.format(pos, self.size - 1))

        if pos == self.size - 1:
            return ZERO

        return wc_element(pos)


def build_field(q, n, poly=None, cap=FIELD_CAP):
    """
    Build the finite field GF(q^n).

    Parameters
    ----------
    q : int
        Prime modulus.
    n : int
        Extension degree.
    poly : sequence of int (optional)
        Monic primitive polynomial, coefficients low-to-high.
    cap : int
        Maximal allowed q^n.

    Returns
    -------
    object : wc_field
        The field context.
    """
    return wc_field(q, n, poly=poly, cap=cap)
