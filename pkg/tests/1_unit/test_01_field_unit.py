#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import unittest
import warnings

import weightcruncher.field as wf


class FieldTestCase(unittest.TestCase):
    def test_default_poly(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            for n in range(1, 9):
                ctx = wf.build_field(2, n)
                self.assertEqual(ctx.size, 2**n)
                self.assertEqual(len(set(ctx.antilog)), 2**n - 1)

            for q, n in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]:
                ctx = wf.build_field(q, n)
                self.assertEqual(len(ctx.log), q**n - 1)

    def test_antilog(self):
        ctx = wf.build_field(2, 4)
        self.assertEqual(ctx.poly, (1, 1, 0, 0, 1))
        self.assertEqual(ctx.vector_of(ctx.one()), (1, 0, 0, 0))
        self.assertEqual(ctx.vector_of(ctx.power(1)), (0, 1, 0, 0))
        self.assertEqual(ctx.vector_of(ctx.power(4)), (1, 1, 0, 0))
        self.assertEqual(ctx.vector_of(wf.ZERO), (0, 0, 0, 0))
        self.assertEqual(ctx.power(15), ctx.one())
        self.assertEqual(ctx.element_of((1, 1, 0, 0)), ctx.power(4))
        self.assertEqual(ctx.element_of((0, 0, 0, 0)), wf.ZERO)

    def test_cubic(self):
        ctx = wf.build_field(2, 3, poly=(1, 1, 0, 1))
        self.assertEqual(ctx.antilog[3], (1, 1, 0))
        self.assertEqual(ctx.antilog[6], (1, 0, 1))

        err = 'is not irreducible'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 3, poly=(1, 1, 1, 1))
        self.assertTrue(err in str(context.exception))

    def test_arithmetic(self):
        ctx = wf.build_field(2, 4)
        a = ctx.power(7)
        self.assertEqual(ctx.add(a, a), wf.ZERO)
        self.assertEqual(ctx.add(a, wf.ZERO), a)
        self.assertEqual(ctx.add(ctx.one(), ctx.power(1)), ctx.power(4))
        self.assertEqual(ctx.sub(ctx.power(4), ctx.one()), ctx.power(1))
        self.assertEqual(ctx.mul(ctx.power(3), ctx.power(14)), ctx.power(2))
        self.assertEqual(ctx.mul(a, wf.ZERO), wf.ZERO)
        self.assertEqual(ctx.mul_alpha(ctx.power(14)), ctx.one())
        self.assertEqual(ctx.neg(a), a)

    def test_odd_characteristic(self):
        ctx = wf.build_field(3, 2, poly=(2, 1, 1))
        self.assertEqual(ctx.vector_of(ctx.power(2)), (1, 2))
        self.assertEqual(ctx.neg(ctx.one()), ctx.power(4))
        self.assertEqual(ctx.add(ctx.one(), ctx.neg(ctx.one())), wf.ZERO)
        self.assertEqual(ctx.scalar_mul(2, ctx.one()), ctx.power(4))
        self.assertEqual(ctx.scalar_mul(3, ctx.power(5)), wf.ZERO)
        for x in ctx.elements():
            self.assertEqual(ctx.sub(x, x), wf.ZERO)
            self.assertEqual(ctx.add(ctx.add(x, x), x), wf.ZERO)

    def test_field_laws(self):
        ctx = wf.build_field(2, 4)
        elems = ctx.elements()
        for a in elems:
            for b in elems:
                self.assertEqual(ctx.add(a, b), ctx.add(b, a))
                for c in elems:
                    self.assertEqual(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)))
                    self.assertEqual(ctx.mul(a, ctx.add(b, c)),
                                     ctx.add(ctx.mul(a, b), ctx.mul(a, c)))

    def test_char_index(self):
        ctx = wf.build_field(2, 3)
        elems = ctx.elements()
        self.assertEqual(len(elems), 8)
        self.assertEqual(elems[-1], wf.ZERO)
        self.assertEqual(ctx.char_index(wf.ZERO), 7)
        for pos in range(8):
            self.assertEqual(ctx.char_index(ctx.element_at(pos)), pos)

        with self.assertRaises(Exception) as context:
            ctx.element_at(8)
        self.assertTrue('out of range' in str(context.exception))

    def test_repr(self):
        self.assertEqual(repr(wf.ZERO), 'Zero')
        self.assertEqual(repr(wf.wc_element(3)), 'Power(3)')

    def test_irreducible(self):
        self.assertTrue(wf.is_irreducible((1, 1, 1), 2))
        self.assertFalse(wf.is_irreducible((1, 0, 1), 2))
        self.assertTrue(wf.is_irreducible((1, 1, 1, 1, 1), 2))
        p = wf.find_primitive_poly(2, 3)
        self.assertEqual((len(p), p[-1]), (4, 1))
        self.assertTrue(wf.is_irreducible(p, 2))
        self.assertIsNotNone(wf._power_table(2, 3, p))

    def test_errors(self):
        err = 'is not a prime'
        with self.assertRaises(Exception) as context:
            wf.build_field(4, 2)
        self.assertTrue(err in str(context.exception))

        err = 'is not irreducible'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 4, poly=(1, 0, 0, 0, 1))
        self.assertTrue(err in str(context.exception))

        err = 'is not primitive'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 4, poly=(1, 1, 1, 1, 1))
        self.assertTrue(err in str(context.exception))

        err = 'is not monic'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 4, poly=(1, 1, 0, 0, 0))
        self.assertTrue(err in str(context.exception))

        err = 'is not of degree'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 4, poly=(1, 1, 1))
        self.assertTrue(err in str(context.exception))

        err = 'exceeds the field size cap'
        with self.assertRaises(Exception) as context:
            wf.build_field(2, 21)
        self.assertTrue(err in str(context.exception))

        with self.assertRaises(ValueError):
            wf.build_field(2, 0)


if __name__ == '__main__':
    unittest.main()
