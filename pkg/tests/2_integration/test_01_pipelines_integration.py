#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import unittest
from collections import Counter

import numpy as np

import weightcruncher.bounds as wb
import weightcruncher.cdc as cd
import weightcruncher.codec as cc
import weightcruncher.fdtw as fd
import weightcruncher.verify as wv
from weightcruncher.field import build_field
from weightcruncher.subspace import elements


class SpreadPipeline(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.source = cd.spread(build_field(2, 4), 2)
        cls.code = fd.fdtw_construct(cls.source)

    def test_spread_code(self):
        self.assertEqual((self.code.N, self.code.w, len(self.code)), (16, 4, 20))
        self.assertEqual(wv.min_distance(self.code), 6)
        self.assertEqual(wv.check_steiner(self.code, 2), (True, None))
        self.assertEqual(len(self.code), wb.steiner_size(2, 4, 16))
        self.assertEqual(len(self.source), wb.eq2_lower_bound(4, 2, 2))
        self.assertEqual(len(self.code), wb.fdtw_size_from_eq2(4, 2, 2))
        self.assertEqual(len(self.code), wb.spread_fdtw_upper_bound(4, 2, 2))

    def test_shortened(self):
        short1 = fd.shorten(self.code, 15, 1)
        short0 = fd.shorten(self.code, 15, 0)
        self.assertEqual(short1.params(), (15, 6, 3, 5))
        self.assertEqual(short0.params(), (15, 6, 4, 15))
        for short in (short1, short0):
            self.assertTrue(wv.is_cyclic(short))
            self.assertEqual(wv.min_distance(short), 6)
            self.assertTrue(wv.cyclic_correlation(short)[0] <= short.w - short.declared_d // 2)

    def test_codec(self):
        pairs = cc.encode_all(self.source)
        self.assertEqual(len(pairs), 20)
        for info, c in pairs:
            self.assertEqual(cc.decode(self.source, c), info)

    def test_frequency_law(self):
        ctx = self.source.ctx
        rng = np.random.default_rng(3)
        for X in self.source:
            base = cc.diff_multiset(ctx, elements(X))
            self.assertEqual(base, Counter({z: 2 for z in elements(X) if not z.is_zero()}))
            for e in rng.integers(0, ctx.size, size=5):
                beta = ctx.element_at(int(e))
                self.assertEqual(cc.diff_multiset(ctx, fd.coset(X, beta)), base)


class GrassmannianPipeline(unittest.TestCase):
    def test_steiner_3_4_8(self):
        code = fd.fdtw_construct(cd.full_grassmannian(build_field(2, 3), 2))
        self.assertEqual((code.N, code.w, len(code)), (8, 4, 14))
        self.assertEqual(wv.min_distance(code), 4)
        self.assertEqual(wv.check_steiner(code, 3), (True, None))
        self.assertEqual(len(code), wb.steiner_size(3, 4, 8))

    def test_hadamard(self):
        code = fd.fdtw_construct(cd.full_grassmannian(build_field(2, 3), 2))
        padded = fd.pad_hadamard(code)
        self.assertEqual(len(padded), 16)
        self.assertEqual(wv.min_distance(padded), 4)


class Lemma1Pipeline(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.source = cd.lemma1_code(3, 2)
        cls.code = fd.fdtw_construct(cls.source)

    def test_optimality(self):
        self.assertEqual(len(self.source), 9)
        self.assertEqual(self.source.min_distance()[0], 4)
        self.assertEqual(self.code.params(), (32, 12, 8, 36))
        self.assertEqual(wv.min_distance(self.code), 12)
        self.assertEqual(wb.avz_bound(31, 6, 7, 100), 9)
        self.assertEqual(wb.johnson_step(32, 12, 8, 9), 36)
        self.assertEqual(wb.theorem5_values(3), (9, len(self.code)))

    def test_codec(self):
        pairs = cc.encode_all(self.source)
        self.assertEqual(len(pairs), 36)
        for info, c in pairs:
            self.assertEqual(cc.decode(self.source, c), info)

    def test_frequency_law(self):
        ctx = self.source.ctx
        rng = np.random.default_rng(5)
        for X in self.source:
            base = cc.diff_multiset(ctx, elements(X))
            self.assertEqual(base, Counter({z: 4 for z in elements(X) if not z.is_zero()}))
            for e in rng.integers(0, ctx.size, size=5):
                beta = ctx.element_at(int(e))
                self.assertEqual(cc.diff_multiset(ctx, fd.coset(X, beta)), base)

    def test_correct_all_single_swaps(self):
        N = self.code.N
        for c in self.code:
            inside = c.support
            outside = [p for p in range(N) if p not in inside]
            for drop in inside:
                for add in outside:
                    received = fd.wc_word(N, [p for p in inside if p != drop] + [add])
                    self.assertEqual(cc.correct(self.source, received), c)


class OocPipeline(unittest.TestCase):
    def test_shortened_spread(self):
        code = fd.fdtw_construct(cd.spread(build_field(2, 4), 2))
        ooc = wv.ooc_extract(fd.shorten(code, 15, 0))
        self.assertEqual((ooc.n, ooc.w, ooc.lam, len(ooc)), (15, 4, 1, 1))
        self.assertTrue(wv.ooc_check(ooc))


if __name__ == '__main__':
    unittest.main()
