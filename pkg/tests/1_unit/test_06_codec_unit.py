#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import unittest
from collections import Counter

import weightcruncher.codec as cc
from weightcruncher.cdc import spread, full_grassmannian
from weightcruncher.errors import decoding_failure
from weightcruncher.fdtw import fdtw_construct, word_of, wc_word
from weightcruncher.field import build_field
from weightcruncher.subspace import elements


class CodecTestCase(unittest.TestCase):
    def setUp(self):
        self.ctx = build_field(2, 4)
        self.spread = spread(self.ctx, 2)

    def test_encode(self):
        code = fdtw_construct(self.spread)
        self.assertEqual(cc.info_range(self.spread), 20)
        pairs = cc.encode_all(self.spread)
        self.assertEqual(len(pairs), 20)
        self.assertEqual([c for _, c in pairs], code.words)
        self.assertEqual(pairs[5][0], cc.wc_info_word(1, 1))

        err = 'out of range'
        with self.assertRaises(Exception) as context:
            cc.encode(self.spread, cc.wc_info_word(0, 4))
        self.assertTrue(err in str(context.exception))

        with self.assertRaises(ValueError):
            cc.encode(self.spread, cc.wc_info_word(5, 0))

    def test_decode(self):
        for info, c in cc.encode_all(self.spread):
            self.assertEqual(cc.decode(self.spread, c), info)

        ctx3 = build_field(3, 2)
        s3 = spread(ctx3, 1)
        for info, c in cc.encode_all(s3):
            self.assertEqual(cc.decode(s3, c), info)

    def test_decode_failures(self):
        with self.assertRaises(decoding_failure) as context:
            cc.decode(self.spread, wc_word(16, [0, 1]))
        self.assertEqual(context.exception.reason, 'bad-weight')

        with self.assertRaises(decoding_failure) as context:
            cc.decode(self.spread, wc_word(16, [0, 1, 2, 3]))
        self.assertEqual(context.exception.reason, 'not-subspace')

        outside = [X for X in full_grassmannian(self.ctx, 2) if X not in self.spread][0]
        with self.assertRaises(decoding_failure) as context:
            cc.decode(self.spread, word_of(self.ctx, elements(outside)))
        self.assertEqual(context.exception.reason, 'not-in-code')

        with self.assertRaises(ValueError):
            decoding_failure('unknown')

    def test_diff_multiset(self):
        for X in self.spread:
            counts = cc.diff_multiset(self.ctx, elements(X))
            self.assertEqual(counts, Counter({z: 2 for z in elements(X) if not z.is_zero()}))

        ctx3 = build_field(3, 2)
        for X in spread(ctx3, 1):
            counts = cc.diff_multiset(ctx3, elements(X))
            self.assertEqual(counts, Counter({z: 3 for z in elements(X) if not z.is_zero()}))

        err = 'at least two elements'
        with self.assertRaises(Exception) as context:
            cc.diff_multiset(self.ctx, [self.ctx.one()])
        self.assertTrue(err in str(context.exception))

    def test_correct(self):
        for _, c in cc.encode_all(self.spread):
            self.assertEqual(cc.correct(self.spread, c), c)

        with self.assertRaises(decoding_failure) as context:
            cc.correct(self.spread, wc_word(16, [0, 1, 2]))
        self.assertEqual(context.exception.reason, 'bad-weight')

        outside = [X for X in full_grassmannian(self.ctx, 2) if X not in self.spread][0]
        with self.assertRaises(decoding_failure) as context:
            cc.correct(self.spread, word_of(self.ctx, elements(outside)))
        self.assertEqual(context.exception.reason, 'not-in-code')

    def test_correct_batch(self):
        c = cc.encode(self.spread, cc.wc_info_word(2, 3))
        results = cc.correct_batch(self.spread, [c, wc_word(16, [0]), c])
        self.assertEqual(results[0], c)
        self.assertTrue(isinstance(results[1], decoding_failure))
        self.assertEqual(results[1].reason, 'bad-weight')
        self.assertEqual(results[2], c)


if __name__ == '__main__':
    unittest.main()
