#!/usr/bin/env python3

"""
SPDX-License-Identifier: LGPL-2.1

Copyright 2026 The weightcruncher developers
"""

import unittest

import numpy as np

import weightcruncher.subspace as ws
from weightcruncher.bounds import gaussian
from weightcruncher.errors import cap_exceeded
from weightcruncher.field import build_field, ZERO


class SubspaceTestCase(unittest.TestCase):
    def test_row_reduce(self):
        rref, pivots = ws.row_reduce([[1, 1, 0], [0, 1, 1]], 2)
        self.assertEqual(rref.tolist(), [[1, 0, 1], [0, 1, 1]])
        self.assertEqual(pivots, [0, 1])

        rref, pivots = ws.row_reduce([[2, 1], [1, 2]], 3)
        self.assertEqual(rref.tolist(), [[1, 2]])
        self.assertEqual(pivots, [0])

        self.assertEqual(ws.rank([[1, 1], [1, 1]], 2), 1)
        self.assertEqual(ws.rank(np.eye(4, dtype=int), 2), 4)

    def test_canonical(self):
        ctx = build_field(2, 4)
        X = ws.rref_of(ctx, [(1, 1, 0, 0), (0, 1, 1, 0)])
        Y = ws.rref_of(ctx, [(1, 0, 1, 0), (1, 1, 0, 0), (0, 1, 1, 0)])
        self.assertEqual(X, Y)
        self.assertEqual(hash(X), hash(Y))
        self.assertEqual(X.k, 2)
        self.assertEqual(X.serialize(), ['1010', '0110'])
        self.assertEqual(ws.parse_subspace(ctx, X.serialize()), X)

        empty = ws.rref_of(ctx, [])
        self.assertEqual(empty.k, 0)
        self.assertEqual(ws.elements(empty), [ZERO])

    def test_elements(self):
        ctx = build_field(2, 4)
        X = ws.rref_of(ctx, [(1, 0, 0, 0), (0, 0, 1, 0)])
        elems = ws.elements(X)
        self.assertEqual(len(elems), 4)
        self.assertEqual(elems[0], ZERO)
        self.assertEqual(elems[1], ctx.one())
        self.assertEqual(elems[2], ctx.power(2))
        self.assertEqual(elems[3], ctx.add(ctx.one(), ctx.power(2)))

        ctx3 = build_field(3, 2)
        L = ws.rref_of(ctx3, [ctx3.vector_of(ctx3.power(1))])
        self.assertEqual(set(ws.elements(L)), {ZERO, ctx3.power(1), ctx3.power(5)})

    def test_distance(self):
        ctx = build_field(2, 4)
        U = ws.rref_of(ctx, [(1, 0, 0, 0), (0, 1, 0, 0)])
        V = ws.rref_of(ctx, [(0, 1, 0, 0), (0, 0, 1, 0)])
        W = ws.rref_of(ctx, [(0, 0, 1, 0), (0, 0, 0, 1)])
        self.assertEqual(ws.intersection_dim(U, V), 1)
        self.assertEqual(ws.subspace_distance(U, V), 2)
        self.assertEqual(ws.subspace_distance(U, W), 4)
        self.assertEqual(ws.subspace_distance(U, U), 0)

        other = ws.rref_of(build_field(2, 4, poly=(1, 0, 0, 1, 1)), [(1, 0, 0, 0)])
        err = 'different fields'
        with self.assertRaises(Exception) as context:
            ws.subspace_distance(U, other)
        self.assertTrue(err in str(context.exception))

    def test_pivot_profile(self):
        ctx = build_field(2, 4)
        X = ws.rref_of(ctx, [(1, 0, 1, 0), (0, 1, 0, 0)])
        prof = ws.pivot_profile(X)
        self.assertEqual(prof.v, (1, 1, 0, 0))
        self.assertEqual(prof.I, (2, 3))
        self.assertEqual(prof.CP.tolist(), [[0, 0, 1, 0], [0, 0, 0, 1]])

    def test_grassmannian(self):
        ctx = build_field(2, 4)
        g = ws.enumerate_grassmannian(ctx, 2)
        self.assertEqual(len(g), 35)
        self.assertEqual(len(set(g)), 35)
        self.assertEqual(g[0].serialize(), ['1000', '0100'])
        self.assertEqual(g[1].serialize(), ['1010', '0100'])
        self.assertEqual(g[-1].serialize(), ['0010', '0001'])

        self.assertEqual(len(ws.enumerate_grassmannian(build_field(2, 3), 2)), 7)
        self.assertEqual(len(ws.enumerate_grassmannian(build_field(3, 2), 1)), 4)
        self.assertEqual(len(ws.enumerate_grassmannian(ctx, 0)), 1)

        with self.assertRaises(cap_exceeded):
            ws.enumerate_grassmannian(ctx, 2, cap=10)

        err = 'out of range'
        with self.assertRaises(Exception) as context:
            ws.enumerate_grassmannian(ctx, 5)
        self.assertTrue(err in str(context.exception))

    def test_canonical_round_trip(self):
        ctx = build_field(2, 4)
        for X in ws.enumerate_grassmannian(ctx, 2):
            vecs = ws.element_vectors(X)
            self.assertEqual(ws.rref_of(ctx, vecs), X)
            elems = set(ws.elements(X))
            self.assertEqual(len(elems), 4)
            for a in elems:
                for b in elems:
                    self.assertTrue(ctx.add(a, b) in elems)

    def test_grassmannian_size(self):
        for n in range(1, 5):
            ctx = build_field(2, n)
            for k in range(n + 1):
                self.assertEqual(len(ws.enumerate_grassmannian(ctx, k)), gaussian(n, k, 2))

    def test_triangle_inequality(self):
        ctx = build_field(2, 4)
        words = ws.enumerate_grassmannian(ctx, 1) + ws.enumerate_grassmannian(ctx, 2)
        dist = np.array([[ws.subspace_distance(U, V) for V in words] for U in words])
        # d(u, w) <= d(u, v) + d(v, w) for every triple (u, v, w).
        self.assertTrue(np.all(dist[:, None, :] <= dist[:, :, None] + dist[None, :, :]))

    def test_cyclic_shift(self):
        ctx = build_field(2, 4)
        X = ws.rref_of(ctx, [ctx.vector_of(ctx.power(e)) for e in (0, 5, 10)])
        self.assertEqual(X.k, 2)
        self.assertEqual(ws.cyclic_shift(X),
                         ws.rref_of(ctx, [ctx.vector_of(ctx.power(e)) for e in (1, 6, 11)]))

    def test_parse_errors(self):
        ctx = build_field(2, 3)
        err = 'outside F_2'
        with self.assertRaises(Exception) as context:
            ws.parse_subspace(ctx, ['102'])
        self.assertTrue(err in str(context.exception))

        err = 'Malformed subspace row'
        with self.assertRaises(Exception) as context:
            ws.parse_subspace(ctx, ['10'])
        self.assertTrue(err in str(context.exception))


if __name__ == '__main__':
    unittest.main()
