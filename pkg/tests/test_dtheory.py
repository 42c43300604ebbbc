import random
from fractions import Fraction

import pytest

from liegraph.algebra import Derivation, abelian, derivation_algebra
from liegraph.catalog import catalog, lookup
from liegraph.dtheory import (build_h, d_algebra, d_bracket, d_center,
                              d_derivations, der_action, inner_d_derivation,
                              is_d_complete)
from liegraph.linalg import Matrix, Subspace

F = Fraction


@pytest.fixture(scope="module")
def sl2():
    return lookup("sl2").algebra


@pytest.fixture(scope="module")
def sl2_setup(sl2):
    der = derivation_algebra(sl2)
    return sl2, der, d_derivations(sl2, der)


def rand_vec(rng, n):
    return [F(rng.randint(-4, 4), rng.choice([1, 1, 2, 3])) for _ in range(n)]


class TestDDerivations:
    def test_abelian1_everything_qualifies(self):
        g = abelian(1)
        space = d_derivations(g)
        assert space.der.dim == 1 and space.dim == 1

    def test_sl2_dimension_and_innerness(self, sl2_setup):
        _, _, space = sl2_setup
        assert space.dim == 3
        assert space.inner == space.flat_span

    def test_basis_satisfies_cocycle_identity(self):
        for entry in catalog():
            space = d_derivations(entry.algebra)
            assert all(l.is_cocycle() for l in space.basis), entry.name

    def test_inner_maps_lie_in_span(self):
        for entry in catalog():
            g = entry.algebra
            space = d_derivations(g)
            for i in range(g.dim):
                x = [1 if t == i else 0 for t in range(g.dim)]
                lx = inner_d_derivation(g, space.der, x)
                assert space.flat_span.contains_vector(lx.matrix.flatten()), entry.name


class TestDCenter:
    @pytest.mark.parametrize("name", ["abelian1", "abelian2", "abelian3",
                                      "affine2", "heisenberg3", "sl2",
                                      "sl2_plus_abelian1"])
    def test_trivial_on_catalog(self, name):
        g = lookup(name).algebra
        assert d_center(g).dim == 0


class TestInnerDDerivation:
    def test_zero_vector_gives_zero_map(self, sl2_setup):
        g, der, _ = sl2_setup
        assert inner_d_derivation(g, der, [0, 0, 0]).matrix.is_zero()

    def test_kernel_equals_d_center(self):
        for entry in catalog():
            g = entry.algebra
            der = derivation_algebra(g)
            rows = [inner_d_derivation(g, der,
                                       [1 if t == i else 0 for t in range(g.dim)]
                                       ).matrix.flatten()
                    for i in range(g.dim)]
            kernel_dim = g.dim - Subspace.from_rows(g.dim * der.dim, rows).dim
            assert kernel_dim == d_center(g, der).dim, entry.name

    def test_sl2_l_h_golden(self, sl2_setup):
        g, der, _ = sl2_setup
        lh = inner_d_derivation(g, der, [1, 0, 0])
        assert lh.matrix == Matrix(3, 3, [0, 0, 0, 0, 2, 0, 2, 0, 0])


class TestDBracket:
    def test_self_bracket_vanishes(self, sl2_setup):
        _, _, space = sl2_setup
        for l in space.basis:
            assert d_bracket(l, l).matrix.is_zero()

    def test_abelian_brackets_vanish(self):
        g = abelian(2)
        space = d_derivations(g)
        for a in space.basis:
            for b in space.basis:
                assert d_bracket(a, b).matrix.is_zero()

    def test_inner_bracket_homomorphism_random(self, sl2_setup):
        g, der, _ = sl2_setup
        rng = random.Random(7)
        for _ in range(50):
            x, y = rand_vec(rng, 3), rand_vec(rng, 3)
            lhs = d_bracket(inner_d_derivation(g, der, x),
                            inner_d_derivation(g, der, y))
            rhs = inner_d_derivation(g, der, g.bracket(x, y))
            assert lhs.matrix == rhs.matrix

    def test_result_is_cocycle(self, sl2_setup):
        _, _, space = sl2_setup
        for a in space.basis:
            for b in space.basis:
                assert d_bracket(a, b).is_cocycle()


class TestDerAction:
    def test_zero_derivation_acts_as_zero(self, sl2_setup):
        g, der, space = sl2_setup
        zero = Derivation(g, Matrix.zero(3, 3))
        for l in space.basis:
            assert der_action(zero, l).matrix.is_zero()

    def test_action_on_inner_random(self, sl2_setup):
        g, der, _ = sl2_setup
        rng = random.Random(11)
        for _ in range(50):
            x = rand_vec(rng, 3)
            d = Derivation(g, der.matrix_of(rand_vec(rng, der.dim)))
            lhs = der_action(d, inner_d_derivation(g, der, x))
            rhs = inner_d_derivation(g, der, d.matrix.apply(x))
            assert lhs.matrix == rhs.matrix

    def test_sl2_adh_on_l_e_golden(self, sl2_setup):
        g, der, _ = sl2_setup
        adh = Derivation(g, g.ad([1, 0, 0]))
        le = inner_d_derivation(g, der, [0, 1, 0])
        acted = der_action(adh, le)
        l2e = inner_d_derivation(g, der, [0, 2, 0])
        assert acted.matrix == l2e.matrix
        assert acted.matrix == Matrix(3, 3, [-2, 0, 0, 0, 0, -2, 0, 0, 0])

    def test_lands_in_cocycle_space(self, sl2_setup):
        g, der, space = sl2_setup
        for d in der.basis:
            for l in space.basis:
                assert der_action(d, l).is_cocycle()


class TestDAlgebra:
    def test_abelian1(self):
        alg = d_algebra(abelian(1))
        assert alg.dim == 1 and not any(alg.table[0][0])

    def test_sl2_isomorphic_under_inner_map(self, sl2_setup):
        g, der, space = sl2_setup
        # x -> L_x is a bracket homomorphism; transport sl2's table through it
        imgs = [inner_d_derivation(g, der, [1 if t == i else 0 for t in range(3)])
                for i in range(3)]
        for i in range(3):
            for j in range(3):
                lhs = d_bracket(imgs[i], imgs[j])
                rhs = inner_d_derivation(g, der, g.table[i][j])
                assert lhs.matrix == rhs.matrix

    def test_table_is_antisymmetric(self):
        for entry in catalog():
            alg = d_algebra(entry.algebra)
            for i in range(alg.dim):
                for j in range(alg.dim):
                    assert alg.table[i][j] == tuple(-c for c in alg.table[j][i])


class TestBuildH:
    def test_abelian1_two_dimensional(self):
        h = build_h(abelian(1))
        assert h.algebra.dim == 2
        # [(D,0),(0,L)] = (0, D(L)); here both generators are the scalar 1
        assert h.algebra.table[0][1] == (F(0), F(1))

    def test_der_embedding_is_subalgebra(self, sl2):
        h = build_h(sl2)
        m = h.der.dim
        for i in range(m):
            for j in range(m):
                assert not any(h.algebra.table[i][j][m:])
                assert h.algebra.table[i][j][:m] == h.der.as_lie_algebra.table[i][j]

    def test_cocycle_embedding_is_subalgebra(self, sl2):
        h = build_h(sl2)
        m, p = h.der.dim, h.dspace.dim
        for i in range(p):
            for j in range(p):
                assert not any(h.algebra.table[m + i][m + j][:m])
                assert (h.algebra.table[m + i][m + j][m:]
                        == h.dspace.as_lie_algebra.table[i][j])


class TestDCompleteness:
    def test_abelian1(self):
        ev = is_d_complete(abelian(1))
        assert ev.d_complete
        assert (ev.d_center_dim, ev.d_space_dim, ev.inner_d_dim) == (0, 1, 1)

    def test_sl2(self, sl2):
        ev = is_d_complete(sl2)
        assert ev.d_complete and ev.d_space_dim == ev.inner_d_dim == 3

    def test_heisenberg3_pinned(self):
        # regression values frozen from an independent brute-force solve
        ev = is_d_complete(lookup("heisenberg3").algebra)
        assert (ev.d_center_dim, ev.d_space_dim, ev.inner_d_dim) == (0, 3, 3)
        assert ev.d_complete
