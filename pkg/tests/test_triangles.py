from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfpipe.errors import (
    IndexRange,
    NonPolynomialRow,
    NotTridiagonal,
    PrecisionExhausted,
    SingularDiagonal,
    UnknownOracle,
)
from gfpipe.ratfun import ONE, R, ZERO, fe
from gfpipe.series import Series, divide, from_ratfun
from gfpipe.transforms import sumudu
from gfpipe.triangles import (
    RecurrenceCoeffs,
    RiordanArray,
    SquareMatrix,
    Triangle,
    binomial_matrix,
    identity_triangle,
    matmul,
    moment_functional,
    oracle,
    oracle_triangle,
    orthopoly_triangle,
    production_matrix,
    recurrence_from_production,
    reversal,
    riordan_apply,
    riordan_to_triangle,
    triangle_from_gf,
    tri_inverse,
)

from conftest import small_ints


def tri_ints(T):
    return [[v.as_fraction() for v in row] for row in T.rows]


def _exp(prec, scale=1):
    return Series([0, scale] + [0] * (prec - 2)).exp()


def ordered_bell_pair(prec):
    one = Series.one(prec)
    den = one + (one - _exp(prec)) * R
    return divide(one, den), divide(_exp(prec) - one, den)


class TestTriangleFromGf:
    def test_a019538_egf(self):
        g, _ = ordered_bell_pair(6)
        assert tri_ints(triangle_from_gf(g, 5, "egf")) == [
            [1], [0, 1], [0, 1, 2], [0, 1, 6, 6], [0, 1, 14, 36, 24]]

    def test_eulerian2_egf(self):
        prec = 5
        er = Series([ZERO, R] + [ZERO] * (prec - 2)).exp()
        gf = divide((1 - R) * er, er - _exp(prec) * R)
        assert tri_ints(triangle_from_gf(gf, 5, "egf")) == [
            [1], [0, 1], [0, 1, 1], [0, 1, 4, 1], [0, 1, 11, 11, 1]]

    def test_constant(self):
        assert tri_ints(triangle_from_gf(Series.one(3), 3, "ogf")) == [
            [1], [0, 0], [0, 0, 0]]

    def test_degree_guard(self):
        with pytest.raises(NonPolynomialRow):
            triangle_from_gf(Series([ONE, R * R]), 2, "ogf")
        with pytest.raises(NonPolynomialRow):
            triangle_from_gf(Series([ONE, ONE / (R + 1)]), 2, "ogf")


class TestReversal:
    def test_symmetric_fixed_point(self):
        n3 = Triangle([[1], [1, 1], [1, 3, 1], [1, 6, 6, 1]])
        assert reversal(n3) == n3

    def test_eulerian_exchange(self):
        e1 = Triangle([[1], [1, 0], [1, 1, 0], [1, 4, 1, 0]])
        e2 = Triangle([[1], [0, 1], [0, 1, 1], [0, 1, 4, 1]])
        assert reversal(e1) == e2

    def test_involution(self):
        t = Triangle([[1], [2, 3], [4, 5, 6]])
        assert reversal(reversal(t)) == t


class TestMatmul:
    def test_identity(self):
        t = Triangle([[1], [R, 2], [3, R + 1, 1]])
        assert matmul(t, identity_triangle(3)) == t

    def test_a248727(self):
        a046802 = Triangle([[1], [1, 1], [1, 3, 1], [1, 7, 7, 1]])
        got = matmul(a046802, binomial_matrix(4))
        assert tri_ints(got) == [[1], [2, 1], [5, 5, 1], [16, 24, 10, 1]]

    def test_signed_a028246_to_a019538(self):
        prec = 6
        signed = triangle_from_gf(
            divide(Series.one(prec), R - (R - 1) * _exp(prec)), 5, "egf")
        got = matmul(signed, binomial_matrix(5))
        assert tri_ints(got) == [
            [1], [0, 1], [0, 1, 2], [0, 1, 6, 6], [0, 1, 14, 36, 24]]


class TestInverse:
    def test_binomial_inverse_is_signed(self):
        B = binomial_matrix(5)
        got = tri_inverse(B)
        want = Triangle([
            [(-1) ** (n - k) * (B.rows[n][k]) for k in range(n + 1)]
            for n in range(5)])
        assert got == want
        assert matmul(B, got) == identity_triangle(5)

    def test_identity(self):
        assert tri_inverse(identity_triangle(4)) == identity_triangle(4)

    def test_moment_column(self):
        # coefficient array [1/(1+rz), log((1+(r+1)z)/(1+rz))]: the inverse
        # truncation's first column holds the ordered-Bell moments
        prec = 7
        g = from_ratfun([1], [ONE, R], prec)
        f = divide(from_ratfun([ONE, R + 1], [1], prec),
                   from_ratfun([ONE, R], [1], prec)).log()
        T = riordan_to_triangle(RiordanArray(g, f, "exponential"), 5)
        inv = tri_inverse(T)
        assert [inv.rows[n][0] for n in range(5)] == [
            ONE, R, R * (R * 2 + 1), R * (R * R * 6 + R * 6 + 1),
            R * (R * R * R * 24 + R * R * 36 + R * 14 + 1)]

    def test_singular(self):
        with pytest.raises(SingularDiagonal):
            tri_inverse(Triangle([[1], [1, 0]]))


class TestBinomialMatrix:
    def test_row_four(self):
        assert [v.as_fraction() for v in binomial_matrix(5).rows[4]] == \
            [1, 4, 6, 4, 1]

    def test_inverse_product(self):
        B = binomial_matrix(6)
        assert matmul(B, tri_inverse(B)) == identity_triangle(6)

    def test_parameter_shift_action(self):
        prec = 8
        fam = from_ratfun([ONE, R - 1], [ONE, R - 1, -R], prec)
        shifted = from_ratfun([ONE, R], [ONE, R, -(R + 1)], prec)
        lhs = matmul(triangle_from_gf(fam, 8, "ogf"), binomial_matrix(8))
        assert lhs == triangle_from_gf(shifted, 8, "ogf")


class TestRiordan:
    def test_stirling2(self):
        T = riordan_to_triangle(
            RiordanArray(Series.one(6), _exp(6) - 1, "exponential"), 5)
        assert tri_ints(T) == [
            [1], [0, 1], [0, 1, 1], [0, 1, 3, 1], [0, 1, 7, 6, 1]]

    def test_scaled_stirling(self):
        T = riordan_to_triangle(
            RiordanArray(Series.one(6), (_exp(6, 2) - 1) / 2, "exponential"), 5)
        want = [[oracle("stirling2", n, k).as_fraction() * 2 ** (n - k)
                 for k in range(n + 1)] for n in range(5)]
        assert tri_ints(T) == want

    def test_pascal_as_riordan(self):
        T = riordan_to_triangle(
            RiordanArray(from_ratfun([1], [1, -1], 5),
                         from_ratfun([0, 1], [1, -1], 5), "ordinary"), 5)
        assert T == binomial_matrix(5)

    def test_apply_stretched(self):
        prec = 5
        f = from_ratfun([0, 0, 1], [1, -2], prec)
        h = from_ratfun([1], [ONE, -R], prec)
        got = riordan_apply(RiordanArray(Series.one(prec), f, "ordinary"), h)
        assert list(got) == [ONE, ZERO, R, R * 2, R * R + R * 4]

    def test_apply_identity(self):
        h = Series([1, R, fe(3), fe(-1), R + 2])
        ident = RiordanArray(Series.one(5), Series.x(5), "ordinary")
        assert riordan_apply(ident, h) == h

    def test_apply_partial_sums(self):
        h = Series([1, 2, 3, 4])
        psum = RiordanArray(from_ratfun([1], [1, -1], 4), Series.x(4),
                            "ordinary")
        assert [v.as_fraction() for v in riordan_apply(psum, h)] == \
            [1, 3, 6, 10]

    def test_group_product_coherence(self):
        # triangle of a Riordan product equals the product of triangles
        prec, rows = 7, 6
        g1 = from_ratfun([1], [1, -1], prec)
        f1 = from_ratfun([0, 1], [1, -1], prec)
        g2 = from_ratfun([1, 1], [1], prec)
        f2 = Series([0, 1, 2, 1] + [0] * (prec - 4))
        prod_g = g1 * g2.compose(f1)
        prod_f = f2.compose(f1)
        lhs = riordan_to_triangle(RiordanArray(prod_g, prod_f, "ordinary"), rows)
        rhs = matmul(
            riordan_to_triangle(RiordanArray(g1, f1, "ordinary"), rows),
            riordan_to_triangle(RiordanArray(g2, f2, "ordinary"), rows),
        )
        assert lhs == rhs

    @given(st.lists(small_ints, min_size=2, max_size=4),
           st.lists(small_ints, min_size=1, max_size=3),
           st.lists(small_ints, min_size=2, max_size=4),
           st.lists(small_ints, min_size=1, max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_group_product_coherence_random(self, g1c, f1c, g2c, f2c):
        prec, rows = 6, 5
        g1 = Series([1] + g1c + [0] * (prec - 1 - len(g1c)))
        f1 = Series([0, 1] + f1c + [0] * (prec - 2 - len(f1c)))
        g2 = Series([1] + g2c + [0] * (prec - 1 - len(g2c)))
        f2 = Series([0, 1] + f2c + [0] * (prec - 2 - len(f2c)))
        lhs = riordan_to_triangle(
            RiordanArray(g1 * g2.compose(f1), f2.compose(f1), "ordinary"),
            rows)
        rhs = matmul(
            riordan_to_triangle(RiordanArray(g1, f1, "ordinary"), rows),
            riordan_to_triangle(RiordanArray(g2, f2, "ordinary"), rows))
        assert lhs == rhs

    @given(st.lists(small_ints, min_size=2, max_size=4),
           st.lists(small_ints, min_size=1, max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_inverse_coherence_random(self, gc, fc):
        prec, rows = 6, 5
        g = Series([1] + gc + [0] * (prec - 1 - len(gc)))
        f = Series([0, 1] + fc + [0] * (prec - 2 - len(fc)))
        fbar = f.revert()
        lhs = riordan_to_triangle(
            RiordanArray(divide(Series.one(prec), g.compose(fbar)), fbar,
                         "ordinary"), rows)
        rhs = tri_inverse(riordan_to_triangle(RiordanArray(g, f, "ordinary"),
                                              rows))
        assert lhs == rhs

    def test_riordan_inverse_matches_triangle_inverse(self):
        prec, rows = 7, 6
        g = from_ratfun([1, 1], [1], prec)
        f = from_ratfun([0, 1], [1, 1], prec)
        fbar = f.revert()
        inv_g = divide(Series.one(prec), g.compose(fbar))
        inv_f = fbar
        lhs = riordan_to_triangle(RiordanArray(inv_g, inv_f, "ordinary"), rows)
        rhs = tri_inverse(riordan_to_triangle(RiordanArray(g, f, "ordinary"), rows))
        assert lhs == rhs


class TestProductionMatrix:
    def test_ordered_bell(self):
        g, f = ordered_bell_pair(8)
        P = production_matrix(RiordanArray(g, f, "exponential"), 6)
        rr1 = R * (R + 1)
        assert P.rows[0][:3] == (R, ONE, ZERO)
        assert P.rows[1][:3] == (rr1, R * 3 + 1, ONE)
        assert P.rows[2][:4] == (ZERO, rr1 * 4, R * 5 + 2, ONE)
        assert P.rows[5][4:] == (rr1 * 25, R * 11 + 5)

    def test_galton(self):
        prec = 8
        one = Series.one(prec)
        den = one + (one - _exp(prec, 2)) * R
        g = den.pow_rational(Fraction(-1, 2))
        f = divide(_exp(prec, 2) - one, den * 2)
        P = production_matrix(RiordanArray(g, f, "exponential"), 6)
        rr1 = R * (R + 1)
        assert P.rows[1][:2] == (rr1 * 2, R * 5 + 2)
        assert P.rows[2][1:3] == (rr1 * 12, R * 9 + 4)
        assert P.rows[5][4:] == (rr1 * 90, R * 21 + 10)

    def test_descent_family(self):
        prec = 7
        one = Series.one(prec)
        den = one + (one - _exp(prec)) * (R * 2)
        g = den.pow_rational(Fraction(-1, 2))
        f = divide(_exp(prec) - one, den)
        P = production_matrix(RiordanArray(g, f, "exponential"), 5)
        w = R * (R * 2 + 1)
        assert P.rows[0][:2] == (R, ONE)
        assert P.rows[1][:2] == (w, R * 5 + 1)
        assert P.rows[2][1:3] == (w * 6, R * 9 + 2)
        assert P.rows[4][3:] == (w * 28, R * 17 + 4)


class TestRecurrence:
    def test_ordered_bell_coeffs(self):
        g, f = ordered_bell_pair(8)
        rc = recurrence_from_production(
            production_matrix(RiordanArray(g, f, "exponential"), 6))
        assert list(rc.alpha[:3]) == [R, R * 3 + 1, R * 5 + 2]
        assert list(rc.beta[:3]) == [R * (R + 1), R * (R + 1) * 4,
                                     R * (R + 1) * 9]

    def test_diagonal_only(self):
        P = SquareMatrix([[2, 1, 0], [0, 3, 1], [0, 0, 4]])
        rc = recurrence_from_production(P)
        assert all(v.is_zero() for v in rc.beta)

    def test_not_tridiagonal(self):
        with pytest.raises(NotTridiagonal):
            recurrence_from_production(
                SquareMatrix([[1, 1, 1], [1, 1, 1], [0, 1, 1]]))
        with pytest.raises(NotTridiagonal):
            recurrence_from_production(SquareMatrix([[1, 2], [1, 1]]))


class TestOrthopoly:
    def test_first_rows(self):
        rc = RecurrenceCoeffs([R, R * 3 + 1], [R * (R + 1)])
        T = orthopoly_triangle(rc, 3)
        assert T.rows[1] == (-R, ONE)
        # (x - (3r+1))(x - r) - r(r+1)
        assert T.rows[2] == (R * R * 2, -(R * 4 + 1), ONE)

    def test_zero_recurrence_gives_powers(self):
        rc = RecurrenceCoeffs([0, 0, 0], [0, 0])
        T = orthopoly_triangle(rc, 4)
        assert T == Triangle([[1], [0, 1], [0, 0, 1], [0, 0, 0, 1]])


def _family_orthogonality(g, f, size=6):
    rc = recurrence_from_production(
        production_matrix(RiordanArray(g, f, "exponential"), size))
    polys = orthopoly_triangle(rc, size)
    moments = sumudu(g)
    for n in range(size):
        for m in range(n):
            assert moment_functional(moments, polys.rows[n], polys.rows[m]) \
                == ZERO
        norm = moment_functional(moments, polys.rows[n], polys.rows[n])
        want = ONE
        for k in range(n):
            want = want * rc.beta[k]
        assert norm == want


class TestMoments:
    def test_mu0(self):
        moments = Series([1, 1, 3, 13])
        assert moment_functional(moments, [1], [1]) == ONE

    def test_orthogonality_values(self):
        g, f = ordered_bell_pair(8)
        rc = recurrence_from_production(
            production_matrix(RiordanArray(g, f, "exponential"), 4))
        polys = orthopoly_triangle(rc, 3)
        moments = sumudu(g)
        assert moment_functional(moments, polys.rows[1], polys.rows[0]) == ZERO
        assert moment_functional(moments, polys.rows[1], polys.rows[1]) \
            == R * (R + 1)

    def test_precision_guard(self):
        with pytest.raises(PrecisionExhausted):
            moment_functional(Series([1, 1]), [0, 1], [0, 1])

    def test_ordered_bell_family(self):
        g, f = ordered_bell_pair(12)
        _family_orthogonality(g, f)

    def test_galton_family(self):
        prec = 12
        one = Series.one(prec)
        den = one + (one - _exp(prec, 2)) * R
        _family_orthogonality(den.pow_rational(Fraction(-1, 2)),
                              divide(_exp(prec, 2) - one, den * 2))

    def test_descent_family(self):
        prec = 12
        one = Series.one(prec)
        den = one + (one - _exp(prec)) * (R * 2)
        _family_orthogonality(den.pow_rational(Fraction(-1, 2)),
                              divide(_exp(prec) - one, den))


class TestOracle:
    def test_spot_values(self):
        assert oracle("N3", 6, 3).as_fraction() == 175
        assert oracle("E3", 4, 1).as_fraction() == 26
        assert oracle("A096078", 3, 2).as_fraction() == 34

    def test_unknown_and_range(self):
        with pytest.raises(UnknownOracle):
            oracle("nope", 1, 1)
        with pytest.raises(IndexRange):
            oracle("N1", 2, 3)

    def test_etude2_coefficients(self):
        assert oracle("etude2_seq", 4, 1).as_fraction() == 4
        assert oracle("etude2_seq", 6, 2).as_fraction() == 12
        assert oracle("etude2_seq", 6, 3).as_fraction() == 1

    def test_oracles_match_gf_routes(self):
        prec = 8
        fam = from_ratfun([ONE, R - 1], [ONE, R - 1, -R], prec)
        g, _ = ordered_bell_pair(prec)
        pairs = [
            ("N1", triangle_from_gf(
                from_ratfun([ONE, -R], [ONE, -(R - 1)], prec).gf_revert(),
                7, "ogf")),
            ("N2", triangle_from_gf(
                from_ratfun([1, -1], [ONE, R - 1], prec).gf_revert(),
                7, "ogf")),
            ("N3", triangle_from_gf(
                from_ratfun([1], [ONE, R + 1, R], prec).gf_revert(), 7, "ogf")),
            ("A019538", triangle_from_gf(g, 7, "egf")),
            ("galton", triangle_from_gf(
                (Series.one(prec) + (Series.one(prec) - _exp(prec, 2)) * R)
                .pow_rational(Fraction(-1, 2)), 7, "egf")),
        ]
        for name, built in pairs:
            assert built == oracle_triangle(name, 7), name

    def test_a096078_diagonal(self):
        T = oracle_triangle("A096078", 5)
        assert [T.rows[n][n].as_fraction() for n in range(5)] == \
            [1, 1, 4, 34, 496]


class TestSquareMatrixApply:
    def test_path_graph_image(self):
        rows = [[1 if (j == i or (j < i and j % 2 == 0)) else 0
                 for j in range(8)] for i in range(8)]
        M = SquareMatrix(rows)
        image = M.apply([1, -1, 2, -3, 6, -9, 18, -27])
        assert [v.as_fraction() for v in image] == [1, 0, 3, 0, 9, 0, 27, 0]
