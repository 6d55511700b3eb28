import numpy as np
import pytest

from mixedsums import (
    MultChar,
    ZeroArgument,
    all_chars,
    build_field,
    gauss,
    jacobi,
    make_context,
    mixed_table,
    state_vector,
)
from mixedsums import mellin as ml
from mixedsums.mellin import FourthPowerTrivial
from oracles import chi_val


def test_mellin_v_vanishes_off_fourth_powers(f13):
    for a in (1, 2):
        ctx = make_context(f13, a)
        for chi in all_chars(f13):
            if chi.m % 4 != 0:
                assert abs(ml.mellin_v_direct(ctx, chi)) < 1e-10


def test_mellin_v_direct_equals_closed(f13, f9):
    for f in (f13, f9):
        for a in (1, f.g):
            ctx = make_context(f, a)
            for chi in all_chars(f):
                direct = ml.mellin_v_direct(ctx, chi)
                assert abs(direct - ml.mellin_v_closed(ctx, chi)) < 1e-9


def test_mellin_v_trivial_char_is_plain_sum(f13):
    ctx = make_context(f13, 3)
    eps = MultChar(f13, 0)
    assert abs(ml.mellin_v_direct(ctx, eps) - state_vector(ctx)[1:].sum()) < 1e-10


def test_mellin_v_octic_form(f17):
    for a in (1, 3, 5):
        ctx = make_context(f17, a)
        phi = ctx.phi
        octic = ml.mellin_v_octic(ctx)
        assert abs(octic - ml.mellin_v_closed(ctx, phi)) < 1e-9
        assert abs(octic - ml.mellin_v_direct(ctx, phi)) < 1e-9


def test_mellin_v_closed_root_shift(f13):
    ctx = make_context(f13, 2)
    for nu in all_chars(f13):
        a_val = ml.mellin_v_closed_root(ctx, nu)
        b_val = ml.mellin_v_closed_root(ctx, nu * ctx.A4)
        assert abs(a_val - b_val) < 1e-10


def test_v_moment_sum_oracle(f13):
    ctx = make_context(f13, 1)
    lam = MultChar(f13, 1)
    total = 0.0
    for x in range(1, 13):
        arg = int(f13.add(x, f13.mul(1, f13.inv(x))))
        total += chi_val(f13, 3, x) * chi_val(f13, -1, arg)
    assert abs(ml.v_moment_sum(ctx, lam) - total) < 1e-10


def test_v_moment_jacobi_form(f13):
    # for lam = nu^2 conj(A4) with lam^2 nontrivial:
    # Y(lam) = conj(nu)(a) {A4(a) J(nu, nu conj(A4)) + conj(A4)(a) J(nu phi, nu A4)}
    for a in (1, 2, 5):
        ctx = make_context(f13, a)
        A4, phi = ctx.A4, ctx.phi
        for nu in all_chars(f13):
            lam = (nu**2) * A4.conj()
            if (lam**2).is_trivial():
                continue
            rhs = nu.conj()(a) * (
                A4(a) * jacobi(nu, nu * A4.conj()) + A4.conj()(a) * jacobi(nu * phi, nu * A4)
            )
            assert abs(ml.v_moment_sum(ctx, lam) - rhs) < 1e-9


def test_mellin_p0_direct_equals_closed(f13):
    f17 = build_field(17, 1)
    for f, a_list in ((f13, (1, 2, 6)), (f17, (3,))):
        for a in a_list:
            ctx = make_context(f, a)
            for chi in all_chars(f):
                direct = ml.mellin_p0_direct(ctx, chi)
                assert abs(direct - ml.mellin_p0_closed(ctx, chi)) < 1e-9


def test_mellin_p0_trivial_case(f13):
    ctx = make_context(f13, 4)
    eps = MultChar(f13, 0)
    plain = mixed_table(ctx)[1:, 0].sum()
    assert abs(ml.mellin_p0_closed(ctx, eps) - plain) < 1e-9


def test_kummer_closed(f13, f9):
    for f, roots in ((f13, (1, 2)), (f9, (1,))):
        ctx = make_context(f, 1)
        A4 = ctx.A4
        for m in roots:
            nu = MultChar(f, m)
            lhs = ml.kummer_closed(ctx, nu)
            from mixedsums import hyp2f1

            rhs = hyp2f1(nu**2, nu * A4, nu * A4.conj(), f.neg(1))
            assert abs(lhs - rhs) < 1e-10


def test_kummer_rejects_trivial_fourth_power(f13):
    ctx = make_context(f13, 1)
    with pytest.raises(FourthPowerTrivial):
        ml.kummer_closed(ctx, MultChar(f13, 3))


def test_axis_sum_closed_cases(f13):
    # lam*A4 = nu^2 with nu^4 trivial: the axis sum collapses to
    # (q-1)(A4(a) + conj(A4)(a))
    for a in range(1, 13):
        ctx = make_context(f13, a)
        A4 = ctx.A4
        for lam in (A4.conj(), MultChar(f13, 3)):
            expect = 12 * (A4(a) + A4.conj()(a))
            assert abs(ml.axis_sum(ctx, lam) - expect) < 1e-9


def test_axis_sum_empty_locus(f13):
    # phi(-a) = -1: no x with x^2 = -a, so the sum is empty
    phi_m = 6
    for a in range(1, 13):
        ctx = make_context(f13, a)
        if abs(chi_val(f13, phi_m, int(f13.neg(a))) + 1) < 1e-9:
            assert ml.axis_sum(ctx, MultChar(f13, 1)) == 0


def test_p0_locus_sum_gauss_form(f13):
    # lam = chi_1: lam*A4 = nu^2 with nu = chi_2 and nu^4 nontrivial
    for a in (1, 2, 5):
        ctx = make_context(f13, a)
        A4, phi = ctx.A4, ctx.phi
        nu = MultChar(f13, 2)
        lam = (nu**2) * A4.conj()
        pref = A4(f13.neg(1)) * gauss(phi) / 13
        rhs = pref * gauss(nu * A4) * (nu.conj() * A4.conj())(a) * (
            gauss(nu) * gauss(A4) + gauss(nu * phi) * gauss(A4.conj())
        ) + pref * gauss(nu * A4.conj()) * (nu.conj() * A4)(a) * (
            gauss(nu * phi) * gauss(A4) + gauss(nu) * gauss(A4.conj())
        )
        assert abs(ml.p0_locus_sum(ctx, lam) - rhs) < 1e-9


def test_cross_form(f5, f13):
    ctx = make_context(f5, 1)
    assert ml.cross_form(ctx, 2, 1) == 0  # (2+1)^2 + (2-1)^2 = 10 = 0 in F_5
    ctx13 = make_context(f13, 1)
    for x in range(1, 13):
        assert ml.cross_form(ctx13, 1, x) == f13.mul(4, x)
        assert ml.cross_form(ctx13, f13.neg(1), x) == f13.mul(4, f13.inv(x))
        assert ml.cross_form(ctx13, 1, x) != 0
    with pytest.raises(ZeroArgument):
        ml.cross_form(ctx13, 1, 0)


def test_hyper_kernel_special_values(f13):
    ctx = make_context(f13, 1)
    eps = MultChar(f13, 0)
    A4, phi = ctx.A4, ctx.phi
    assert abs(ml.hyper_kernel_closed(ctx, eps, f13.i_elem) - (13 - 2)) < 1e-10
    assert abs(ml.hyper_kernel_closed(ctx, A4, 1) - jacobi(A4, phi)) < 1e-10
    # the closed special values agree with the defining sum
    for D in (eps, A4, A4.conj()):
        for j in range(1, 13):
            assert abs(ml.hyper_kernel(ctx, D, j) - ml.hyper_kernel_closed(ctx, D, j)) < 1e-9


def test_hyper_kernel_closed_everywhere(f13, f9):
    for f in (f13, f9):
        ctx = make_context(f, 1)
        js = f.units()
        for D in all_chars(f):
            direct = ml.hyper_kernel_row(ctx, D, js)
            closed = ml.hyper_kernel_closed_row(ctx, D, js)
            assert np.abs(direct - closed).max() < 1e-9


def test_hyper_kernel_rejects_zero(f13):
    ctx = make_context(f13, 1)
    with pytest.raises(ZeroArgument):
        ml.hyper_kernel(ctx, MultChar(f13, 1), 0)


def test_null_locus_sum(f13):
    g = f13.g
    for a in (1, g):
        ctx = make_context(f13, a)
        for lam1 in all_chars(f13):
            chi1 = (lam1**2) * ctx.phi
            direct = ml.null_locus_sum(ctx, lam1)
            if chi1.m % 4 == 0:
                nu1 = MultChar(f13, chi1.m // 4)
                assert abs(direct - ml.null_locus_closed(ctx, nu1)) < 1e-9
            else:
                assert abs(direct) < 1e-10


def test_cross_form_sum_oracle_q5(f5):
    ctx = make_context(f5, 1)
    lam = MultChar(f5, 1)
    chi1_m = (2 * 1 + 2) % 4  # lam^2 * phi
    total = 0.0
    for j in range(1, 5):
        for x in range(1, 5):
            ax = int(f5.mul(1, f5.inv(x)))
            alpha = int(ml.cross_form(ctx, j, x))
            total += (
                chi_val(f5, chi1_m, j)
                * chi_val(f5, 2, int(f5.sub(x, ax)))
                * chi_val(f5, -2, alpha)
            )
    assert abs(ml.cross_form_sum(ctx, lam, lam) - total) < 1e-10


def test_double_mellin_assembly_from_parts(f13):
    # G(phi)(T - (2q-2) delta) = delta (q-1) H + G(l1 l2) E(l1, l2)
    #                            + G(l1 l2 phi) E(l1, l2 phi)
    ctx = make_context(f13, 2)
    phi = ctx.phi
    g_phi = gauss(phi)
    for m1, m2 in [(0, 0), (1, 1), (2, 3), (5, 1), (3, 9)]:
        lam1, lam2 = MultChar(f13, m1), MultChar(f13, m2)
        chi1 = (lam1**2) * phi
        chi2 = (lam2**2) * phi
        d = 1 if ((lam1 * lam2) ** 2).is_trivial() else 0
        T = ml.double_mellin_direct(ctx, chi1, chi2)
        lhs = g_phi * (T - (2 * 13 - 2) * d)
        rhs = (
            d * 12 * ml.null_locus_sum(ctx, lam1)
            + gauss(lam1 * lam2) * ml.cross_form_sum(ctx, lam1, lam2)
            + gauss(lam1 * lam2 * phi) * ml.cross_form_sum(ctx, lam1, lam2 * phi)
        )
        assert abs(lhs - rhs) < 1e-8


def test_double_mellin_symmetric(f13):
    ctx = make_context(f13, 1)
    T = ml.double_mellin_matrix(ctx)
    assert np.abs(T - T.T).max() < 1e-9


def test_double_mellin_vanishes(f13):
    ctx = make_context(f13, 3)
    T = ml.double_mellin_matrix(ctx)
    for m1 in range(12):
        for m2 in range(12):
            if m1 % 4 and m2 % 4 or (m1 % 4 == 0) != (m2 % 4 == 0):
                assert abs(T[m1, m2]) < 1e-9


def test_double_mellin_direct_equals_closed(f13):
    ctx = make_context(f13, 1)
    direct = ml.double_mellin_direct(ctx, MultChar(f13, 4), MultChar(f13, 8))
    closed = ml.double_mellin_closed(ctx, MultChar(f13, 1), MultChar(f13, 2))
    assert abs(direct - closed) < 1e-9


def test_double_mellin_q17_example(f17):
    ctx = make_context(f17, 5)
    direct = ml.double_mellin_direct(ctx, MultChar(f17, 4), MultChar(f17, 12))
    closed = ml.double_mellin_closed(ctx, MultChar(f17, 1), MultChar(f17, 3))
    assert abs(direct - closed) < 1e-9


def test_double_mellin_trivial_pair(f13):
    ctx = make_context(f13, 4)
    eps = MultChar(f13, 0)
    closed = ml.double_mellin_closed(ctx, eps, eps)
    plain = mixed_table(ctx)[1:, 1:].sum()
    assert abs(closed - plain) < 1e-8


def test_double_mellin_closed_root_shift(f13):
    ctx = make_context(f13, 2)
    A4 = ctx.A4
    for m1 in range(12):
        for m2 in range(12):
            nu1, nu2 = MultChar(f13, m1), MultChar(f13, m2)
            base = ml.double_mellin_closed(ctx, nu1, nu2)
            assert abs(base - ml.double_mellin_closed(ctx, nu1 * A4, nu2)) < 1e-9


def test_pair_coeffs(f13):
    for a in (1, 2):
        ctx = make_context(f13, a)
        T = ml.double_mellin_matrix(ctx)
        A4a = ctx.A4(ctx.a)
        for nu1 in all_chars(f13):
            rj = ml.pair_coeffs(ctx, nu1)
            rg = ml.pair_coeffs_gauss(ctx, nu1)
            for x, y in zip(rj, rg):
                assert abs(x - y) < 1e-8
            if nu1.is_trivial():
                assert abs(rj[0] - (2 * 13 + 2)) < 1e-10
            assembled = sum(rj[k] * A4a**k for k in range(4))
            direct = T[(4 * nu1.m) % 12, (-4 * nu1.m) % 12]
            assert abs(assembled - direct) < 1e-8


def test_inverse_mellin(f13):
    ctx = make_context(f13, 2)
    V = state_vector(ctx)
    spectrum = {chi: ml.mellin_v_direct(ctx, chi) for chi in all_chars(f13)}
    closed = {chi: ml.mellin_v_closed(ctx, chi) for chi in all_chars(f13)}
    for j in range(1, 13):
        assert abs(ml.inverse_mellin(spectrum, j) - V[j]) < 1e-9
        assert abs(ml.inverse_mellin(closed, j) - V[j]) < 1e-9
    zeros = {chi: 0.0 for chi in all_chars(f13)}
    assert ml.inverse_mellin(zeros, 5) == 0
    with pytest.raises(ZeroArgument):
        ml.inverse_mellin(spectrum, 0)
