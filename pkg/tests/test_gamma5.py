from __future__ import annotations

import math
import random
import time

import pytest

from thetagroup5 import gamma5 as g5
from thetagroup5.arith import InvalidArgument, ResidueMatrix, RootOfUnity, SL2Matrix, lambda_N, random_sl2
from thetagroup5.eta import nu_eta
from thetagroup5.gamma5 import Cusp, ResidueCase

T, S, I = SL2Matrix.T(), SL2Matrix.S(), SL2Matrix.identity()
T5 = SL2Matrix.T(5)


class TestMembership:
    def test_examples(self):
        assert all(g5.in_gamma_theta_N(I, n) for n in range(1, 30))
        assert not g5.in_gamma_theta_N(T, 5)
        assert not g5.in_gamma_theta_N(SL2Matrix(2, 3, 1, 2), 5)
        assert not g5.in_gamma_theta_N(SL2Matrix(5, 12, 2, 5), 5)
        with pytest.raises(InvalidArgument):
            g5.in_gamma_theta_N(I, 0)

    def test_residue_cases(self):
        assert g5.residue_case(T5) is ResidueCase.PLUS_I
        assert g5.residue_case(S) is ResidueCase.PLUS_S
        assert g5.residue_case(-S) is ResidueCase.MINUS_S
        assert g5.residue_case(SL2Matrix(6, 5, 25, 21)) is ResidueCase.PLUS_I
        with pytest.raises(g5.NotAMember):
            g5.residue_case(T)

    def test_characterisation_fuzz(self):
        rng = random.Random(0)
        residues = {c.residue for c in ResidueCase}
        for _ in range(10_000):
            m = random_sl2(rng, 10**6)
            assert g5.in_gamma_theta_N(m, 5) == (lambda_N(m, 5).entries() in residues)

    def test_case_parse(self):
        assert ResidueCase.parse("-s") is ResidueCase.MINUS_S
        assert ResidueCase.parse("+I") is ResidueCase.PLUS_I
        with pytest.raises(InvalidArgument):
            ResidueCase.parse("T")


class TestExponents:
    def test_spot(self):
        assert g5.f_exponent(T5) == 12 and g5.g_exponent(T5) == 8
        assert g5.f_exponent(S) == 5 and g5.g_exponent(S) == 5
        assert g5.f_exponent(I) == 0 and g5.g_exponent(I) == 0

    def test_product_spot(self):
        assert g5.product_A_exponent(T5) == -12
        assert g5.nu_product_A(T5) == nu_eta(T5) ** 6 * RootOfUnity(-12, 5)
        assert g5.nu_product_A(S) == RootOfUnity(-6, 4) * RootOfUnity(-1)
        assert g5.product_B_exponent(T5) == -8 and g5.product_B_exponent(S) == -5

    def test_nu_F_spot(self):
        assert g5.nu_F(T5, 1) == RootOfUnity(2, 5)
        assert g5.nu_F(S, 5) == RootOfUnity(1)
        assert g5.nu_F(S, 1) == RootOfUnity(1)
        assert all(g5.nu_F(m, 0).is_one() for m in (T5, S, -S))

    def test_k_reduced_mod_10(self):
        for m in g5.sample_members(ResidueCase.MINUS_I, 20, 500, seed=1):
            for k in range(-15, 25):
                assert g5.nu_F(m, k) == g5.nu_F(m, k % 10)

    def test_integrality_on_members(self):
        for case in ResidueCase:
            for m in g5.sample_members(case, 500, 10**6, seed=2):
                g5.f_exponent(m), g5.g_exponent(m)

    def test_non_member_rejected(self):
        with pytest.raises(g5.NotAMember):
            g5.nu_F(T, 1)
        with pytest.raises(g5.NotAMember):
            g5.nu_product_B(SL2Matrix(2, 1, 1, 1))

    def test_nu_F_is_character(self):
        mats = g5.sample_members(ResidueCase.PLUS_S, 10, 300, seed=5) + g5.sample_members(ResidueCase.MINUS_I, 10, 300, seed=6)
        for x in mats:
            for y in mats:
                assert g5.nu_F(x @ y) == g5.nu_F(x) * g5.nu_F(y)
                assert g5.nu_G(x @ y) == g5.nu_G(x) * g5.nu_G(y)

    def test_multiplier_front_end(self):
        r = g5.multiplier("F", T5)
        assert r.value == RootOfUnity(r.exponent, 5) and r.case is ResidueCase.PLUS_I
        r = g5.multiplier("a", S)
        assert r.value == nu_eta(S) ** r.eta_power * RootOfUnity(r.exponent, 5)
        with pytest.raises(InvalidArgument):
            g5.multiplier("Q", S)


class TestNumerics:
    @pytest.mark.parametrize("system", "ABFG")
    def test_transformation_laws(self, system):
        for case in ResidueCase:
            for m in g5.sample_members(case, 3, 60, seed=9):
                assert g5.verify_multiplier(system, m, "0+1i", 128) < 1e-23

    def test_F_at_i_finite(self):
        value = g5.F_numeric("0+1i", 128)
        assert 0 < abs(value) < 1e6
        assert 0 < abs(g5.G_numeric("0+1i", 128)) < 1e6

    def test_ill_conditioned(self):
        # close to the real axis the theta product drops below 2^(-prec/2)
        with pytest.raises(g5.IllConditioned):
            g5.F_numeric("0+0.0004i", 64)


class TestKernels:
    def test_examples(self):
        assert not g5.kernel_member_F(T5, 1)
        assert g5.kernel_member_F(SL2Matrix.T(25), 1)
        assert g5.kernel_member_F(S, 2)
        assert not g5.kernel_member_F(S, 5)

    def test_congruences_against_exponents(self):
        for case in ResidueCase:
            for m in g5.sample_members(case, 200, 10**4, seed=3):
                for k in range(10):
                    assert g5.kernel_member_F(m, k) == ((k * g5.f_exponent(m)) % 10 == 0)
                    assert g5.kernel_member_G(m, k) == ((k * g5.g_exponent(m)) % 10 == 0)
                    assert g5.kernel_member_F(m, k) == g5.kernel_member_G(m, k)

    def test_residue_list_sizes(self):
        assert g5.kernel_residue_list(0) is None
        assert len(g5.kernel_residue_list(1)) == 50
        assert len(g5.kernel_residue_list(2)) == 100
        assert len(g5.kernel_residue_list(5)) == 250

    def test_residue_lists_are_exact(self):
        # index counts: the image of Gamma_theta,5 mod 25 has 15000 / 30 = 500 elements
        image = [r for r in g5._sl2_mod(25) if g5.lambda_N_residue(r, 5) in [c.residue for c in ResidueCase]]
        assert len(image) == 500
        rng = random.Random(7)
        for k in (1, 2, 5):
            listed = {r.entries() for r in g5.kernel_residue_list(k)}
            members = {r.entries() for r in image if g5.kernel_member_F(g5.lift_residue(r, 5000, rng), k)}
            assert listed == members

    def test_lift_residue_infeasible(self):
        with pytest.raises(InvalidArgument):
            g5.lift_residue(ResidueMatrix(6, 5, 5, 21, 25), 3, random.Random(0))


class TestCosets:
    def test_gamma1_table(self):
        table = g5.coset_reps_gamma1()
        assert len(table) == 30
        assert table.reps[0] == I
        assert SL2Matrix(5, 12, 2, 5) in table.reps
        assert table.certificate["complete"] and table.certificate["pairwise_inequivalent"]

    def test_printed_entry_is_not_unimodular(self):
        from thetagroup5.tables import GAMMA1_COSET_REPS_AS_PRINTED
        a, b, c, d = GAMMA1_COSET_REPS_AS_PRINTED
        assert a * d - b * c == -9

    def test_locate(self):
        table = g5.coset_reps_gamma1()
        rng = random.Random(1)
        for _ in range(100):
            m = random_sl2(rng, 1000)
            i = table.locate(m)
            assert g5.in_gamma_theta_5(m @ table.reps[i].inverse())

    @pytest.mark.parametrize("k", range(10))
    def test_kernel_transversals(self, k):
        table = g5.coset_reps_kernel(k)
        assert table.certificate["distinct_values"] and table.certificate["enumerates_image"]
        assert table.pairwise_inequivalent()
        assert len(table) == len(g5.nu_F_image(k))

    def test_kernel_index(self):
        assert [len(g5.nu_F_image(k)) for k in range(10)] == [1, 10, 5, 10, 5, 2, 5, 10, 5, 10]

    def test_printed_transversal_for_k5(self):
        c = g5.certify_kernel_transversal(g5.printed_kernel_transversal(5), 5)
        assert c["enumerates_image"] and {g5.nu_F(m, 5) for m in g5.printed_kernel_transversal(5)} == {RootOfUnity(0), RootOfUnity(1)}

    def test_cusp_orbits_on_cosets(self):
        assert g5.cusp_count_from_cosets() == 6


@pytest.fixture(scope="module")
def result():
    return g5.cusps(bound=12)


class TestCusps:
    def test_decided(self, result):
        assert result.decided and result.status == "decided"

    def test_separations(self, result):
        assert result.class_of(Cusp(1, 0)) != result.class_of(Cusp(-1, 1))
        assert result.class_of(Cusp(1, 2)) != result.class_of(Cusp(-1, 2))

    def test_witnessed_identifications(self, result):
        gamma = SL2Matrix(-5, 6, 4, -5)
        assert g5.in_gamma_theta_5(gamma)
        assert Cusp(*gamma.act_cusp(3, 2)) == Cusp(-3, 2)
        assert result.class_of(Cusp(3, 2)) == result.class_of(Cusp(-3, 2))
        assert result.class_of(Cusp(5, 2)) == result.class_of(Cusp(-5, 2))

    def test_count_agrees_with_cosets(self, result):
        assert len(result.reps) == g5.cusp_count_from_cosets()

    def test_invariant_constant_on_classes(self, result):
        for members in result.classes:
            assert len({g5.cusp_invariant(c) for c in members}) == 1

    def test_small_bound_is_undecided_or_consistent(self):
        r = g5.cusps(bound=2, element_bound=3)
        assert r.status in ("decided", "undecided")
        if not r.decided:
            assert r.reps == []


class TestSampling:
    @pytest.mark.parametrize("case", list(ResidueCase))
    def test_postcondition(self, case):
        for m in g5.sample_members(case, 200, 50, seed=4):
            assert g5.in_gamma_theta_5(m) and g5.residue_case(m) is case
            assert max(map(abs, m.entries())) <= 50

    def test_seeded(self):
        assert g5.sample_members(ResidueCase.PLUS_S, 30, 10**4, 9) == g5.sample_members(ResidueCase.PLUS_S, 30, 10**4, 9)
        assert g5.sample_members(ResidueCase.PLUS_S, 30, 10**4, 9) != g5.sample_members(ResidueCase.PLUS_S, 30, 10**4, 10)

    def test_speed(self):
        start = time.perf_counter()
        for case in ResidueCase:
            g5.sample_members(case, 500, 10**4, seed=1)
        assert time.perf_counter() - start < 4.0

    def test_infeasible_bound(self):
        with pytest.raises(InvalidArgument):
            g5.sample_members(ResidueCase.PLUS_S, 1, 0, seed=1)
