from dataclasses import replace
from fractions import Fraction

import pytest

from hpade.diagnostics import Singular
from hpade.errors import InsufficientTruncation, NotNormal
from hpade.exact_linalg import nullspace
from hpade.normality import random_tuple
from hpade.series_core import LaurentSeries, OrderBound, Polynomial, SeriesTuple, residual_order
from hpade.type1_hp import (
    MultiIndexType1,
    build_type1_homogeneous,
    build_type1_system,
    combination,
    solve_type1,
    unknown_columns,
    vector_to_polynomials,
    verify_type1,
)

from conftest import make_tuple


class TestMultiIndex:
    def test_degree_bounds(self):
        idx = MultiIndexType1(n=3, k=1, m=2)
        assert [idx.degree_bound(j) for j in range(3)] == [2, 3, 2]
        assert idx.system_size == 9
        assert idx.required_known_through == -8
        assert idx.required_order == 6

    def test_validation(self):
        with pytest.raises(ValueError):
            MultiIndexType1(n=0, k=0, m=1)
        with pytest.raises(ValueError):
            MultiIndexType1(n=1, k=2, m=1)
        with pytest.raises(ValueError):
            MultiIndexType1(n=1, k=0, m=0)

    def test_unknown_layout_skips_pinned_constant(self):
        idx = MultiIndexType1(n=1, k=0, m=1)
        assert unknown_columns(idx) == [(0, 1), (1, 0)]
        idx = MultiIndexType1(n=2, k=1, m=1)
        assert unknown_columns(idx) == [(0, 0), (0, 1), (1, 1), (1, 2)]


class TestBuildSystem:
    def test_distinguished_slot_zero(self, minimal_tuple):
        matrix, rhs = build_type1_system(minimal_tuple, MultiIndexType1(n=1, k=0, m=1))
        # coeff z^1: q01 + q10 = 0; coeff z^0: q10 = -1
        assert [list(matrix.row(0)), list(matrix.row(1))] == [[1, 1], [0, 1]]
        assert list(rhs) == [0, -1]

    def test_distinguished_slot_one(self, minimal_tuple):
        matrix, rhs = build_type1_system(minimal_tuple, MultiIndexType1(n=1, k=1, m=1))
        # coeff z^1: q00 + q11 = 0; coeff z^0: q11 = -1
        assert [list(matrix.row(0)), list(matrix.row(1))] == [[1, 1], [0, 1]]
        assert list(rhs) == [0, -1]

    def test_window_too_short(self, minimal_tuple):
        with pytest.raises(InsufficientTruncation) as excinfo:
            build_type1_system(minimal_tuple, MultiIndexType1(n=2, k=0, m=1))
        assert excinfo.value.required == -3
        assert excinfo.value.available == -1

    def test_tuple_index_mismatch(self, minimal_tuple):
        with pytest.raises(ValueError):
            build_type1_system(minimal_tuple, MultiIndexType1(n=1, k=0, m=2))


class TestSolve:
    def test_worked_slot_zero(self, worked_tuple):
        sol = solve_type1(worked_tuple, MultiIndexType1(n=1, k=0, m=1))
        assert sol.polynomials == (Polynomial([1, 1]), Polynomial([-1]))
        assert sol.residual_order_achieved.meets(1)
        # the combination cancels exactly here, so only a bound is claimed
        assert sol.residual_order_achieved == OrderBound.at_least(2)

    def test_worked_slot_one_exact_residual(self, worked_tuple):
        sol = solve_type1(worked_tuple, MultiIndexType1(n=1, k=1, m=1))
        assert sol.polynomials == (Polynomial([1]), Polynomial([1, -1]))
        assert sol.residual_order_achieved == OrderBound.exactly(1)
        assert sol.residual.coeff(-1) == 1

    def test_minimal_window_still_solves(self, minimal_tuple):
        sol = solve_type1(minimal_tuple, MultiIndexType1(n=1, k=0, m=1))
        assert sol.polynomials == (Polynomial([1, 1]), Polynomial([-1]))
        assert sol.residual_order_achieved == OrderBound.at_least(1)

    def test_half_coefficient_residual(self, halfsq_tuple):
        sol = solve_type1(halfsq_tuple, MultiIndexType1(n=1, k=0, m=1))
        assert sol.polynomials == (Polynomial([1, 1]), Polynomial([-1]))
        assert sol.residual_order_achieved == OrderBound.exactly(1)
        assert sol.residual.coeff(-1) == Fraction(-1, 2)

    def test_geometric_series_degenerates(self, geometric_tuple):
        idx = MultiIndexType1(n=2, k=0, m=1)
        with pytest.raises(NotNormal) as excinfo:
            solve_type1(geometric_tuple, idx)
        verdict = excinfo.value.verdict
        assert isinstance(verdict, Singular)
        assert verdict.rank == 3
        polys = vector_to_polynomials(idx, verdict.witness, pinned_value=Fraction(0))
        assert any(not p.is_zero for p in polys)
        assert polys[0].constant_term == 0
        order = residual_order(combination(geometric_tuple, polys, k=0))
        assert order.meets(idx.required_order)

    def test_solution_contract_on_seeded_tuples(self):
        for seed in range(5):
            F = random_tuple(seed=seed, m=2, num_coeffs=6, height=10)
            for k in range(3):
                idx = MultiIndexType1(n=2, k=k, m=2)
                sol = solve_type1(F, idx)
                assert sol.polynomials[k].degree == 2
                assert sol.polynomials[k].constant_term == 1
                assert all(
                    sol.polynomials[j].degree <= 1
                    for j in range(3)
                    if j != k and not sol.polynomials[j].is_zero
                )
                assert sol.residual_order_achieved.meets(4)

    def test_common_scaling_leaves_solution_unchanged(self, worked_tuple):
        lam = Fraction(3, 7)
        scaled = SeriesTuple(
            [LaurentSeries(0, [lam * c for c in f.coeffs]) for f in worked_tuple.series]
        )
        idx = MultiIndexType1(n=1, k=1, m=1)
        assert solve_type1(scaled, idx).polynomials == solve_type1(worked_tuple, idx).polynomials


class TestKernelOracle:
    def test_pinned_solve_equals_rescaled_kernel_generator(self, worked_tuple):
        for k in (0, 1):
            idx = MultiIndexType1(n=1, k=k, m=1)
            sol = solve_type1(worked_tuple, idx)
            basis = nullspace(build_type1_homogeneous(worked_tuple, idx))
            assert len(basis) == 1
            cols = [(j, i) for j in range(2) for i in range(idx.degree_bound(j) + 1)]
            pinned_pos = cols.index((k, 0))
            generator = basis[0]
            assert generator[pinned_pos] != 0
            rescaled = [v / generator[pinned_pos] for v in generator]
            flat = [sol.polynomials[j][i] for (j, i) in cols]
            assert flat == rescaled


class TestVerify:
    def test_passes_on_solved_instance(self, halfsq_tuple):
        idx = MultiIndexType1(n=1, k=0, m=1)
        sol = solve_type1(halfsq_tuple, idx)
        report = verify_type1(halfsq_tuple, sol)
        assert report.passed
        assert report.residual_orders == (OrderBound.exactly(1),)

    def test_tampered_normalization(self, worked_tuple):
        sol = solve_type1(worked_tuple, MultiIndexType1(n=1, k=0, m=1))
        tampered = replace(sol, polynomials=(Polynomial([2, 1]), sol.polynomials[1]))
        report = verify_type1(worked_tuple, tampered)
        assert not report.passed
        assert "normalization" in report.failures

    def test_tampered_degree_bound(self, worked_tuple):
        sol = solve_type1(worked_tuple, MultiIndexType1(n=1, k=0, m=1))
        tampered = replace(sol, polynomials=(sol.polynomials[0], Polynomial([-1, 1])))
        report = verify_type1(worked_tuple, tampered)
        assert not report.passed
        assert "degree-bound" in report.failures

    def test_tampered_degree_attainment(self, worked_tuple):
        sol = solve_type1(worked_tuple, MultiIndexType1(n=1, k=0, m=1))
        tampered = replace(sol, polynomials=(Polynomial([1]), sol.polynomials[1]))
        report = verify_type1(worked_tuple, tampered)
        assert not report.passed
        assert "degree-attainment" in report.failures

    def test_tampered_order(self, halfsq_tuple):
        sol = solve_type1(halfsq_tuple, MultiIndexType1(n=1, k=0, m=1))
        tampered = replace(sol, polynomials=(sol.polynomials[0], Polynomial([-2])))
        report = verify_type1(halfsq_tuple, tampered)
        assert not report.passed
        assert "order" in report.failures
