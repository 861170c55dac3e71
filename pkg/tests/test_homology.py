import unittest
from dataclasses import replace
from itertools import product

import numpy as np

from src.common.config import get_solver_config, set_solver_config
from src.common.errors import ParameterDomainError
from src.common.types import BKParams, ComplexKind
from src.complexes.oracles import OracleBinding, OrthantOracle
from src.complexes.simplicial import SimplicialComplex
from src.homology.betti import (
    betti,
    betti_sweep,
    connected_components,
    euler_characteristic,
    is_contractible_certified,
    sweep_provenance,
)
from src.homology.boundary import boundary, gf2_product, gf2_rank
from src.cli.scenarios import ScenarioId, ScenarioOptions, build_scenario
from src.metric.finite_metric import star_metric
from src.metric.wedge import WedgeCloud
from src.models.cp_models import hellinger_side


def hollow_triangle(max_dim: int = 1) -> SimplicialComplex:
    return SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)], max_dim)


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope: one vertex from each antipodal pair"""
    return SimplicialComplex.from_simplices(list(product((0, 1), (2, 3), (4, 5))), 2)


# square roots form an equilateral triangle of side 1, circumradius 1/√3
TRIANGLE = [(0.0, 0.0), (1.0, 0.0), (0.25, 0.75)]


def triangle_cloud() -> WedgeCloud:
    return WedgeCloud(hellinger_side(TRIANGLE), star_metric([]), BKParams(), include_basepoint=True)


class TestGF2(unittest.TestCase):
    def test_rank(self):
        self.assertEqual(gf2_rank(np.eye(3, dtype=np.uint8)), 3)
        self.assertEqual(gf2_rank(np.array([[1, 1], [1, 1]])), 1)
        self.assertEqual(gf2_rank(np.zeros((2, 3))), 0)
        # rank 2 over GF(2), rank 3 over the reals
        self.assertEqual(gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])), 2)

    def test_boundary_squares_to_zero(self):
        cx = SimplicialComplex.full_simplex([0, 1, 2, 3])
        for k in (1, 2):
            product_ = gf2_product(boundary(cx, k).matrix, boundary(cx, k + 1).matrix)
            self.assertFalse(product_.any())

    def test_boundary_shape(self):
        d1 = boundary(hollow_triangle(), 1)
        self.assertEqual(d1.matrix.shape, (3, 3))
        self.assertEqual(d1.rank, 2)
        self.assertEqual(d1.columns()[0], [0, 1])
        with self.assertRaises(ParameterDomainError):
            boundary(hollow_triangle(), 0)
        with self.assertRaises(ParameterDomainError):
            boundary(hollow_triangle(), 2)


class TestBetti(unittest.TestCase):
    def test_small_complexes(self):
        self.assertEqual(betti(hollow_triangle()), [1, 1])
        self.assertEqual(betti(hollow_triangle(2)), [1, 1, 0])
        self.assertEqual(betti(SimplicialComplex.full_simplex([0, 1, 2])), [1, 0, 0])
        self.assertEqual(betti(SimplicialComplex.from_simplices([(0,), (1,)], 0)), [2])

    def test_sphere(self):
        cx = octahedron()
        self.assertEqual(cx.f_vector(), [6, 12, 8])
        self.assertEqual(betti(cx), [1, 0, 1])
        self.assertEqual(euler_characteristic(cx), 2)

    def test_euler_matches_betti(self):
        for cx in (hollow_triangle(), octahedron(), SimplicialComplex.full_simplex([0, 1, 2, 3])):
            values = betti(cx)
            self.assertEqual(sum((-1) ** k * b for k, b in enumerate(values)), cx.euler_characteristic())

    def test_components_and_contractibility(self):
        self.assertEqual(connected_components(SimplicialComplex.from_simplices([(0, 1), (2,)], 1)), 2)
        self.assertEqual(connected_components(SimplicialComplex.empty(1)), 0)
        self.assertTrue(is_contractible_certified(SimplicialComplex.full_simplex([0, 1, 2])))
        self.assertTrue(is_contractible_certified(SimplicialComplex.from_simplices([(0, 1), (0, 2)], 1)))
        self.assertFalse(is_contractible_certified(hollow_triangle(2)))
        self.assertFalse(is_contractible_certified(SimplicialComplex.empty(1)))

    def test_truncated_complexes_are_not_certified(self):
        self.assertFalse(is_contractible_certified(hollow_triangle(1)))
        self.assertFalse(is_contractible_certified(SimplicialComplex.full_simplex([0, 1, 2], max_dim=1)))
        self.assertFalse(is_contractible_certified(SimplicialComplex.from_simplices([(0,), (1,)], 0)))
        self.assertTrue(is_contractible_certified(SimplicialComplex.from_simplices([(0,)], 0)))
        path = SimplicialComplex.from_simplices([(0, 1), (1, 2)], 1)
        self.assertTrue(is_contractible_certified(path))

    def test_simplex_cap(self):
        saved = get_solver_config()
        try:
            set_solver_config(replace(saved, max_simplices=3))
            with self.assertRaises(ParameterDomainError):
                betti(SimplicialComplex.full_simplex([0, 1, 2]))
        finally:
            set_solver_config(saved)


class TestBettiSweep(unittest.TestCase):
    def test_k22_loop(self):
        cloud = build_scenario(ScenarioId.K22).build()
        profile = betti_sweep(cloud, [1.0, 0.5, 2.0], ComplexKind.RIPS, max_dim=1)
        self.assertEqual([s.t for s in profile.per_scale], [0.5, 1.0, 2.0])
        self.assertEqual(profile.at(0.5).betti, [4, 0])
        self.assertEqual(profile.at(1.0).betti, [1, 1])
        self.assertEqual(profile.at(2.0).betti, [1, 0])
        self.assertEqual(profile.changes(), [1.0, 2.0])
        self.assertEqual(profile.to_json()["provenance"], "decomposition")

    def test_kmn_rank_formula(self):
        cloud = build_scenario(ScenarioId.KMN, ScenarioOptions(m=3, n=4)).build()
        profile = betti_sweep(cloud, [1.0], max_dim=1)
        self.assertEqual(profile.at(1.0).betti, [1, 6])

    def test_direct_agrees_with_decomposition(self):
        cloud = build_scenario(ScenarioId.MIXED_LOOP).build()
        grid = [0.5, 1.0, 1.5, 1.9, 2.0]
        a = betti_sweep(cloud, grid)
        b = betti_sweep(cloud, grid, direct=True)
        self.assertEqual([s.betti for s in a.per_scale], [s.betti for s in b.per_scale])

    def test_cech_kinds(self):
        spec = build_scenario(ScenarioId.MIXED_LOOP)
        c_binding, y_binding = spec.bindings()
        profile = betti_sweep(spec.build(), [1.5], ComplexKind.CECH_AMBIENT, 3, c_binding=c_binding, y_binding=y_binding)
        self.assertEqual(profile.at(1.5).betti, [1, 0, 0, 0])
        self.assertTrue(profile.at(1.5).contractible)

    def test_empty_grid(self):
        with self.assertRaises(ParameterDomainError):
            betti_sweep(build_scenario(ScenarioId.K22).build(), [])

    def test_low_max_dim_never_claims_contractible(self):
        binding = OracleBinding(OrthantOracle(2), TRIANGLE)
        full = betti_sweep(triangle_cloud(), [0.55, 0.6], ComplexKind.CECH_AMBIENT, 2, c_binding=binding)
        self.assertEqual(full.at(0.55).f_vector, [3, 3, 0])
        self.assertEqual(full.at(0.55).betti, [1, 1, 0])
        self.assertFalse(full.at(0.55).contractible)
        self.assertTrue(full.at(0.6).contractible)

        low = betti_sweep(triangle_cloud(), [0.55, 0.6], ComplexKind.CECH_AMBIENT, 0, c_binding=binding)
        self.assertEqual(low.at(0.55).betti, [1])
        self.assertEqual(low.at(0.55).f_vector, [3, 3])
        self.assertFalse(low.at(0.55).contractible)
        self.assertFalse(low.at(0.6).contractible)

    def test_provenance_follows_construction(self):
        spec = build_scenario(ScenarioId.MIXED_LOOP)
        cloud = spec.build()
        c_binding, y_binding = spec.bindings()
        intrinsic = betti_sweep(cloud, [1.0], ComplexKind.CECH_INTRINSIC, 1)
        ambient = betti_sweep(cloud, [1.0], ComplexKind.CECH_AMBIENT, 1, c_binding=c_binding, y_binding=y_binding)
        self.assertEqual(intrinsic.to_json()["provenance"], "direct")
        self.assertEqual(ambient.to_json()["provenance"], "decomposition")
        self.assertEqual(betti_sweep(cloud, [1.0], direct=True).provenance, "direct")
        for direct in (False, True):
            self.assertEqual(sweep_provenance(ComplexKind.CECH_INTRINSIC, direct), "direct")
            self.assertEqual(sweep_provenance(ComplexKind.CECH_AMBIENT, direct), "decomposition")


if __name__ == "__main__":
    unittest.main()
