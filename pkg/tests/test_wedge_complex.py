import math
import unittest
from itertools import combinations

import numpy as np

from src.common.errors import MetricValidationError, ParameterDomainError
from src.common.types import BKParams, LpExponent, Side
from src.complexes.cech import cech_intrinsic, filtration_check
from src.complexes.oracles import OracleBinding, RayOracle
from src.complexes.rips import rips
from src.metric.finite_metric import FiniteMetric, PointedFiniteMetric, star_metric
from src.metric.wedge import WedgeCloud, cloud_metric, full_distance_table
from src.models.cp_models import hellinger_side, ray_side
from src.wedge.audits import attachment_audit, decomposition_audit
from src.wedge.cech_wedge import cech_mixed_criterion, cech_wedge_ambient, default_bindings, residual_radius
from src.wedge.radial import RadialProfile, local_sides, radial_profile, split_simplex
from src.wedge.rips_wedge import mixed_rips_criterion, rips_wedge

LOOP_Y = [[0, 0.95, 0.95], [0.95, 0, 1.9], [0.95, 1.9, 0]]


def loop_cloud(p="inf") -> WedgeCloud:
    y = PointedFiniteMetric(FiniteMetric.from_table(LOOP_Y, ["*", "y+", "y-"]), 0)
    return WedgeCloud(ray_side([0, 1, 4], anchor=1), y, BKParams(p=p), include_basepoint=False)


def ray_binding() -> OracleBinding:
    return OracleBinding(RayOracle(), [0.0, 1.0, 4.0])


def random_cloud(rng, p) -> WedgeCloud:
    c_side = ray_side(rng.uniform(0, 6, size=3).tolist(), anchor=int(rng.integers(3)))
    y_side = star_metric(rng.uniform(0.1, 1.5, size=2).tolist())
    return WedgeCloud(c_side, y_side, BKParams(p=p), bool(rng.integers(2)))


class TestRadial(unittest.TestCase):
    def test_profile(self):
        profile = radial_profile(loop_cloud())
        self.assertEqual(profile.r_c, (1.0, 0.0, 1.0))
        self.assertEqual(profile.r_y, (0.0, 0.95, 0.95))
        self.assertEqual(profile.a([0, 1]), 1.0)
        self.assertEqual(profile.b([1, 2]), 0.95)
        self.assertEqual(profile.to_json()["anchor"], 1)

    def test_profile_validation(self):
        with self.assertRaises(MetricValidationError):
            RadialProfile((1.0, 0.5), (0.0,), 0, 0)
        with self.assertRaises(MetricValidationError):
            RadialProfile((0.0,), (0.0, 0.0), 0, 0)

    def test_local_ids(self):
        cloud = loop_cloud()
        self.assertEqual(local_sides(cloud), ([0, 2], [1, 2]))
        self.assertEqual(split_simplex(cloud, (0, 2)), ((0,), (1,)))
        self.assertEqual(split_simplex(cloud, (0, 1, 3)), ((0, 2), (2,)))


class TestRipsWedge(unittest.TestCase):
    def test_loop_is_the_four_cycle(self):
        cx = rips_wedge(loop_cloud(), 1.5)
        self.assertEqual(cx.edges(), [(0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(cx.k_simplices(2), [])

    def test_matches_brute_force(self):
        cloud = loop_cloud()
        metric = cloud_metric(cloud)
        for t in (0.0, 0.5, 0.95, 1.0, 1.5, 1.9, 2.0, 4.0):
            self.assertTrue(rips_wedge(cloud, t).same_simplices(rips(metric, t)), t)

    def test_mixed_criterion(self):
        cloud = loop_cloud()
        profile = radial_profile(cloud)
        args = (cloud.params.p, cloud.c_side.metric, cloud.y_side.metric)
        ok = mixed_rips_criterion(profile, [0], [1], 1.5, *args)
        self.assertTrue(ok.verdict)
        self.assertEqual((ok.a, ok.b), (1.0, 0.95))
        self.assertFalse(mixed_rips_criterion(profile, [0], [1], 0.9, *args).verdict)
        self.assertFalse(mixed_rips_criterion(profile, [0, 2], [1], 1.5, *args).verdict)
        with self.assertRaises(ParameterDomainError):
            mixed_rips_criterion(profile, [], [1], 1.5, *args)

    def test_cross_threshold_depends_on_p(self):
        l1 = loop_cloud(p=1)
        self.assertEqual(rips_wedge(l1, 1.5).edges(), [])
        self.assertEqual(rips_wedge(l1, 1.95).edges(), [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestCechWedge(unittest.TestCase):
    def test_residual_radius(self):
        self.assertTrue(math.isclose(residual_radius(1.0, 0.6, LpExponent.parse(2)), 0.8))
        self.assertEqual(residual_radius(1.0, 0.6, LpExponent.inf()), 1.0)
        self.assertEqual(residual_radius(1.0, 1.0, LpExponent.parse(1)), 0.0)

    def test_anchor_witness(self):
        cloud = loop_cloud()
        c_binding = ray_binding()
        _, y_binding = default_bindings(cloud)
        cert = cech_mixed_criterion(cloud, [0, 2], [1, 2], 1.5, c_binding, y_binding)
        self.assertTrue(cert.verdict)
        self.assertEqual(cert.witness_side, Side.C)
        self.assertEqual(cert.to_json()["witnessSide"], "C")

    def test_cone_effect(self):
        cloud = loop_cloud()
        _, y_binding = default_bindings(cloud)
        cech = cech_wedge_ambient(cloud, 1.5, 3, ray_binding(), y_binding)
        self.assertTrue(cech.is_full_simplex())
        self.assertEqual(cech.dim, 3)

    def test_rips_cech_sandwich(self):
        cloud = loop_cloud()
        for t in (0.5, 1.0, 1.5, 2.0):
            cech = cech_wedge_ambient(cloud, t)
            self.assertTrue(rips_wedge(cloud, t).issubset(cech))
            self.assertTrue(cech.issubset(rips_wedge(cloud, 2 * t)))

    def test_no_witness(self):
        cloud = loop_cloud()
        cert = cech_mixed_criterion(cloud, [0], [1], 0.5)
        self.assertFalse(cert.verdict)
        self.assertEqual(cert.to_json()["witnessSide"], "NONE")

    def test_filtration(self):
        cloud = loop_cloud()
        _, y_binding = default_bindings(cloud)
        grid = [0.0, 0.4, 0.5, 0.95, 1.0, 1.5, 2.0]
        self.assertTrue(filtration_check(lambda t: cech_wedge_ambient(cloud, t, 3, ray_binding(), y_binding), grid))
        rng = np.random.default_rng(21)
        for k in range(12):
            other = random_cloud(rng, (1, 2, "inf")[k % 3])
            self.assertTrue(filtration_check(lambda t: cech_wedge_ambient(other, t), [0.2, 0.6, 1.1, 1.7, 2.5]))

    def test_reduction_matches_exhaustive_witness_search(self):
        rng = np.random.default_rng(22)
        for k in range(60):
            cloud = random_cloud(rng, (1, 2, "inf")[k % 3])
            table = full_distance_table(cloud).dist
            ids = cloud.cloud_indices()
            t = float(rng.uniform(0.2, 2.5))
            cech = cech_wedge_ambient(cloud, t)
            for size in range(1, len(ids) + 1):
                for s in combinations(range(len(ids)), size):
                    reach = table[:, [ids[v] for v in s]].max(axis=1).min()
                    self.assertEqual(reach <= t + 1e-9, s in cech, (k, s, t))


class TestComponentRestriction(unittest.TestCase):
    def assertSideMatches(self, wedge, component, local_ids, offset):
        mapping = {c: offset + i for i, c in enumerate(local_ids)}
        expected = component.induced(local_ids).relabel(mapping)
        got = wedge.induced(range(offset, offset + len(local_ids)))
        self.assertTrue(got.same_simplices(expected), (got.all_simplices(), expected.all_simplices()))

    def test_pure_simplices_come_from_the_components(self):
        rng = np.random.default_rng(23)
        for k in range(30):
            cloud = random_cloud(rng, (1, 2, "inf")[k % 3])
            c_ids, y_ids = local_sides(cloud)
            for t in (0.3, 0.8, 1.4, 2.2):
                wedge = rips_wedge(cloud, t)
                md = wedge.max_dim
                self.assertSideMatches(wedge, rips(cloud.c_side.metric, t, md), c_ids, 0)
                self.assertSideMatches(wedge, rips(cloud.y_side.metric, t, md), y_ids, len(c_ids))
                cech = cech_wedge_ambient(cloud, t, md)
                self.assertSideMatches(cech, cech_intrinsic(cloud.c_side.metric, t, md), c_ids, 0)
                self.assertSideMatches(cech, cech_intrinsic(cloud.y_side.metric, t, md), y_ids, len(c_ids))


class TestAudits(unittest.TestCase):
    def test_decomposition_audit_passes(self):
        cloud = loop_cloud()
        _, y_binding = default_bindings(cloud)
        report = decomposition_audit(cloud, [0.0, 0.5, 1.0, 1.5, 2.0], c_binding=ray_binding(), y_binding=y_binding)
        self.assertTrue(report.passed)
        self.assertEqual([r.t for r in report.rows], [0.0, 0.5, 1.0, 1.5, 2.0])
        self.assertEqual(len(report.to_json()), 5)

    def test_random_hellinger_clouds(self):
        rng = np.random.default_rng(9)
        for k in range(40):
            c_side = hellinger_side(rng.uniform(0, 2, size=(3, 2)).tolist(), anchor=int(rng.integers(3)))
            y_side = star_metric(rng.uniform(0.1, 1.5, size=2).tolist())
            p = (1, 2, "inf")[k % 3]
            cloud = WedgeCloud(c_side, y_side, BKParams(p=p), bool(k % 2))
            self.assertTrue(decomposition_audit(cloud, [0.5, 1.0, 2.0], check_cech=False).passed)

    def test_empty_grid(self):
        with self.assertRaises(ParameterDomainError):
            decomposition_audit(loop_cloud(), [])

    def test_attachment(self):
        for p in (1, 2, "inf"):
            y = star_metric([0.01, 0.02])
            cloud = WedgeCloud(ray_side([0, 1, 4], anchor=1), y, BKParams(p=p), False)
            lower, upper = attachment_audit(cloud, 2)
            self.assertEqual(lower, 1.0)
            self.assertGreaterEqual(upper, lower)
            self.assertLessEqual(upper, 1.01 + 1e-12)

    def test_attachment_needs_y(self):
        cloud = WedgeCloud(ray_side([0, 1]), star_metric([]), BKParams())
        with self.assertRaises(ParameterDomainError):
            attachment_audit(cloud, 0)


if __name__ == "__main__":
    unittest.main()
