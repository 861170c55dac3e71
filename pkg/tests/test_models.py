import math
import unittest

import numpy as np
from pydantic import ValidationError

from src.common.errors import MetricValidationError, ParameterDomainError
from src.common.types import BKParams
from src.metric.finite_metric import star_metric
from src.models.counterexample import scalar_counterexample_scenario
from src.models.cp_models import (
    HellingerPoint,
    ScalarCB,
    bures_ray,
    bures_scalar,
    hellinger,
    hellinger_side,
    ksw_bounds,
    ksw_check,
    ray_side,
    scalar_cb_distance,
    scalar_side,
)
from src.models.synthetic import SyntheticYSpace, shrinking_star, synthetic_radius, validate_synthetic


class TestClosedFormDistances(unittest.TestCase):
    def test_scalar_and_ray(self):
        self.assertEqual(bures_scalar(1, 4), 1.0)
        self.assertEqual(bures_ray(0, 9), 3.0)
        self.assertEqual(bures_ray(2, 2), 0.0)
        with self.assertRaises(ParameterDomainError):
            bures_scalar(-1, 1)

    def test_hellinger(self):
        self.assertTrue(math.isclose(hellinger((1, 0), (0, 1)), math.sqrt(2)))
        self.assertEqual(hellinger((0, 0), (1, 0)), 1.0)
        self.assertEqual(hellinger(HellingerPoint(coords=(4.0,)), (1.0,)), 1.0)
        with self.assertRaises(ParameterDomainError):
            hellinger((1, 0), (1,))
        with self.assertRaises(ValidationError):
            HellingerPoint(coords=(-1.0, 0.0))

    def test_scalar_cb(self):
        z = ScalarCB(re=3.0, im=4.0)
        self.assertEqual(z.cb_norm, 5.0)
        self.assertFalse(z.is_cp)
        self.assertFalse(ScalarCB(re=-1.0).is_cp)
        self.assertTrue(ScalarCB(re=2.0).is_cp)
        self.assertEqual(ScalarCB.from_complex(1 + 2j).z, 1 + 2j)
        self.assertEqual(scalar_cb_distance(ScalarCB(re=1.0), ScalarCB(re=4.0)), 3.0)


class TestKSW(unittest.TestCase):
    def test_bounds(self):
        self.assertEqual(ksw_bounds(0.0, 0.0, 0.0), (None, 0.0))
        lower, upper = ksw_bounds(3.0, 1.0, 4.0)
        self.assertEqual(lower, 1.0)
        self.assertTrue(math.isclose(upper, math.sqrt(3.0)))

    def test_grid(self):
        for c in np.linspace(0, 5, 20):
            for d in np.linspace(0, 5, 20):
                self.assertTrue(ksw_check(bures_scalar(c, d), abs(c - d), c, d))
                self.assertTrue(ksw_check(bures_ray(c, d), abs(c - d), c, d))

    def test_violations_detected(self):
        self.assertFalse(ksw_check(2.0, 1.0, 1.0, 1.0))
        self.assertFalse(ksw_check(0.1, 3.0, 1.0, 4.0))


class TestPointedModels(unittest.TestCase):
    def test_ray_side(self):
        side = ray_side([0, 1, 4], anchor=1)
        self.assertEqual(side.metric.labels, ("x0", "x1", "x4"))
        self.assertEqual(side.radii().tolist(), [1.0, 0.0, 1.0])
        with self.assertRaises(ParameterDomainError):
            ray_side([0, 1], anchor=2)

    def test_hellinger_side(self):
        side = hellinger_side([[0, 0], [1, 0], [0, 1], [1, 1]], anchor=0)
        self.assertTrue(math.isclose(side.metric.d(1, 2), math.sqrt(2)))
        self.assertEqual(side.metric.d(1, 3), 1.0)
        with self.assertRaises(ParameterDomainError):
            hellinger_side([[0, 0], [1]])

    def test_scalar_side_rejects_non_cp(self):
        self.assertEqual(scalar_side([0.0, 1.0, 4.0]).metric.labels, ("phi0", "phi1", "phi4"))
        with self.assertRaises(ParameterDomainError):
            scalar_side([1.0, complex(1, 1)])


class TestSyntheticY(unittest.TestCase):
    def test_radius_bound(self):
        self.assertEqual(synthetic_radius(0.25, 2.0, 1.0), 1.0)
        self.assertTrue(math.isclose(synthetic_radius(0.0625, 1.0, 0.5), 0.5))

    def test_violations(self):
        space = SyntheticYSpace(star_metric([1.5, 0.2]), (0.0, 0.25, 0.25))
        violations = validate_synthetic(space, 1.0, 1.0)
        self.assertEqual([v.index for v in violations], [1])
        self.assertIn("exceeds", violations[0].describe())
        self.assertEqual(validate_synthetic(SyntheticYSpace(star_metric([1.5])), 1.0, 1.0), [])

    def test_cb_norm_checks(self):
        with self.assertRaises(MetricValidationError):
            SyntheticYSpace(star_metric([1.0]), (0.0,))
        with self.assertRaises(MetricValidationError):
            SyntheticYSpace(star_metric([1.0]), (0.0, -1.0))

    def test_shrinking_star_sits_on_bound(self):
        space = shrinking_star([1.0, 0.25, 0.01], 2.0, 0.5)
        self.assertEqual(validate_synthetic(space, 2.0, 0.5), [])
        self.assertTrue(math.isclose(space.pointed_metric.radius(2), 2.0 * 0.01 ** 0.25))


class TestCounterexample(unittest.TestCase):
    def test_holds_for_each_p(self):
        for p in (1, 2, "inf"):
            report = scalar_counterexample_scenario(1.0, 64, 4.0, params=BKParams(p=p))
            self.assertTrue(report.holds, p)
            self.assertEqual(len(report.rows), 64)
            self.assertEqual(report.beta_anchors, 1.0)
            self.assertGreaterEqual(report.uniform_anchor_gap, report.beta_anchors - 0.2)

    def test_rows(self):
        report = scalar_counterexample_scenario(1.0, 16)
        row = report.rows[15]
        self.assertEqual(row.n, 16)
        self.assertTrue(math.isclose(row.psi_radius, 0.25))
        self.assertTrue(math.isclose(row.d_anchor_psi, 0.25))
        self.assertGreaterEqual(row.d_second_anchor_psi, 1.0)
        self.assertGreaterEqual(row.d_phi_chi, report.beta_phi_anchor)

    def test_domain(self):
        with self.assertRaises(ParameterDomainError):
            scalar_counterexample_scenario(1.0, 0)
        with self.assertRaises(ParameterDomainError):
            scalar_counterexample_scenario(1.0, 4, second_anchor=1.0)


if __name__ == "__main__":
    unittest.main()
