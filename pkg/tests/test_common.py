import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr
from dataclasses import replace
from unittest.mock import patch

from pydantic import ValidationError

from src.common.config import ConfigLoader, SolverConfiguration, get_solver_config, log, set_solver_config
from src.common.errors import AuditFailure, MetricValidationError, SolverNonConvergence, WedgeError
from src.common.types import BKParams, LpExponent, WedgePoint, Side


class TestLpExponent(unittest.TestCase):
    def test_inf_literal(self):
        for raw in ("inf", "INF", float("inf"), "∞"):
            p = LpExponent.parse(raw)
            self.assertTrue(p.is_inf)
            self.assertEqual(p.reciprocal, 0.0)
            self.assertEqual(p.to_json(), "inf")

    def test_finite_values(self):
        p = LpExponent.parse(2)
        self.assertFalse(p.is_inf)
        self.assertEqual(p.reciprocal, 0.5)
        self.assertEqual(str(p), "2")
        self.assertEqual(LpExponent.parse("1.5").to_json(), 1.5)

    def test_rejects_p_below_one(self):
        for raw in (0.5, 0, -1, "nan", "abc"):
            with self.assertRaises((ValidationError, ValueError)):
                LpExponent.parse(raw)


class TestBKParams(unittest.TestCase):
    def test_defaults(self):
        params = BKParams()
        self.assertEqual(params.lambda_, 1.0)
        self.assertEqual(params.alpha, 1.0)
        self.assertTrue(params.p.is_inf)

    def test_alias_and_json(self):
        params = BKParams.model_validate({"lambda": 2.0, "alpha": 0.5, "p": 2})
        self.assertEqual(params.lambda_, 2.0)
        self.assertEqual(params.to_json(), {"lambda": 2.0, "alpha": 0.5, "p": 2.0})

    def test_domain(self):
        with self.assertRaises(ValidationError):
            BKParams(lambda_=0.0)
        with self.assertRaises(ValidationError):
            BKParams(alpha=0.0)
        with self.assertRaises(ValidationError):
            BKParams(alpha=1.5)
        with self.assertRaises(ValidationError):
            BKParams(p=0.9)

    def test_wedge_point(self):
        self.assertEqual(WedgePoint.c(2).side, Side.C)
        self.assertEqual(WedgePoint.y(0), WedgePoint(side=Side.Y, index=0))
        with self.assertRaises(ValidationError):
            WedgePoint.c(-1)


class TestErrors(unittest.TestCase):
    def test_hierarchy_and_payloads(self):
        err = MetricValidationError("bad", indices=(0, 1, 2), field="ySide")
        self.assertIsInstance(err, WedgeError)
        self.assertEqual(err.indices, (0, 1, 2))
        self.assertEqual(err.field, "ySide")
        self.assertEqual(SolverNonConvergence("x", [(1.0,)], [0.5]).radii, [0.5])
        self.assertEqual(AuditFailure("x", (0, 1), 1.5).scale, 1.5)


class TestConfigLoader(unittest.TestCase):
    def setUp(self):
        self.saved = get_solver_config()

    def tearDown(self):
        set_solver_config(self.saved)

    def test_defaults_without_file(self):
        with patch.dict(os.environ, {}, clear=False):
            os.environ.pop("BK_SOLVER_TOL", None)
            os.environ.pop("BK_MAX_ITER", None)
            config = ConfigLoader.load("does-not-exist.json")
        self.assertEqual(config.solver_tol, 1e-9)
        self.assertEqual(config.max_iter, 100_000)
        self.assertEqual(config.max_simplices, 2 ** 14)

    def test_file_then_env_override(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bk_wedge.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"solver_tol": 1e-6, "max_dim_cap": 4, "unknown": 1}, f)
            with patch.dict(os.environ, {"BK_SOLVER_TOL": "1e-7"}):
                with redirect_stderr(io.StringIO()):
                    config = ConfigLoader.load(path)
        self.assertEqual(config.solver_tol, 1e-7)
        self.assertEqual(config.max_dim_cap, 4)

    def test_malformed_env_is_ignored(self):
        err = io.StringIO()
        with patch.dict(os.environ, {"BK_SOLVER_TOL": "tight", "BK_MAX_ITER": "many"}):
            with redirect_stderr(err):
                config = ConfigLoader.load("does-not-exist.json")
        self.assertEqual(config.solver_tol, 1e-9)
        self.assertIn("BK_SOLVER_TOL", err.getvalue())

    def test_log_goes_to_stderr_and_respects_verbose(self):
        set_solver_config(SolverConfiguration(verbose=True))
        err = io.StringIO()
        with redirect_stderr(err):
            log("Test", "hello")
        self.assertEqual(err.getvalue(), "[Test] hello\n")

        set_solver_config(replace(get_solver_config(), verbose=False))
        err = io.StringIO()
        with redirect_stderr(err):
            log("Test", "hidden")
        self.assertEqual(err.getvalue(), "")


if __name__ == "__main__":
    unittest.main()
