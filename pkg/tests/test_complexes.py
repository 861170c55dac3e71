import unittest
from itertools import combinations

import networkx as nx
import numpy as np

from src.common.errors import ParameterDomainError
from src.complexes.cech import cech_ambient, cech_intrinsic, filtration_check, grow_complex, sandwich_check
from src.complexes.oracles import BallIntersectionQuery, OracleBinding, OrthantOracle, RayOracle, ray_ball_intersection
from src.complexes.rips import flag_complex, rips, threshold_graph
from src.complexes.simplicial import SimplicialComplex, as_simplex, default_max_dim, facets
from src.metric.finite_metric import FiniteMetric
from src.models.cp_models import hellinger_side, ray_side


def ray_metric() -> FiniteMetric:
    """x0, x1, x4 on the Bures ray: distances 1, 1, 2"""
    return ray_side([0, 1, 4], anchor=1).metric


class TestSimplicialComplex(unittest.TestCase):
    def test_as_simplex(self):
        self.assertEqual(as_simplex([2, 0, 1]), (0, 1, 2))
        with self.assertRaises(ValueError):
            as_simplex([1, 1])
        with self.assertRaises(ValueError):
            as_simplex([])
        self.assertEqual(facets((0, 1, 2)), [(1, 2), (0, 2), (0, 1)])

    def test_closure(self):
        cx = SimplicialComplex.from_simplices([(0, 1, 2)], 2)
        self.assertEqual(cx.f_vector(), [3, 3, 1])
        self.assertTrue(cx.is_face_closed())
        self.assertTrue(cx.is_full_simplex())
        self.assertEqual(cx.euler_characteristic(), 1)
        self.assertEqual(cx.dim, 2)
        self.assertIn((2, 0), cx)
        self.assertEqual(cx.all_simplices(), [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)])

    def test_generator_above_max_dim(self):
        with self.assertRaises(ValueError):
            SimplicialComplex.from_simplices([(0, 1, 2)], 1)

    def test_unclosed_generators(self):
        cx = SimplicialComplex.from_simplices([(0, 1)], 1, close=False)
        self.assertFalse(cx.is_face_closed())

    def test_subsets(self):
        path = SimplicialComplex.from_simplices([(0, 1), (1, 2)], 2)
        full = SimplicialComplex.full_simplex([0, 1, 2])
        self.assertTrue(path.issubset(full))
        self.assertFalse(full.issubset(path))
        self.assertEqual(full.missing_from(path), [(0, 2), (0, 1, 2)])
        self.assertFalse(path.is_full_simplex())
        self.assertEqual(full.induced([0, 2]).f_vector(), [2, 1, 0])

    def test_cone(self):
        star = SimplicialComplex.from_simplices([(0, 1), (0, 2)], 1)
        self.assertEqual(star.cone_apex(), 0)
        cycle = SimplicialComplex.from_simplices([(0, 1), (1, 2), (2, 3), (0, 3)], 1)
        self.assertIsNone(cycle.cone_apex())
        # the top edge (1, 2) misses vertex 0
        self.assertIsNone(SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)], 1).cone_apex())

    def test_may_be_truncated(self):
        hollow = SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)], 1)
        self.assertTrue(hollow.may_be_truncated())
        self.assertTrue(hollow.is_full_simplex())
        self.assertFalse(SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)], 2).may_be_truncated())
        self.assertFalse(SimplicialComplex.from_simplices([(0, 1), (0, 2)], 1).may_be_truncated())
        self.assertFalse(SimplicialComplex.from_simplices([(0, 1), (1, 2), (2, 3), (0, 3)], 1).may_be_truncated())
        self.assertTrue(SimplicialComplex.from_simplices([(0,), (1,)], 0).may_be_truncated())
        self.assertFalse(SimplicialComplex.from_simplices([(0,)], 0).may_be_truncated())
        self.assertFalse(SimplicialComplex.full_simplex([0, 1, 2, 3]).may_be_truncated())

    def test_relabel_and_json(self):
        cx = SimplicialComplex.from_simplices([(0, 1)], 1).relabel({0: 5, 1: 3})
        self.assertEqual(cx.edges(), [(3, 5)])
        data = SimplicialComplex.from_simplices([(0, 1)], 1).to_json(["a", "b"])
        self.assertEqual(data["simplices"], [[0], [1], [0, 1]])
        self.assertEqual(data["labels"], [["a"], ["b"], ["a", "b"]])
        self.assertEqual(data["fVector"], [2, 1])

    def test_empty(self):
        cx = SimplicialComplex.empty(2)
        self.assertEqual(cx.dim, -1)
        self.assertEqual(cx.vertices(), [])
        self.assertFalse(cx.is_full_simplex())

    def test_default_max_dim(self):
        self.assertEqual(default_max_dim(1), 0)
        self.assertEqual(default_max_dim(4), 3)
        self.assertEqual(default_max_dim(50), 7)


class TestRips(unittest.TestCase):
    def test_ray_thresholds(self):
        m = ray_metric()
        self.assertEqual(rips(m, 0.99).edges(), [])
        self.assertEqual(rips(m, 1.0).edges(), [(0, 1), (1, 2)])
        self.assertEqual(rips(m, 1.99).k_simplices(2), [])
        self.assertTrue(rips(m, 2.0).is_full_simplex())

    def test_scale_tolerance(self):
        self.assertEqual(rips(ray_metric(), 1.0 - 1e-13).edges(), [(0, 1), (1, 2)])

    def test_negative_scale(self):
        with self.assertRaises(ParameterDomainError):
            rips(ray_metric(), -0.1)

    def test_flag_completion(self):
        cx = flag_complex(nx.complete_graph(4), 2)
        self.assertEqual(cx.f_vector(), [4, 6, 4])
        self.assertEqual(threshold_graph(ray_metric(), 1.0).number_of_edges(), 2)

    def test_filtration(self):
        m = ray_metric()
        self.assertTrue(filtration_check(lambda t: rips(m, t), [0.0, 0.5, 1.0, 2.0, 3.0]))
        self.assertTrue(filtration_check(lambda t: cech_intrinsic(m, t), [0.0, 0.5, 1.0, 2.0]))


class TestCech(unittest.TestCase):
    def test_intrinsic(self):
        m = ray_metric()
        self.assertEqual(cech_intrinsic(m, 0.6).edges(), [])
        self.assertTrue(cech_intrinsic(m, 1.0).is_full_simplex())

    def test_ambient_on_ray(self):
        cs = [0.0, 1.0, 4.0]
        self.assertEqual(cech_ambient(cs, RayOracle(), 0.4).edges(), [])
        self.assertEqual(cech_ambient(cs, RayOracle(), 0.5).edges(), [(0, 1), (1, 2)])
        self.assertEqual(cech_ambient(cs, RayOracle(), 0.99).k_simplices(2), [])
        self.assertTrue(cech_ambient(cs, RayOracle(), 1.0).is_full_simplex())

    def test_grow_complex(self):
        self.assertTrue(grow_complex(3, 2, lambda s: True).is_full_simplex())
        only_edges = grow_complex(3, 2, lambda s: len(s) <= 2)
        self.assertEqual(only_edges.f_vector(), [3, 3, 0])

    def test_sandwich_with_ambient(self):
        m = ray_metric()
        binding = OracleBinding(RayOracle(), [0.0, 1.0, 4.0])
        for t in (0.25, 0.5, 0.75, 1.0, 1.5):
            self.assertTrue(sandwich_check(m, t, ambient=binding))

    def test_sandwich_random(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            pts = list(rng.uniform(0, 2, size=(6, 2)))
            m = FiniteMetric.from_points(pts, lambda a, b: float(np.linalg.norm(a - b)))
            self.assertTrue(sandwich_check(m, float(rng.uniform(0, 3))))

    def test_intrinsic_inside_ambient_on_ray(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            cs = rng.uniform(0, 9, size=5).tolist()
            metric = ray_side(cs).metric
            for t in rng.uniform(0.05, 2.0, size=4):
                self.assertTrue(cech_intrinsic(metric, t).issubset(cech_ambient(cs, RayOracle(), t)))

    def test_intrinsic_inside_ambient_on_orthant(self):
        rng = np.random.default_rng(12)
        for _ in range(15):
            pts = rng.uniform(0, 2, size=(4, 2)).tolist()
            metric = hellinger_side(pts).metric
            for t in (0.3, 0.6, 0.9, 1.2):
                intrinsic = cech_intrinsic(metric, t)
                ambient = cech_ambient(pts, OrthantOracle(2), t)
                self.assertTrue(intrinsic.issubset(ambient), intrinsic.missing_from(ambient))

    def test_ray_balls_intersect_exactly_at_half_the_diameter(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            cs = rng.uniform(0, 9, size=5).tolist()
            t = float(rng.uniform(0.05, 1.5))
            ambient = cech_ambient(cs, RayOracle(), t)
            self.assertTrue(ambient.same_simplices(rips(ray_side(cs).metric, 2 * t, ambient.max_dim)))
            roots = np.sqrt(cs)
            for k in range(2, 6):
                for s in combinations(range(5), k):
                    hit = ray_ball_intersection(BallIntersectionQuery(tuple(roots[list(s)]), (t,) * k))
                    self.assertEqual(hit.feasible, s in ambient, s)

    def test_ambient_filtration(self):
        cs = [0.0, 1.0, 4.0, 6.25]
        grid = [0.0, 0.25, 0.5, 0.75, 1.0, 1.5]
        self.assertTrue(filtration_check(lambda t: cech_ambient(cs, RayOracle(), t), grid))
        pts = [(0.0, 0.0), (1.0, 0.0), (0.25, 0.75), (1.0, 1.0)]
        orthant_grid = [0.2, 0.45, 0.55, 0.6, 0.8, 1.0]
        self.assertTrue(filtration_check(lambda t: cech_ambient(pts, OrthantOracle(2), t), orthant_grid))


if __name__ == "__main__":
    unittest.main()
