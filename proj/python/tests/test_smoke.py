import json
import os
from fractions import Fraction

import pytest

import patchkit as pk

DATA = os.environ.get(
    "PATCHKIT_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data")
)

PENTAGON = [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2]]
PENTAGON_W = [3, 5, 2, 5, 7, 2, 2, 2]
TUNED = [[0, 0], ["6/5", 0], [2, 0], [0, "6/5"], ["8/7", "8/7"], [2, 1], [0, 2], [1, 2]]


def test_bernstein_is_linearly_precise():
    spec = pk.fixtures.bernstein(3)
    assert spec.dim == 1 and spec.size == 4
    assert pk.tautological(spec, [1.7])[0] == pytest.approx(1.7, abs=1e-14)
    report = pk.check_linear_precision(spec, n_samples=500)
    assert report["verdict"] == "pass"
    assert report["max_err"] < 1e-12


def test_hexagon_is_barycentric():
    assert pk.eval_patch(pk.fixtures.hexagon(), [0.5, 0.25]) == pytest.approx([0.5, 0.25], abs=1e-15)


def test_pentagon_verdicts():
    assert pk.check_linear_precision(pk.fixtures.pentagon_toric())["verdict"] == "fail"
    assert pk.check_linear_precision(pk.fixtures.pentagon_tuned())["verdict"] == "pass"


def test_exact_values_come_back_as_fractions():
    image = pk.composed_projection(PENTAGON, PENTAGON_W, TUNED, [1, 1])
    assert image[1] / image[0] == Fraction(6, 7)
    assert pk.composed_projection(PENTAGON, PENTAGON_W, TUNED, [0, Fraction(-3, 2)]) == [0, 0, 0]
    assert pk.rational_lp_1d([1, 2, 1]) == (True, Fraction(1))
    assert pk.rational_lp_1d(["1", "1", "1"]) == (False, None)


def test_facets_and_simploids():
    facets = pk.facet_system(PENTAGON)
    assert len(facets) == 5
    assert ([Fraction(-1), Fraction(-1)], Fraction(3)) in facets
    points, weights = pk.simploid_config([(2, 2)])
    assert weights == [1, 2, 2, 1, 2, 1]
    assert len(points) == 6


def test_ipf_and_model():
    p, iterations, residual = pk.lp_blending(PENTAGON, PENTAGON_W, [11 / 14, 11 / 14])
    assert p == pytest.approx([w / 28 for w in PENTAGON_W], abs=1e-12)
    assert residual <= 1e-12
    q = pk.monomial_param(PENTAGON, PENTAGON_W, [0.3, 2.5])
    assert pk.binomial_relation_residual(q, PENTAGON, PENTAGON_W) < 1e-12


def test_normalize_and_errors():
    assert pk.normalize([1, 1, 2]) == pytest.approx([0.25, 0.25, 0.5])
    with pytest.raises(pk.PatchkitError, match="AllZero"):
        pk.normalize([0.0, 0.0])
    with pytest.raises(pk.PatchkitError, match="OutsideDomain"):
        pk.eval_patch(pk.fixtures.hexagon(), [3.0, 0.0])
    with pytest.raises(pk.NotConvergedError):
        pk.lp_blending(PENTAGON, PENTAGON_W, [0.3, 1.6], tol=1e-15, max_iter=1)


def test_patch_file_round_trip_and_mesh():
    spec = pk.PatchSpec.from_file(os.path.join(DATA, "pentagon_tuned.json"))
    assert pk.PatchSpec.from_json(spec.to_json()) == spec
    assert json.loads(spec.to_json())["taut_points"][4] == ["8/7", "8/7"]
    square = pk.PatchSpec.from_file(os.path.join(DATA, "square.json"))
    vertices, faces = pk.tessellate(square, 2)
    assert len(vertices) == 4 and len(faces) == 2
