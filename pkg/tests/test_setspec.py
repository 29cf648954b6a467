import json

import numpy as np
import pytest

from projlmo import Ball1, Ball2, BallInf, Box, PolytopeV, Simplex, Singleton, parse_set


class TestGrammar:
    def test_box(self):
        s = parse_set("box l=-1,0 u=1,2")
        assert isinstance(s, Box)
        np.testing.assert_array_equal(s.lower, [-1.0, 0.0])
        np.testing.assert_array_equal(s.upper, [1.0, 2.0])

    def test_ball2(self):
        s = parse_set("ball2 c=2,2 r=1")
        assert isinstance(s, Ball2) and s.radius == 1.0
        np.testing.assert_array_equal(s.center, [2.0, 2.0])

    def test_ball1(self):
        s = parse_set("ball1 r=1.5 n=4")
        assert isinstance(s, Ball1) and s.radius == 1.5 and s.dim == 4

    def test_ballinf(self):
        s = parse_set("ballinf r=2 n=3")
        assert isinstance(s, BallInf) and s.radius == 2.0 and s.dim == 3

    def test_simplex(self):
        s = parse_set("simplex n=5")
        assert isinstance(s, Simplex) and s.dim == 5

    def test_polytope(self):
        s = parse_set("polytope v=0,0;1,0;0,1")
        assert isinstance(s, PolytopeV)
        assert s.vertex_array.shape == (3, 2)

    def test_singleton(self):
        s = parse_set("singleton p=0.5,-2")
        assert isinstance(s, Singleton)
        np.testing.assert_array_equal(s.point, [0.5, -2.0])

    def test_case_insensitive_kind(self):
        assert isinstance(parse_set("Simplex n=2"), Simplex)


class TestJsonFiles:
    @pytest.mark.parametrize(
        "payload, cls",
        [
            ({"kind": "box", "lower": [-1, 0], "upper": [1, 2]}, Box),
            ({"kind": "ball2", "center": [2, 2], "radius": 1}, Ball2),
            ({"kind": "ball1", "radius": 1.5, "dim": 4}, Ball1),
            ({"kind": "ballinf", "radius": 2, "dim": 3}, BallInf),
            ({"kind": "simplex", "dim": 5}, Simplex),
            ({"kind": "polytope", "vertices": [[0, 0], [1, 0], [0, 1]]}, PolytopeV),
            ({"kind": "singleton", "point": [0.5, -2]}, Singleton),
        ],
    )
    def test_roundtrip(self, tmp_path, payload, cls):
        path = tmp_path / "set.json"
        path.write_text(json.dumps(payload))
        assert isinstance(parse_set(f"@{path}"), cls)

    def test_missing_file(self):
        with pytest.raises(ValueError):
            parse_set("@/nonexistent/set.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ValueError):
            parse_set(f"@{path}")

    def test_json_without_kind(self, tmp_path):
        path = tmp_path / "nokind.json"
        path.write_text(json.dumps({"radius": 1.0}))
        with pytest.raises(ValueError):
            parse_set(f"@{path}")


class TestMalformed:
    @pytest.mark.parametrize(
        "spec",
        [
            "",
            "frisbee r=1",
            "ball2 c=2,2",
            "ball2 c=2,two r=1",
            "ball2 c=2,2 r=abc",
            "simplex n=x",
            "box l=1,0 u=0,1",
            "ball2 center 1",
            "polytope v=",
        ],
    )
    def test_raises_value_error(self, spec):
        with pytest.raises(ValueError):
            parse_set(spec)
