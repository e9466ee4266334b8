import json
import math

import numpy as np

from hhfrac.serialize import dumps, format_float, write_csv


def test_seventeen_digits_round_trip():
    for x in (0.1, 1 / 3, 1e-300, 6.02214076e23, -2.5):
        s = format_float(x)
        assert float(s) == x
        assert len(s.replace("-", "").replace(".", "").split("e")[0].lstrip("0")) <= 17


def test_integral_floats_keep_a_point():
    assert format_float(3.0) == "3.0"
    assert json.loads(dumps({"x": 3.0}))["x"] == 3.0


def test_nonfinite_becomes_null():
    assert json.loads(dumps([math.nan, math.inf])) == [None, None]


def test_numpy_scalars():
    assert json.loads(dumps({"a": np.float64(0.5), "b": np.int64(3)})) == {"a": 0.5, "b": 3}


def test_compact_mode():
    assert dumps({"a": [1, 2.0]}, indent=0) == '{"a":[1,2.0]}'


def test_csv_blank_cells():
    text = write_csv([{"a": 1.0, "b": None, "c": "pass"}, {"a": math.nan}], ["a", "b", "c"])
    assert text == "a,b,c\n1.0,,pass\n,,\n"
