import json
import os
import subprocess
import sys

import hhfrac


def _run(pure: bool, code: str) -> str:
    env = dict(os.environ, HHFRAC_PURE_PYTHON="1" if pure else "0")
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout


def test_env_var_forces_fallback():
    assert _run(True, "import hhfrac; print(hhfrac.BACKEND)").strip() == "python"


def test_backend_flag_consistent():
    assert hhfrac.BACKEND == ("cython" if hhfrac.COMPILED else "python")


def test_suites_agree_across_backends():
    code = (
        "import json; from hhfrac.harness import run_suite, InstanceConfig;"
        "r = run_suite('all', 3, InstanceConfig(seed=5));"
        "print(json.dumps([(x.name, x.verdict, x.sides and x.sides[0].value) for _, x in r.results]))"
    )
    py = json.loads(_run(True, code))
    native = json.loads(_run(False, code))
    assert [r[:2] for r in py] == [r[:2] for r in native]
    for (_, _, a), (_, _, b) in zip(py, native):
        assert abs(a - b) <= 1e-12 * (1 + abs(a))
