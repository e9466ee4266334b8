"""Command-line front end: ``hhfrac verify | sweep | eval | replay``.

Exit status: 0 when everything holds, 1 on an unexpected ``fail`` (or a
replay mismatch), 2 on usage or input errors, 3 when ``eval`` is
inconclusive, 4 when ``eval`` hits an unmet hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import engine as E
from .errors import HHFracError, PreconditionError
from .harness import (
    DEFAULT_FUNCTIONS,
    DEFAULT_WEIGHTS,
    EVALUATORS,
    SKIPPED,
    SUITE_NAMES,
    SWEEP_BOUNDS,
    SWEEP_COLUMNS,
    Instance,
    InstanceConfig,
    parse_alphas,
    replay,
    run_suite,
    sweep_alpha,
)
from .serialize import SCHEMA_VERSION, dumps, suite_document, write_csv

EVAL_NAMES = (
    "hh", "fejer", "hh-frac", "fejer-frac", "lemma23", "kirmaci-id",
    "kirmaci-1", "kirmaci-2", "thm24", "thm25", "thm26", "eq0",
)


def _range(text: str) -> tuple[float, float]:
    """``"lo:hi"`` or a single value pinned as ``(v, v)``."""
    parts = text.split(":")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi or a number, got {text!r}") from exc
    if len(vals) == 1:
        return vals[0], vals[0]
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    return vals[0], vals[1]


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hhfrac", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a seeded verification suite")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")
    v.add_argument("--n", type=int, default=100, help="number of instances")
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--atol", type=float, default=E.DEFAULT_TOL.atol)
    v.add_argument("--rtol", type=float, default=E.DEFAULT_TOL.rtol)
    v.add_argument("--out", help="write the JSON report here (default: summary only)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--f", action="append", dest="functions", metavar="SPEC",
                   help="function pool entry (repeatable)")
    v.add_argument("--g", action="append", dest="weights", metavar="SPEC",
                   help="weight pool entry (repeatable)")
    v.add_argument("--alpha-range", type=_range, default=(0.2, 3.0), metavar="LO:HI")
    v.add_argument("--q-range", type=_range, default=(1.2, 4.0), metavar="LO:HI")
    v.add_argument("--a-range", type=_range, default=(0.0, 2.0), metavar="LO:HI")
    v.add_argument("--length-range", type=_range, default=(0.5, 3.0), metavar="LO:HI")

    s = sub.add_parser("sweep", help="tabulate a bound across alpha as CSV")
    s.add_argument("--bound", choices=SWEEP_BOUNDS, required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--g", default="one")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--b", type=float, required=True)
    s.add_argument("--alphas", required=True, help="lo:hi:step or a comma list")
    s.add_argument("--q", type=float, default=2.0, help="exponent for thm25 (and p/(p-1) for thm26)")
    s.add_argument("--out")

    e = sub.add_parser("eval", help="evaluate one check on one instance")
    e.add_argument("--eq", choices=EVAL_NAMES, required=True)
    e.add_argument("--f", required=True)
    e.add_argument("--g", default="one")
    e.add_argument("--a", type=float, required=True)
    e.add_argument("--b", type=float, required=True)
    e.add_argument("--alpha", type=float, default=1.0)
    e.add_argument("--q", type=float)
    e.add_argument("--p", type=float)
    e.add_argument("--x", type=float)
    e.add_argument("--atol", type=float, default=E.DEFAULT_TOL.atol)
    e.add_argument("--rtol", type=float, default=E.DEFAULT_TOL.rtol)
    e.add_argument("--allow-nonconvex", action="store_true",
                   help="skip hypothesis checks on f (negative controls)")

    r = sub.add_parser("replay", help="re-run a saved report or suite file")
    r.add_argument("--record", required=True, help="JSON report, list of reports, or suite file")
    r.add_argument("--all", action="store_true", help="replay every report, not only fails")
    return ap


def _cmd_verify(ns) -> int:
    cfg = InstanceConfig(
        function_pool=tuple(ns.functions or DEFAULT_FUNCTIONS),
        weight_pool=tuple(ns.weights or DEFAULT_WEIGHTS),
        a_range=ns.a_range,
        length_range=ns.length_range,
        alpha_range=ns.alpha_range,
        q_range=ns.q_range,
        seed=ns.seed,
    )
    tol = E.Tolerance(ns.atol, ns.rtol)
    rep = run_suite(ns.suite, ns.n, cfg, tol, jobs=ns.jobs)
    if ns.out:
        Path(ns.out).write_text(dumps(suite_document(rep)) + "\n")
    s = rep.summary()
    c = s["counts"]
    print(
        f"suite={ns.suite} instances={ns.n} reports={s['reports']} pass={c['pass']} "
        f"fail={c['fail']} inconclusive={c['inconclusive']} skipped={c[SKIPPED]} "
        f"unexpected_fails={s['unexpected_fails']} "
        f"controls_detected={s['negative_controls']['detected']}/{s['negative_controls']['evaluated']} "
        f"time={rep.wall_time:.2f}s"
    )
    for g, r in rep.results:
        if r.verdict == E.FAIL and g != "negative-controls":
            print("FAIL " + json.dumps({"name": r.name, "slack": r.slack, "instance": r.instance}))
    return 0 if rep.ok else 1


def _cmd_sweep(ns) -> int:
    q = ns.q
    inst = Instance(ns.f, ns.g, ns.a, ns.b, 1.0, q, q / (q - 1.0), 0.5 * (ns.a + ns.b))
    inst.interval  # validates a < b
    rows = sweep_alpha(inst, parse_alphas(ns.alphas), ns.bound)
    _emit(write_csv(rows, SWEEP_COLUMNS), ns.out)
    return 0


def _cmd_eval(ns) -> int:
    if ns.p is not None and ns.q is not None:
        q, p = ns.q, ns.p
    elif ns.p is not None:
        p = ns.p
        q = p / (p - 1.0)
    else:
        q = ns.q if ns.q is not None else 2.0
        p = q / (q - 1.0)
    x = ns.x if ns.x is not None else 0.5 * (ns.a + ns.b)
    inst = Instance(ns.f, ns.g, ns.a, ns.b, ns.alpha, q, p, x, strict=not ns.allow_nonconvex)
    tol = E.Tolerance(ns.atol, ns.rtol)
    rep = EVALUATORS[ns.eq](inst, None, tol)
    rep.instance = inst.to_record()
    doc = dict(rep.to_dict(), tolerance={"atol": tol.atol, "rtol": tol.rtol},
               schema_version=SCHEMA_VERSION)
    print(dumps(doc))
    return {E.PASS: 0, E.FAIL: 1, E.INCONCLUSIVE: 3}[rep.verdict]


def _reports_in(doc: Any) -> list[dict[str, Any]]:
    if isinstance(doc, list):
        return doc
    if "results" in doc:
        tol = doc.get("config", {}).get("tolerance")
        return [dict(r, tolerance=r.get("tolerance") or tol) for r in doc["results"]]
    return [doc]


def _cmd_replay(ns) -> int:
    doc = json.loads(Path(ns.record).read_text())
    reports = _reports_in(doc)
    if not ns.all and len(reports) > 1:
        reports = [r for r in reports if r.get("verdict") == E.FAIL]
    mismatches = 0
    for old in reports:
        new, same = replay(old)
        mismatches += not same
        print(f"{'MATCH' if same else 'MISMATCH'} {old['name']} {old.get('verdict')} -> {new.verdict} "
              + json.dumps(old["instance"]))
    print(f"replayed={len(reports)} mismatches={mismatches}")
    return 0 if mismatches == 0 else 1


COMMANDS = {"verify": _cmd_verify, "sweep": _cmd_sweep, "eval": _cmd_eval, "replay": _cmd_replay}


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return COMMANDS[ns.command](ns)
    except HHFracError as exc:
        print(f"hhfrac: {exc}", file=sys.stderr)
        return 4 if isinstance(exc, PreconditionError) else 2
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"hhfrac: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
