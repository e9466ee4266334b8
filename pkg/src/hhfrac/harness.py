"""Seeded instance generation, suite execution, alpha sweeps and replay.

Every instance is a pure function of ``(seed, index)``: the generator for
index ``i`` is a PCG64 stream spawned from ``SeedSequence(seed)`` with spawn
key ``(i,)``, so serial and parallel runs draw identical samples.
"""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError, GenerationError, HHFracError, ParseError, PreconditionError
from .models import (
    FunctionModel,
    Interval,
    WeightModel,
    claim_violations,
    derivative_mismatch,
    parse_function,
    parse_weight,
)
from .quadrature import QuadConfig
from . import engine as E
from .engine.common import require_fejer_weight

DEFAULT_FUNCTIONS = (
    "exp",
    "pow:2",
    "pow:3",
    "quad:1,0,0",
    "maxaffine:(-1,1),(1,-1)",
    "abslin:2,1.5",
)
DEFAULT_WEIGHTS = ("one", "sym:bump:2", "sym:cosine:1", "sym:poly:2,1")
CONTROL_FUNCTION = "quad:-1,0,0"
SKIPPED = "skipped"


@dataclass(frozen=True)
class InstanceConfig:
    function_pool: tuple[str, ...] = DEFAULT_FUNCTIONS
    weight_pool: tuple[str, ...] = DEFAULT_WEIGHTS
    a_range: tuple[float, float] = (0.0, 2.0)
    length_range: tuple[float, float] = (0.5, 3.0)
    alpha_range: tuple[float, float] = (0.2, 3.0)
    q_range: tuple[float, float] = (1.2, 4.0)
    seed: int = 0
    max_retries: int = 64

    def __post_init__(self):
        object.__setattr__(self, "function_pool", tuple(self.function_pool))
        object.__setattr__(self, "weight_pool", tuple(self.weight_pool))
        if not self.function_pool or not self.weight_pool:
            raise DomainError("function and weight pools must be non-empty")
        for name in ("a_range", "length_range", "alpha_range", "q_range"):
            lo, hi = (float(v) for v in getattr(self, name))
            if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
                raise DomainError(f"{name} must be finite and ordered, got {(lo, hi)}")
            object.__setattr__(self, name, (lo, hi))
        if self.length_range[0] <= 0:
            raise DomainError("interval lengths must be positive")
        if self.alpha_range[0] <= 0:
            raise DomainError("alpha_range lower bound must be > 0")
        if self.q_range[0] <= 1:
            raise DomainError("q_range lower bound must be > 1")
        if not 0 <= int(self.seed) < 2**64:
            raise DomainError(f"seed must fit in 64 unsigned bits, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))
        if self.max_retries < 1:
            raise DomainError("max_retries must be >= 1")

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


@dataclass(frozen=True)
class Instance:
    """Everything an evaluator needs, in serializable form."""

    f: str
    g: str
    a: float
    b: float
    alpha: float
    q: float
    p: float
    x: float
    index: int | None = None
    seed: int | None = None
    strict: bool = True

    @property
    def interval(self) -> Interval:
        return Interval(self.a, self.b)

    def function(self) -> FunctionModel:
        return parse_function(self.f, strict=self.strict)

    def weight(self) -> WeightModel:
        return parse_weight(self.g, self.interval)

    def to_record(self) -> dict[str, Any]:
        rec = asdict(self)
        return {k: v for k, v in rec.items() if v is not None}

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "Instance":
        a, b = float(rec["a"]), float(rec["b"])
        alpha = float(rec.get("alpha", 1.0))
        q = float(rec.get("q", 2.0))
        return cls(
            f=rec["f"],
            g=rec.get("g", "one"),
            a=a,
            b=b,
            alpha=alpha,
            q=q,
            p=float(rec.get("p", q / (q - 1.0))),
            x=float(rec.get("x", 0.5 * (a + b))),
            index=rec.get("index"),
            seed=rec.get("seed"),
            strict=bool(rec.get("strict", True)),
        )


def instance_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    return lo if lo == hi else float(rng.uniform(lo, hi))


def validate_instance(inst: Instance) -> None:
    """Re-check every claim an evaluator will rely on; raise ``PreconditionError``."""
    iv = inst.interval
    f = inst.function()
    c = f.claims
    if not (c.f_convex and c.df_convex and c.dfq_convex(inst.q)):
        raise PreconditionError(f"{inst.f}: claims do not cover convexity of f, |f'| and |f'|^{inst.q:g}")
    bad = claim_violations(f, iv, inst.q)
    if bad:
        raise PreconditionError(f"{inst.f}: claims {bad} fail on [{iv.a}, {iv.b}]")
    mismatch = derivative_mismatch(f, iv)
    if mismatch > 1e-5:
        raise PreconditionError(f"{inst.f}: derivative inconsistent on [{iv.a}, {iv.b}] ({mismatch:.2g})")
    require_fejer_weight(inst.weight(), iv)


def gen_instance(cfg: InstanceConfig, index: int) -> Instance:
    """Deterministic validated instance for ``(cfg.seed, index)``.

    The split point ``x`` cycles through ``a``, the midpoint, ``b`` and a
    uniform draw so that every fourth instance hits each special position.
    """
    rng = instance_rng(cfg.seed, index)
    last: Exception | None = None
    for _ in range(cfg.max_retries):
        f = cfg.function_pool[int(rng.integers(len(cfg.function_pool)))]
        g = cfg.weight_pool[int(rng.integers(len(cfg.weight_pool)))]
        a = _uniform(rng, *cfg.a_range)
        b = a + _uniform(rng, *cfg.length_range)
        alpha = _uniform(rng, *cfg.alpha_range)
        q = _uniform(rng, *cfg.q_range)
        u = float(rng.uniform())
        x = (a, 0.5 * (a + b), b, a + u * (b - a))[index % 4]
        inst = Instance(f, g, a, b, alpha, q, q / (q - 1.0), x, index, cfg.seed)
        try:
            validate_instance(inst)
            return inst
        except (PreconditionError, ParseError, DomainError) as exc:
            last = exc
    raise GenerationError(f"index {index}: no valid instance in {cfg.max_retries} draws ({last})")


# name -> evaluator(instance, quad config, tolerance)
Evaluator = Callable[[Instance, "QuadConfig | None", E.Tolerance], E.InequalityReport]

EVALUATORS: dict[str, Evaluator] = {
    "hh": lambda i, c, t: E.hh_classical(i.function(), i.interval, c, t, check=i.strict),
    "fejer": lambda i, c, t: E.fejer_classical(i.function(), i.weight(), i.interval, c, t, check=i.strict),
    "hh-frac": lambda i, c, t: E.hh_fractional(i.function(), i.alpha, i.interval, c, t, check=i.strict),
    "fejer-frac": lambda i, c, t: E.fejer_fractional(
        i.function(), i.weight(), i.alpha, i.interval, c, t, check=i.strict
    ),
    "lemma23": lambda i, c, t: E.midpoint_identity_residual(i.function(), i.weight(), i.alpha, i.interval, c, t),
    "kirmaci-id": lambda i, c, t: E.midpoint_mean_identity_residual(i.function(), i.interval, c, t),
    "kirmaci-1": lambda i, c, t: E.midpoint_mean_bound(i.function(), i.interval, c, t),
    "kirmaci-2": lambda i, c, t: E.midpoint_mean_holder_bound(i.function(), i.interval, i.p, c, t),
    "thm24": lambda i, c, t: E.midpoint_sup_bound(i.function(), i.weight(), i.alpha, i.interval, c, t),
    "thm25": lambda i, c, t: E.midpoint_power_mean_bound(i.function(), i.weight(), i.alpha, i.interval, i.q, c, t),
    "thm26": lambda i, c, t: E.midpoint_holder_bound(i.function(), i.weight(), i.alpha, i.interval, i.p, c, t),
    "eq0": lambda i, c, t: E.weighted_power_identity_residual(
        i.function(), i.weight(), i.alpha, i.x, i.interval, c, t
    ),
    "order-one-identity": lambda i, c, t: E.midpoint_identity_at_order_one(i.function(), i.weight(), i.interval, c, t),
    "unit-weight-sup": lambda i, c, t: E.sup_bound_at_unit_weight(i.function(), i.interval, c, t),
    "unit-weight-holder": lambda i, c, t: E.holder_bound_at_unit_weight(i.function(), i.interval, i.p, c, t),
}

SUITES: dict[str, tuple[str, ...]] = {
    "identities": ("lemma23", "kirmaci-id", "eq0"),
    "sandwiches": ("hh", "fejer", "hh-frac", "fejer-frac"),
    "bounds": ("kirmaci-1", "kirmaci-2", "thm24", "thm25", "thm26"),
    "reductions": ("order-one-identity", "unit-weight-sup", "unit-weight-holder"),
    "negative-controls": ("hh", "fejer", "hh-frac", "fejer-frac"),
}
SUITE_NAMES = (*SUITES, "all")

# RHS label used for the tightness ratio lhs/rhs
TIGHTNESS_RHS = {
    "kirmaci-1": "rhs",
    "kirmaci-2": "rhs",
    "thm24": "rhs_final",
    "thm25": "rhs_stmt",
    "thm26": "rhs_final",
}


def control_instance(inst: Instance) -> Instance:
    """The same draw with ``f`` replaced by the concave control ``-x**2``."""
    return Instance(
        CONTROL_FUNCTION, inst.g, inst.a, inst.b, inst.alpha, inst.q, inst.p, inst.x,
        inst.index, inst.seed, strict=False,
    )


def evaluate(
    name: str,
    inst: Instance,
    cfg: QuadConfig | None = None,
    tol: E.Tolerance = E.DEFAULT_TOL,
) -> E.InequalityReport:
    """Run one named check; hypothesis failures come back as ``skipped`` reports."""
    if name not in EVALUATORS:
        raise KeyError(f"unknown check {name!r}; choose from {sorted(EVALUATORS)}")
    try:
        rep = EVALUATORS[name](inst, cfg, tol)
    except PreconditionError as exc:
        rep = E.InequalityReport(name, [], math.nan, SKIPPED, {}, notes={"error": str(exc)})
    rep.instance = inst.to_record()
    return rep


def _suite_checks(suite: str) -> list[tuple[str, str]]:
    if suite not in SUITE_NAMES:
        raise KeyError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    groups = SUITES if suite == "all" else {suite: SUITES[suite]}
    return [(g, name) for g, names in groups.items() for name in names]


def run_instance(
    suite: str, index: int, cfg: InstanceConfig, quad: QuadConfig | None, tol: E.Tolerance
) -> list[tuple[str, E.InequalityReport]]:
    inst = gen_instance(cfg, index)
    out = []
    for group, name in _suite_checks(suite):
        target = control_instance(inst) if group == "negative-controls" else inst
        out.append((group, evaluate(name, target, quad, tol)))
    return out


def _run_chunk(args) -> list[tuple[int, list[tuple[str, E.InequalityReport]]]]:
    suite, indices, cfg, quad, tol = args
    return [(i, run_instance(suite, i, cfg, quad, tol)) for i in indices]


@dataclass
class SuiteReport:
    suite: str
    n: int
    config: dict[str, Any]
    results: list[tuple[str, E.InequalityReport]] = field(default_factory=list)
    wall_time: float = 0.0

    def _regular(self) -> list[E.InequalityReport]:
        return [r for g, r in self.results if g != "negative-controls"]

    def _controls(self) -> list[E.InequalityReport]:
        return [r for g, r in self.results if g == "negative-controls"]

    @staticmethod
    def _count(reports: Iterable[E.InequalityReport]) -> dict[str, int]:
        c = {E.PASS: 0, E.FAIL: 0, E.INCONCLUSIVE: 0, SKIPPED: 0}
        for r in reports:
            c[r.verdict] += 1
        return c

    @property
    def counts(self) -> dict[str, int]:
        return self._count(r for _, r in self.results)

    @property
    def unexpected_fails(self) -> int:
        return sum(r.verdict == E.FAIL for r in self._regular())

    @property
    def controls_missed(self) -> int:
        return sum(r.verdict != E.FAIL for r in self._controls())

    @property
    def ok(self) -> bool:
        return self.unexpected_fails == 0 and self.controls_missed == 0

    def by_check(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for g, r in self.results:
            key = f"{g}/{r.name}"
            out.setdefault(key, self._count([]))[r.verdict] += 1
        return out

    def worst(self) -> dict[str, Any] | None:
        scored = [r for r in self._regular() if not math.isnan(r.slack)]
        if not scored:
            return None
        r = min(scored, key=lambda r: r.slack)
        return {"check": r.name, "slack": r.slack, "verdict": r.verdict, "instance": r.instance}

    def tightness(self) -> dict[str, dict[str, float]]:
        ratios: dict[str, list[float]] = {}
        for r in self._regular():
            label = TIGHTNESS_RHS.get(r.name)
            if label is None or not r.sides:
                continue
            rhs = r.side(label)
            if rhs > 0:
                ratios.setdefault(r.name, []).append(r.side("lhs") / rhs)
        return {
            k: {"min": min(v), "median": statistics.median(v), "max": max(v), "count": len(v)}
            for k, v in sorted(ratios.items())
        }

    def power_mean_candidates(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self._regular():
            if r.name != "thm25" or "candidates" not in r.notes:
                continue
            for cand, v in r.notes["candidates"].items():
                row = out.setdefault(cand, {"evaluated": 0, "violations": 0, "inconclusive": 0})
                row["evaluated"] += 1
                row["violations"] += v == E.FAIL
                row["inconclusive"] += v == E.INCONCLUSIVE
        return out

    def summary(self) -> dict[str, Any]:
        counts = self.counts
        return {
            "instances": self.n,
            "reports": len(self.results),
            "counts": counts,
            "by_check": self.by_check(),
            "unexpected_fails": self.unexpected_fails,
            "negative_controls": {
                "evaluated": len(self._controls()),
                "detected": len(self._controls()) - self.controls_missed,
            },
            "worst": self.worst(),
            "tightness": self.tightness(),
            "power_mean_candidates": self.power_mean_candidates(),
            "ok": self.ok,
            "wall_time_s": self.wall_time,
        }

    def to_dict(self, include_results: bool = True) -> dict[str, Any]:
        d: dict[str, Any] = {"suite": self.suite, "config": self.config}
        d["results"] = (
            [dict(r.to_dict(), group=g, tolerance=self.config["tolerance"]) for g, r in self.results]
            if include_results
            else []
        )
        d["summary"] = self.summary()
        return d


def run_suite(
    suite: str,
    n: int,
    cfg: InstanceConfig | None = None,
    tol: E.Tolerance = E.DEFAULT_TOL,
    quad: QuadConfig | None = None,
    jobs: int = 1,
) -> SuiteReport:
    cfg = cfg or InstanceConfig()
    _suite_checks(suite)
    if n < 0:
        raise DomainError("n must be non-negative")
    start = time.perf_counter()
    if jobs > 1 and n > 1:
        chunks = [list(range(k, n, jobs)) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, [(suite, c, cfg, quad, tol) for c in chunks])
            by_index = dict(pair for part in parts for pair in part)
    else:
        by_index = dict(_run_chunk((suite, range(n), cfg, quad, tol)))
    results = [item for i in range(n) for item in by_index[i]]
    config = {
        "instances": cfg.to_dict(),
        "tolerance": {"atol": tol.atol, "rtol": tol.rtol},
        "quadrature": asdict(quad) if quad else None,
    }
    return SuiteReport(suite, n, config, results, time.perf_counter() - start)


SWEEP_COLUMNS = ("alpha", "lhs", "rhs_final", "rhs_sharp", "rhs_stmt", "rhs_proof", "ratio", "status")
SWEEP_BOUNDS = ("thm24", "thm25", "thm26")


def parse_alphas(text: str) -> list[float]:
    """``"lo:hi:step"`` (inclusive of ``hi`` up to rounding) or a comma list."""
    text = text.strip()
    if ":" in text:
        try:
            lo, hi, step = (float(v) for v in text.split(":"))
        except ValueError as exc:
            raise ParseError(f"expected lo:hi:step, got {text!r}") from exc
        if not step > 0 or hi < lo:
            raise ParseError(f"need step > 0 and lo <= hi in {text!r}")
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        alphas = [round(lo + k * step, 12) for k in range(count)]
    else:
        try:
            alphas = [float(v) for v in text.split(",") if v.strip()]
        except ValueError as exc:
            raise ParseError(f"bad alpha list {text!r}") from exc
    if not alphas:
        raise ParseError("empty alpha list")
    if any(not (math.isfinite(a) and a > 0) for a in alphas):
        raise DomainError("alphas must be finite and strictly positive")
    if any(y < x for x, y in zip(alphas, alphas[1:])):
        raise DomainError("alphas must be sorted")
    return alphas


def sweep_alpha(
    inst: Instance,
    alphas: Sequence[float],
    which: str,
    quad: QuadConfig | None = None,
    tol: E.Tolerance = E.DEFAULT_TOL,
) -> list[dict[str, Any]]:
    """One row per alpha; per-row failures land in ``status`` and the sweep continues."""
    if which not in SWEEP_BOUNDS:
        raise KeyError(f"unknown bound {which!r}; choose from {SWEEP_BOUNDS}")
    rows = []
    for alpha in alphas:
        row: dict[str, Any] = dict.fromkeys(SWEEP_COLUMNS)
        row["alpha"] = float(alpha)
        try:
            rep = evaluate(which, _with_alpha(inst, alpha), quad, tol)
        except HHFracError as exc:
            row["status"] = f"error: {exc}"
            rows.append(row)
            continue
        row["status"] = rep.verdict
        for s in rep.sides:
            if s.label in row:
                row[s.label] = s.value
        if row["lhs"] is not None and row["rhs_final"]:
            row["ratio"] = row["lhs"] / row["rhs_final"]
        rows.append(row)
    return rows


def _with_alpha(inst: Instance, alpha: float) -> Instance:
    return Instance(inst.f, inst.g, inst.a, inst.b, float(alpha), inst.q, inst.p, inst.x,
                    inst.index, inst.seed, inst.strict)


def replay(report: dict[str, Any], quad: QuadConfig | None = None) -> tuple[E.InequalityReport, bool]:
    """Re-run a serialized report; returns the new report and whether the verdict matches."""
    inst = Instance.from_record(report["instance"])
    tol = E.Tolerance(**report["tolerance"]) if report.get("tolerance") else E.DEFAULT_TOL
    new = evaluate(report["name"], inst, quad, tol)
    return new, new.verdict == report.get("verdict")
