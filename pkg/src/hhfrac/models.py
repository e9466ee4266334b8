"""Convex test functions, weights, and the grid checks that validate them.

Functions and weights are declared in a small mini-language::

    function := "exp" [":" k ":" c] | "pow:" p | "quad:" c2 "," c1 "," c0
              | "maxaffine:" "(" m "," b ")" {"," "(" m "," b ")"} | "abslin:" c ["," s]
    weight   := "one" | "sym:poly:" p "," c | "sym:bump:" k | "sym:cosine:" k
              | "asym:lin:" m "," b

Every family has an exact derivative and a convexity certificate; the
certificates are still re-checked on each instance interval.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, EvaluationError, ParseError

ArrayFn = Callable[[np.ndarray], np.ndarray]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise DomainError(f"need finite a < b, got a={self.a!r}, b={self.b!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def length(self) -> float:
        return self.b - self.a

    def grid(self, n: int) -> np.ndarray:
        return np.linspace(self.a, self.b, n)


@dataclass(frozen=True)
class Claims:
    """Convexity certificates of a function family.

    ``dfq_min`` is the smallest ``q >= 1`` from which ``|f'|**q`` is claimed
    convex for every larger ``q`` (``inf`` when never claimed).
    """

    f_convex: bool = False
    df_convex: bool = False
    dfq_min: float = math.inf

    def dfq_convex(self, q: float) -> bool:
        return q >= self.dfq_min

    def as_list(self) -> list[str]:
        out = []
        if self.f_convex:
            out.append("f")
        if self.df_convex:
            out.append("|f'|")
        if math.isfinite(self.dfq_min):
            out.append(f"|f'|^q for q>={self.dfq_min:g}")
        return out


FULL_CLAIMS = Claims(True, True, 1.0)
NO_CLAIMS = Claims()


@dataclass(frozen=True)
class FunctionModel:
    spec: str
    eval_f: ArrayFn = field(repr=False)
    eval_df: ArrayFn = field(repr=False)
    claims: Claims
    kinks: tuple[float, ...] = ()
    domain: tuple[float, float] = (-math.inf, math.inf)

    def f(self, x):
        return self.eval_f(np.asarray(x, dtype=float))

    def df(self, x):
        return self.eval_df(np.asarray(x, dtype=float))

    def fv(self, x: float) -> float:
        return float(self.f(x))

    def dfv(self, x: float) -> float:
        return float(self.df(x))

    def kinks_in(self, lo: float, hi: float) -> tuple[float, ...]:
        return tuple(k for k in self.kinks if lo < k < hi)

    def covers(self, iv: Interval) -> bool:
        return self.domain[0] <= iv.a and iv.b <= self.domain[1]


@dataclass(frozen=True)
class WeightModel:
    spec: str
    eval_g: ArrayFn = field(repr=False)
    symmetric_by_construction: bool
    nonnegative_by_construction: bool
    interval: Interval

    def g(self, x):
        return self.eval_g(np.asarray(x, dtype=float))

    def gv(self, x: float) -> float:
        return float(self.g(x))

    def __call__(self, x):
        return self.g(x)


@dataclass(frozen=True)
class SupNorm:
    value: float
    argmax_estimate: float


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"


def _num(text: str, spec: str) -> float:
    text = text.strip()
    if not re.fullmatch(_NUM, text):
        raise ParseError(f"bad numeric literal {text!r} in {spec!r}")
    return float(text)


def _nums(text: str, spec: str, counts: tuple[int, ...]) -> list[float]:
    parts = text.split(",") if text.strip() else []
    if len(parts) not in counts:
        raise ParseError(f"{spec!r}: expected {' or '.join(map(str, counts))} parameters")
    return [_num(p, spec) for p in parts]


def _normalize(spec: str) -> str:
    return spec.strip().replace("−", "-").replace(" ", "")


def _exp(k: float, c: float) -> tuple[ArrayFn, ArrayFn]:
    return (lambda x: c * np.exp(k * x)), (lambda x: c * k * np.exp(k * x))


def _pow(p: float) -> tuple[ArrayFn, ArrayFn]:
    if p == 1.0:
        return (lambda x: np.asarray(x, dtype=float) * 1.0), (lambda x: np.ones_like(x, dtype=float))

    def f(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            return np.where(x >= 0, np.abs(x) ** p, np.nan)

    def df(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            return np.where(x >= 0, p * np.abs(x) ** (p - 1.0), np.nan)

    return f, df


def _upper_envelope(pieces: list[tuple[float, float]]) -> tuple[list[tuple[float, float]], list[float]]:
    """Pieces active in ``max(m*x + b)`` ordered by slope, and the kink abscissas."""
    best: dict[float, float] = {}
    for m, b in pieces:
        best[m] = max(b, best.get(m, -math.inf))
    lines = sorted(best.items())
    hull: list[tuple[float, float]] = []
    for m, b in lines:
        while len(hull) >= 2:
            (m1, b1), (m2, b2) = hull[-2], hull[-1]
            # drop the middle line when the new one overtakes m1 no later than m2 does
            if (b1 - b) * (m2 - m1) <= (b1 - b2) * (m - m1):
                hull.pop()
            else:
                break
        hull.append((m, b))
    kinks = [(b1 - b2) / (m2 - m1) for (m1, b1), (m2, b2) in zip(hull, hull[1:])]
    return hull, kinks


def _maxaffine(pieces: list[tuple[float, float]]):
    hull, kinks = _upper_envelope(pieces)
    slopes = np.array([m for m, _ in hull])
    icpt = np.array([b for _, b in hull])
    kk = np.array(kinks)

    def f(x):
        x = np.asarray(x, dtype=float)
        return np.max(slopes[:, None] * x.ravel()[None, :] + icpt[:, None], axis=0).reshape(x.shape)

    def df(x):
        x = np.asarray(x, dtype=float)
        # right-hand slope: at a kink the steeper piece takes over
        return slopes[np.searchsorted(kk, x, side="right")]

    same_abs = len({abs(m) for m, _ in hull}) == 1
    claims = FULL_CLAIMS if same_abs else Claims(True, False, math.inf)
    return f, df, tuple(kinks), claims


def parse_function(spec: str, strict: bool = True) -> FunctionModel:
    """Build a ``FunctionModel`` from a descriptor such as ``"pow:2"``.

    With ``strict=False`` the convexity-related parameter constraints are
    lifted and the claims reflect what actually holds; this is how concave
    negative controls are constructed.
    """
    raw = spec
    spec = _normalize(spec)
    head, _, rest = spec.partition(":")
    if head == "exp":
        k, c = (1.0, 1.0)
        if rest:
            parts = rest.split(":")
            if len(parts) != 2:
                raise ParseError(f"{raw!r}: expected exp:k:c")
            k, c = _num(parts[0], raw), _num(parts[1], raw)
        if strict and not (k > 0 and c > 0):
            raise ParseError(f"{raw!r}: exp family needs k > 0 and c > 0")
        f, df = _exp(k, c)
        claims = FULL_CLAIMS if c > 0 else NO_CLAIMS
        return FunctionModel(spec, f, df, claims)
    if head == "pow":
        (p,) = _nums(rest, raw, (1,))
        if p < 1 and strict:
            raise ParseError(f"{raw!r}: pow exponent must be >= 1")
        if p <= 0:
            raise ParseError(f"{raw!r}: pow exponent must be positive")
        f, df = _pow(p)
        if p < 1:
            claims = NO_CLAIMS
        elif p == 1 or p >= 2:
            claims = FULL_CLAIMS
        else:
            claims = Claims(True, False, 1.0 / (p - 1.0))
        return FunctionModel(spec, f, df, claims, domain=(0.0, math.inf))
    if head == "quad":
        c2, c1, c0 = _nums(rest, raw, (3,))
        if c2 < 0 and strict:
            raise ParseError(f"{raw!r}: quad needs c2 >= 0")
        f = lambda x: (c2 * x + c1) * x + c0  # noqa: E731
        df = lambda x: 2.0 * c2 * x + c1  # noqa: E731
        claims = FULL_CLAIMS if c2 >= 0 else Claims(False, True, 1.0)
        return FunctionModel(spec, f, df, claims)
    if head == "maxaffine":
        body = rest
        if not re.fullmatch(rf"\({_NUM},{_NUM}\)(?:,\({_NUM},{_NUM}\))*", body):
            raise ParseError(f"{raw!r}: expected maxaffine:(m,b),(m,b),...")
        pieces = [
            (_num(m, raw), _num(b, raw))
            for m, b in re.findall(rf"\(({_NUM}),({_NUM})\)", body)
        ]
        f, df, kinks, claims = _maxaffine(pieces)
        return FunctionModel(spec, f, df, claims, kinks=kinks)
    if head == "abslin":
        vals = _nums(rest, raw, (1, 2))
        c = vals[0]
        s = vals[1] if len(vals) == 2 else 0.0
        if c <= 0 and strict:
            raise ParseError(f"{raw!r}: abslin needs c > 0")
        f = lambda x: c * np.abs(x - s)  # noqa: E731
        df = lambda x: np.where(np.asarray(x) >= s, c, -c) * 1.0  # noqa: E731
        claims = FULL_CLAIMS if c > 0 else Claims(False, True, 1.0)
        return FunctionModel(spec, f, df, claims, kinks=(s,))
    raise ParseError(f"unknown function family in {raw!r}")


def parse_weight(spec: str, iv: Interval) -> WeightModel:
    """Build a ``WeightModel`` on ``iv``.

    ``sym:`` families are written as ``h(|x - midpoint|)`` so that
    ``g(a + b - x) == g(x)`` holds by formula.
    """
    raw = spec
    spec = _normalize(spec)
    m = iv.midpoint
    if spec == "one":
        return WeightModel(spec, lambda x: np.ones_like(np.asarray(x, dtype=float)), True, True, iv)
    if spec.startswith("sym:"):
        fam, _, rest = spec[4:].partition(":")
        if fam == "poly":
            p, c = _nums(rest, raw, (2,))
            if p < 0:
                raise ParseError(f"{raw!r}: sym:poly needs p >= 0")
            g = lambda x: np.abs(x - m) ** p + c  # noqa: E731
            return WeightModel(spec, g, True, c >= 0, iv)
        if fam == "bump":
            (k,) = _nums(rest, raw, (1,))
            if k < 0:
                raise ParseError(f"{raw!r}: sym:bump needs k >= 0")
            g = lambda x: np.exp(-k * np.abs(x - m) ** 2)  # noqa: E731
            return WeightModel(spec, g, True, True, iv)
        if fam == "cosine":
            (k,) = _nums(rest, raw, (1,))
            g = lambda x: 1.0 + np.cos(k * np.abs(x - m))  # noqa: E731
            return WeightModel(spec, g, True, True, iv)
        raise ParseError(f"unknown symmetric weight family in {raw!r}")
    if spec.startswith("asym:lin:"):
        slope, icpt = _nums(spec[len("asym:lin:"):], raw, (2,))
        g = lambda x: slope * np.asarray(x, dtype=float) + icpt  # noqa: E731
        return WeightModel(spec, g, False, False, iv)
    raise ParseError(f"unknown weight family in {raw!r}")


def _finite(y: np.ndarray, what: str) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise EvaluationError(f"{what} produced a non-finite value")
    return y


def check_convexity(h: Callable, iv: Interval, n: int = 64) -> float:
    """Largest midpoint-convexity gap ``h((x+y)/2) - (h(x)+h(y))/2`` over grid pairs ``x < y``."""
    if n < 3:
        raise DomainError("check_convexity needs n >= 3")
    x = iv.grid(n)
    i, j = np.triu_indices(n, k=1)
    hx = _finite(h(x), "convexity test function")
    mid = _finite(h(0.5 * (x[i] + x[j])), "convexity test function")
    return float(np.max(mid - 0.5 * (hx[i] + hx[j])))


def check_symmetry(g: WeightModel, iv: Interval, n: int = 257) -> float:
    """Largest ``|g(a+b-x) - g(x)|`` on an ``n``-point grid."""
    if n < 1:
        raise DomainError("check_symmetry needs n >= 1")
    x = iv.grid(n)
    return float(np.max(np.abs(_finite(g.g(iv.a + iv.b - x), "weight") - _finite(g.g(x), "weight"))))


def sup_norm(g: WeightModel | Callable, lo: float, hi: float, n: int = 1024, xtol: float = 1e-12) -> SupNorm:
    """Supremum of ``|g|`` on ``[lo, hi]``: dense scan, then golden-section refinement."""
    if not lo < hi:
        raise DomainError(f"need lo < hi, got lo={lo!r}, hi={hi!r}")
    if n < 2:
        raise DomainError("sup_norm needs n >= 2")
    fn = g.g if isinstance(g, WeightModel) else g

    def absg(x):
        return abs(float(_finite(fn(np.asarray(x, dtype=float)), "weight")))

    x = np.linspace(lo, hi, n)
    y = np.abs(_finite(fn(x), "weight"))
    k = int(np.argmax(y))
    best_x, best = float(x[k]), float(y[k])
    left, right = float(x[max(k - 1, 0)]), float(x[min(k + 1, n - 1)])
    width = xtol * (hi - lo)
    c = right - INV_PHI * (right - left)
    d = left + INV_PHI * (right - left)
    fc, fd = absg(c), absg(d)
    while right - left > width:
        if fc >= fd:
            right, d, fd = d, c, fc
            c = right - INV_PHI * (right - left)
            fc = absg(c)
        else:
            left, c, fc = c, d, fd
            d = left + INV_PHI * (right - left)
            fd = absg(d)
    for xc, yc in ((c, fc), (d, fd)):
        if yc > best:
            best_x, best = xc, yc
    return SupNorm(best, best_x)


def min_value(g: WeightModel, iv: Interval, n: int = 1024) -> float:
    return float(np.min(_finite(g.g(iv.grid(n)), "weight")))


def derivative_mismatch(model: FunctionModel, iv: Interval, n: int = 33) -> float:
    """Worst scaled gap between ``eval_df`` and a central difference of ``eval_f``.

    Grid points within two steps of a declared kink are skipped.  The return
    value is ``max |df - fd| / (1 + |df|)``.
    """
    h = 1e-6 * iv.length
    x = iv.grid(n)
    if model.kinks:
        near = np.min(np.abs(x[:, None] - np.array(model.kinks)[None, :]), axis=1) <= 2 * h
        x = x[~near]
    lo = np.maximum(x - h, model.domain[0])
    hi = np.minimum(x + h, model.domain[1])
    fd = (_finite(model.f(hi), model.spec) - _finite(model.f(lo), model.spec)) / (hi - lo)
    d = _finite(model.df(x), model.spec)
    return float(np.max(np.abs(d - fd) / (1.0 + np.abs(d)))) if len(x) else 0.0


def convexity_scale(h: Callable, iv: Interval, n: int = 64) -> float:
    return float(np.max(np.abs(_finite(h(iv.grid(n)), "convexity test function"))))


def claim_violations(model: FunctionModel, iv: Interval, q: float | None = None, n: int = 64) -> list[str]:
    """Names of the declared claims that fail the grid convexity test on ``iv``."""
    if not model.covers(iv):
        return [f"interval outside domain {model.domain}"]
    tests: list[tuple[str, Callable]] = []
    if model.claims.f_convex:
        tests.append(("f", model.f))
    if model.claims.df_convex:
        tests.append(("|f'|", lambda x: np.abs(model.df(x))))
    if q is not None and model.claims.dfq_convex(q):
        tests.append((f"|f'|^{q:g}", lambda x: np.abs(model.df(x)) ** q))
    bad = []
    for name, h in tests:
        scale = convexity_scale(h, iv, n)
        if check_convexity(h, iv, n) > 1e-12 * (1.0 + scale):
            bad.append(name)
    return bad
