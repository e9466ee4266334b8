"""Pure-Python implementation of the numeric hot kernels.

Mirrors ``_kernels.pyx`` function for function.  It is used when the compiled
extension is unavailable or when ``HHFRAC_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

# Gauss-Kronrod 10/21 abscissae and weights on [-1, 1] (positive half, outermost first).
XGK = (
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
)
WGK = (
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600104567248,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
)
WG = (
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
)


def _full_rule():
    nodes = np.empty(21)
    wk = np.empty(21)
    wg = np.zeros(21)
    for i in range(11):
        nodes[i] = -XGK[i]
        nodes[20 - i] = XGK[i]
        wk[i] = wk[20 - i] = WGK[i]
    for j in range(5):
        i = 2 * j + 1
        wg[i] = wg[20 - i] = WG[j]
    return nodes, wk, wg


NODES21, WK21, WG21 = _full_rule()

EPS = np.finfo(float).eps

LANCZOS_G = 7.0
LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
SQRT_2PI = 2.5066282746310005024


def lanczos_gamma(x: float) -> float:
    """Gamma function for real ``x`` that is not a non-positive integer."""
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * lanczos_gamma(1.0 - x))
    z = x - 1.0
    acc = LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += LANCZOS_COEF[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    # split the power so t**(z+0.5) cannot overflow before exp(-t) scales it down
    half = math.pow(t, 0.5 * (z + 0.5))
    return SQRT_2PI * half * (half * math.exp(-t)) * acc


def _panels(func, lo, hi):
    """Evaluate the 21-point rule on every panel ``[lo[i], hi[i]]`` with one call."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = (center[:, None] + half[:, None] * NODES21[None, :]).ravel()
    y = func(x).reshape(len(lo), 21)
    kron = (y @ WK21) * half
    gauss = (y @ WG21) * half
    resabs = (np.abs(y) @ WK21) * np.abs(half)
    err = np.maximum(np.abs(kron - gauss), 50.0 * EPS * resabs)
    return kron, err


def adaptive_gk21(func, breaks, abstol, reltol, limit):
    """Globally adaptive Gauss-Kronrod 10/21 integration.

    ``func`` maps a 1-D float array to an array of the same shape.  ``breaks``
    is the sorted list of initial panel edges.  Returns ``(value, error,
    evaluations, subdivisions, converged, lefts, rights, values, errors)``
    where the last four arrays describe the final panel partition.
    """
    breaks = np.asarray(breaks, dtype=float)
    lefts = list(breaks[:-1])
    rights = list(breaks[1:])
    vals, errs = _panels(func, breaks[:-1], breaks[1:])
    vals = list(vals)
    errs = list(errs)
    neval = 21 * len(lefts)
    heap = [(-e, i) for i, e in enumerate(errs)]
    heapq.heapify(heap)
    total = math.fsum(vals)
    total_err = math.fsum(errs)
    nsub = 0
    converged = False
    while True:
        if total_err <= max(abstol, reltol * abs(total)):
            converged = True
            break
        if nsub >= limit:
            break
        _, i = heapq.heappop(heap)
        l, r = lefts[i], rights[i]
        m = 0.5 * (l + r)
        if not (l < m < r) or (r - l) <= 100.0 * EPS * max(abs(l), abs(r), 1e-300):
            heapq.heappush(heap, (-errs[i], i))
            break
        v2, e2 = _panels(func, np.array([l, m]), np.array([m, r]))
        neval += 42
        nsub += 1
        total += v2[0] + v2[1] - vals[i]
        total_err += e2[0] + e2[1] - errs[i]
        rights[i] = m
        vals[i] = v2[0]
        errs[i] = e2[0]
        j = len(lefts)
        lefts.append(m)
        rights.append(r)
        vals.append(v2[1])
        errs.append(e2[1])
        heapq.heappush(heap, (-errs[i], i))
        heapq.heappush(heap, (-errs[j], j))
        if nsub % 64 == 0:
            total = math.fsum(vals)
            total_err = math.fsum(errs)
    return (
        math.fsum(vals),
        math.fsum(errs),
        neval,
        nsub,
        converged,
        np.array(lefts),
        np.array(rights),
        np.array(vals),
        np.array(errs),
    )
