# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled numeric hot kernels: Lanczos gamma and the adaptive Gauss-Kronrod driver.

Same contract as ``_kernels_py``.  The integrand is still a Python callable
evaluated once per bisection on 42 nodes; everything else (rule sums, panel
bookkeeping, the error max-heap) runs without touching the interpreter.
"""

import math

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, pow, sin, M_PI
from libc.stdlib cimport free, malloc

cnp.import_array()

cdef double EPS = 2.220446049250313e-16
cdef double SQRT_2PI = 2.5066282746310005024
cdef double LANCZOS_G = 7.0
cdef double[9] LANCZOS_COEF
LANCZOS_COEF[:] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]

cdef double[11] XGK
XGK[:] = [
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
]
cdef double[11] WGK
WGK[:] = [
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
]
cdef double[5] WG
WG[:] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
]

cdef double[21] NODES21
cdef double[21] WK21
cdef double[21] WG21


cdef void _init_rule():
    cdef int i, j
    for i in range(21):
        WG21[i] = 0.0
    for i in range(11):
        NODES21[i] = -XGK[i]
        NODES21[20 - i] = XGK[i]
        WK21[i] = WGK[i]
        WK21[20 - i] = WGK[i]
    for j in range(5):
        i = 2 * j + 1
        WG21[i] = WG[j]
        WG21[20 - i] = WG[j]


_init_rule()


cpdef double lanczos_gamma(double x):
    """Gamma function for real ``x`` that is not a non-positive integer."""
    cdef double z, acc, t, half
    cdef int i
    if x < 0.5:
        return M_PI / (sin(M_PI * x) * lanczos_gamma(1.0 - x))
    z = x - 1.0
    acc = LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += LANCZOS_COEF[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    half = pow(t, 0.5 * (z + 0.5))
    return SQRT_2PI * half * (half * exp(-t)) * acc


cdef inline void _rule(const double* y, double half, double* kron, double* err):
    cdef double k = 0.0, g = 0.0, ab = 0.0, e
    cdef int i
    for i in range(21):
        k += WK21[i] * y[i]
        g += WG21[i] * y[i]
        ab += WK21[i] * fabs(y[i])
    k *= half
    g *= half
    ab *= fabs(half)
    e = fabs(k - g)
    if e < 50.0 * EPS * ab:
        e = 50.0 * EPS * ab
    kron[0] = k
    err[0] = e


cdef inline bint _before(double* errs, Py_ssize_t i, Py_ssize_t j):
    # max-heap on error; ties broken by smaller index, matching the Python heap
    if errs[i] != errs[j]:
        return errs[i] > errs[j]
    return i < j


cdef void _sift_up(Py_ssize_t* heap, double* errs, Py_ssize_t pos):
    cdef Py_ssize_t parent, item = heap[pos]
    while pos > 0:
        parent = (pos - 1) >> 1
        if _before(errs, item, heap[parent]):
            heap[pos] = heap[parent]
            pos = parent
        else:
            break
    heap[pos] = item


cdef void _sift_down(Py_ssize_t* heap, double* errs, Py_ssize_t size, Py_ssize_t pos):
    cdef Py_ssize_t child, item = heap[pos]
    while True:
        child = 2 * pos + 1
        if child >= size:
            break
        if child + 1 < size and _before(errs, heap[child + 1], heap[child]):
            child += 1
        if _before(errs, heap[child], item):
            heap[pos] = heap[child]
            pos = child
        else:
            break
    heap[pos] = item


def adaptive_gk21(object func, breaks, double abstol, double reltol, Py_ssize_t limit):
    """Globally adaptive Gauss-Kronrod 10/21 integration (compiled driver)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] br = np.ascontiguousarray(breaks, dtype=np.float64)
    cdef Py_ssize_t nseg = br.shape[0] - 1
    cdef Py_ssize_t cap = nseg + limit
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lefts = np.empty(cap)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rights = np.empty(cap)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] vals = np.empty(cap)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] errs = np.empty(cap)
    cdef double* L = <double*> lefts.data
    cdef double* R = <double*> rights.data
    cdef double* V = <double*> vals.data
    cdef double* E = <double*> errs.data
    cdef Py_ssize_t* heap = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t size = 0, n = nseg, nsub = 0, neval, i, j, k
    cdef double total, total_err, l, r, m, c, h, width
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y
    cdef double* yp
    cdef bint converged = False
    if heap == NULL:
        raise MemoryError()
    try:
        x = np.empty(21 * nseg)
        for i in range(nseg):
            L[i] = br[i]
            R[i] = br[i + 1]
            c = 0.5 * (L[i] + R[i])
            h = 0.5 * (R[i] - L[i])
            for k in range(21):
                x[21 * i + k] = c + h * NODES21[k]
        y = np.ascontiguousarray(func(x), dtype=np.float64)
        yp = <double*> y.data
        for i in range(nseg):
            _rule(yp + 21 * i, 0.5 * (R[i] - L[i]), &V[i], &E[i])
            heap[size] = i
            size += 1
            _sift_up(heap, E, size - 1)
        neval = 21 * nseg
        total = math.fsum(vals[:n])
        total_err = math.fsum(errs[:n])
        x = np.empty(42)
        while True:
            if total_err <= max(abstol, reltol * fabs(total)):
                converged = True
                break
            if nsub >= limit:
                break
            i = heap[0]
            l = L[i]
            r = R[i]
            m = 0.5 * (l + r)
            width = fabs(l)
            if fabs(r) > width:
                width = fabs(r)
            if width < 1e-300:
                width = 1e-300
            if not (l < m and m < r) or (r - l) <= 100.0 * EPS * width:
                break
            size -= 1
            heap[0] = heap[size]
            if size > 0:
                _sift_down(heap, E, size, 0)
            c = 0.5 * (l + m)
            h = 0.5 * (m - l)
            for k in range(21):
                x[k] = c + h * NODES21[k]
            c = 0.5 * (m + r)
            h = 0.5 * (r - m)
            for k in range(21):
                x[21 + k] = c + h * NODES21[k]
            y = np.ascontiguousarray(func(x), dtype=np.float64)
            yp = <double*> y.data
            neval += 42
            nsub += 1
            j = n
            n += 1
            total -= V[i]
            total_err -= E[i]
            R[i] = m
            _rule(yp, 0.5 * (m - l), &V[i], &E[i])
            L[j] = m
            R[j] = r
            _rule(yp + 21, 0.5 * (r - m), &V[j], &E[j])
            total += V[i] + V[j]
            total_err += E[i] + E[j]
            heap[size] = i
            size += 1
            _sift_up(heap, E, size - 1)
            heap[size] = j
            size += 1
            _sift_up(heap, E, size - 1)
            if nsub % 64 == 0:
                total = math.fsum(vals[:n])
                total_err = math.fsum(errs[:n])
    finally:
        free(heap)
    return (
        math.fsum(vals[:n]),
        math.fsum(errs[:n]),
        neval,
        nsub,
        converged,
        lefts[:n].copy(),
        rights[:n].copy(),
        vals[:n].copy(),
        errs[:n].copy(),
    )
