# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Numerov sweep kernel.

Integrates the three-term recurrence for y'' = f(x) y,

    (1 - t[i+1]) y[i+1] = (2 + 10 t[i]) y[i] - (1 - t[i-1]) y[i-1]

with t = h^2 f / 12, filling ``out`` and returning the number of strict sign
changes among out[1:].
"""


def sweep(double[::1] t, double y0, double y1, double[::1] out):
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i
    cdef int nodes = 0
    cdef double prev = y0
    cdef double cur = y1
    cdef double nxt
    if n < 2 or out.shape[0] < n:
        raise ValueError("need len(t) >= 2 and out at least as long")
    out[0] = y0
    out[1] = y1
    for i in range(1, n - 1):
        nxt = ((2.0 + 10.0 * t[i]) * cur - (1.0 - t[i - 1]) * prev) / (1.0 - t[i + 1])
        out[i + 1] = nxt
        if cur * nxt < 0.0:
            nodes += 1
        prev = cur
        cur = nxt
    return nodes
