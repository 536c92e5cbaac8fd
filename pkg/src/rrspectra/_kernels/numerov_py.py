"""Pure-Python Numerov sweep, the fallback for the compiled kernel.

Semantics must match ``numerov_cy.sweep`` exactly: same recurrence, same node
count (strict sign changes among out[1:]).
"""

import numpy as np


def sweep(t, y0, y1, out):
    n = t.shape[0]
    if n < 2 or out.shape[0] < n:
        raise ValueError("need len(t) >= 2 and out at least as long")
    out[0] = y0
    out[1] = y1
    prev = y0
    cur = y1
    for i in range(1, n - 1):
        nxt = ((2.0 + 10.0 * t[i]) * cur - (1.0 - t[i - 1]) * prev) / (1.0 - t[i + 1])
        out[i + 1] = nxt
        prev = cur
        cur = nxt
    sgn = np.sign(out[1:n])
    return int(np.count_nonzero(sgn[:-1] * sgn[1:] < 0.0))
