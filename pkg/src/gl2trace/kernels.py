"""Kernel selection: compiled extension when built, pure Python otherwise.

The only hot kernel is the discriminant-form q-expansion (everything else
in the package is sparse/small).  `GL2TRACE_PURE=1` forces the fallback.
"""

import os


def _jacobi_terms(limit):
    " sparse expansion of the cubed eta product: [(exponent, coefficient)] "
    out = []
    k = 0
    while k * (k + 1) // 2 < limit:
        out.append((k * (k + 1) // 2, (2 * k + 1) * (-1) ** k))
        k += 1
    return out


def tau_table_pure(x):
    """[tau(1), ..., tau(x)] via eight sparse multiplications."""
    if x < 1:
        return []
    n = x
    terms = _jacobi_terms(n)
    c = [0] * n
    c[0] = 1
    for _ in range(8):
        nxt = [0] * n
        for e, coef in terms:
            for i in range(n - e):
                ci = c[i]
                if ci:
                    nxt[i + e] += coef * ci
        c = nxt
    return c


try:
    from . import _speedups as _ext
except ImportError:
    _ext = None

if _ext is not None and os.environ.get("GL2TRACE_PURE") != "1":
    tau_table = _ext.tau_table
    BACKEND = "compiled"
else:
    tau_table = tau_table_pure
    BACKEND = "pure"
