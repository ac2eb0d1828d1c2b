"""Pure-Python kernels for the inner loops of series and table construction.

These are the reference implementations; `cranktab._ckernels` is a compiled
drop-in replacement with identical semantics.  Every function works on plain
Python ints, so all arithmetic stays exact at any magnitude.

Conventions shared by both backends:

* a truncated series is a list ``c`` with ``c[i]`` the coefficient of ``q^i``;
* a bivariate series is a list of rows, one per power of q, where each row is
  a centered list of length ``2*bound + 1`` and index ``bound + m`` holds the
  coefficient of ``z^m``;
* row ``n`` of a bivariate series must vanish outside ``|m| <= n`` (the
  kernels rely on that support bound to skip dead slots).
"""


def cauchy_mul(a, b):
    """Truncated Cauchy product of two coefficient lists of equal length."""
    n = len(a)
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        seg = b[: n - i]
        if ai == 1:
            out[i:] = [x + y for x, y in zip(out[i:], seg)]
        else:
            out[i:] = [x + ai * y for x, y in zip(out[i:], seg)]
    return out


def geom_fold(rows, k, zstep, bound):
    """Multiply a bivariate series in place by 1 / (1 - z**zstep * q**k).

    Expands the factor as the geometric series sum_j z**(j*zstep) q**(j*k)
    via the recurrence r[n][m] += r[n-k][m-zstep], walking n upward so the
    already-updated lower rows provide the accumulated result.
    """
    width = 2 * bound + 1
    for n in range(k, len(rows)):
        s = n - k
        src = rows[s]
        tgt = rows[n]
        lo = bound - s + zstep
        if lo < 0:
            lo = 0
        hi = bound + s + zstep
        if hi > width - 1:
            hi = width - 1
        if lo > hi:
            continue
        tgt[lo : hi + 1] = [
            x + y for x, y in zip(tgt[lo : hi + 1], src[lo - zstep : hi + 1 - zstep])
        ]


def zfree_mul(rows, coeffs, bound):
    """Multiply a bivariate series by a z-free series; returns new rows.

    out[n] = sum_j coeffs[j] * rows[n-j], convolving over the q-exponent and
    scaling whole z-rows.  Zero coefficients of the multiplier are skipped,
    which matters for sparse series such as the Euler product.
    """
    width = 2 * bound + 1
    nonzero = [(j, c) for j, c in enumerate(coeffs) if c]
    out = [[0] * width for _ in rows]
    for n in range(len(rows)):
        acc = out[n]
        for j, c in nonzero:
            if j > n:
                break
            s = n - j
            lo = bound - s
            if lo < 0:
                lo = 0
            hi = bound + s
            if hi > width - 1:
                hi = width - 1
            src = rows[s]
            if c == 1:
                acc[lo : hi + 1] = [
                    x + y for x, y in zip(acc[lo : hi + 1], src[lo : hi + 1])
                ]
            else:
                acc[lo : hi + 1] = [
                    x + c * y for x, y in zip(acc[lo : hi + 1], src[lo : hi + 1])
                ]
    return out
