"""Pure-Python integer kernels.

Reference implementation of the two hot loops; ``axial._ckernels`` mirrors
these signatures exactly and is preferred when it has been compiled.
"""


def contract(nz, n, u, v):
    """Integer bilinear contraction ``out[k] = sum_ij u[i] v[j] g[i][j][k]``.

    ``nz[i*n + j]`` is a tuple ``(ks, gs)`` listing the nonzero structure
    constants of ``e_i e_j``.
    """
    out = [0] * n
    for i in range(n):
        ui = u[i]
        if not ui:
            continue
        base = i * n
        for j in range(n):
            vj = v[j]
            if not vj:
                continue
            ks, gs = nz[base + j]
            if not ks:
                continue
            w = ui * vj
            for k, g in zip(ks, gs):
                out[k] += w * g
    return out


def gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan elimination on an integer matrix.

    Works on a copy. Returns ``(mat, pivots, d)`` where every pivot entry of
    ``mat`` equals ``d`` and ``mat[:len(pivots)] / d`` is the reduced row
    echelon form. Rows past the rank are zero.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for k in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][k] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        piv = prow[k]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[k]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = row[j] * piv // prev
                continue
            for j in range(ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(k)
        r += 1
    d = prev
    if d < 0:
        for i in range(r):
            m[i] = [-e for e in m[i]]
        d = -d
    return m, pivots, d


def matmul(a, b, inner, ncols):
    """Integer matrix product of ``a`` (rows of length ``inner``) and ``b`` (``inner`` x ``ncols``)."""
    out = []
    for row in a:
        acc = [0] * ncols
        for t in range(inner):
            x = row[t]
            if not x:
                continue
            brow = b[t]
            for j in range(ncols):
                y = brow[j]
                if y:
                    acc[j] += x * y
        out.append(acc)
    return out
