"""Brute-force reference implementations used only by the tests."""
from itertools import product
from math import comb


def ssyt_count(shape, content_or_k):
    """Semistandard tableaux of a partition shape.

    With an int k, count fillings from {1..k}; with a sequence, count those of
    that exact content.
    """
    shape = [p for p in shape if p > 0]
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    if isinstance(content_or_k, int):
        k, content = content_or_k, None
    else:
        content = list(content_or_k)
        k = len(content)
    count = 0
    for fill in product(range(1, k + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if any(j and t[(i, j - 1)] > t[(i, j)] for (i, j) in cells):
            continue
        if any(i and t[(i - 1, j)] >= t[(i, j)] for (i, j) in cells):
            continue
        if content is not None and [fill.count(v) for v in range(1, k + 1)] != content:
            continue
        count += 1
    return count


def conjugate(mu):
    cells = {(i, j) for i, row in enumerate(mu) for j in range(row)}
    out = []
    j = 0
    while any((i, j) in cells for i in range(len(mu))):
        out.append(sum(1 for i in range(len(mu)) if (i, j) in cells))
        j += 1
    return tuple(out)


def sym_dim(d, k):
    return comb(d + k - 1, k - 1) if d >= 0 else 0


def ext_dim(j, k):
    return comb(k, j) if 0 <= j <= k else 0


def hook_dim(d, k):
    """dim of S^{(d, 0, ..., 0, -1)} C^k: traceless part of Sym^d (x) dual."""
    return sym_dim(d, k) * k - sym_dim(d - 1, k)


def wedge_hook_dim(j, k):
    """dim of S^{(1^j, 0, ..., 0, -1)} C^k for 0 <= j <= k - 1."""
    return ext_dim(j, k) * k - ext_dim(j - 1, k)
