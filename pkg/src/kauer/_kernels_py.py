"""Pure-Python kernels over integer-indexed permutations.

These mirror ``_kernels.pyx`` function for function; ``kauer._accel`` picks
whichever is importable.
"""

from __future__ import annotations


def compose(a, b):
    """Return ``a o b`` (apply ``b`` first) as a tuple."""
    return tuple([a[x] for x in b])


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def orbit_labels(a):
    """Label every point by the index of its orbit, orbits numbered by first visit."""
    n = len(a)
    lab = [-1] * n
    k = 0
    for i in range(n):
        if lab[i] >= 0:
            continue
        j = i
        while lab[j] < 0:
            lab[j] = k
            j = a[j]
        k += 1
    return lab, k


def min_code(sigma, iota, members):
    """Least relabeling code of the component containing ``members``.

    For each seed in ``members`` the half-edges are renumbered in discovery
    order of a breadth-first traversal that follows ``sigma`` then ``iota``.
    The code lists ``(num[sigma[x]], num[iota[x]])`` in that order. Returns the
    lexicographically least code and the discovery order realising it.
    """
    n = len(sigma)
    best = None
    best_order = None
    num = [-1] * n
    for seed in members:
        for i in range(n):
            num[i] = -1
        order = [seed]
        num[seed] = 0
        code = []
        worse = False
        tied = best is not None
        pos = 0
        while pos < len(order):
            x = order[pos]
            for y in (sigma[x], iota[x]):
                if num[y] < 0:
                    num[y] = len(order)
                    order.append(y)
                v = num[y]
                if tied:
                    w = best[len(code)]
                    if v > w:
                        worse = True
                        break
                    if v < w:
                        tied = False
                code.append(v)
            if worse:
                break
            pos += 1
        if worse:
            continue
        if best is None or code < best:
            best = code
            best_order = order
    return tuple(best or ()), best_order or []
