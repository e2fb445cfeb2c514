"""Pure-Python lattice scans.  Same contract as the compiled ``_kernels``."""
from itertools import product
from math import gcd


def scaling_counts(normals, offsets, upper, bound_num, bound_den):
    """Group points ``v`` of the box ``[1, upper_j]`` by ``min_i <n_i, v> / b_i``.

    Only values ``<= bound_num / bound_den`` are kept.  Returns a dict mapping
    the reduced pair ``(num, den)`` to the number of points.
    """
    d = len(upper)
    counts = {}
    last = d - 1
    nf = len(normals)
    last_col = [n[last] for n in normals]
    for prefix in product(*(range(1, u + 1) for u in upper[:last])):
        base = [sum(a * b for a, b in zip(n[:last], prefix)) for n in normals]
        for t in range(1, upper[last] + 1):
            best_num = base[0] + last_col[0] * t
            best_den = offsets[0]
            for i in range(1, nf):
                val = base[i] + last_col[i] * t
                if val * best_den < best_num * offsets[i]:
                    best_num = val
                    best_den = offsets[i]
            if best_num * bound_den > bound_num * best_den:
                break
            g = gcd(best_num, best_den)
            key = (best_num // g, best_den // g)
            counts[key] = counts.get(key, 0) + 1
    return counts


def staircase_heights(normals, offsets, prefix_upper, c_num, c_den):
    """Least ``k >= 0`` putting ``(u', k) + 1`` strictly inside ``c * P``.

    One value per prefix ``u'`` in ``[0, prefix_upper_j]``, listed in
    ``itertools.product`` order.
    """
    last = len(prefix_upper)
    out = []
    for prefix in product(*(range(u + 1) for u in prefix_upper)):
        k = 0
        for n, b in zip(normals, offsets):
            s = sum(a * (x + 1) for a, x in zip(n[:last], prefix))
            need = (c_num * b - c_den * s) // (c_den * n[last])
            if need > k:
                k = need
        out.append(k)
    return out
