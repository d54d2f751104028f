"""Pure-numpy implementations of the hot table kernels.

Every function takes C-contiguous ``int32`` arrays. Multiplication tables
are ``n x n`` with ``table[i, j]`` the index of the product ``i * j`` and
element 0 the identity. Scan orders are fixed so that this backend and the
jitted one return bit-identical results.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def assoc_defect(table: np.ndarray) -> tuple[int, int, int]:
    """First triple (i, j, k) with (i*j)*k != i*(j*k), or (-1,-1,-1)."""
    n = table.shape[0]
    for i in range(n):
        left = table[table[i], :]
        right = table[i][table]
        bad = left != right
        if bad.any():
            j, k = np.argwhere(bad)[0]
            return int(i), int(j), int(k)
    return -1, -1, -1


def class_ids(table: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """Conjugacy-class id per element, ids assigned in seed order."""
    n = table.shape[0]
    ids = np.full(n, -1, dtype=np.int32)
    next_id = 0
    for g in range(n):
        if ids[g] >= 0:
            continue
        orbit = table[table[:, g], inv]  # x*g*x^-1 over all x
        ids[orbit] = next_id
        next_id += 1
    return ids


def element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int32)
    idx = np.arange(n, dtype=np.int32)
    power = idx.copy()  # g^1
    k = 1
    while (orders == 0).any():
        orders[(power == 0) & (orders == 0)] = k
        power = table[power, idx]
        k += 1
    return orders


def hom_defect(table_g: np.ndarray, table_h: np.ndarray,
               mapping: np.ndarray) -> tuple[int, int]:
    """First pair (i, j) with f(i*j) != f(i)*f(j), or (-1, -1)."""
    expected = mapping[table_g]
    actual = table_h[mapping[:, None], mapping[None, :]]
    bad = expected != actual
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return int(i), int(j)
    return -1, -1


def generated_mask(table: np.ndarray, seeds: np.ndarray) -> np.ndarray:
    """Membership mask of the subgroup generated by ``seeds``."""
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    mask[0] = True
    if seeds.size == 0:
        return mask
    frontier = np.array([0], dtype=np.int32)
    while frontier.size:
        products = table[np.ix_(frontier, seeds)].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh.astype(np.int32)
    return mask


def try_extend(table_g: np.ndarray, table_h: np.ndarray,
               gens: np.ndarray, images: np.ndarray
               ) -> tuple[bool, int, np.ndarray]:
    """Extend gens -> images to a map on the generated subgroup.

    Walks the Cayley graph of <gens> from the identity, forcing
    f(x*g) = f(x)*f(g) along every edge. Returns (ok, subgroup size,
    mapping); ``ok`` is False on any consistency or injectivity clash.
    """
    n = table_g.shape[0]
    mapping = np.full(n, -1, dtype=np.int32)
    used = np.zeros(n, dtype=np.bool_)
    mapping[0] = 0
    used[0] = True
    queue = np.empty(n, dtype=np.int32)
    queue[0] = 0
    head, tail = 0, 1
    k = len(gens)
    while head < tail:
        x = queue[head]
        head += 1
        fx = mapping[x]
        for t in range(k):
            y = table_g[x, gens[t]]
            fy = table_h[fx, images[t]]
            if mapping[y] < 0:
                if used[fy]:
                    return False, tail, mapping
                mapping[y] = fy
                used[fy] = True
                queue[tail] = y
                tail += 1
            elif mapping[y] != fy:
                return False, tail, mapping
    return True, tail, mapping
