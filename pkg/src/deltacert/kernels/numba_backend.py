"""Jitted implementations of the hot table kernels.

Same contracts and scan orders as ``numpy_backend``; see there for the
argument conventions. All kernels are cached to disk so the compile cost
is paid once per environment.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def assoc_defect(table):
    n = table.shape[0]
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return i, j, k
    return -1, -1, -1


@njit(cache=True)
def class_ids(table, inv):
    n = table.shape[0]
    ids = np.full(n, -1, dtype=np.int32)
    next_id = 0
    for g in range(n):
        if ids[g] >= 0:
            continue
        for x in range(n):
            ids[table[table[x, g], inv[x]]] = next_id
        next_id += 1
    return ids


@njit(cache=True)
def element_orders(table):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int32)
    for g in range(n):
        k = 1
        x = g
        while x != 0:
            x = table[x, g]
            k += 1
        orders[g] = k
    return orders


@njit(cache=True)
def hom_defect(table_g, table_h, mapping):
    n = table_g.shape[0]
    for i in range(n):
        for j in range(n):
            if mapping[table_g[i, j]] != table_h[mapping[i], mapping[j]]:
                return i, j
    return -1, -1


@njit(cache=True)
def generated_mask(table, seeds):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    mask[0] = True
    if len(seeds) == 0:
        return mask
    queue = np.empty(n, dtype=np.int32)
    queue[0] = 0
    head, tail = 0, 1
    while head < tail:
        x = queue[head]
        head += 1
        for t in range(len(seeds)):
            y = table[x, seeds[t]]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask


@njit(cache=True)
def try_extend(table_g, table_h, gens, images):
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
