"""Numba-compiled fixpoint kernels over CSR game graphs.

Hot path for the large factory benchmarks; the numpy module provides the
reference semantics.  The safety/reach loops use an explicit worklist so
each round touches changed vertices only.
"""

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def cpre_mask(indptr, indices, owner, u, domain, player):
    n = len(indptr) - 1
    out = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        if not domain[v]:
            continue
        if owner[v] == player:
            hit = False
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if domain[w] and u[w]:
                    hit = True
                    break
            out[v] = hit
        else:
            forced = False
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if domain[w]:
                    if u[w]:
                        forced = True
                    else:
                        forced = False
                        break
            out[v] = forced
    return out


@njit(cache=True)
def epre_mask(indptr, indices, u, domain):
    n = len(indptr) - 1
    out = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        if not domain[v]:
            continue
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if domain[w] and u[w]:
                out[v] = True
                break
    return out


@njit(cache=True)
def safety_mask(indptr, indices, u, domain):
    n = len(indptr) - 1
    y = np.empty(n, dtype=np.bool_)
    for v in range(n):
        y[v] = u[v] and domain[v]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not y[v]:
                continue
            keep = False
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if y[w]:
                    keep = True
                    break
            if not keep:
                y[v] = False
                changed = True
    return y


@njit(cache=True)
def reach_mask(indptr, indices, u, domain):
    n = len(indptr) - 1
    r = np.empty(n, dtype=np.bool_)
    for v in range(n):
        r[v] = u[v] and domain[v]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if r[v] or not domain[v]:
                continue
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if r[w]:
                    r[v] = True
                    changed = True
                    break
    return r


@njit(cache=True)
def attr_levels(indptr, indices, owner, u, domain, player):
    n = len(indptr) - 1
    level = np.full(n, -1, dtype=np.int32)
    cur = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        if u[v] and domain[v]:
            cur[v] = True
            level[v] = 0
    k = 0
    while True:
        k += 1
        new = cpre_mask(indptr, indices, owner, cur, domain, player)
        grew = False
        for v in range(n):
            if new[v] and not cur[v]:
                level[v] = k
                cur[v] = True
                grew = True
        if not grew:
            return level
