"""Pure-numpy fixpoint kernels over CSR game graphs.

Fallback backend; semantics are identical to the numba kernels.  All
masks are boolean arrays over the dense vertex range.  `domain` models a
restricted subgraph without re-indexing: successors outside the domain
are invisible, and the universal quantifier at opponent vertices ranges
over in-domain successors only (domains are existentially closed, so the
vacuous case does not arise in solver call-sites).
"""

import numpy as np

BACKEND = "numpy"


def _seg_any(values, indptr):
    # reduceat is safe here: successor lists are non-empty by invariant
    return np.logical_or.reduceat(values, indptr[:-1])


def _seg_all(values, indptr):
    return np.logical_and.reduceat(values, indptr[:-1])


def cpre_mask(indptr, indices, owner, u, domain, player):
    """Controllable predecessor for `player` of `u` inside `domain`."""
    succ_dom = domain[indices]
    succ_in = u[indices] & succ_dom
    any_in = _seg_any(succ_in, indptr)
    all_in = _seg_all(succ_in | ~succ_dom, indptr) & _seg_any(succ_dom, indptr)
    mine = owner == player
    return domain & np.where(mine, any_in, all_in)


def epre_mask(indptr, indices, u, domain):
    """Existential predecessor of `u` inside `domain`."""
    succ_in = u[indices] & domain[indices]
    return domain & _seg_any(succ_in, indptr)


def safety_mask(indptr, indices, u, domain):
    """Greatest fixpoint: largest subset of `u` with some play staying in it."""
    y = u & domain
    while True:
        nxt = y & epre_mask(indptr, indices, y, domain)
        if np.array_equal(nxt, y):
            return y
        y = nxt


def reach_mask(indptr, indices, u, domain):
    """Backward existential reachability of `u` inside `domain` (includes `u`)."""
    r = u & domain
    while True:
        nxt = r | epre_mask(indptr, indices, r, domain)
        if np.array_equal(nxt, r):
            return r
        r = nxt


def attr_levels(indptr, indices, owner, u, domain, player):
    """Attractor breadth levels: 0 on the target, k >= 1 at the step a
    vertex is first forced in, -1 outside the attractor."""
    level = np.full(len(indptr) - 1, -1, dtype=np.int32)
    cur = u & domain
    level[cur] = 0
    k = 0
    while True:
        k += 1
        new = cpre_mask(indptr, indices, owner, cur, domain, player) & ~cur
        if not new.any():
            return level
        level[new] = k
        cur = cur | new
