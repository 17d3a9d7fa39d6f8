"""Hot loops, compiled with numba unless ``CUBELIKE_DISABLE_NUMBA`` is set.

The backtracking search is written once and either jitted or run as plain
Python over lists. Batch kernels have a vectorized numpy twin.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("CUBELIKE_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    from numba import njit
    from numba.extending import register_jitable
except ImportError:  # pragma: no cover
    njit = None

    def register_jitable(fn):
        return fn

HAVE_NUMBA = njit is not None
USE_NUMBA = HAVE_NUMBA and not _DISABLE


def _search(nbrs, D, deg, k, pre_v, pre_c, hi0, colors, cnt, sat, stack_v, stack_c, stack_hi):
    # Flat buffers: nbrs[v*D + j], cnt[v*k + c]. Returns (found, nodes).
    V = len(deg)
    nodes = 0
    placed = 0
    for i in range(len(pre_v)):
        v = pre_v[i]
        c = pre_c[i]
        if colors[v] != -1:
            if colors[v] != c:
                return 0, nodes
            continue
        if c < 0 or c >= k or cnt[v * k + c] > 0:
            return 0, nodes
        colors[v] = c
        placed += 1
        for j in range(deg[v]):
            u = nbrs[v * D + j]
            if cnt[u * k + c] == 0:
                sat[u] += 1
            cnt[u * k + c] += 1
    remaining = V - placed
    if remaining == 0:
        return 1, nodes

    depth = 0
    stack_v[0] = _choose(V, colors, sat, deg)
    stack_c[0] = 0
    stack_hi[0] = hi0
    while depth >= 0:
        v = stack_v[depth]
        c = colors[v]
        if c != -1:
            colors[v] = -1
            for j in range(deg[v]):
                u = nbrs[v * D + j]
                cnt[u * k + c] -= 1
                if cnt[u * k + c] == 0:
                    sat[u] -= 1
        c = stack_c[depth]
        lim = stack_hi[depth] + 1
        if lim > k:
            lim = k
        while c < lim and cnt[v * k + c] > 0:
            c += 1
        if c >= lim:
            depth -= 1
            continue
        colors[v] = c
        for j in range(deg[v]):
            u = nbrs[v * D + j]
            if cnt[u * k + c] == 0:
                sat[u] += 1
            cnt[u * k + c] += 1
        nodes += 1
        stack_c[depth] = c + 1
        if depth + 1 == remaining:
            return 1, nodes
        nh = stack_hi[depth]
        if c + 1 > nh:
            nh = c + 1
        depth += 1
        stack_v[depth] = _choose(V, colors, sat, deg)
        stack_c[depth] = 0
        stack_hi[depth] = nh
    return 0, nodes


@register_jitable
def _choose(V, colors, sat, deg):
    # DSATUR: max saturation, then max degree, then lowest index
    best = -1
    bs = -1
    bd = -1
    for v in range(V):
        if colors[v] == -1:
            s = sat[v]
            if s > bs or (s == bs and deg[v] > bd):
                best = v
                bs = s
                bd = deg[v]
    return best


def _mono_any_loop(colorings, eu, ev):
    B = colorings.shape[0]
    out = np.zeros(B, dtype=np.bool_)
    for b in range(B):
        row = colorings[b]
        for e in range(eu.shape[0]):
            if row[eu[e]] == row[ev[e]]:
                out[b] = True
                break
    return out


def _mono_any_np(colorings, eu, ev):
    return (colorings[:, eu] == colorings[:, ev]).any(axis=1)


def _reduce_loop(colorings, n):
    N = 1 << n
    full = N - 1
    B = colorings.shape[0]
    out = np.empty((B, N), dtype=colorings.dtype)
    for b in range(B):
        for v in range(N):
            a = colorings[b, v]
            c = colorings[b, (v ^ full) | N]
            if a == c or c == (a + 1) % 3:
                out[b, v] = a
            else:
                out[b, v] = c
    return out


def _reduce_np(colorings, n):
    N = 1 << n
    v = np.arange(N)
    a = colorings[:, v]
    c = colorings[:, (v ^ (N - 1)) | N]
    keep = (a == c) | (c == (a + 1) % 3)
    return np.where(keep, a, c).astype(colorings.dtype)


if HAVE_NUMBA:
    _search_nb = njit(cache=True)(_search)
    _mono_any_nb = njit(cache=True)(_mono_any_loop)
    _reduce_nb = njit(cache=True)(_reduce_loop)


def _buffers(V, k, lib):
    if lib == "numba":
        return (np.full(V, -1, np.int32), np.zeros(V * k, np.int32), np.zeros(V, np.int32),
                np.zeros(V + 1, np.int32), np.zeros(V + 1, np.int32), np.zeros(V + 1, np.int32))
    return [-1] * V, [0] * (V * k), [0] * V, [0] * (V + 1), [0] * (V + 1), [0] * (V + 1)


def search_coloring(nbrs, deg, k, pre_v=(), pre_c=(), hi0=None, backend=None):
    """Find a proper ``k``-coloring extending the given precoloring.

    ``nbrs`` is a ``(V, D)`` neighbor table (rows padded past ``deg[v]``).
    Colors above ``hi0`` are treated as interchangeable; pass ``hi0=k`` when the
    precoloring does not use the palette prefix ``0..hi0-1``.

    Returns ``(colors, nodes)`` where ``colors`` is None when no coloring exists.
    """
    backend = backend or ("numba" if USE_NUMBA else "python")
    nbrs = np.asarray(nbrs, dtype=np.int32)
    V = nbrs.shape[0]
    D = nbrs.shape[1] if nbrs.ndim == 2 else 0
    if hi0 is None:
        hi0 = len(pre_v)
    if V == 0:
        return [], 0
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        bufs = _buffers(V, k, "numba")
        found, nodes = _search_nb(
            nbrs.reshape(-1), D, np.asarray(deg, np.int32), k,
            np.asarray(pre_v, np.int32).reshape(-1), np.asarray(pre_c, np.int32).reshape(-1),
            hi0, *bufs,
        )
        colors = bufs[0].tolist()
    else:
        bufs = _buffers(V, k, "python")
        found, nodes = _search(
            nbrs.reshape(-1).tolist(), D, np.asarray(deg).tolist(), k,
            list(pre_v), list(pre_c), hi0, *bufs,
        )
        colors = bufs[0]
    return (colors if found else None), int(nodes)


def mono_edge_any(colorings, eu, ev, backend=None):
    """Per row of ``colorings``: does some edge ``(eu[i], ev[i])`` get one color?"""
    backend = backend or ("numba" if USE_NUMBA else "numpy")
    colorings = np.ascontiguousarray(colorings)
    eu = np.asarray(eu, np.int64)
    ev = np.asarray(ev, np.int64)
    if backend == "numba":
        return _mono_any_nb(colorings, eu, ev)
    return _mono_any_np(colorings, eu, ev)


def reduce_batch(colorings, n, backend=None):
    """Apply the pair-to-color reduction to each row (a coloring of Z_2^(n+2))."""
    backend = backend or ("numba" if USE_NUMBA else "numpy")
    colorings = np.ascontiguousarray(colorings)
    if colorings.shape[1] != 1 << (n + 2):
        raise ValueError(f"expected colorings of {1 << (n + 2)} vertices, got {colorings.shape[1]}")
    if backend == "numba":
        return _reduce_nb(colorings, n)
    return _reduce_np(colorings, n)
