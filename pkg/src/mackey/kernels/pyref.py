"""Reference implementations of the compiled kernels.

Same contracts as _ckernels; used when the extension is not built or
when MACKEY_PURE=1.  Vectorized with numpy where that is natural, but
kept simple: this is the correctness baseline the extension is tested
against.
"""

from __future__ import annotations

import numpy as np


def closure(gens, bound):
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    m, d = gens.shape
    ident = np.arange(d, dtype=np.int32)
    rows = [ident]
    seen = {ident.tobytes(): 0}
    frontier = ident.reshape(1, d)
    while frontier.size:
        fresh = []
        for g in range(m):
            batch = frontier[:, gens[g]]
            for row in batch:
                key = row.tobytes()
                if key not in seen:
                    if len(rows) >= bound:
                        raise ValueError("order bound exceeded")
                    seen[key] = len(rows)
                    rows.append(row)
                    fresh.append(row)
        frontier = (
            np.stack(fresh) if fresh else np.empty((0, d), dtype=np.int32)
        )
    return np.stack(rows)


def orbit_labels(tables):
    tables = np.ascontiguousarray(tables, dtype=np.int32)
    g, n = tables.shape
    labels = np.full(n, -1, dtype=np.int32)
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = start
        frontier = np.array([start], dtype=np.int32)
        while frontier.size:
            nxt = tables[:, frontier].ravel()
            nxt = nxt[labels[nxt] < 0]
            if nxt.size == 0:
                break
            labels[nxt] = start
            frontier = np.unique(nxt)
    return labels
