"""Vectorized numpy versions of the compiled kernels in ``_numba.py``."""

import numpy as np

RANK_LIMIT = 1 << 31
_CHUNK = 1 << 16


def popcounts(masks):
    masks = np.asarray(masks, dtype=np.int64)
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(masks).astype(np.int64)
    out = np.zeros(masks.shape, np.int64)
    m = masks.copy()
    while m.any():
        out += (m & 1).astype(np.int64)
        m >>= 1
    return out


def _chunks(nbits):
    total = 1 << int(nbits)
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(start + _CHUNK, total), dtype=np.int64)


def independent_sets(edges, nbits):
    edges = np.asarray(edges, dtype=np.int64)
    parts = []
    for m in _chunks(nbits):
        if edges.size:
            bad = ((m[:, None] & edges[None, :]) == edges[None, :]).any(axis=1)
            m = m[~bad]
        parts.append(m)
    return np.concatenate(parts)


def _transversal(m, edges):
    return ((m[:, None] & edges[None, :]) != 0).all(axis=1)


def minimal_transversals_scan(edges, nbits):
    edges = np.asarray(edges, dtype=np.int64)
    parts = []
    for m in _chunks(nbits):
        m = m[_transversal(m, edges)]
        keep = np.ones(m.shape[0], bool)
        for b in range(int(nbits)):
            bit = np.int64(1) << b
            has = (m & bit) != 0
            keep &= ~(has & _transversal(m & ~bit, edges))
        parts.append(m[keep])
    return np.concatenate(parts) if parts else np.zeros(0, np.int64)


def colon_minimal(prefix, u):
    prefix = np.asarray(prefix, dtype=np.int64)
    cols = prefix & ~np.int64(u)
    if (cols == 0).any():
        return np.zeros(1, np.int64)
    single = cols[(cols & (cols - 1)) == 0]
    varmask = np.bitwise_or.reduce(single) if single.size else np.int64(0)
    rest = np.unique(cols[(cols & varmask) == 0])
    if rest.size:
        contains = (rest[None, :] & ~rest[:, None]) == 0
        np.fill_diagonal(contains, False)
        rest = rest[~contains.any(axis=1)]
    variables = [np.int64(1) << b for b in range(63) if (int(varmask) >> b) & 1]
    return np.concatenate([np.array(variables, dtype=np.int64), rest])


def shelling_violation(facets):
    facets = np.asarray(facets, dtype=np.int64)
    sizes = popcounts(facets)
    for i in range(1, facets.shape[0]):
        fi = facets[i]
        inter = facets[:i] & fi
        near = inter[popcounts(inter) == sizes[i] - 1]
        missing = np.bitwise_or.reduce(fi & ~near) if near.size else np.int64(0)
        bad = np.nonzero((missing & ~facets[:i]) == 0)[0]
        if bad.size:
            return int(i), int(bad[0])
    return -1, -1


def collection_violation(masks):
    masks = np.asarray(masks, dtype=np.int64)
    m = masks.shape[0]
    srt = np.sort(masks)

    def member(x):
        idx = np.searchsorted(srt, x)
        idx = np.minimum(idx, m - 1)
        return srt[idx] == x

    meet = masks[:, None] & masks[None, :]
    ok = member(meet.ravel()).reshape(m, m)
    upper = np.triu(~ok, k=1)
    if upper.any():
        a, b = np.argwhere(upper)[0]
        return 1, int(a), int(b)
    drop = np.zeros(m, np.int64)
    for bit in range(63):
        low = np.int64(1) << bit
        has = (masks & low) != 0
        if not has.any():
            continue
        drop[has & member(masks ^ low)] |= low
    nested = ((masks[None, :] & ~masks[:, None]) == 0) & (masks[None, :] != masks[:, None])
    stuck = (masks[:, None] & ~masks[None, :] & drop[:, None]) == 0
    bad = nested & stuck
    if bad.any():
        a, b = np.argwhere(bad)[0]
        return 2, int(a), int(b)
    return 0, -1, -1


def clique_sets(adj, n):
    adj = np.asarray(adj, dtype=np.int64)
    parts = []
    for m in _chunks(n):
        ok = np.ones(m.shape[0], bool)
        for v in range(int(n)):
            low = np.int64(1) << v
            has = (m & low) != 0
            ok &= ~has | ((m & ~adj[v] & ~low) == 0)
        parts.append(m[ok])
    return np.concatenate(parts)


def closed_sets(down, n):
    down = np.asarray(down, dtype=np.int64)
    parts = []
    for m in _chunks(n):
        ok = np.ones(m.shape[0], bool)
        for v in range(int(n)):
            has = (m & (np.int64(1) << v)) != 0
            ok &= ~has | ((down[v] & ~m) == 0)
        parts.append(m[ok])
    return np.concatenate(parts)


def exact_rank(mat, strategy):
    a = np.array(mat, dtype=np.int64, copy=True)
    nr, nc = a.shape
    row = 0
    for step in range(nc):
        if row == nr:
            break
        col = step if strategy == 0 else nc - 1 - step
        column = np.abs(a[row:, col])
        nz = np.nonzero(column)[0]
        if nz.size == 0:
            continue
        if strategy == 0:
            piv = row + nz[0]
        else:
            piv = row + nz[np.argmin(column[nz])]
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        below = row + 1 + np.nonzero(a[row + 1:, col])[0]
        if below.size:
            p = a[row, col]
            q = a[below, col]
            g = np.gcd(p, q)
            pp = p // g
            qq = q // g
            bound = max(np.abs(a[below]).max(), np.abs(a[row]).max(),
                        np.abs(pp).max(), np.abs(qq).max())
            if bound >= RANK_LIMIT:
                return -1
            block = pp[:, None] * a[below] - qq[:, None] * a[row][None, :]
            rg = np.gcd.reduce(block, axis=1)
            rg[rg == 0] = 1
            a[below] = block // rg[:, None]
        row += 1
    return row


def boundary_matrix(rows, cols):
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    mat = np.zeros((rows.shape[0], cols.shape[0]), np.int64)
    parity = np.zeros(cols.shape[0], np.int64)
    for bit in range(63):
        low = np.int64(1) << bit
        has = np.nonzero(cols & low)[0]
        if has.size == 0:
            continue
        r = np.searchsorted(rows, cols[has] ^ low)
        mat[r, has] = np.where(parity[has] % 2 == 0, 1, -1)
        parity[has] += 1
    return mat


def reduced_betti(faces, strategy):
    faces = np.asarray(faces, dtype=np.int64)
    sizes = popcounts(faces)
    top = int(sizes.max()) if sizes.size else 0
    fcount = np.bincount(sizes, minlength=top + 2).astype(np.int64)
    ranks = np.zeros(top + 2, np.int64)
    ok = True
    prev = np.sort(faces[sizes == 0])
    for k in range(1, top + 1):
        cur = np.sort(faces[sizes == k])
        r = exact_rank(boundary_matrix(prev, cur), strategy)
        if r < 0:
            ok = False
            r = 0
        ranks[k] = r
        prev = cur
    out = fcount[: top + 1] - ranks[: top + 1] - ranks[1 : top + 2]
    return out.astype(np.int64), ok


def canonical_flags(masks, tables):
    masks = np.asarray(masks, dtype=np.uint64)
    out = np.ones(masks.shape[0], bool)
    alive = np.arange(masks.shape[0])
    nbytes = tables.shape[1]
    for p in range(1, tables.shape[0]):
        x = masks[alive]
        y = np.zeros(x.shape[0], np.uint64)
        for b in range(nbytes):
            y |= tables[p, b, ((x >> np.uint64(8 * b)) & np.uint64(255)).astype(np.intp)]
        smaller = y < x
        out[alive[smaller]] = False
        alive = alive[~smaller]
        if alive.size == 0:
            break
    return out
