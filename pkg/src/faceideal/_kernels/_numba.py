"""Compiled bitmask kernels.

Every function here has a twin with the same signature and semantics in
``_numpy.py``. Masks are ``int64`` (universes of at most 62 bits) except in
``canonical_flags`` which works on ``uint64`` down-set encodings.
"""

import numpy as np
from numba import njit

# operands are kept below this bound so p*a - q*b stays inside int64
RANK_LIMIT = 1 << 31


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def popcounts(masks):
    out = np.empty(masks.shape[0], np.int64)
    for i in range(masks.shape[0]):
        out[i] = _popcount(masks[i])
    return out


@njit(cache=True)
def independent_sets(edges, nbits):
    total = np.int64(1) << nbits
    out = np.empty(total, np.int64)
    cnt = 0
    for m in range(total):
        ok = True
        for e in edges:
            if m & e == e:
                ok = False
                break
        if ok:
            out[cnt] = m
            cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def _hits_all(m, edges):
    for e in edges:
        if m & e == 0:
            return False
    return True


@njit(cache=True)
def minimal_transversals_scan(edges, nbits):
    total = np.int64(1) << nbits
    out = np.empty(1024, np.int64)
    cnt = 0
    for m in range(total):
        if not _hits_all(m, edges):
            continue
        minimal = True
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            if _hits_all(m ^ low, edges):
                minimal = False
                break
        if minimal:
            if cnt == out.shape[0]:
                bigger = np.empty(2 * cnt, np.int64)
                bigger[:cnt] = out
                out = bigger
            out[cnt] = m
            cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def colon_minimal(prefix, u):
    """Minimal generators of (prefix) : u as support masks, unsorted."""
    m = prefix.shape[0]
    cols = np.empty(m, np.int64)
    varmask = np.int64(0)
    for s in range(m):
        c = prefix[s] & ~u
        if c == 0:
            return np.zeros(1, np.int64)
        cols[s] = c
        if c & (c - 1) == 0:
            varmask |= c
    rest = np.empty(m, np.int64)
    r = 0
    for s in range(m):
        c = cols[s]
        if c & varmask == 0:
            rest[r] = c
            r += 1
    rest = np.unique(rest[:r])
    r = rest.shape[0]
    keep = np.ones(r, np.bool_)
    for a in range(r):
        for b in range(r):
            if a != b and rest[b] & ~rest[a] == 0:
                keep[a] = False
                break
    nv = _popcount(varmask)
    out = np.empty(nv + r, np.int64)
    k = 0
    v = varmask
    while v:
        low = v & -v
        out[k] = low
        k += 1
        v ^= low
    for a in range(r):
        if keep[a]:
            out[k] = rest[a]
            k += 1
    return out[:k].copy()


@njit(cache=True)
def shelling_violation(facets):
    """First (i, j), 0-based, violating the shelling condition, else (-1, -1)."""
    m = facets.shape[0]
    for i in range(1, m):
        fi = facets[i]
        size = _popcount(fi)
        missing = np.int64(0)
        for k in range(i):
            inter = facets[k] & fi
            if _popcount(inter) == size - 1:
                missing |= fi & ~inter
        for j in range(i):
            if missing & ~facets[j] == 0:
                return i, j
    return -1, -1


@njit(cache=True)
def _member(sorted_masks, x):
    idx = np.searchsorted(sorted_masks, x)
    return idx < sorted_masks.shape[0] and sorted_masks[idx] == x


@njit(cache=True)
def collection_violation(masks):
    """Check intersection closure (code 1) and the one-step descent
    condition for every nested pair (code 2). Returns (code, a, b) with
    indices into ``masks`` or (0, -1, -1)."""
    m = masks.shape[0]
    srt = np.sort(masks)
    for a in range(m):
        for b in range(a + 1, m):
            if not _member(srt, masks[a] & masks[b]):
                return 1, a, b
    drop = np.zeros(m, np.int64)
    for a in range(m):
        f = masks[a]
        rest = f
        while rest:
            low = rest & -rest
            rest ^= low
            if _member(srt, f ^ low):
                drop[a] |= low
    for a in range(m):
        f = masks[a]
        for b in range(m):
            g = masks[b]
            if g != f and g & ~f == 0:
                if f & ~g & drop[a] == 0:
                    return 2, a, b
    return 0, -1, -1


@njit(cache=True)
def clique_sets(adj, n):
    total = np.int64(1) << n
    out = np.empty(total, np.int64)
    cnt = 0
    for m in range(total):
        ok = True
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            v = _popcount(low - 1)
            if m & ~adj[v] & ~low != 0:
                ok = False
                break
        if ok:
            out[cnt] = m
            cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def closed_sets(down, n):
    total = np.int64(1) << n
    out = np.empty(total, np.int64)
    cnt = 0
    for m in range(total):
        ok = True
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            v = _popcount(low - 1)
            if down[v] & ~m != 0:
                ok = False
                break
        if ok:
            out[cnt] = m
            cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def exact_rank(mat, strategy):
    """Rank over the rationals by fraction-free elimination.

    strategy 0 scans columns left to right taking the first nonzero pivot;
    strategy 1 scans right to left taking the smallest-magnitude pivot.
    Returns -1 if an intermediate value would leave the safe int64 range.
    """
    a = mat.copy()
    nr, nc = a.shape
    row = 0
    for step in range(nc):
        if row == nr:
            break
        col = step if strategy == 0 else nc - 1 - step
        piv = -1
        best = 0
        for i in range(row, nr):
            v = abs(a[i, col])
            if v != 0:
                if strategy == 0:
                    piv = i
                    break
                if piv == -1 or v < best:
                    piv = i
                    best = v
        if piv == -1:
            continue
        if piv != row:
            for jj in range(nc):
                t = a[row, jj]
                a[row, jj] = a[piv, jj]
                a[piv, jj] = t
        p = a[row, col]
        for i in range(row + 1, nr):
            q = a[i, col]
            if q == 0:
                continue
            g = _gcd(p, q)
            pp = p // g
            qq = q // g
            if abs(pp) >= RANK_LIMIT or abs(qq) >= RANK_LIMIT:
                return -1
            rg = 0
            for jj in range(nc):
                x = a[i, jj]
                y = a[row, jj]
                if abs(x) >= RANK_LIMIT or abs(y) >= RANK_LIMIT:
                    return -1
                z = pp * x - qq * y
                a[i, jj] = z
                if z != 0:
                    rg = _gcd(rg, z)
            if rg > 1:
                for jj in range(nc):
                    a[i, jj] //= rg
        row += 1
    return row


@njit(cache=True)
def boundary_matrix(rows, cols):
    """Simplicial boundary from faces ``cols`` (size k) to sorted ``rows``
    (size k-1); the sign of deleting the t-th smallest vertex is (-1)^t."""
    mat = np.zeros((rows.shape[0], cols.shape[0]), np.int64)
    for c in range(cols.shape[0]):
        f = cols[c]
        rest = f
        t = 0
        while rest:
            low = rest & -rest
            rest ^= low
            r = np.searchsorted(rows, f ^ low)
            mat[r, c] = 1 if t % 2 == 0 else -1
            t += 1
    return mat


@njit(cache=True)
def reduced_betti(faces, strategy):
    """Reduced Betti numbers of the complex with the given faces.

    Entry s of the result is the rank of reduced homology in dimension s-1.
    The second return value is False if some rank overflowed; the caller
    then recomputes with arbitrary-precision integers.
    """
    sizes = popcounts(faces)
    top = 0
    for s in sizes:
        if s > top:
            top = s
    fcount = np.zeros(top + 2, np.int64)
    for s in sizes:
        fcount[s] += 1
    ranks = np.zeros(top + 2, np.int64)
    ok = True
    prev = np.sort(faces[sizes == 0])
    for k in range(1, top + 1):
        cur = np.sort(faces[sizes == k])
        mat = boundary_matrix(prev, cur)
        r = exact_rank(mat, strategy)
        if r < 0:
            ok = False
            r = 0
        ranks[k] = r
        prev = cur
    out = np.empty(top + 1, np.int64)
    for s in range(top + 1):
        out[s] = fcount[s] - ranks[s] - ranks[s + 1]
    return out, ok


@njit(cache=True)
def canonical_flags(masks, tables):
    """True where a down-set encoding is minimal over its permutation orbit.

    ``tables[p, b, v]`` is the image under permutation p of byte value v
    sitting at byte b of the encoding.
    """
    nperm = tables.shape[0]
    nbytes = tables.shape[1]
    out = np.ones(masks.shape[0], np.bool_)
    m255 = np.uint64(255)
    for idx in range(masks.shape[0]):
        x = masks[idx]
        for p in range(1, nperm):
            y = np.uint64(0)
            for b in range(nbytes):
                y |= tables[p, b, np.int64((x >> np.uint64(8 * b)) & m255)]
            if y < x:
                out[idx] = False
                break
    return out
