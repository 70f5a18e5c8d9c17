"""
Hot inner loops: curve-word rewriting and S-set iteration on int64 arrays.

Every function here is written in the numba-compatible subset of Python and
works on plain numpy arrays, so the same body runs compiled or interpreted
(see ``_accel``). Array conventions:

classical word
    ``g``: gap numbers in ``0..n``; the arc from ``g[0]`` to ``g[1]`` is an
    upper arc, arcs then alternate (lower from ``g[1]`` to ``g[2]``, ...).
dual word
    ``G``: gap numbers in ``1..n``; the arc from ``G[0]`` to ``G[1]`` is an
    inner arc; outer arc ``t`` runs from ``G[2t+1]`` to ``G[2t+2 mod m]`` and
    carries a signed displacement ``D[t]`` (negative = counterclockwise),
    ``|D[t]|`` being the number of punctures it passes over.
"""
from __future__ import annotations

import numpy as np

from ._accel import kernel


# ---------------------------------------------------------------- classical


@kernel
def classical_reduce(g):
    """Cyclically cancel arcs whose two ends lie in the same gap."""
    m = g.shape[0]
    st = np.empty(m, np.int64)
    top = 0
    for idx in range(m):
        x = g[idx]
        if top > 0 and st[top - 1] == x:
            top -= 1
        else:
            st[top] = x
            top += 1
    lo = 0
    hi = top
    while hi - lo >= 2 and st[lo] == st[hi - 1]:
        lo += 1
        hi -= 1
    res = st[lo:hi].copy()
    if lo % 2 == 1 and res.shape[0] > 0:
        # first arc became a lower arc; restore the upper-first convention
        res = np.concatenate((res[1:], res[:1]))
    return res


@kernel
def sigma_pk_raw(g, p, k):
    """Rewrite every upper arc under the move Sigma_{p,k}; no reduction."""
    m = g.shape[0]
    out = np.empty(2 * m, np.int64)
    buf = np.empty(4, np.int64)
    lo = p - k
    hi = p - 1
    length = 0
    for t in range(0, m, 2):
        a = g[t]
        b = g[t + 1]
        if a < b:
            i = a
            j = b
        else:
            i = b
            j = a
        i_in = lo <= i <= hi
        j_in = lo <= j <= hi
        i1_in = lo <= i + 1 <= hi
        c = 2
        if i_in and j_in:
            buf[0] = i + 1
            buf[1] = j + 1
        elif i_in:
            buf[0] = i + 1
            buf[1] = lo
            buf[2] = lo - 1
            buf[3] = j
            c = 4
        elif j_in:
            if i1_in:
                buf[0] = i + 1
                buf[1] = j + 1
            else:
                buf[0] = i
                buf[1] = lo - 1
                buf[2] = lo
                buf[3] = j + 1
                c = 4
        else:
            buf[0] = i
            buf[1] = j
        if a < b:
            for s in range(c):
                out[length + s] = buf[s]
        else:
            for s in range(c):
                out[length + s] = buf[c - 1 - s]
        length += c
    return out[:length].copy()


@kernel
def classical_prescribed_removal(g, p):
    """Drop every lower arc ``p v p`` (the only bigons a Sigma_{p,k} move creates)."""
    m = g.shape[0]
    keep = np.ones(m, np.bool_)
    for t in range(1, m, 2):
        u = (t + 1) % m
        if g[t] == p and g[u] == p:
            keep[t] = False
            keep[u] = False
    res = g[keep].copy()
    if m > 0 and not keep[0]:
        # the dropped arc wrapped around the end; index 0 was its far end, so
        # the surviving word now starts at an odd position
        res = np.concatenate((res[res.shape[0] - 1:], res[:res.shape[0] - 1]))
    return res


@kernel
def act_sigma_pk(g, p, k):
    return classical_reduce(sigma_pk_raw(g, p, k))


@kernel
def act_sigma_sequence(g, moves):
    """Fold a sequence of (p, k) moves given as an (r, 2) array."""
    w = g
    for r in range(moves.shape[0]):
        w = classical_reduce(sigma_pk_raw(w, moves[r, 0], moves[r, 1]))
    return w


@kernel
def classical_half_turn(g, n):
    """Rotation by pi: gap i -> n - i, upper and lower arcs swap."""
    m = g.shape[0]
    out = np.empty(m, np.int64)
    for t in range(m):
        out[t] = n - g[(t + 1) % m]
    return out


# --------------------------------------------------------------------- dual


@kernel
def _cw(a, b, n):
    """Clockwise distance from gap/puncture a to b, labels in 1..n."""
    return (b - a) % n


@kernel
def _dec(a, n):
    return (a - 2) % n + 1


@kernel
def dual_polygon_raw(G, D, n, verts):
    """
    Rewrite each inner arc under the polygon with the given vertices and shift
    the outer arcs accordingly. Returns the unreduced word (G, D).
    """
    m = G.shape[0]
    h = m // 2
    inP = np.zeros(n + 1, np.bool_)
    for v in verts:
        inP[v] = True
    kind = np.zeros(h, np.int64)  # 0 disjoint, 1 transverse
    pp = np.zeros(h, np.int64)
    qq = np.zeros(h, np.int64)
    ns = np.empty(h, np.int64)
    ne = np.empty(h, np.int64)
    for t in range(h):
        i = G[2 * t]
        j = G[2 * t + 1]
        span_a = _cw(i + 1, j, n)
        cnt_a = 0
        cnt_b = 0
        best_a = -1
        best_b = -1
        for v in verts:
            da = _cw(i + 1, v, n)
            if da <= span_a:
                cnt_a += 1
                if da > best_a:
                    best_a = da
                    qq[t] = v
            else:
                cnt_b += 1
                db = _cw(j + 1, v, n)
                if db > best_b:
                    best_b = db
                    pp[t] = v
        ns[t] = i
        ne[t] = j
        if cnt_a > 0 and cnt_b > 0:
            kind[t] = 1
            if inP[i]:
                ns[t] = _dec(i, n)
            if inP[j]:
                ne[t] = _dec(j, n)
    outG = np.empty(3 * m, np.int64)
    outD = np.empty(3 * h, np.int64)
    lg = 0
    ld = 0
    for t in range(h):
        i = G[2 * t]
        j = G[2 * t + 1]
        outG[lg] = ns[t]
        lg += 1
        if kind[t] == 1:
            p = pp[t]
            q = qq[t]
            if not inP[i]:
                outG[lg] = p
                outG[lg + 1] = _dec(p, n)
                outD[ld] = -1
                lg += 2
                ld += 1
            if not inP[j]:
                outG[lg] = _dec(q, n)
                outG[lg + 1] = q
                outD[ld] = 1
                lg += 2
                ld += 1
        outG[lg] = ne[t]
        lg += 1
        # original outer arc t, from G[2t+1] to G[2t+2]
        nxt = (t + 1) % h
        d = D[t]
        if ns[nxt] != G[2 * nxt]:
            d -= 1
        if ne[t] != j:
            d += 1
        outD[ld] = d
        ld += 1
    return outG[:lg].copy(), outD[:ld].copy()


@kernel
def dual_remove_outer_bigons(G, D):
    """Single pass removing every outer arc of zero displacement."""
    m = G.shape[0]
    h = m // 2
    keepG = np.ones(m, np.bool_)
    keepD = np.ones(h, np.bool_)
    wrapped = False
    for t in range(h):
        if D[t] == 0:
            u = (2 * t + 2) % m
            keepG[2 * t + 1] = False
            keepG[u] = False
            keepD[t] = False
            if u == 0:
                wrapped = True
    G2 = G[keepG].copy()
    D2 = D[keepD].copy()
    if wrapped and G2.shape[0] > 0:
        L = G2.shape[0]
        G2 = np.concatenate((G2[L - 1:], G2[:L - 1]))
    return G2, D2


@kernel
def _dual_find_bigon(G, D):
    m = G.shape[0]
    h = m // 2
    for t in range(h):
        if G[2 * t] == G[2 * t + 1]:
            return 2 * t
        if D[t] == 0:
            return 2 * t + 1
    return -1


@kernel
def dual_reduce(G, D):
    """Remove inner bigons ``c v c`` and outer bigons until none remain."""
    while G.shape[0] > 0:
        pos = _dual_find_bigon(G, D)
        if pos < 0:
            break
        m = G.shape[0]
        h = m // 2
        if pos % 2 == 0:
            t = pos // 2
            prev = (t - 1) % h
            merged = D[prev] + D[t]
            if t == 0:
                G = G[2:].copy()
                D2 = np.empty(h - 1, np.int64)
                for s in range(1, h - 1):
                    D2[s - 1] = D[s]
                if h - 1 > 0:
                    D2[h - 2] = merged
                D = D2
            else:
                G = np.concatenate((G[:pos], G[pos + 2:]))
                D2 = np.empty(h - 1, np.int64)
                c = 0
                for s in range(h):
                    if s == t:
                        continue
                    D2[c] = merged if s == prev else D[s]
                    c += 1
                D = D2
        else:
            t = pos // 2
            D2 = np.empty(h - 1, np.int64)
            c = 0
            for s in range(h):
                if s != t:
                    D2[c] = D[s]
                    c += 1
            if t == h - 1:
                mid = G[1:m - 1].copy()
                L = mid.shape[0]
                if L > 0:
                    G = np.concatenate((mid[L - 1:], mid[:L - 1]))
                else:
                    G = mid
            else:
                G = np.concatenate((G[:pos], G[pos + 2:]))
            D = D2
    return G, D


@kernel
def dual_shift(G, n, k):
    """Relabel all gaps by -k (the action of delta^k)."""
    out = np.empty(G.shape[0], np.int64)
    for t in range(G.shape[0]):
        out[t] = (G[t] - 1 - k) % n + 1
    return out


@kernel
def act_polygon_sequence(G, D, n, verts, offsets):
    """Fold polygons: polygon r has vertices verts[offsets[r]:offsets[r+1]]."""
    for r in range(offsets.shape[0] - 1):
        G, D = dual_polygon_raw(G, D, n, verts[offsets[r]:offsets[r + 1]])
        G, D = dual_remove_outer_bigons(G, D)
        G, D = dual_reduce(G, D)
    return G, D


# -------------------------------------------------------------- canonical


@kernel
def least_rotation(tok, step):
    """Start index (a multiple of step) of the lexicographically least rotation."""
    m = tok.shape[0]
    best = 0
    for s in range(step, m, step):
        for r in range(m):
            a = tok[(s + r) % m]
            b = tok[(best + r) % m]
            if a != b:
                if a < b:
                    best = s
                break
    return best


# ------------------------------------------------------------------ S sets


@kernel
def s_set_mask(mask, blk, bsize, rho, n):
    """
    One S(I, s) step on 0-based puncture masks.

    blk[v] is the block id of vertex v, bsize[b] the block size and rho the
    permutation induced by the simple element.
    """
    members = np.empty(n, np.int64)
    k = 0
    for v in range(n):
        if mask[v]:
            members[k] = v
            k += 1
    grown = mask.copy()
    if 0 < k < n:
        first = np.full(2 * n, -1, np.int64)
        count = np.zeros(2 * n, np.int64)
        stamp = np.full(2 * n, -1, np.int64)
        for idx in range(k):
            a = members[idx]
            b = members[(idx + 1) % k]
            span = (b - a - 1) % n if k > 1 else n - 1
            if span == 0:
                continue
            for r in range(1, span + 1):
                v = (a + r) % n
                c = blk[v]
                if bsize[c] < 2:
                    continue
                if stamp[c] != idx:
                    stamp[c] = idx
                    first[c] = v
                    count[c] = 0
                count[c] += 1
            block_a = blk[a]
            for r in range(1, span + 1):
                v = (a + r) % n
                c = blk[v]
                if bsize[c] < 2 or first[c] != v or stamp[c] != idx:
                    continue
                if count[c] < bsize[c] and c != block_a:
                    grown[v] = True
    out = np.zeros(n, np.bool_)
    for v in range(n):
        if grown[v]:
            out[rho[v]] = True
    return out


@kernel
def s_chain_mask(mask, shift, blks, bsizes, rhos, n):
    """Fold s_set_mask over all factors after rotating by delta^shift."""
    cur = np.zeros(n, np.bool_)
    for v in range(n):
        if mask[v]:
            cur[(v - shift) % n] = True
    for f in range(blks.shape[0]):
        cur = s_set_mask(cur, blks[f], bsizes[f], rhos[f], n)
    return cur


@kernel
def pair_fixpoint_mask(a, b, shift, blks, bsizes, rhos, n):
    """
    Grow {a, b} by I_m = S(I_{m-1}, x) | I_{m-1} for m = 1..n-2.

    Returns the final mask (all True when no standard invariant curve
    surrounds a and b).
    """
    cur = np.zeros(n, np.bool_)
    cur[a] = True
    cur[b] = True
    size = 2
    for _m in range(n - 2):
        nxt = s_chain_mask(cur, shift, blks, bsizes, rhos, n)
        new_size = 0
        for v in range(n):
            if nxt[v] or cur[v]:
                nxt[v] = True
                new_size += 1
        cur = nxt
        if new_size == size or new_size == n:
            break
        size = new_size
    return cur


@kernel
def all_pairs_fixpoint(shift, blks, bsizes, rhos, n):
    """First pair (lexicographic) with a proper fixpoint; empty mask if none."""
    for a in range(n):
        for b in range(a + 1, n):
            cur = pair_fixpoint_mask(a, b, shift, blks, bsizes, rhos, n)
            full = True
            for v in range(n):
                if not cur[v]:
                    full = False
                    break
            if not full:
                return cur
    return np.zeros(n, np.bool_)
