# cython: language_level=3
"""Compiled implementations of the hot kernels.

Mirrors ``_pure`` operation for operation; outputs are required to be
identical so either backend can serve any run.  Keep control flow parallel
to the pure module when editing either file.
"""

from time import monotonic as _monotonic

import numpy as np

from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memset

BACKEND_NAME = "native"


cdef int _cmp_int(const void* a, const void* b) noexcept nogil:
    cdef int x = (<const int*> a)[0]
    cdef int y = (<const int*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef inline long long _ceil_pos(long long a, long long b) noexcept nogil:
    # ceil(a / b) for a >= 0, b > 0 (cdivision truncates, which floors here)
    return (a + b - 1) // b


cdef inline void _hpush(long long* heap, Py_ssize_t* hsz, long long key) noexcept nogil:
    cdef Py_ssize_t i = hsz[0]
    cdef Py_ssize_t p
    heap[i] = key
    hsz[0] = i + 1
    while i > 0:
        p = (i - 1) >> 1
        if heap[p] <= heap[i]:
            break
        heap[i] = heap[p]
        heap[p] = key
        i = p


cdef inline long long _hpop(long long* heap, Py_ssize_t* hsz) noexcept nogil:
    cdef long long top = heap[0]
    cdef Py_ssize_t sz = hsz[0] - 1
    cdef long long last = heap[sz]
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t c
    hsz[0] = sz
    while True:
        c = 2 * i + 1
        if c >= sz:
            break
        if c + 1 < sz and heap[c + 1] < heap[c]:
            c += 1
        if heap[c] >= last:
            break
        heap[i] = heap[c]
        i = c
    heap[i] = last
    return top


def peel(offsets, neighbors, num, den):
    """Min-degree peeling with smallest-id tie break.

    Returns (order, core, max_core, lb_step, ub) where lb_step is the first
    step at which the residual graph is a (num/den)-quasi-clique (-1 if the
    graph is empty) and ub is the running degeneracy-based size bound
    max over steps of min(1 + ceil(max_core/gamma), residual size).
    """
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const int[::1] adj = np.ascontiguousarray(neighbors, dtype=np.int32)
    cdef Py_ssize_t n = off.shape[0] - 1
    cdef Py_ssize_t m = adj.shape[0]
    order_arr = np.empty(n, dtype=np.int32)
    core_arr = np.zeros(n, dtype=np.int32)
    if n == 0:
        return order_arr, core_arr, 0, -1, 0
    cdef int[::1] order = order_arr
    cdef int[::1] core = core_arr
    cdef long long qnum = num
    cdef long long qden = den

    cdef long long* heap = <long long*> malloc((n + m + 8) * sizeof(long long))
    cdef int* deg = <int*> malloc(n * sizeof(int))
    cdef char* alive = <char*> malloc(n)
    if heap == NULL or deg == NULL or alive == NULL:
        free(heap); free(deg); free(alive)
        raise MemoryError()

    cdef Py_ssize_t hsz = 0
    cdef Py_ssize_t step, i
    cdef long long key, d, cand, r
    cdef int u, w, dw
    cdef long long max_core = 0
    cdef long long lb_step = -1
    cdef long long ub = 0
    try:
        for u in range(n):
            deg[u] = <int> (off[u + 1] - off[u])
            alive[u] = 1
            _hpush(heap, &hsz, (<long long> deg[u] << 32) | u)
        for step in range(n):
            while True:
                key = _hpop(heap, &hsz)
                d = key >> 32
                u = <int> (key & 0xffffffff)
                if alive[u] and deg[u] == d:
                    break
            r = n - step
            if d > max_core:
                max_core = d
            cand = 1 + _ceil_pos(max_core * qden, qnum)
            if r < cand:
                cand = r
            if cand > ub:
                ub = cand
            if lb_step < 0 and d >= _ceil_pos(qnum * (r - 1), qden):
                lb_step = step
            order[step] = u
            core[u] = <int> max_core
            alive[u] = 0
            for i in range(off[u], off[u + 1]):
                w = adj[i]
                if alive[w]:
                    dw = deg[w] - 1
                    deg[w] = dw
                    _hpush(heap, &hsz, (<long long> dw << 32) | w)
    finally:
        free(heap)
        free(deg)
        free(alive)
    return order_arr, core_arr, int(max_core), int(lb_step), int(ub)


def cascade(offsets, neighbors, threshold):
    """Keep mask after cascading removal of vertices with degree < threshold."""
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const int[::1] adj = np.ascontiguousarray(neighbors, dtype=np.int32)
    cdef Py_ssize_t n = off.shape[0] - 1
    cdef long long thr = threshold
    out_arr = np.ones(n, dtype=np.uint8)
    if n == 0 or thr <= 0:
        return out_arr
    cdef unsigned char[::1] alive = out_arr
    cdef int* deg = <int*> malloc(n * sizeof(int))
    cdef int* stack = <int*> malloc(n * sizeof(int))
    if deg == NULL or stack == NULL:
        free(deg); free(stack)
        raise MemoryError()
    cdef Py_ssize_t sp = 0
    cdef Py_ssize_t i
    cdef int v, u, w, dw
    try:
        for v in range(n):
            deg[v] = <int> (off[v + 1] - off[v])
            if deg[v] < thr:
                alive[v] = 0
                stack[sp] = v
                sp += 1
        while sp > 0:
            sp -= 1
            u = stack[sp]
            for i in range(off[u], off[u + 1]):
                w = adj[i]
                if alive[w]:
                    dw = deg[w] - 1
                    deg[w] = dw
                    if dw < thr:
                        alive[w] = 0
                        stack[sp] = w
                        sp += 1
    finally:
        free(deg)
        free(stack)
    return out_arr


def greedy_plex(offsets, neighbors, k, starts, size_cap, work_limit):
    """Greedy k-plex growth from each start vertex; returns the best set found.

    The candidate scan budget (work_limit) bounds total effort; the scan and
    tie rules (max count, then smallest id) are deterministic.
    """
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const int[::1] adj = np.ascontiguousarray(neighbors, dtype=np.int32)
    cdef const int[::1] starts_v = np.ascontiguousarray(starts, dtype=np.int32)
    cdef Py_ssize_t n = off.shape[0] - 1
    cdef Py_ssize_t m = adj.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int32)
    cdef long long kk = k
    cdef long long cap = size_cap
    cdef long long limit = work_limit

    cdef int* cnt = <int*> malloc(n * sizeof(int))
    cdef int* satcnt = <int*> malloc(n * sizeof(int))
    cdef char* in_s = <char*> malloc(n)
    cdef char* sat = <char*> malloc(n)
    cdef int* S = <int*> malloc(n * sizeof(int))
    cdef int* pool = <int*> malloc(n * sizeof(int))
    cdef int* touched = <int*> malloc((n + m + 8) * sizeof(int))
    cdef int* best = <int*> malloc(n * sizeof(int))
    if (cnt == NULL or satcnt == NULL or in_s == NULL or sat == NULL
            or S == NULL or pool == NULL or touched == NULL or best == NULL):
        free(cnt); free(satcnt); free(in_s); free(sat)
        free(S); free(pool); free(touched); free(best)
        raise MemoryError()

    cdef Py_ssize_t best_len = 0
    cdef long long work = 0
    cdef Py_ssize_t s_i, i, j, end, slen, plen, tlen, si, ti
    cdef int v0, u, w, v, best_v, best_c, c
    cdef long long need, slk
    cdef int nsat
    try:
        memset(cnt, 0, n * sizeof(int))
        memset(satcnt, 0, n * sizeof(int))
        memset(in_s, 0, n)
        memset(sat, 0, n)
        for s_i in range(starts_v.shape[0]):
            v0 = starts_v[s_i]
            S[0] = v0
            slen = 1
            in_s[v0] = 1
            touched[0] = v0
            tlen = 1
            plen = 0
            for i in range(off[v0], off[v0 + 1]):
                w = adj[i]
                cnt[w] = 1
                pool[plen] = w
                plen += 1
                touched[tlen] = w
                tlen += 1
            nsat = 0
            while plen > 0 and (cap <= 0 or slen < cap):
                if work >= limit:
                    break
                need = slen + 1 - kk
                best_v = -1
                best_c = -1
                j = 0
                end = plen
                while j < end:
                    u = pool[j]
                    if in_s[u]:
                        end -= 1
                        pool[j] = pool[end]
                        continue
                    c = cnt[u]
                    if (c >= need or need <= 0) and satcnt[u] == nsat:
                        if c > best_c or (c == best_c and u < best_v):
                            best_c = c
                            best_v = u
                    j += 1
                plen = end
                work += end
                if best_v < 0:
                    break
                u = best_v
                S[slen] = u
                slen += 1
                in_s[u] = 1
                for i in range(off[u], off[u + 1]):
                    w = adj[i]
                    if cnt[w] == 0 and not in_s[w]:
                        pool[plen] = w
                        plen += 1
                        touched[tlen] = w
                        tlen += 1
                    elif cnt[w] == 0:
                        touched[tlen] = w
                        tlen += 1
                    cnt[w] += 1
                slk = slen - kk
                for si in range(slen):
                    v = S[si]
                    if not sat[v] and cnt[v] == slk:
                        sat[v] = 1
                        nsat += 1
                        for i in range(off[v], off[v + 1]):
                            w = adj[i]
                            if cnt[w] == 0 and not in_s[w]:
                                touched[tlen] = w
                                tlen += 1
                            satcnt[w] += 1
            if slen > best_len:
                for si in range(slen):
                    best[si] = S[si]
                best_len = slen
            for ti in range(tlen):
                v = touched[ti]
                cnt[v] = 0
                satcnt[v] = 0
                in_s[v] = 0
                sat[v] = 0
        out_arr = np.empty(best_len, dtype=np.int32)
        for si in range(best_len):
            out_arr[si] = best[si]
        out_arr.sort()
        return out_arr
    finally:
        free(cnt); free(satcnt); free(in_s); free(sat)
        free(S); free(pool); free(touched); free(best)


cdef struct BB:
    Py_ssize_t L
    int k
    int rloc
    int floor_
    int ub_stop
    long long* lofs
    int* lnbr
    int* status
    int* adjS
    int* adjC
    int* nxt
    int* prv
    int* S_list
    Py_ssize_t s_len
    Py_ssize_t c_len
    int best_size
    int aborted
    long long* stack
    Py_ssize_t sp
    long long* satstamp
    int* satcnt
    long long satgen
    int* verts
    int* best_glob
    Py_ssize_t best_len
    double deadline
    long long node_counter


cdef inline void _bb_unlink(BB* b, int u) noexcept nogil:
    b.nxt[b.prv[u]] = b.nxt[u]
    b.prv[b.nxt[u]] = b.prv[u]
    b.c_len -= 1


cdef inline void _bb_relink(BB* b, int u) noexcept nogil:
    b.nxt[b.prv[u]] = u
    b.prv[b.nxt[u]] = u
    b.c_len += 1


cdef inline void _bb_remove_c(BB* b, int u) noexcept nogil:
    cdef long long i
    _bb_unlink(b, u)
    b.status[u] = 0
    for i in range(b.lofs[u], b.lofs[u + 1]):
        b.adjC[b.lnbr[i]] -= 1
    b.stack[b.sp] = (<long long> u << 1)
    b.sp += 1


cdef void _bb_include_and_filter(BB* b, int u) noexcept nogil:
    cdef long long i
    cdef int w, v, nw
    cdef Py_ssize_t si
    cdef long long satfloor, need_s
    cdef int nsat = 0
    cdef bint ok
    _bb_unlink(b, u)
    b.status[u] = 2
    b.S_list[b.s_len] = u
    b.s_len += 1
    for i in range(b.lofs[u], b.lofs[u + 1]):
        w = b.lnbr[i]
        b.adjS[w] += 1
        b.adjC[w] -= 1
    b.stack[b.sp] = (<long long> u << 1) | 1
    b.sp += 1
    satfloor = b.s_len - b.k
    for si in range(b.s_len):
        v = b.S_list[si]
        if b.adjS[v] == satfloor:
            if nsat == 0:
                b.satgen += 1
            nsat += 1
            for i in range(b.lofs[v], b.lofs[v + 1]):
                w = b.lnbr[i]
                if b.satstamp[w] != b.satgen:
                    b.satstamp[w] = b.satgen
                    b.satcnt[w] = 1
                else:
                    b.satcnt[w] += 1
    need_s = b.s_len + 1 - b.k
    w = b.nxt[b.L]
    while w != b.L:
        nw = b.nxt[w]
        ok = b.adjS[w] >= need_s
        if ok and nsat > 0:
            ok = b.satstamp[w] == b.satgen and b.satcnt[w] == nsat
        if not ok:
            _bb_remove_c(b, w)
        w = nw


cdef void _bb_undo_to(BB* b, Py_ssize_t mk) noexcept nogil:
    cdef long long t, i
    cdef int u
    while b.sp > mk:
        b.sp -= 1
        t = b.stack[b.sp]
        u = <int> (t >> 1)
        if t & 1:
            b.s_len -= 1
            b.status[u] = 1
            _bb_relink(b, u)
            for i in range(b.lofs[u], b.lofs[u + 1]):
                b.adjS[b.lnbr[i]] -= 1
                b.adjC[b.lnbr[i]] += 1
        else:
            b.status[u] = 1
            _bb_relink(b, u)
            for i in range(b.lofs[u], b.lofs[u + 1]):
                b.adjC[b.lnbr[i]] += 1


cdef void _bb_node(BB* b) except *:
    cdef Py_ssize_t mk0 = b.sp
    cdef Py_ssize_t mk1, si
    cdef long long i, eff2, t2, total, pb, bgt
    cdef int v, w, nw, forced, pivot
    cdef bint changed, all_ok
    while True:
        b.node_counter += 1
        if b.deadline > 0 and (b.node_counter & 1023) == 0 and _monotonic() > b.deadline:
            b.aborted = 1
        if b.aborted or b.best_size >= b.ub_stop:
            _bb_undo_to(b, mk0)
            return
        # D/E fixpoint: prune short budgets, force tight ones
        while True:
            if b.s_len > b.best_size:
                for si in range(b.s_len):
                    b.best_glob[si] = b.verts[b.S_list[si]]
                b.best_len = b.s_len
                qsort(b.best_glob, b.best_len, sizeof(int), _cmp_int)
                b.best_size = <int> b.s_len
                if b.best_size >= b.ub_stop:
                    _bb_undo_to(b, mk0)
                    return
            eff2 = b.floor_ if b.floor_ > b.best_size + 1 else b.best_size + 1
            if b.s_len + b.c_len < eff2:
                _bb_undo_to(b, mk0)
                return
            t2 = eff2 - b.k
            changed = False
            forced = -1
            for si in range(b.s_len):
                v = b.S_list[si]
                bgt = b.adjS[v] + b.adjC[v]
                if bgt < t2:
                    _bb_undo_to(b, mk0)
                    return
                if bgt == t2 and b.adjC[v] > 0:
                    forced = v
                    break
            if forced >= 0:
                for i in range(b.lofs[forced], b.lofs[forced + 1]):
                    w = b.lnbr[i]
                    if b.status[w] == 1:
                        _bb_include_and_filter(b, w)
                changed = True
            else:
                w = b.nxt[b.L]
                while w != b.L:
                    nw = b.nxt[w]
                    if b.adjS[w] + b.adjC[w] < t2:
                        _bb_remove_c(b, w)
                        changed = True
                    w = nw
            if not changed:
                break
        # take-all check and pivot selection in one sweep
        total = b.s_len + b.c_len
        all_ok = True
        for si in range(b.s_len):
            v = b.S_list[si]
            if total - 1 - (b.adjS[v] + b.adjC[v]) > b.k - 1:
                all_ok = False
                break
        pivot = -1
        pb = 1 << 60
        w = b.nxt[b.L]
        while w != b.L:
            bgt = b.adjS[w] + b.adjC[w]
            if total - 1 - bgt > b.k - 1:
                all_ok = False
            if bgt < pb:
                pb = bgt
                pivot = w
            w = b.nxt[w]
        if all_ok:
            if total > b.best_size:
                for si in range(b.s_len):
                    b.best_glob[si] = b.verts[b.S_list[si]]
                b.best_len = b.s_len
                w = b.nxt[b.L]
                while w != b.L:
                    b.best_glob[b.best_len] = b.verts[w]
                    b.best_len += 1
                    w = b.nxt[w]
                qsort(b.best_glob, b.best_len, sizeof(int), _cmp_int)
                b.best_size = <int> total
            _bb_undo_to(b, mk0)
            return
        if pivot < 0:
            _bb_undo_to(b, mk0)
            return
        mk1 = b.sp
        _bb_include_and_filter(b, pivot)
        _bb_node(b)
        _bb_undo_to(b, mk1)
        _bb_remove_c(b, pivot)


def plex_branch_bound(offsets, neighbors, k, floor, ub_stop, order, corenum, seed, allow_dist2, deadline):
    """Exact maximum k-plex via root decomposition plus include/exclude search.

    Returns (best_sorted, completed).  ``floor`` sets the smallest size worth
    reporting; ``ub_stop`` lets the search finish as soon as a provably
    maximum-size plex is found; ``allow_dist2`` additionally restricts each
    root's candidates to its distance-2 neighborhood even when the generic
    size guarantee (eff >= 2k-1) does not hold.
    """
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const int[::1] adj = np.ascontiguousarray(neighbors, dtype=np.int32)
    cdef const int[::1] order_v = np.ascontiguousarray(order, dtype=np.int32)
    cdef const int[::1] core_v = np.ascontiguousarray(corenum, dtype=np.int32)
    cdef const int[::1] seed_v = np.ascontiguousarray(seed, dtype=np.int32)
    cdef Py_ssize_t n = off.shape[0] - 1
    cdef Py_ssize_t m = adj.shape[0]
    cdef int kk = k
    cdef int floor_ = floor
    cdef int ubs = ub_stop
    cdef bint use_d2_always = bool(allow_dist2)
    cdef double dl = deadline

    cdef Py_ssize_t seed_len = seed_v.shape[0]
    cdef int best_size = <int> seed_len if seed_len >= floor_ else floor_ - 1
    completed = True
    out_arr = np.empty(0, dtype=np.int32)
    if seed_len >= floor_:
        out_arr = np.sort(np.asarray(seed_v, dtype=np.int32).copy())
    if n == 0 or best_size >= ubs:
        return out_arr, True

    cdef BB b
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef int* loc = <int*> malloc(n * sizeof(int))
    cdef long long* markv = <long long*> malloc(n * sizeof(long long))
    cdef long long* cstamp = <long long*> malloc(n * sizeof(long long))
    cdef int* ccount = <int*> malloc(n * sizeof(int))
    cdef int* touched2 = <int*> malloc((n + 1) * sizeof(int))
    cdef int* lvl1 = <int*> malloc((n + 1) * sizeof(int))
    cdef int* cand = <int*> malloc((n + 1) * sizeof(int))
    cdef int* verts = <int*> malloc((n + 1) * sizeof(int))
    cdef long long* lofs = <long long*> malloc((n + 2) * sizeof(long long))
    cdef int* lnbr = <int*> malloc((m + 1) * sizeof(int))
    cdef int* ldeg = <int*> malloc((n + 1) * sizeof(int))
    cdef char* alive = <char*> malloc(n + 1)
    cdef int* dq = <int*> malloc((n + 1) * sizeof(int))
    cdef int* status = <int*> malloc((n + 1) * sizeof(int))
    cdef int* adjS = <int*> malloc((n + 1) * sizeof(int))
    cdef int* adjC = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nxt = <int*> malloc((n + 2) * sizeof(int))
    cdef int* prv = <int*> malloc((n + 2) * sizeof(int))
    cdef int* S_list = <int*> malloc((n + 1) * sizeof(int))
    cdef long long* ustack = <long long*> malloc((n + 2) * sizeof(long long))
    cdef long long* satstamp = <long long*> malloc((n + 2) * sizeof(long long))
    cdef int* satcnt = <int*> malloc((n + 2) * sizeof(int))
    cdef int* best_glob = <int*> malloc((n + 1) * sizeof(int))
    if (pos == NULL or loc == NULL or markv == NULL or cstamp == NULL
            or ccount == NULL or touched2 == NULL or lvl1 == NULL
            or cand == NULL or verts == NULL
            or lofs == NULL or lnbr == NULL or ldeg == NULL or alive == NULL
            or dq == NULL or status == NULL or adjS == NULL or adjC == NULL
            or nxt == NULL or prv == NULL or S_list == NULL or ustack == NULL
            or satstamp == NULL or satcnt == NULL or best_glob == NULL):
        free(pos); free(loc); free(markv); free(cstamp); free(ccount)
        free(touched2); free(lvl1); free(cand); free(verts); free(lofs)
        free(lnbr); free(ldeg); free(alive); free(dq); free(status); free(adjS)
        free(adjC); free(nxt); free(prv); free(S_list); free(ustack)
        free(satstamp); free(satcnt); free(best_glob)
        raise MemoryError()

    cdef long long markgen = 0
    cdef long long cgen = 0
    cdef Py_ssize_t ridx, clen, l1len, t2len, L, li, dqp, n_alive, ci
    cdef long long i, eff, treq, thr_adj, thr_non, cc, thr
    cdef int r, u, w, v, x, rloc, prev, s_cnt, c_cnt, nbr_ok
    cdef bint use_d2
    cdef int SENT

    b.k = kk
    b.floor_ = floor_
    b.ub_stop = ubs
    b.lofs = lofs
    b.lnbr = lnbr
    b.status = status
    b.adjS = adjS
    b.adjC = adjC
    b.nxt = nxt
    b.prv = prv
    b.S_list = S_list
    b.stack = ustack
    b.satstamp = satstamp
    b.satcnt = satcnt
    b.verts = verts
    b.best_glob = best_glob
    b.deadline = dl
    b.node_counter = 0

    b.best_len = seed_len
    for ci in range(seed_len):
        best_glob[ci] = seed_v[ci]

    try:
        for ci in range(n):
            pos[order_v[ci]] = <int> ci
            loc[ci] = -1
            markv[ci] = 0
            cstamp[ci] = 0

        for ridx in range(n):
            if best_size >= ubs:
                break
            if dl > 0 and _monotonic() > dl:
                completed = False
                break
            eff = floor_ if floor_ > best_size + 1 else best_size + 1
            if 1 + (n - ridx - 1) < eff:
                break
            treq = eff - kk
            r = order_v[ridx]
            if core_v[r] < treq:
                continue

            # ---- candidate collection for this root
            use_d2 = use_d2_always or eff >= 2 * kk - 1
            thr_adj = eff - 2 * kk
            thr_non = eff - 2 * kk + 2
            clen = 0
            if use_d2:
                markgen += 1
                markv[r] = markgen
                l1len = 0
                for i in range(off[r], off[r + 1]):
                    w = adj[i]
                    if pos[w] > ridx and core_v[w] >= treq and markv[w] != markgen:
                        markv[w] = markgen
                        lvl1[l1len] = w
                        l1len += 1
                # a plex holding r has at most |N(r) in universe| + k members
                if l1len < treq:
                    continue
                if thr_non > 0:
                    # count common neighbors with r during expansion and drop
                    # vertices below the pairwise thresholds up front
                    cgen += 1
                    t2len = 0
                    for ci in range(l1len):
                        x = lvl1[ci]
                        for i in range(off[x], off[x + 1]):
                            w = adj[i]
                            if w != r and pos[w] > ridx and core_v[w] >= treq:
                                if cstamp[w] != cgen:
                                    cstamp[w] = cgen
                                    ccount[w] = 1
                                    touched2[t2len] = w
                                    t2len += 1
                                else:
                                    ccount[w] += 1
                    for ci in range(l1len):
                        w = lvl1[ci]
                        cc = ccount[w] if cstamp[w] == cgen else 0
                        if cc >= thr_adj:
                            cand[clen] = w
                            clen += 1
                    for ci in range(t2len):
                        w = touched2[ci]
                        if markv[w] != markgen and ccount[w] >= thr_non:
                            cand[clen] = w
                            clen += 1
                else:
                    for ci in range(l1len):
                        cand[clen] = lvl1[ci]
                        clen += 1
                    for ci in range(l1len):
                        x = lvl1[ci]
                        for i in range(off[x], off[x + 1]):
                            w = adj[i]
                            if pos[w] > ridx and core_v[w] >= treq and markv[w] != markgen:
                                markv[w] = markgen
                                cand[clen] = w
                                clen += 1
                qsort(cand, clen, sizeof(int), _cmp_int)
            else:
                nbr_ok = 0
                for i in range(off[r], off[r + 1]):
                    w = adj[i]
                    if pos[w] > ridx and core_v[w] >= treq:
                        nbr_ok += 1
                if nbr_ok < treq:
                    continue
                for w in range(n):
                    if w != r and pos[w] > ridx and core_v[w] >= treq:
                        cand[clen] = w
                        clen += 1
            if 1 + clen < eff:
                continue

            # ---- local induced subgraph (ids ascending; root included)
            cand[clen] = r
            clen += 1
            qsort(cand, clen, sizeof(int), _cmp_int)
            L = clen
            for li in range(L):
                verts[li] = cand[li]
                loc[verts[li]] = <int> li
            rloc = loc[r]
            lofs[0] = 0
            for li in range(L):
                v = verts[li]
                cc = lofs[li]
                for i in range(off[v], off[v + 1]):
                    w = loc[adj[i]]
                    if w >= 0:
                        lnbr[cc] = w
                        cc += 1
                lofs[li + 1] = cc
            for li in range(L):
                ldeg[li] = <int> (lofs[li + 1] - lofs[li])
                alive[li] = 1

            # ---- root-level filtering: degree cascade, then common-neighbor rule
            dqp = 0
            for li in range(L):
                if li != rloc and ldeg[li] < treq:
                    dq[dqp] = <int> li
                    dqp += 1
            for ci in range(dqp):
                alive[dq[ci]] = 0
            while dqp > 0:
                dqp -= 1
                u = dq[dqp]
                for i in range(lofs[u], lofs[u + 1]):
                    w = lnbr[i]
                    if alive[w]:
                        ldeg[w] -= 1
                        if w != rloc and ldeg[w] < treq:
                            alive[w] = 0
                            dq[dqp] = w
                            dqp += 1
            if not alive[rloc] or ldeg[rloc] < treq:
                for li in range(L):
                    loc[verts[li]] = -1
                continue
            if thr_non > 0:
                markgen += 1
                for i in range(lofs[rloc], lofs[rloc + 1]):
                    w = lnbr[i]
                    if alive[w]:
                        markv[w] = markgen  # markv is reused on local ids here
                for u in range(L):
                    if not alive[u] or u == rloc:
                        continue
                    cc = 0
                    for i in range(lofs[u], lofs[u + 1]):
                        w = lnbr[i]
                        if alive[w] and w != rloc and markv[w] == markgen:
                            cc += 1
                    thr = thr_adj if markv[u] == markgen else thr_non
                    if cc < thr:
                        alive[u] = 0
                        dq[dqp] = u
                        dqp += 1
                markgen += 1  # invalidate local-id marks before reuse on globals
                while dqp > 0:
                    dqp -= 1
                    u = dq[dqp]
                    for i in range(lofs[u], lofs[u + 1]):
                        w = lnbr[i]
                        if alive[w]:
                            ldeg[w] -= 1
                            if w != rloc and ldeg[w] < treq:
                                alive[w] = 0
                                dq[dqp] = w
                                dqp += 1
                if not alive[rloc] or ldeg[rloc] < treq:
                    for li in range(L):
                        loc[verts[li]] = -1
                    continue
            n_alive = 0
            for li in range(L):
                if alive[li]:
                    n_alive += 1
            if n_alive < eff:
                for li in range(L):
                    loc[verts[li]] = -1
                continue

            # ---- search state
            SENT = <int> L
            prev = SENT
            b.L = L
            b.rloc = rloc
            b.c_len = 0
            for u in range(L):
                status[u] = 0
                if not alive[u] or u == rloc:
                    continue
                status[u] = 1
                nxt[prev] = u
                prv[u] = prev
                prev = u
                b.c_len += 1
            nxt[prev] = SENT
            prv[SENT] = prev
            status[rloc] = 2
            S_list[0] = rloc
            b.s_len = 1
            for u in range(L):
                if not alive[u]:
                    continue
                s_cnt = 0
                c_cnt = 0
                for i in range(lofs[u], lofs[u + 1]):
                    w = lnbr[i]
                    if status[w] == 1:
                        c_cnt += 1
                    elif status[w] == 2:
                        s_cnt += 1
                adjS[u] = s_cnt
                adjC[u] = c_cnt
            memset(satstamp, 0, (L + 1) * sizeof(long long))
            memset(satcnt, 0, (L + 1) * sizeof(int))
            b.satgen = 0
            b.sp = 0
            b.best_size = best_size
            b.aborted = 0

            if kk == 1:
                # with S={root}, candidates must be adjacent to the root
                w = nxt[SENT]
                while w != SENT:
                    u = nxt[w]
                    if adjS[w] == 0:
                        _bb_remove_c(&b, w)
                    w = u
            _bb_node(&b)
            best_size = b.best_size
            if b.aborted:
                completed = False
                for li in range(L):
                    loc[verts[li]] = -1
                break
            for li in range(L):
                loc[verts[li]] = -1

        if b.best_len < floor_:
            b.best_len = 0
        out_arr = np.empty(b.best_len, dtype=np.int32)
        for ci in range(b.best_len):
            out_arr[ci] = best_glob[ci]
        out_arr.sort()
        return out_arr, bool(completed)
    finally:
        free(pos); free(loc); free(markv); free(cstamp); free(ccount)
        free(touched2); free(lvl1); free(cand); free(verts); free(lofs)
        free(lnbr); free(ldeg); free(alive); free(dq); free(status); free(adjS)
        free(adjC); free(nxt); free(prv); free(S_list); free(ustack)
        free(satstamp); free(satcnt); free(best_glob)
