"""Pure-Python implementations of the hot kernels.

Mirrors ``_native`` (the Cython extension) operation for operation; outputs
are required to be identical so either backend can serve any run.  Control
flow here is kept deliberately parallel to the .pyx source.
"""

from __future__ import annotations

import heapq
import sys
import time

import numpy as np

BACKEND_NAME = "python"


def peel(offsets, neighbors, num, den):
    """Min-degree peeling with smallest-id tie break.

    Returns (order, core, max_core, lb_step, ub) where lb_step is the first
    step at which the residual graph is a (num/den)-quasi-clique (-1 if the
    graph is empty) and ub is the running degeneracy-based size bound
    max over steps of min(1 + ceil(max_core/gamma), residual size).
    """
    n = len(offsets) - 1
    order = np.empty(n, dtype=np.int32)
    core = np.zeros(n, dtype=np.int32)
    if n == 0:
        return order, core, 0, -1, 0
    off = offsets.tolist()
    adj = neighbors.tolist()
    deg = [off[v + 1] - off[v] for v in range(n)]
    alive = [True] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    max_core = 0
    lb_step = -1
    ub = 0
    for step in range(n):
        while True:
            d, u = heapq.heappop(heap)
            if alive[u] and deg[u] == d:
                break
        r = n - step
        if d > max_core:
            max_core = d
        cand = 1 + -(-max_core * den // num)
        if r < cand:
            cand = r
        if cand > ub:
            ub = cand
        if lb_step < 0 and d >= -(-num * (r - 1) // den):
            lb_step = step
        order[step] = u
        core[u] = max_core
        alive[u] = False
        for i in range(off[u], off[u + 1]):
            w = adj[i]
            if alive[w]:
                dw = deg[w] - 1
                deg[w] = dw
                heapq.heappush(heap, (dw, w))
    return order, core, max_core, lb_step, ub


def cascade(offsets, neighbors, threshold):
    """Keep mask after cascading removal of vertices with degree < threshold."""
    n = len(offsets) - 1
    if n == 0 or threshold <= 0:
        return np.ones(n, dtype=np.uint8)
    off = offsets.tolist()
    adj = neighbors.tolist()
    deg = [off[v + 1] - off[v] for v in range(n)]
    alive = [True] * n
    stack = []
    for v in range(n):
        if deg[v] < threshold:
            alive[v] = False
            stack.append(v)
    while stack:
        u = stack.pop()
        for i in range(off[u], off[u + 1]):
            w = adj[i]
            if alive[w]:
                dw = deg[w] - 1
                deg[w] = dw
                if dw < threshold:
                    alive[w] = False
                    stack.append(w)
    return np.array(alive, dtype=np.uint8)


def greedy_plex(offsets, neighbors, k, starts, size_cap, work_limit):
    """Greedy k-plex growth from each start vertex; returns the best set found.

    The candidate scan budget (work_limit) bounds total effort; the scan and
    tie rules (max count, then smallest id) are deterministic.
    """
    n = len(offsets) - 1
    if n == 0:
        return np.empty(0, dtype=np.int32)
    off = offsets.tolist()
    adj = neighbors.tolist()
    cnt = [0] * n
    satcnt = [0] * n
    in_s = [False] * n
    sat = [False] * n
    best: list[int] = []
    work = 0
    for v0 in starts.tolist():
        S = [v0]
        in_s[v0] = True
        touched = [v0]
        pool = []
        for i in range(off[v0], off[v0 + 1]):
            w = adj[i]
            cnt[w] = 1
            pool.append(w)
            touched.append(w)
        nsat = 0
        while pool and (size_cap <= 0 or len(S) < size_cap):
            if work >= work_limit:
                break
            need = len(S) + 1 - k
            best_v = -1
            best_c = -1
            j = 0
            end = len(pool)
            while j < end:
                u = pool[j]
                if in_s[u]:
                    end -= 1
                    pool[j] = pool[end]
                    pool.pop()
                    continue
                c = cnt[u]
                if (c >= need or need <= 0) and satcnt[u] == nsat:
                    if c > best_c or (c == best_c and u < best_v):
                        best_c = c
                        best_v = u
                j += 1
            work += end
            if best_v < 0:
                break
            u = best_v
            S.append(u)
            in_s[u] = True
            for i in range(off[u], off[u + 1]):
                w = adj[i]
                if cnt[w] == 0 and not in_s[w]:
                    pool.append(w)
                    touched.append(w)
                elif cnt[w] == 0:
                    touched.append(w)
                cnt[w] += 1
            slk = len(S) - k
            for v in S:
                if not sat[v] and cnt[v] == slk:
                    sat[v] = True
                    nsat += 1
                    for i in range(off[v], off[v + 1]):
                        w = adj[i]
                        if cnt[w] == 0 and not in_s[w]:
                            touched.append(w)
                        satcnt[w] += 1
        if len(S) > len(best):
            best = list(S)
        for v in touched:
            cnt[v] = 0
            satcnt[v] = 0
            in_s[v] = False
            sat[v] = False
    best.sort()
    return np.array(best, dtype=np.int32)


def plex_branch_bound(offsets, neighbors, k, floor, ub_stop, order, corenum, seed, allow_dist2, deadline):
    """Exact maximum k-plex via root decomposition plus include/exclude search.

    Returns (best_sorted, completed).  ``floor`` sets the smallest size worth
    reporting; ``ub_stop`` lets the search finish as soon as a provably
    maximum-size plex is found; ``allow_dist2`` additionally restricts each
    root's candidates to its distance-2 neighborhood even when the generic
    size guarantee (eff >= 2k-1) does not hold.
    """
    n = len(offsets) - 1
    best = [int(v) for v in seed.tolist()]
    best_size = len(best) if len(best) >= floor else floor - 1
    if len(best) < floor:
        best = []
    completed = True
    if n == 0 or best_size >= ub_stop:
        return np.array(sorted(best), dtype=np.int32), completed

    limit = sys.getrecursionlimit()
    if limit < n + 2000:
        sys.setrecursionlimit(n + 2000)

    off = offsets.tolist()
    adj = neighbors.tolist()
    core = corenum.tolist()
    order_l = order.tolist()
    pos = [0] * n
    for i in range(n):
        pos[order_l[i]] = i
    loc = [-1] * n
    mark = [0] * n
    markgen = 0
    cstamp = [0] * n
    ccount = [0] * n
    cgen = 0
    node_counter = 0

    for ridx in range(n):
        if best_size >= ub_stop:
            break
        if deadline > 0 and time.monotonic() > deadline:
            completed = False
            break
        eff = floor if floor > best_size + 1 else best_size + 1
        if 1 + (n - ridx - 1) < eff:
            break
        treq = eff - k
        r = order_l[ridx]
        if core[r] < treq:
            continue

        # ---- candidate collection for this root
        use_d2 = allow_dist2 or eff >= 2 * k - 1
        thr_adj = eff - 2 * k
        thr_non = eff - 2 * k + 2
        cand: list[int] = []
        if use_d2:
            markgen += 1
            mark[r] = markgen
            lvl1: list[int] = []
            for i in range(off[r], off[r + 1]):
                w = adj[i]
                if pos[w] > ridx and core[w] >= treq and mark[w] != markgen:
                    mark[w] = markgen
                    lvl1.append(w)
            # a plex holding r has at most |N(r) in universe| + k members
            if len(lvl1) < treq:
                continue
            if thr_non > 0:
                # count common neighbors with r during expansion and drop
                # vertices below the pairwise thresholds up front
                cgen += 1
                touched2: list[int] = []
                for x in lvl1:
                    for i in range(off[x], off[x + 1]):
                        w = adj[i]
                        if w != r and pos[w] > ridx and core[w] >= treq:
                            if cstamp[w] != cgen:
                                cstamp[w] = cgen
                                ccount[w] = 1
                                touched2.append(w)
                            else:
                                ccount[w] += 1
                for w in lvl1:
                    cc = ccount[w] if cstamp[w] == cgen else 0
                    if cc >= thr_adj:
                        cand.append(w)
                for w in touched2:
                    if mark[w] != markgen and ccount[w] >= thr_non:
                        cand.append(w)
            else:
                cand = list(lvl1)
                for x in lvl1:
                    for i in range(off[x], off[x + 1]):
                        w = adj[i]
                        if pos[w] > ridx and core[w] >= treq and mark[w] != markgen:
                            mark[w] = markgen
                            cand.append(w)
            cand.sort()
        else:
            nbr_ok = 0
            for i in range(off[r], off[r + 1]):
                w = adj[i]
                if pos[w] > ridx and core[w] >= treq:
                    nbr_ok += 1
            if nbr_ok < treq:
                continue
            for w in range(n):
                if w != r and pos[w] > ridx and core[w] >= treq:
                    cand.append(w)
        if 1 + len(cand) < eff:
            continue

        # ---- local induced subgraph (ids ascending; root included)
        verts = sorted(cand + [r])
        L = len(verts)
        for li in range(L):
            loc[verts[li]] = li
        rloc = loc[r]
        lofs = [0] * (L + 1)
        lnbr: list[int] = []
        for li in range(L):
            v = verts[li]
            for i in range(off[v], off[v + 1]):
                w = loc[adj[i]]
                if w >= 0:
                    lnbr.append(w)
            lofs[li + 1] = len(lnbr)
        ldeg = [lofs[li + 1] - lofs[li] for li in range(L)]
        alive = [True] * L

        # ---- root-level filtering: degree cascade, then common-neighbor rule
        dq = [u for u in range(L) if u != rloc and ldeg[u] < treq]
        for u in dq:
            alive[u] = False
        while dq:
            u = dq.pop()
            for i in range(lofs[u], lofs[u + 1]):
                w = lnbr[i]
                if alive[w]:
                    ldeg[w] -= 1
                    if w != rloc and ldeg[w] < treq:
                        alive[w] = False
                        dq.append(w)
        if not alive[rloc] or ldeg[rloc] < treq:
            for v in verts:
                loc[v] = -1
            continue
        if thr_non > 0:
            markgen += 1
            for i in range(lofs[rloc], lofs[rloc + 1]):
                w = lnbr[i]
                if alive[w]:
                    mark[w] = markgen  # mark is reused on local ids here
            for u in range(L):
                if not alive[u] or u == rloc:
                    continue
                cc = 0
                for i in range(lofs[u], lofs[u + 1]):
                    w = lnbr[i]
                    if alive[w] and w != rloc and mark[w] == markgen:
                        cc += 1
                thr = thr_adj if mark[u] == markgen else thr_non
                if cc < thr:
                    alive[u] = False
                    dq.append(u)
            markgen += 1  # invalidate local-id marks before reuse on globals
            while dq:
                u = dq.pop()
                for i in range(lofs[u], lofs[u + 1]):
                    w = lnbr[i]
                    if alive[w]:
                        ldeg[w] -= 1
                        if w != rloc and ldeg[w] < treq:
                            alive[w] = False
                            dq.append(w)
            if not alive[rloc] or ldeg[rloc] < treq:
                for v in verts:
                    loc[v] = -1
                continue
        n_alive = sum(alive)
        if n_alive < eff:
            for v in verts:
                loc[v] = -1
            continue

        # ---- search state
        status = [0] * L  # 0 out, 1 in C, 2 in S
        adjS = [0] * L
        adjC = [0] * L
        SENT = L
        nxt = [0] * (L + 1)
        prv = [0] * (L + 1)
        prev = SENT
        c_len = 0
        for u in range(L):
            if not alive[u] or u == rloc:
                continue
            status[u] = 1
            nxt[prev] = u
            prv[u] = prev
            prev = u
            c_len += 1
        nxt[prev] = SENT
        prv[SENT] = prev
        status[rloc] = 2
        S_list = [rloc]
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
        state = [c_len, best_size, 0]  # c_len, best_size, aborted
        stack: list[int] = []
        best_box = [best]

        def unlink(u):
            nxt[prv[u]] = nxt[u]
            prv[nxt[u]] = prv[u]
            state[0] -= 1

        def relink(u):
            nxt[prv[u]] = u
            prv[nxt[u]] = u
            state[0] += 1

        def remove_c(u):
            unlink(u)
            status[u] = 0
            for i in range(lofs[u], lofs[u + 1]):
                adjC[lnbr[i]] -= 1
            stack.append(u << 1)

        def include_and_filter(u):
            unlink(u)
            status[u] = 2
            S_list.append(u)
            for i in range(lofs[u], lofs[u + 1]):
                w = lnbr[i]
                adjS[w] += 1
                adjC[w] -= 1
            stack.append((u << 1) | 1)
            s_len = len(S_list)
            satfloor = s_len - k
            satlist = [v for v in S_list if adjS[v] == satfloor]
            nsat = len(satlist)
            if nsat:
                nonlocal_gen = _bump(mark_gen_box)
                for v in satlist:
                    for i in range(lofs[v], lofs[v + 1]):
                        w = lnbr[i]
                        if satstamp[w] != nonlocal_gen:
                            satstamp[w] = nonlocal_gen
                            satcnt[w] = 1
                        else:
                            satcnt[w] += 1
            need_s = s_len + 1 - k
            w = nxt[SENT]
            while w != SENT:
                nw = nxt[w]
                ok = adjS[w] >= need_s
                if ok and nsat:
                    ok = satstamp[w] == mark_gen_box[0] and satcnt[w] == nsat
                if not ok:
                    remove_c(w)
                w = nw

        satstamp = [0] * (L + 1)
        satcnt = [0] * (L + 1)
        mark_gen_box = [0]

        def _bump(box):
            box[0] += 1
            return box[0]

        def undo_to(mk):
            while len(stack) > mk:
                t = stack.pop()
                u = t >> 1
                if t & 1:
                    S_list.pop()
                    status[u] = 1
                    relink(u)
                    for i in range(lofs[u], lofs[u + 1]):
                        w = lnbr[i]
                        adjS[w] -= 1
                        adjC[w] += 1
                else:
                    status[u] = 1
                    relink(u)
                    for i in range(lofs[u], lofs[u + 1]):
                        adjC[lnbr[i]] += 1

        def node():
            nonlocal node_counter
            mk0 = len(stack)
            while True:
                node_counter += 1
                if deadline > 0 and (node_counter & 1023) == 0 and time.monotonic() > deadline:
                    state[2] = 1
                if state[2] or state[1] >= ub_stop:
                    undo_to(mk0)
                    return
                # D/E fixpoint: prune short budgets, force tight ones
                while True:
                    s_len = len(S_list)
                    if s_len > state[1]:
                        best_box[0] = sorted(verts[x] for x in S_list)
                        state[1] = s_len
                        if state[1] >= ub_stop:
                            undo_to(mk0)
                            return
                    eff2 = floor if floor > state[1] + 1 else state[1] + 1
                    if s_len + state[0] < eff2:
                        undo_to(mk0)
                        return
                    t2 = eff2 - k
                    changed = False
                    forced = -1
                    for v in S_list:
                        b = adjS[v] + adjC[v]
                        if b < t2:
                            undo_to(mk0)
                            return
                        if b == t2 and adjC[v] > 0:
                            forced = v
                            break
                    if forced >= 0:
                        for i in range(lofs[forced], lofs[forced + 1]):
                            w = lnbr[i]
                            if status[w] == 1:
                                include_and_filter(w)
                        changed = True
                    else:
                        w = nxt[SENT]
                        while w != SENT:
                            nw = nxt[w]
                            if adjS[w] + adjC[w] < t2:
                                remove_c(w)
                                changed = True
                            w = nw
                    if not changed:
                        break
                # take-all check and pivot selection in one sweep
                s_len = len(S_list)
                total = s_len + state[0]
                all_ok = True
                for v in S_list:
                    if total - 1 - (adjS[v] + adjC[v]) > k - 1:
                        all_ok = False
                        break
                pivot = -1
                pb = 1 << 60
                w = nxt[SENT]
                while w != SENT:
                    b = adjS[w] + adjC[w]
                    if total - 1 - b > k - 1:
                        all_ok = False
                    if b < pb:
                        pb = b
                        pivot = w
                    w = nxt[w]
                if all_ok:
                    if total > state[1]:
                        res = [verts[x] for x in S_list]
                        w = nxt[SENT]
                        while w != SENT:
                            res.append(verts[w])
                            w = nxt[w]
                        best_box[0] = sorted(res)
                        state[1] = total
                    undo_to(mk0)
                    return
                if pivot < 0:
                    undo_to(mk0)
                    return
                mk1 = len(stack)
                include_and_filter(pivot)
                node()
                undo_to(mk1)
                remove_c(pivot)

        if k == 1:
            # with S={root}, candidates must be adjacent to the root
            w0 = nxt[SENT]
            while w0 != SENT:
                nw0 = nxt[w0]
                if adjS[w0] == 0:
                    remove_c(w0)
                w0 = nw0
        node()
        best_size = state[1]
        best = best_box[0]
        if state[2]:
            completed = False
            for v in verts:
                loc[v] = -1
            break
        for v in verts:
            loc[v] = -1

    if len(best) < floor:
        best = []
    return np.array(sorted(best), dtype=np.int32), completed
