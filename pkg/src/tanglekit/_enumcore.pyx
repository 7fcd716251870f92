# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for finitely presented Kei enumeration.

Line-for-line translation of `_enumpy` onto flat C arrays: the partial
operation table is dense (pitch = allocated slot capacity, -1 marks an
undefined product), the union-find keeps the smaller element id, and
slot compaction between rounds renumbers live elements in discovery
order, which leaves the deduction sequence identical to the pure
kernel's.

A table that would outgrow TANGLEKIT_MAX_TABLE_BYTES (default 1.2e9)
is reported as a cap-exceeded outcome instead of being allocated.
"""

import os

from libc.stdlib cimport free, malloc
from libc.string cimport memset

COMPLETED = 0
CAP_EXCEEDED = 1


def bracket_statesum(crossings, int arc_count):
    """Kauffman bracket state sum; see the pure kernel for the contract."""
    cdef int c = len(crossings)
    cdef int *flat = <int *> malloc(4 * c * sizeof(int))
    cdef int *parent = <int *> malloc(arc_count * sizeof(int))
    cdef long long state
    cdef int i, x, y, rx, ry, a_count, circles, a, b, cc, dd
    cdef dict out = {}
    try:
        i = 0
        for quad in crossings:
            flat[i] = quad[0]; flat[i + 1] = quad[1]
            flat[i + 2] = quad[2]; flat[i + 3] = quad[3]
            i += 4
        for state in range(1LL << c):
            for x in range(arc_count):
                parent[x] = x
            a_count = 0
            for i in range(c):
                a = flat[4 * i]; b = flat[4 * i + 1]
                cc = flat[4 * i + 2]; dd = flat[4 * i + 3]
                if (state >> i) & 1:
                    pass
                else:
                    a_count += 1
                    # A-smoothing joins (a,b) and (cc,dd); B joins (a,dd),(b,cc)
                    dd, b = b, dd
                for y in range(2):
                    if y == 0:
                        rx = a; ry = dd
                    else:
                        rx = b; ry = cc
                    while parent[rx] != rx:
                        parent[rx] = parent[parent[rx]]
                        rx = parent[rx]
                    while parent[ry] != ry:
                        parent[ry] = parent[parent[ry]]
                        ry = parent[ry]
                    if rx != ry:
                        if rx < ry:
                            parent[ry] = rx
                        else:
                            parent[rx] = ry
            circles = 0
            for x in range(arc_count):
                if parent[x] == x:
                    circles += 1
            key = (2 * a_count - c, circles)
            if key in out:
                out[key] += 1
            else:
                out[key] = 1
        return out
    finally:
        free(flat)
        free(parent)


cdef struct State:
    int *parent
    int *tab            # pitch x pitch, row-major, -1 = undefined
    int *ev             # event queue, flattened (a, b) pairs
    int *buf            # scratch: snapshots of live ids
    int n_slots
    int pitch
    int ev_head
    int ev_len
    int ev_cap
    long long merges
    long long n_entries
    long long max_bytes
    bint oom


cdef inline int find(State *s, int x) nogil:
    while s.parent[x] != x:
        s.parent[x] = s.parent[s.parent[x]]
        x = s.parent[x]
    return x


cdef int grow(State *s, int need):
    """Ensure capacity for `need` slots; False on memory-budget refusal."""
    cdef int newp = s.pitch
    cdef int *nt
    cdef int *np_
    cdef int *nb
    cdef int a, b
    if need <= s.pitch:
        return 1
    while newp < need:
        newp *= 2
    if (<long long> newp) * newp * sizeof(int) > s.max_bytes:
        s.oom = 1
        return 0
    nt = <int *> malloc((<long long> newp) * newp * sizeof(int))
    np_ = <int *> malloc(newp * sizeof(int))
    nb = <int *> malloc(newp * sizeof(int))
    if nt == NULL or np_ == NULL or nb == NULL:
        if nt != NULL:
            free(nt)
        if np_ != NULL:
            free(np_)
        if nb != NULL:
            free(nb)
        s.oom = 1
        return 0
    memset(nt, 0xFF, (<long long> newp) * newp * sizeof(int))
    for a in range(s.n_slots):
        np_[a] = s.parent[a]
        for b in range(s.n_slots):
            nt[(<long long> a) * newp + b] = s.tab[(<long long> a) * s.pitch + b]
    free(s.tab)
    free(s.parent)
    free(s.buf)
    s.tab = nt
    s.parent = np_
    s.buf = nb
    s.pitch = newp
    return 1


cdef inline void push_event(State *s, int a, int b):
    cdef int *ne
    cdef int i
    if s.ev_head == s.ev_len:
        s.ev_head = 0
        s.ev_len = 0
    if 2 * s.ev_len + 2 > s.ev_cap:
        if s.ev_head > 0:
            for i in range(2 * (s.ev_len - s.ev_head)):
                s.ev[i] = s.ev[2 * s.ev_head + i]
            s.ev_len -= s.ev_head
            s.ev_head = 0
        if 2 * s.ev_len + 2 > s.ev_cap:
            ne = <int *> malloc(2 * s.ev_cap * sizeof(int))
            for i in range(2 * s.ev_len):
                ne[i] = s.ev[i]
            free(s.ev)
            s.ev = ne
            s.ev_cap *= 2
    s.ev[2 * s.ev_len] = a
    s.ev[2 * s.ev_len + 1] = b
    s.ev_len += 1


cdef inline long long ti(State *s, int a, int b) nogil:
    return (<long long> a) * s.pitch + b


cdef int new_element(State *s):
    cdef int e = s.n_slots
    if not grow(s, e + 1):
        return -1
    s.n_slots += 1
    s.parent[e] = e
    s.tab[ti(s, e, e)] = e
    s.n_entries += 1
    push_event(s, e, e)
    return e


cdef void merge(State *s, int x, int y):
    # explicit work stack; folds the dead row/column into the survivor
    cdef list queue = [(x, y)]
    cdef int rx, ry, z, val, cur
    while queue:
        x, y = queue.pop()
        rx = find(s, x)
        ry = find(s, y)
        if rx == ry:
            continue
        if rx > ry:
            rx, ry = ry, rx
        s.parent[ry] = rx
        s.merges += 1
        val = s.tab[ti(s, ry, ry)]
        if val >= 0:
            s.tab[ti(s, ry, ry)] = -1
            s.n_entries -= 1
            queue.append((val, rx))
        for z in range(s.n_slots):
            if s.parent[z] != z:
                continue
            val = s.tab[ti(s, ry, z)]
            if val >= 0:
                s.tab[ti(s, ry, z)] = -1
                cur = s.tab[ti(s, rx, z)]
                if cur < 0:
                    s.tab[ti(s, rx, z)] = val
                    push_event(s, rx, z)
                else:
                    s.n_entries -= 1
                    if cur != val:
                        queue.append((cur, val))
            val = s.tab[ti(s, z, ry)]
            if val >= 0:
                s.tab[ti(s, z, ry)] = -1
                cur = s.tab[ti(s, z, rx)]
                if cur < 0:
                    s.tab[ti(s, z, rx)] = val
                    push_event(s, z, rx)
                else:
                    s.n_entries -= 1
                    if cur != val:
                        queue.append((cur, val))


cdef void set_entry(State *s, int a, int b, int c):
    cdef int cur
    a = find(s, a)
    b = find(s, b)
    c = find(s, c)
    cur = s.tab[ti(s, a, b)]
    if cur < 0:
        s.tab[ti(s, a, b)] = c
        s.n_entries += 1
        push_event(s, a, b)
    elif find(s, cur) != c:
        merge(s, cur, c)


cdef inline int lookup(State *s, int a, int b) nogil:
    cdef int v = s.tab[ti(s, a, b)]
    if v < 0:
        return -1
    return find(s, v)


cdef void confront(State *s, int gk0, int gk1, int g, int hk0, int hk1, int h):
    if g < 0 and h < 0:
        return
    if g < 0:
        set_entry(s, gk0, gk1, h)
    elif h < 0:
        set_entry(s, hk0, hk1, g)
    elif g != h:
        merge(s, g, h)


cdef void process_events(State *s):
    cdef int a, b, ra, rb, c, z, nz, i
    cdef int e, f, d
    while s.ev_head < s.ev_len:
        a = s.ev[2 * s.ev_head]
        b = s.ev[2 * s.ev_head + 1]
        s.ev_head += 1
        ra = find(s, a)
        rb = find(s, b)
        c = s.tab[ti(s, ra, rb)]
        if c < 0:
            continue
        c = find(s, c)
        set_entry(s, c, rb, ra)
        nz = 0
        for z in range(s.n_slots):
            if s.parent[z] == z:
                s.buf[nz] = z
                nz += 1
        for i in range(nz):
            z = s.buf[i]
            if s.parent[z] != z:
                continue
            ra = find(s, ra)
            rb = find(s, rb)
            c = find(s, c)
            e = lookup(s, ra, z)
            f = lookup(s, rb, z)
            if e >= 0 and f >= 0:
                confront(s, c, z, lookup(s, c, z), e, f, lookup(s, e, f))
            d = lookup(s, ra, z)
            f = lookup(s, z, rb)
            if d >= 0 and f >= 0:
                confront(s, d, rb, lookup(s, d, rb), c, f, lookup(s, c, f))
            d = lookup(s, z, ra)
            e = lookup(s, z, rb)
            if d >= 0 and e >= 0:
                confront(s, d, rb, lookup(s, d, rb), e, c, lookup(s, e, c))
    s.ev_head = 0
    s.ev_len = 0


cdef int fill_product(State *s, int x, int y):
    cdef int v, e
    x = find(s, x)
    y = find(s, y)
    v = s.tab[ti(s, x, y)]
    if v >= 0:
        return find(s, v)
    e = new_element(s)
    if e < 0:
        return -1
    x = find(s, x)
    y = find(s, y)
    s.tab[ti(s, x, y)] = e
    s.n_entries += 1
    push_event(s, x, y)
    return e


def run_enumeration(int m, relations, rn_pattern, bint rn_on_all_pairs, cap):
    cdef State s
    cdef int cap_i = int(cap)
    cdef int i, j, a, b, u, w, ru, rw, x, y, target, v
    cdef int p, q, r, c, d, e, f, nz, status
    cdef long long before_slots, before_merges, before_entries
    cdef bint progress, rn_active = len(rn_pattern) > 0
    cdef list gen_slots, zs

    s.pitch = 256
    s.n_slots = 0
    s.ev_head = 0
    s.ev_len = 0
    s.ev_cap = 1024
    s.merges = 0
    s.n_entries = 0
    s.oom = 0
    s.max_bytes = int(os.environ.get("TANGLEKIT_MAX_TABLE_BYTES", "1200000000"))
    while s.pitch > 16 and (<long long> s.pitch) * s.pitch * sizeof(int) > s.max_bytes:
        s.pitch //= 2
    s.parent = <int *> malloc(s.pitch * sizeof(int))
    s.buf = <int *> malloc(s.pitch * sizeof(int))
    s.tab = <int *> malloc((<long long> s.pitch) * s.pitch * sizeof(int))
    s.ev = <int *> malloc(s.ev_cap * sizeof(int))
    memset(s.tab, 0xFF, (<long long> s.pitch) * s.pitch * sizeof(int))

    # relation words as flat int tuples
    rel_list = [(tuple(int(g) for g in lhs), tuple(int(g) for g in rhs))
                for lhs, rhs in relations]
    pattern = tuple(int(g) for g in rn_pattern)

    try:
        gen_slots = []
        for i in range(m):
            v = new_element(&s)
            if v < 0:
                return CAP_EXCEEDED, None, None, s.merges
            gen_slots.append(v)

        while True:
            process_events(&s)
            if s.n_slots - s.merges > cap_i:
                return CAP_EXCEEDED, None, None, s.merges

            # concrete relations, scan-and-fill with closing deduction
            before_slots = s.n_slots
            before_merges = s.merges
            before_entries = s.n_entries
            status = 0
            for lhs, rhs in rel_list:
                gens_now = [find(&s, <int> g) for g in gen_slots]
                x = find(&s, <int> gens_now[lhs[0]])
                for j in range(1, len(lhs)):
                    x = fill_product(&s, x, find(&s, <int> gens_now[lhs[j]]))
                    if x < 0:
                        return CAP_EXCEEDED, None, None, s.merges
                    x = find(&s, x)
                target = x
                gens_now = [find(&s, <int> g) for g in gen_slots]
                if len(rhs) == 1:
                    v = find(&s, <int> gens_now[rhs[0]])
                    if v != find(&s, target):
                        merge(&s, v, target)
                else:
                    x = find(&s, <int> gens_now[rhs[0]])
                    for j in range(1, len(rhs) - 1):
                        x = fill_product(&s, x, find(&s, <int> gens_now[rhs[j]]))
                        if x < 0:
                            return CAP_EXCEEDED, None, None, s.merges
                        x = find(&s, x)
                    set_entry(&s, x, find(&s, <int> gens_now[rhs[len(rhs) - 1]]),
                              find(&s, target))
                process_events(&s)
                if s.n_slots - s.merges > cap_i:
                    status = 1
                    break
            if (status or s.n_slots != before_slots or s.merges != before_merges
                    or s.n_entries != before_entries):
                continue

            if rn_active:
                before_slots = s.n_slots
                before_merges = s.merges
                before_entries = s.n_entries
                if rn_on_all_pairs:
                    zs = [i for i in range(s.n_slots) if s.parent[i] == i]
                else:
                    zs = sorted({find(&s, <int> g) for g in gen_slots})
                status = 0
                for u in zs:
                    if s.parent[u] != u:
                        continue
                    for w in zs:
                        if s.parent[w] != w or u == w:
                            continue
                        ru = find(&s, u)
                        rw = find(&s, w)
                        if ru == rw:
                            continue
                        # close u = (alternating word in u, w)
                        x = ru if pattern[0] == 0 else rw
                        for j in range(1, len(pattern) - 1):
                            y = ru if pattern[j] == 0 else rw
                            x = fill_product(&s, x, find(&s, y))
                            if x < 0:
                                return CAP_EXCEEDED, None, None, s.merges
                            x = find(&s, x)
                            ru = find(&s, ru)
                            rw = find(&s, rw)
                        y = ru if pattern[len(pattern) - 1] == 0 else rw
                        set_entry(&s, x, find(&s, y), find(&s, ru))
                        process_events(&s)
                        if s.n_slots - s.merges > cap_i:
                            status = 1
                            break
                    if status:
                        break
                if (status or s.n_slots != before_slots
                        or s.merges != before_merges
                        or s.n_entries != before_entries):
                    continue

            # totalize: first undefined product in scan order
            a = -1
            b = -1
            for p in range(s.n_slots):
                if s.parent[p] != p:
                    continue
                for q in range(s.n_slots):
                    if s.parent[q] != q:
                        continue
                    if s.tab[ti(&s, p, q)] < 0:
                        a = p
                        b = q
                        break
                if a >= 0:
                    break
            if a >= 0:
                if fill_product(&s, a, b) < 0:
                    return CAP_EXCEEDED, None, None, s.merges
                continue

            # certifying sweep: all three axioms on the whole table
            before_slots = s.n_slots
            before_merges = s.merges
            before_entries = s.n_entries
            nz = 0
            for p in range(s.n_slots):
                if s.parent[p] == p:
                    s.buf[nz] = p
                    nz += 1
            zs = [s.buf[i] for i in range(nz)]
            for p in zs:
                if s.parent[p] != p:
                    continue
                v = lookup(&s, p, p)
                if v >= 0 and v != p:
                    merge(&s, v, p)
                for q in zs:
                    if s.parent[p] != p or s.parent[q] != q:
                        continue
                    c = lookup(&s, p, q)
                    if c >= 0:
                        set_entry(&s, c, q, p)
            sweep_changed = (s.n_slots != before_slots or s.merges != before_merges
                             or s.n_entries != before_entries)
            for p in zs:
                for q in zs:
                    if s.parent[p] != p or s.parent[q] != q:
                        continue
                    d = lookup(&s, p, q)
                    if d < 0:
                        continue
                    for r in zs:
                        if s.parent[r] != r:
                            continue
                        e = lookup(&s, p, r)
                        f = lookup(&s, q, r)
                        if e < 0 or f < 0:
                            continue
                        d = lookup(&s, p, q)
                        if d < 0:
                            break
                        confront(&s, d, r, lookup(&s, d, r), e, f, lookup(&s, e, f))
            if (sweep_changed or s.n_slots != before_slots
                    or s.merges != before_merges
                    or s.n_entries != before_entries):
                continue
            break

        # compact to a dense table in discovery order
        nz = 0
        for p in range(s.n_slots):
            if s.parent[p] == p:
                s.buf[nz] = p
                nz += 1
        relabel = {}
        for i in range(nz):
            relabel[s.buf[i]] = i
        rows = []
        for i in range(nz):
            p = s.buf[i]
            row = []
            for j in range(nz):
                q = s.buf[j]
                row.append(relabel[find(&s, s.tab[ti(&s, p, q)])])
            rows.append(tuple(row))
        images = [relabel[find(&s, <int> g)] for g in gen_slots]
        return COMPLETED, rows, images, s.merges
    finally:
        free(s.parent)
        free(s.tab)
        free(s.ev)
        free(s.buf)
