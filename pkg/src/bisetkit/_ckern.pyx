# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; semantics match bisetkit._pykern."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from libc.stdint cimport int32_t

BACKEND = "c"


cdef void _insertion_sort(int32_t* buf, int m) noexcept nogil:
    cdef int i, j
    cdef int32_t v
    for i in range(1, m):
        v = buf[i]
        j = i - 1
        while j >= 0 and buf[j] > v:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = v


def closure(const int32_t[:, ::1] table, int identity, const int32_t[::1] gens):
    cdef int n = table.shape[0]
    cdef int ngens = gens.shape[0]
    cdef char* seen = <char*> malloc(n)
    cdef int32_t* stack = <int32_t*> malloc(n * sizeof(int32_t))
    cdef int32_t* found = <int32_t*> malloc(n * sizeof(int32_t))
    if seen == NULL or stack == NULL or found == NULL:
        free(seen); free(stack); free(found)
        raise MemoryError()
    memset(seen, 0, n)
    cdef int top = 0, count = 0
    cdef int32_t x, y
    cdef int g
    seen[identity] = 1
    stack[top] = identity; top += 1
    found[count] = identity; count += 1
    while top > 0:
        top -= 1
        x = stack[top]
        for g in range(ngens):
            y = table[x, gens[g]]
            if not seen[y]:
                seen[y] = 1
                stack[top] = y; top += 1
                found[count] = y; count += 1
    _insertion_sort(found, count)
    result = [found[g] for g in range(count)]
    free(seen); free(stack); free(found)
    return result


def canonical_conjugate(const int32_t[:, ::1] table, const int32_t[::1] inv, members):
    cdef int n = table.shape[0]
    cdef int s = len(members)
    cdef char* visited = <char*> malloc(n)
    cdef int32_t* mem = <int32_t*> malloc(s * sizeof(int32_t))
    cdef int32_t* conj = <int32_t*> malloc(s * sizeof(int32_t))
    cdef int32_t* best = <int32_t*> malloc(s * sizeof(int32_t))
    if visited == NULL or mem == NULL or conj == NULL or best == NULL:
        free(visited); free(mem); free(conj); free(best)
        raise MemoryError()
    memset(visited, 0, n)
    cdef int i
    for i in range(s):
        mem[i] = members[i]
    cdef bint have_best = False
    cdef int g, cmp
    cdef int32_t gi, gm
    for g in range(n):
        if visited[g]:
            continue
        gi = inv[g]
        for i in range(s):
            gm = table[g, mem[i]]
            visited[gm] = 1
            conj[i] = table[gm, gi]
        _insertion_sort(conj, s)
        if not have_best:
            for i in range(s):
                best[i] = conj[i]
            have_best = True
        else:
            cmp = 0
            for i in range(s):
                if conj[i] != best[i]:
                    cmp = -1 if conj[i] < best[i] else 1
                    break
            if cmp < 0:
                for i in range(s):
                    best[i] = conj[i]
    result = tuple(best[i] for i in range(s))
    free(visited); free(mem); free(conj); free(best)
    return result


def coset_space(const int32_t[:, ::1] table, members):
    cdef int n = table.shape[0]
    cdef int s = len(members)
    cdef int32_t* mem = <int32_t*> malloc(s * sizeof(int32_t))
    cdef int32_t* point_of = <int32_t*> malloc(n * sizeof(int32_t))
    if mem == NULL or point_of == NULL:
        free(mem); free(point_of)
        raise MemoryError()
    cdef int i
    for i in range(s):
        mem[i] = members[i]
    for i in range(n):
        point_of[i] = -1
    reps = []
    cdef int x, idx
    for x in range(n):
        if point_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        for i in range(s):
            point_of[table[x, mem[i]]] = idx
    result = [point_of[i] for i in range(n)]
    free(mem); free(point_of)
    return result, reps


def double_cosets(const int32_t[:, ::1] table, a_members, b_members):
    cdef int n = table.shape[0]
    cdef int na = len(a_members)
    cdef int nb = len(b_members)
    cdef char* visited = <char*> malloc(n)
    cdef int32_t* am = <int32_t*> malloc(na * sizeof(int32_t))
    cdef int32_t* bm = <int32_t*> malloc(nb * sizeof(int32_t))
    if visited == NULL or am == NULL or bm == NULL:
        free(visited); free(am); free(bm)
        raise MemoryError()
    memset(visited, 0, n)
    cdef int i
    for i in range(na):
        am[i] = a_members[i]
    for i in range(nb):
        bm[i] = b_members[i]
    reps = []
    cdef int x, a, b
    cdef int32_t ax
    for x in range(n):
        if visited[x]:
            continue
        reps.append(x)
        for a in range(na):
            ax = table[am[a], x]
            for b in range(nb):
                visited[table[ax, bm[b]]] = 1
    free(visited); free(am); free(bm)
    return reps


cdef int32_t _find(int32_t* parent, int32_t i) noexcept nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def tensor_orbits(const int32_t[:, ::1] rx, const int32_t[:, ::1] ly):
    cdef int nx = rx.shape[0]
    cdef int ng = ly.shape[0]
    cdef int ny = ly.shape[1]
    cdef long total = <long> nx * ny
    cdef int32_t* parent = <int32_t*> malloc(total * sizeof(int32_t))
    if parent == NULL and total > 0:
        raise MemoryError()
    cdef long p
    for p in range(total):
        parent[p] = <int32_t> p
    cdef int x, g, y
    cdef int32_t a, b
    cdef long base_x, base_xg
    for x in range(nx):
        base_x = <long> x * ny
        for g in range(ng):
            base_xg = <long> rx[x, g] * ny
            for y in range(ny):
                a = _find(parent, <int32_t> (base_xg + y))
                b = _find(parent, <int32_t> (base_x + ly[g, y]))
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    labels = [0] * total
    cdef int32_t* lab = <int32_t*> malloc(total * sizeof(int32_t)) if total > 0 else NULL
    cdef int count = 0
    cdef int32_t r
    for p in range(total):
        lab[p] = -1
    for p in range(total):
        r = _find(parent, <int32_t> p)
        if lab[r] < 0:
            lab[r] = count
            count += 1
        labels[p] = lab[r]
    free(parent)
    free(lab)
    return labels
