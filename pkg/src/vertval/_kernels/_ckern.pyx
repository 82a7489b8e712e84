# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels for graphs with at most 64 nodes.

Single-word uint64 bitsets keep the hot loops branch-light; the dispatcher
in ``vertval._kernels`` routes larger graphs to the pure-Python backend.
Algorithms and summation order match ``_pure`` exactly.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

DEF MAXN = 64


cdef inline void _adjacency(int num_nodes, const int[:, ::1] edges, u64 *adj) nogil:
    cdef int i, u, v
    for i in range(num_nodes):
        adj[i] = 0
    for i in range(edges.shape[0]):
        u = edges[i, 0]
        v = edges[i, 1]
        adj[u] |= (<u64>1) << v
        adj[v] |= (<u64>1) << u


def triangle_count(int num_nodes, const int[:, ::1] edges):
    cdef u64 adj[MAXN]
    cdef long long total = 0
    cdef int i
    _adjacency(num_nodes, edges, adj)
    for i in range(edges.shape[0]):
        total += __builtin_popcountll(adj[edges[i, 0]] & adj[edges[i, 1]])
    return int(total // 3)


def clustering_sum(int num_nodes, const int[:, ::1] edges):
    cdef u64 adj[MAXN]
    cdef u64 nb, rest
    cdef double total = 0.0
    cdef int u, v, d
    cdef long long links2
    _adjacency(num_nodes, edges, adj)
    for u in range(num_nodes):
        nb = adj[u]
        d = __builtin_popcountll(nb)
        if d < 2:
            continue
        links2 = 0
        rest = nb
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            links2 += __builtin_popcountll(adj[v] & nb)
        total += links2 / (<double>(d * (d - 1)))
    return total


def path_length_stats(int num_nodes, const int[:, ::1] edges):
    cdef u64 adj[MAXN]
    cdef u64 visited, frontier, reach, rest
    cdef long long total = 0, pairs = 0
    cdef int s, v, dist, cnt
    _adjacency(num_nodes, edges, adj)
    for s in range(num_nodes):
        visited = (<u64>1) << s
        frontier = visited
        dist = 0
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                v = __builtin_ctzll(rest)
                rest &= rest - 1
                reach |= adj[v]
            frontier = reach & ~visited
            dist += 1
            cnt = __builtin_popcountll(frontier)
            total += dist * cnt
            pairs += cnt
            visited |= frontier
    return int(total), int(pairs)


cdef long long _expand(u64 *adj, u64 p, u64 x) nogil:
    if p == 0 and x == 0:
        return 1
    cdef int pivot = -1, best = -1, u, d
    cdef u64 rest = p | x, cand, bit
    cdef long long count = 0
    while rest:
        u = __builtin_ctzll(rest)
        rest &= rest - 1
        d = __builtin_popcountll(adj[u] & p)
        if d > best:
            best = d
            pivot = u
    cand = p & ~adj[pivot]
    while cand:
        u = __builtin_ctzll(cand)
        cand &= cand - 1
        bit = (<u64>1) << u
        count += _expand(adj, p & adj[u], x & adj[u])
        p &= ~bit
        x |= bit
    return count


def maximal_clique_count(int num_nodes, const int[:, ::1] edges):
    if num_nodes == 0:
        return 0
    cdef u64 adj[MAXN]
    cdef u64 p
    _adjacency(num_nodes, edges, adj)
    if num_nodes == 64:
        p = <u64>0xFFFFFFFFFFFFFFFF
    else:
        p = ((<u64>1) << num_nodes) - 1
    return int(_expand(adj, p, 0))
