"""Pure-Python graph kernels on integer bitsets.

Arbitrary-precision ints serve as adjacency bitsets, so these kernels
handle any node count. The compiled backend mirrors the same algorithms
(including summation order, so float results agree bit for bit).
"""


def _adjacency(num_nodes, edges):
    adj = [0] * num_nodes
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def triangle_count(num_nodes, edges):
    """Exact triangle count: common neighbors per edge, each triangle hit 3x."""
    adj = _adjacency(num_nodes, edges)
    total = 0
    for u, v in edges:
        total += (adj[u] & adj[v]).bit_count()
    return total // 3


def clustering_sum(num_nodes, edges):
    """Sum over nodes of the local clustering coefficient (degree < 2 adds 0)."""
    adj = _adjacency(num_nodes, edges)
    total = 0.0
    for u in range(num_nodes):
        nb = adj[u]
        d = nb.bit_count()
        if d < 2:
            continue
        links2 = 0  # each neighbor-pair edge counted twice
        rest = nb
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            links2 += (adj[v] & nb).bit_count()
        total += links2 / (d * (d - 1))
    return total


def path_length_stats(num_nodes, edges):
    """(sum of distances, pair count) over ordered reachable pairs, via BFS."""
    adj = _adjacency(num_nodes, edges)
    total = 0
    pairs = 0
    for s in range(num_nodes):
        visited = 1 << s
        frontier = 1 << s
        dist = 0
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                reach |= adj[v]
            frontier = reach & ~visited
            dist += 1
            cnt = frontier.bit_count()
            total += dist * cnt
            pairs += cnt
            visited |= frontier
    return total, pairs


def maximal_clique_count(num_nodes, edges):
    """Number of maximal cliques (Bron-Kerbosch with greedy pivoting)."""
    if num_nodes == 0:
        return 0
    adj = _adjacency(num_nodes, edges)

    def expand(p, x):
        if p == 0 and x == 0:
            return 1
        pivot = -1
        best = -1
        rest = p | x
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = (adj[u] & p).bit_count()
            if d > best:
                best = d
                pivot = u
        count = 0
        cand = p & ~adj[pivot]
        while cand:
            u = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bit = 1 << u
            count += expand(p & adj[u], x & adj[u])
            p &= ~bit
            x |= bit
        return count

    return expand((1 << num_nodes) - 1, 0)
