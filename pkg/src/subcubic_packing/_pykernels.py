"""Pure-Python search kernel.  Same contract as the compiled ``_ckernels``."""

FOUND = 1
EXHAUSTED = 0
BUDGET = -1


def packing_search(n, dist, order, radii, budget, fixed=None, symmetry=True):
    """Backtracking search for a packing colouring.

    ``dist`` is the flat row-major n*n distance table, ``order`` the free
    vertices in branching order, ``radii[c]`` the radius of class ``c``
    (two members of class c must be more than ``radii[c]`` apart).
    ``fixed[v] >= 0`` pins v to a class.  With ``symmetry`` set, among
    classes of equal radius a class is only opened after its predecessor.

    Returns ``(status, colors, nodes)``.
    """
    k = len(radii)
    balls = {}
    for r in set(radii):
        bl = []
        for v in range(n):
            row = v * n
            bl.append([w for w in range(n) if w != v and dist[row + w] <= r])
        balls[r] = bl
    cball = [balls[r] for r in radii]
    prev_same = [c > 0 and radii[c] == radii[c - 1] for c in range(k)]

    blocked = [[0] * n for _ in range(k)]
    nblock = [0] * n
    color = [-1] * n
    size = [0] * k

    def assign(v, c):
        color[v] = c
        size[c] += 1
        bc = blocked[c]
        for w in cball[c][v]:
            if bc[w] == 0:
                nblock[w] += 1
            bc[w] += 1

    def unassign(v):
        c = color[v]
        color[v] = -1
        size[c] -= 1
        bc = blocked[c]
        for w in cball[c][v]:
            bc[w] -= 1
            if bc[w] == 0:
                nblock[w] -= 1

    if fixed is not None:
        for v in range(n):
            c = fixed[v]
            if c >= 0:
                if blocked[c][v]:
                    return EXHAUSTED, None, 0
                assign(v, c)

    m = len(order)
    nxt = [0] * (m + 1)
    nodes = 0
    depth = 0
    while True:
        if depth == m:
            return FOUND, color, nodes
        if depth < 0:
            return EXHAUSTED, None, nodes
        v = order[depth]
        if color[v] >= 0:
            unassign(v)
        c = nxt[depth]
        placed = False
        while c < k:
            if blocked[c][v] == 0 and not (symmetry and prev_same[c] and size[c - 1] == 0):
                nodes += 1
                if nodes > budget:
                    return BUDGET, None, nodes
                assign(v, c)
                dead = False
                for w in cball[c][v]:
                    if color[w] < 0 and nblock[w] == k:
                        dead = True
                        break
                if dead:
                    unassign(v)
                    c += 1
                    continue
                placed = True
                break
            c += 1
        if placed:
            nxt[depth] = c + 1
            depth += 1
            if depth <= m:
                nxt[depth] = 0
        else:
            nxt[depth] = 0
            depth -= 1
