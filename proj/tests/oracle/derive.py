"""Brute-force reference values frozen into the C++ tests.

Run: python3 tests/oracle/derive.py
Everything here is exhaustive search over small inputs and shares no code
with the library.
"""
import itertools
from collections import deque


def ladder(levels):
    node = lambda side, level: 2 * (level - 1) + side
    edges = []
    for l in range(1, levels + 1):
        edges.append((node(1, l), node(2, l)))
        if l < levels:
            edges += [(node(1, l), node(1, l + 1)), (node(2, l), node(2, l + 1))]
    return list(range(1, 2 * levels + 1)), edges


def bandwidth(nodes, edges):
    best = len(nodes)
    for perm in itertools.permutations(nodes):
        pos = {v: i for i, v in enumerate(perm)}
        best = min(best, max((abs(pos[a] - pos[b]) for a, b in edges), default=0))
    return best


def stretch(order, edges):
    pos = {v: i for i, v in enumerate(order)}
    return [abs(pos[a] - pos[b]) for a, b in edges]


def swap_distance(a, b):
    a, b = tuple(a), tuple(b)
    seen = {a: 0}
    q = deque([a])
    while q:
        cur = q.popleft()
        if cur == b:
            return seen[cur]
        for i in range(len(cur) - 1):
            nxt = list(cur)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                q.append(nxt)


def main():
    for levels in (2, 3, 4, 5):
        print(f"bandwidth Ladder_{levels} =", bandwidth(*ladder(levels)))
    print("bandwidth P_5 =", bandwidth(range(1, 6), [(i, i + 1) for i in range(1, 5)]))
    print("bandwidth C_6 =", bandwidth(range(1, 7), [(i, i % 6 + 1) for i in range(1, 7)]))
    print("bandwidth K_3 =", bandwidth(range(1, 4), [(1, 2), (1, 3), (2, 3)]))
    print("bandwidth K_1,4 =", bandwidth(range(1, 6), [(1, k) for k in range(2, 6)]))

    nodes, edges = ladder(3)
    level_order = [1, 2, 3, 4, 5, 6]  # (1,1),(2,1),(1,2),(2,2),(1,3),(2,3)
    print("Ladder_3 level order max stretch =", max(stretch(level_order, edges)))

    # cycle fold for n = 6: i -> 2i-1 for i <= 3, else 2(n-i+1)
    n = 6
    pos = [2 * i - 1 if i <= (n + 1) // 2 else 2 * (n - i + 1) for i in range(1, n + 1)]
    order = [0] * n
    for i, p in enumerate(pos, start=1):
        order[p - 1] = i
    cyc = [(i, i % n + 1) for i in range(1, n + 1)]
    print("fold C_6 positions =", pos, "stretches =", stretch(order, cyc))

    print("swap distance abc -> cba =", swap_distance("abc", "cba"))
    worst = max(swap_distance(p, tuple(range(6))) for p in itertools.permutations(range(6)))
    print("max swap distance on 6 elements =", worst)


if __name__ == "__main__":
    main()
