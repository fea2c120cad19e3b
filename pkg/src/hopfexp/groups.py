"""Small finite groups as multiplication tables, generated from concrete generators.

Elements are produced by breadth-first closure from the identity, multiplying
by generators on the right, so element order and labels are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    name: str
    labels: tuple
    table: tuple  # table[i][j] = index of g_i g_j
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.labels)

    def inverse(self, i: int) -> int:
        row = self.table[i]
        return row.index(self.identity)

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.table[cur][i]
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.element_order(i) for i in range(self.order)))


def check_group(table) -> int:
    """Validate a multiplication table; returns the identity index."""
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise GroupError("table must be square and nonempty")
    if any(not 0 <= x < n for r in table for x in r):
        raise GroupError("table entries out of range")
    ident = next((e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))), None)
    if ident is None:
        raise GroupError("no identity element")
    for a in range(n):
        if ident not in table[a]:
            raise GroupError(f"element {a} has no inverse")
        b = table[a].index(ident)
        if table[b][a] != ident:
            raise GroupError(f"element {a} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupError("table is not associative")
    return ident


def _compress(word: str) -> str:
    if not word:
        return "e"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        out.append(word[i] if run == 1 else f"{word[i]}^{run}")
        i = j
    return "".join(out)


def generate(name: str, gens: dict, mul, identity) -> GroupTable:
    """Close ``gens`` (letter -> element) under ``mul``; elements must be hashable."""
    elements = [identity]
    words = [""]
    index = {identity: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for letter, g in gens.items():
                h = mul(elements[i], g)
                if h not in index:
                    index[h] = len(elements)
                    elements.append(h)
                    words.append(words[i] + letter)
                    nxt.append(index[h])
        frontier = nxt
    n = len(elements)
    table = tuple(tuple(index[mul(elements[i], elements[j])] for j in range(n)) for i in range(n))
    return GroupTable(name, tuple(_compress(w) for w in words), table, 0)


def _perm_mul(p, q):
    # apply q first, then p (composition p o q)
    return tuple(p[i] for i in q)


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    if n == 1:
        return GroupTable("Z1", ("e",), ((0,),), 0)
    return generate(f"Z{n}", {"g": 1}, lambda a, b: (a + b) % n, 0)


def klein() -> GroupTable:
    return generate("Klein", {"a": (1, 0), "b": (0, 1)}, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2), (0, 0))


def symmetric3() -> GroupTable:
    return generate("S3", {"a": (1, 0, 2), "b": (1, 2, 0)}, _perm_mul, (0, 1, 2))


def dihedral4() -> GroupTable:
    """Symmetries of a square: r a quarter turn, s a reflection."""
    return generate("D4", {"r": (1, 2, 3, 0), "s": (0, 3, 2, 1)}, _perm_mul, (0, 1, 2, 3))


def quaternion8() -> GroupTable:
    """Left multiplication by i and j on the quaternion basis (1, i, j, k)."""
    i = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0))
    j = ((0, 0, -1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, -1, 0, 0))
    ident = tuple(tuple(int(r == c) for c in range(4)) for r in range(4))
    return generate("Q8", {"i": i, "j": j}, _mat_mul, ident)


def direct_product(G: GroupTable, K: GroupTable) -> GroupTable:
    m = K.order
    labels = tuple(f"({a},{b})" for a in G.labels for b in K.labels)
    table = tuple(
        tuple(G.table[a][c] * m + K.table[b][d] for c in range(G.order) for d in range(m))
        for a in range(G.order)
        for b in range(m)
    )
    return GroupTable(f"{G.name}x{K.name}", labels, table, G.identity * m + K.identity)
