"""Pure-Python enumeration kernels.

Mirrors the compiled module ``bisetkit._ckern``; one of the two is selected
at import time by ``bisetkit.kernels``. Tables are dense numpy int32 Cayley
tables; member lists are ascending element indices and always contain the
identity.
"""

from __future__ import annotations

BACKEND = "python"


def closure(table, identity: int, gens) -> list[int]:
    """Members of the subgroup generated by ``gens``, ascending."""
    seen = bytearray(len(table))
    seen[identity] = 1
    members = [identity]
    stack = [identity]
    gens = [int(g) for g in gens]
    while stack:
        x = stack.pop()
        row = table[x]
        for g in gens:
            y = int(row[g])
            if not seen[y]:
                seen[y] = 1
                members.append(y)
                stack.append(y)
    members.sort()
    return members


def canonical_conjugate(table, inv, members) -> tuple[int, ...]:
    """Lexicographically least sorted member tuple over all conjugates.

    Conjugation by every element of a left coset gS gives the same set, so
    only one representative per coset is tried.
    """
    n = len(table)
    members = [int(m) for m in members]
    visited = bytearray(n)
    best: list[int] | None = None
    for g in range(n):
        if visited[g]:
            continue
        row_g = table[g]
        gi = int(inv[g])
        conj = []
        for m in members:
            gm = int(row_g[m])
            visited[gm] = 1
            conj.append(int(table[gm][gi]))
        conj.sort()
        if best is None or conj < best:
            best = conj
    assert best is not None
    return tuple(best)


def coset_space(table, members) -> tuple[list[int], list[int]]:
    """Left cosets xS: (point_of, reps) with reps ascending by least element."""
    n = len(table)
    point_of = [-1] * n
    reps: list[int] = []
    members = [int(m) for m in members]
    for x in range(n):
        if point_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        row = table[x]
        for m in members:
            point_of[int(row[m])] = idx
    return point_of, reps


def double_cosets(table, a_members, b_members) -> list[int]:
    """Minimal representatives of the double cosets A\\G/B, ascending."""
    n = len(table)
    visited = bytearray(n)
    reps: list[int] = []
    a_members = [int(a) for a in a_members]
    b_members = [int(b) for b in b_members]
    for x in range(n):
        if visited[x]:
            continue
        reps.append(x)
        for a in a_members:
            row = table[int(table[a][x])]
            for b in b_members:
                visited[int(row[b])] = 1
    return reps


def tensor_orbits(rx, ly) -> list[int]:
    """Orbit labels of the relation (x.g, y) ~ (x, g.y) on X x Y.

    ``rx[x][g]`` is the right G-action on X, ``ly[g][y]`` the left action on
    Y. Labels are assigned in first-occurrence order over the flat index
    x*|Y|+y, so the output is deterministic.
    """
    nx = len(rx)
    ng = len(ly)
    ny = len(ly[0]) if ng else 0
    total = nx * ny
    parent = list(range(total))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in range(nx):
        row_x = rx[x]
        base_x = x * ny
        for g in range(ng):
            xg = int(row_x[g])
            row_g = ly[g]
            base_xg = xg * ny
            for y in range(ny):
                a = find(base_xg + y)
                b = find(base_x + int(row_g[y]))
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    labels = [-1] * total
    count = 0
    for p in range(total):
        r = find(p)
        if labels[r] < 0:
            labels[r] = count
            count += 1
        labels[p] = labels[r]
    return labels
