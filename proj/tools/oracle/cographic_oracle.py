#!/usr/bin/env python3
"""Reference for the cographic construction: lexicographically-first DFS tree,
coordinates indexed by non-tree edges, class of edge e = signed incidence of e
in the fundamental cycles of the non-tree edges.

Run from the repo root:  python3 tools/oracle/cographic_oracle.py
"""
import sys
import itertools

sys.path.insert(0, "tools/oracle")
from ref import primitive, rank, lat_key, is_pure


def dfs_tree(nv, edges):
    """Lexicographically-first DFS tree: from vertex 0, scan edges in list order."""
    adj = {v: [] for v in range(nv)}
    for idx, (u, w) in enumerate(edges):
        adj[u].append((w, idx))
        adj[w].append((u, idx))
    seen = {0}
    tree = []
    stack = [0]
    while stack:
        v = stack[-1]
        nxt = None
        for w, idx in adj[v]:
            if w not in seen:
                nxt = (w, idx)
                break
        if nxt is None:
            stack.pop()
            continue
        seen.add(nxt[0])
        tree.append(nxt[1])
        stack.append(nxt[0])
    return tree if len(seen) == nv else None


def fundamental_cycle(edges, tree, chord):
    """Signed edge incidence of the cycle closed by `chord` through the tree."""
    nv = 1 + max(max(e) for e in edges)
    adj = {v: [] for v in range(nv)}
    for idx in tree:
        u, w = edges[idx]
        adj[u].append((w, idx, +1))
        adj[w].append((u, idx, -1))
    u, w = edges[chord]
    # path w -> u in the tree, then chord u -> w closes the cycle
    par = {w: None}
    stack = [w]
    while stack:
        v = stack.pop()
        if v == u:
            break
        for x, idx, s in adj[v]:
            if x not in par:
                par[x] = (v, idx, s)
                stack.append(x)
    sign = {}
    v = u
    while par[v] is not None:
        pv, idx, s = par[v]
        sign[idx] = s  # tree edge traversed pv -> v with orientation sign s
        v = pv
    sign[chord] = 1
    return sign


def cographic(nv, edges):
    tree = dfs_tree(nv, edges)
    chords = [i for i in range(len(edges)) if i not in tree]
    cycles = [fundamental_cycle(edges, tree, c) for c in chords]
    roots = []
    for e in range(len(edges)):
        v = [cyc.get(e, 0) for cyc in cycles]
        p = primitive(v)
        if p:
            roots.append(p)
    # dedup lines
    return sorted(set(roots)), len(chords)


def flats_count(reps, n):
    found = {lat_key([], n)}
    for k in range(1, n + 1):
        for sub in itertools.combinations(reps, k):
            if rank(sub) == k:
                found.add(lat_key([list(s) for s in sub], n))
    return len(found)


def main():
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    roots, dim = cographic(4, k4)
    print("D(K4): dim", dim, "nonzero roots", 2 * len(roots), "flats", flats_count(roots, dim))
    print("   lines:", roots)
    k33 = [(u, w) for u in range(3) for w in range(3, 6)]
    roots, dim = cographic(6, k33)
    print("D(K33): dim", dim, "nonzero roots", 2 * len(roots), "flats", flats_count(roots, dim))
    print("   all independent subsets pure:",
          all(is_pure([list(s) for s in sub], dim)
              for k in range(1, dim + 1)
              for sub in itertools.combinations(roots, k) if rank(sub) == k))
    tri = [(0, 1), (1, 2), (0, 2)]
    roots, dim = cographic(3, tri)
    print("D(triangle): dim", dim, "nonzero roots", 2 * len(roots))
    path = [(0, 1), (1, 2)]
    roots, dim = cographic(3, path)
    print("D(path tree): dim", dim, "roots", roots)


if __name__ == "__main__":
    main()
