"""Independent reference implementations used only by the tests.

None of these share code with the package beyond the word classes used to
compare results.
"""

import itertools
import random


def naive_free_reduce(letters):
    """Scan for an adjacent inverse pair, delete it, start over."""
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k] == -letters[k + 1]:
                del letters[k:k + 2]
                changed = True
                break
    return tuple(letters)


def random_order_free_reduce(letters, rng):
    """Cancel a uniformly random available pair each step."""
    letters = list(letters)
    while True:
        spots = [k for k in range(len(letters) - 1) if letters[k] == -letters[k + 1]]
        if not spots:
            return tuple(letters)
        k = rng.choice(spots)
        del letters[k:k + 2]


def naive_cox_reduce(letters):
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k] == letters[k + 1]:
                del letters[k:k + 2]
                changed = True
                break
    return tuple(letters)


def all_free_words(m, max_len):
    """Every reduced word of F_m up to max_len, as letter tuples."""
    alphabet = [a for k in range(1, m + 1) for a in (k, -k)]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in alphabet if not w or w[-1] != -a]
        out.extend(frontier)
    return out


def all_cox_words(n, max_len):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in range(1, n + 1) if not w or w[-1] != a]
        out.extend(frontier)
    return out


def substitute(letters, images):
    """Letter substitution on tuples; images maps index -> tuple."""
    out = []
    for a in letters:
        img = images[abs(a)]
        out.extend(img if a > 0 else tuple(-b for b in reversed(img)))
    return naive_free_reduce(out)


def inv(letters):
    return tuple(-a for a in reversed(letters))


def brute_conjugator(images, m, max_len=4):
    """Search all g with |g| <= max_len such that images[i] == g x_i g^-1."""
    for g in all_free_words(m, max_len):
        gi = inv(g)
        if all(naive_free_reduce(g + (i,) + gi) == tuple(images[i]) for i in range(1, m + 1)):
            return g
    return None


def brute_conjugate(u, v, m, max_len=4):
    """Whether g u g^-1 == v for some |g| <= max_len."""
    v = tuple(v)
    return any(naive_free_reduce(g + tuple(u) + inv(g)) == v for g in all_free_words(m, max_len))


def simple_cycles(vertices, edges):
    """All simple cycles (length >= 3) of an undirected graph by DFS from each least vertex."""
    adj = {v: set() for v in vertices}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    order = {v: k for k, v in enumerate(sorted(vertices))}
    found = set()

    def dfs(start, v, path):
        for w in adj[v]:
            if w == start and len(path) >= 3:
                cyc = tuple(path)
                # canonical: rotation and direction
                rev = (cyc[0],) + tuple(reversed(cyc[1:]))
                found.add(min(cyc, rev))
            elif w not in path and order[w] > order[start]:
                dfs(start, w, path + [w])

    for s in vertices:
        dfs(s, s, [s])
    return sorted(found)


def bfs_distance(vertices, edges, u, v):
    adj = {x: set() for x in vertices}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist.get(v)


def random_raw_word(rng, m, max_len):
    n = rng.randint(0, max_len)
    return [rng.choice([1, -1]) * rng.randint(1, m) for _ in range(n)]


def seeded(seed=20261015):
    return random.Random(seed)


def powerset_pairs(items):
    return itertools.product(items, repeat=2)
