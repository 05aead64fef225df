"""Slow reference implementations that share no code with the package.

Set systems here are plain ``(ground, set of frozensets)`` pairs.
"""

from itertools import chain, combinations, permutations


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def sym_exchange_ok(feasible):
    if not feasible:
        return False
    for X in feasible:
        for Y in feasible:
            d = X ^ Y
            for u in d:
                if not any(X ^ frozenset({u, v}) in feasible for v in d):
                    return False
    return True


def twist_family(feasible, A):
    A = frozenset(A)
    return {A ^ X for X in feasible}


def width_of(feasible):
    sizes = [len(X) for X in feasible]
    return max(sizes) - min(sizes)


def twist_widths(ground, feasible):
    return {A: width_of(twist_family(feasible, A)) for A in powerset(ground)}


def twist_poly(ground, feasible):
    out = {}
    for w in twist_widths(ground, feasible).values():
        out[w] = out.get(w, 0) + 1
    return out


def det_gf2(M):
    """Leibniz expansion mod 2 (permanent equals determinant in characteristic 2)."""
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod &= M[i][perm[i]]
            if not prod:
                break
        total ^= prod
    return total


def dm_of_matrix(M, ground):
    out = set()
    for A in powerset(range(len(M))):
        idx = sorted(A)
        sub = [[M[i][j] for j in idx] for i in idx]
        if det_gf2(sub):
            out.add(frozenset(ground[i] for i in idx))
    return out


def primal_type(feasible, e):
    r = min(len(X) for X in feasible)
    if any(e in X for X in feasible if len(X) == r):
        return "p"
    if any(e in X for X in feasible if len(X) == r + 1):
        return "t"
    return "u"


def delete(ground, feasible, e):
    ground = [g for g in ground if g != e]
    if all(e in X for X in feasible):
        return ground, {X - {e} for X in feasible}
    return ground, {X for X in feasible if e not in X}


def face_orbits(vertices, edges, kept):
    """Boundary components by classical signed face tracing.

    States are (half-edge, direction).  From a state we move to the next
    half-edge around the vertex in the current direction, cross its edge, and
    flip the direction on a twisted edge.  Each boundary is traced once in
    each direction, so boundaries = orbits / 2; vertices without kept
    half-edges contribute one boundary each.
    """
    other, twisted = {}, {}
    for k, (a, b, tw) in enumerate(edges):
        if k in kept:
            other[a], other[b] = b, a
            twisted[a] = twisted[b] = tw
    rot = {}
    isolated = 0
    for cyc in vertices:
        cyc = [h for h in cyc if h in other]
        if not cyc:
            isolated += 1
        for i, h in enumerate(cyc):
            rot[h] = (cyc[(i + 1) % len(cyc)], cyc[(i - 1) % len(cyc)])
    seen = set()
    orbits = 0
    for h0 in rot:
        for s0 in (0, 1):
            if (h0, s0) in seen:
                continue
            orbits += 1
            h, s = h0, s0
            while (h, s) not in seen:
                seen.add((h, s))
                nxt = rot[h][s]
                h2 = other[nxt]
                s = s ^ twisted[nxt]
                h = h2
    assert orbits % 2 == 0
    return orbits // 2 + isolated
