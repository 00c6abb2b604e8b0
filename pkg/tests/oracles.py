"""Brute-force reference implementations used to cross-check the library.

Nothing here imports the linear algebra under test: subspaces are handled
as explicit frozensets of integer vectors over GF(q).
"""

from itertools import product


def all_vectors(q, n):
    return list(product(range(q), repeat=n))


def row_space(rows, q, n):
    """Set of all linear combinations of ``rows`` (integer tuples mod q)."""
    out = set()
    for coeffs in product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % q for i in range(n)))
    return frozenset(out)


def brute_force_subspace_count(q, n):
    """Distinct row spaces of every k x n matrix, k = 0..n."""
    spaces = {frozenset([(0,) * n])}
    vecs = all_vectors(q, n)
    for k in range(1, n + 1):
        for rows in product(vecs, repeat=k):
            spaces.add(row_space(rows, q, n))
    return len(spaces)


def brute_force_subspaces(q, n):
    spaces = {frozenset([(0,) * n])}
    vecs = all_vectors(q, n)
    frontier = {frozenset([(0,) * n])}
    while frontier:
        nxt = set()
        for s in frontier:
            for v in vecs:
                if v not in s:
                    t = _extend(s, v, q, n)
                    if t not in spaces:
                        spaces.add(t)
                        nxt.add(t)
        frontier = nxt
    return spaces


def _extend(s, v, q, n):
    return frozenset(tuple((a[i] + c * v[i]) % q for i in range(n)) for a in s for c in range(q))


def int_bracket(tensor, x, y, q):
    """Bracket on integer vectors from an integer structure tensor."""
    n = len(x)
    return tuple(sum(x[i] * y[j] * tensor[i][j][k] for i in range(n) for j in range(n)) % q for k in range(n))


def int_tensor(algebra):
    return [[[int(str(c)) for c in row] for row in plane] for plane in algebra.tensor]


def brute_force_classify(tensor, s, q, n):
    """'Ideal', 'SelfIdealizing' or 'Neither' for a closed subspace given as a vector set."""
    vecs = all_vectors(q, n)
    idealizer = {x for x in vecs if all(int_bracket(tensor, x, a, q) in s and int_bracket(tensor, a, x, q) in s for a in s)}
    if len(idealizer) == q**n:
        return "Ideal"
    return "SelfIdealizing" if idealizer == set(s) else "Neither"


def brute_force_nilpotent_radical(tensor, q, n):
    """Sum of all nilpotent ideals, by explicit vector sets."""
    vecs = all_vectors(q, n)

    def closed(s):
        return all(int_bracket(tensor, a, b, q) in s for a in s for b in s)

    def ideal(s):
        return all(int_bracket(tensor, x, a, q) in s and int_bracket(tensor, a, x, q) in s for a in s for x in vecs)

    def nilpotent(s):
        c = set(s)
        for _ in range(n + 1):
            gens = [int_bracket(tensor, a, b, q) for a in s for b in c] + [int_bracket(tensor, b, a, q) for a in s for b in c]
            c = set(row_space(_basis_of(gens, q, n), q, n))
            if c == {(0,) * n}:
                return True
        return False

    total = frozenset([(0,) * n])
    for s in brute_force_subspaces(q, n):
        if closed(s) and ideal(s) and nilpotent(s):
            total = row_space(list(_basis_of(list(total) + list(s), q, n)), q, n)
    return total


def _basis_of(vectors, q, n):
    """Greedy independent subset (span-growing), no elimination."""
    basis, span_ = [], {(0,) * n}
    for v in vectors:
        if v not in span_:
            basis.append(v)
            span_ = set(row_space(basis, q, n))
    return basis
