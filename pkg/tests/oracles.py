"""Independent reference computations used by the tests.

None of these call into the code paths they check: roots come from Euclidean
realizations with the reflection formula, Bruhat order from subword
enumeration, positivity from the defining inequalities.
"""
from fractions import Fraction as Q
from itertools import product

from toric_schubert.root_system import cartan_matrix
from toric_schubert.weyl_group import element_from_word

half = Q(1, 2)


def _e(n, *pairs):
    v = [Q(0)] * n
    for k, c in pairs:
        v[k - 1] += c
    return tuple(v)


def euclidean_simple_roots(tag, n):
    """Bourbaki simple roots as vectors in R^m."""
    if tag == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if tag == "B":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [_e(n, (n, 1))]
    if tag == "C":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [_e(n, (n, 2))]
    if tag == "D":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [_e(n, (n - 1, 1), (n, 1))]
    if tag == "G":
        return [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
    if tag == "F":
        return [_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 1)),
                _e(4, (1, half), (2, -half), (3, -half), (4, -half))]
    if tag == "E":
        roots = [
            _e(8, (1, half), (8, half), *[(k, -half) for k in range(2, 8)]),
            _e(8, (1, 1), (2, 1)),
            _e(8, (1, -1), (2, 1)),
        ] + [_e(8, (k, -1), (k + 1, 1)) for k in range(2, 7)]
        return roots[:n]
    raise ValueError(tag)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def reflect(lam, alpha):
    """s_alpha(lam) = lam - 2(lam, alpha)/(alpha, alpha) alpha."""
    c = 2 * dot(lam, alpha) / dot(alpha, alpha)
    return tuple(x - c * y for x, y in zip(lam, alpha))


def euclidean_cartan(tag, n):
    roots = euclidean_simple_roots(tag, n)
    return [[int(2 * dot(a, b) / dot(a, a)) for b in roots] for a in roots]


def euclidean_positive_roots(tag, n):
    """Positive roots in simple-root coordinates, by orbit closure in R^m."""
    simple = euclidean_simple_roots(tag, n)
    orbit = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for a in simple:
                img = reflect(r, a)
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    # coordinates in the simple-root basis by exact least squares (simple roots are independent)
    from toric_schubert.exact import solve_independent

    coords = [tuple(int(c) for c in solve_independent(simple, r)) for r in orbit]
    return sorted(c for c in coords if all(x >= 0 for x in c))


def subword_set(rs, word):
    """All products of subwords of ``word``."""
    return {
        element_from_word(rs, [i for i, keep in zip(word, mask) if keep])
        for mask in product((0, 1), repeat=len(word))
    }


def bruhat_by_subwords(rs, v, w):
    return v in subword_set(rs, w.canonical_word)


def inversions(rs, w, roots):
    count = 0
    for root in roots:
        img = [sum(a * b for a, b in zip(row, root)) for row in w.matrix]
        count += any(c < 0 for c in img)
    return count


def positive_by_definition(rs, word, steps):
    """Direct check of: each step could ascend, and the taken steps end the right way."""
    v = element_from_word(rs, [])
    for i, take in zip(word, steps):
        up = v.times_simple(i)
        if not up.length > v.length:
            return False
        v = up if take else v
    return True
