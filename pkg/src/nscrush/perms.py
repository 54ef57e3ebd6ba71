"""Permutations of {0,1,2,3}, stored as 4-tuples of images."""

import itertools

IDENTITY = (0, 1, 2, 3)

ALL_PERMS = tuple(itertools.permutations(range(4)))


def compose(p, q):
    """Return p after q, i.e. (p*q)(v) = p(q(v))."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0, 0, 0, 0]
    for v in range(4):
        inv[p[v]] = v
    return tuple(inv)


def sign(p):
    """+1 for even permutations, -1 for odd."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def transposition(a, b):
    im = [0, 1, 2, 3]
    im[a], im[b] = im[b], im[a]
    return tuple(im)


def is_perm(p):
    return len(p) == 4 and sorted(p) == [0, 1, 2, 3]
