"""Naive reference implementations, deliberately independent of hurslope internals."""

from math import gcd


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def sigma(k, n):
    return sum(q**k for q in divisors(n))


def phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def hermite_triples(d):
    return [(a, d // a, c) for a in divisors(d) for c in range(a)]


def in_lattice(x, y, a, b, c):
    if y % b:
        return False
    return (x - (y // b) * c) % a == 0


def marked(d):
    """(a, b, c, x, y) with eta = (x, y) of order exactly d, orders found by stepping k = 1, 2, ..."""
    if d == 1:
        return []
    out = []
    for a, b, c in hermite_triples(d):
        for x in range(a):
            for y in range(b):
                order = next(k for k in range(1, d + 1) if in_lattice(k * x, k * y, a, b, c))
                if order == d:
                    out.append((a, b, c, x, y))
    return out


def span_index(*vectors):
    """Index in Z^2 of the lattice spanned by the vectors: gcd of the 2x2 minors."""
    g = 0
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            (x1, y1), (x2, y2) = vectors[i], vectors[j]
            g = gcd(g, x1 * y2 - y1 * x2)
    return g


def brute_b(d):
    count = 0
    for h in range(1, d // 2 + 1):
        first, second = hermite_triples(h), hermite_triples(d - h)
        for i, (a1, b1, c1) in enumerate(first):
            for a2, b2, c2 in (second[i:] if h == d - h else second):
                if span_index((a1, 0), (c1, b1), (a2, 0), (c2, b2)) == 1:
                    count += 1
    return count


def additive_sigma_sum(d):
    return sum(sigma(1, h) * sigma(1, d - h) for h in range(1, d))
