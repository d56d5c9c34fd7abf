"""Random pencil families with planted structure, checked by exact arithmetic."""

from conicpencil import LinearForm3, Point3

from oracles import exact_cross, gauss, product, proportional_exact, rand_gauss, rand_line


def exact_coeffs(form):
    return [gauss(c) for c in form.coefficients]


def independent(p, q):
    return not proportional_exact([complex(*c) for c in exact_coeffs(p)],
                                  [complex(*c) for c in exact_coeffs(q)])


def shared_line_pencil(rng):
    """(l, p, q) with p = l*l1 and q = l*l2."""
    while True:
        l, l1, l2 = rand_line(rng), rand_line(rng), rand_line(rng)
        p, q = product(l, l1), product(l, l2)
        if independent(p, q):
            return l, p, q


def concurrent_pencil(rng):
    """(point, p, q) where the four factor lines are distinct and pass through point."""
    while True:
        pt = [rand_gauss(rng) for _ in range(3)]
        if not any(pt):
            continue
        lines = []
        while len(lines) < 4:
            c = exact_cross(pt, [rand_gauss(rng) for _ in range(3)])
            if any(c):
                lines.append(LinearForm3(*c))
        if any(proportional_exact(lines[i].coefficients, lines[j].coefficients)
               for i in range(4) for j in range(i + 1, 4)):
            continue
        p, q = product(lines[0], lines[1]), product(lines[2], lines[3])
        if independent(p, q):
            return Point3(*pt), p, q


def product_pencil(rng):
    """Two products of four unrelated random lines."""
    while True:
        p = product(rand_line(rng), rand_line(rng))
        q = product(rand_line(rng), rand_line(rng))
        if independent(p, q):
            return p, q


def squares_pencil(rng):
    while True:
        l1, l2 = rand_line(rng), rand_line(rng)
        p, q = product(l1, l1), product(l2, l2)
        if independent(p, q):
            return p, q
