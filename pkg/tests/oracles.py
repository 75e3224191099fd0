"""Reference computations that avoid the package entirely.

Everything here uses stdlib Fraction and plain loops, so a bug in the
convergent recurrence or the gmpy2 backend cannot hide in both places.
"""

from fractions import Fraction

# OEIS A001697, hard-coded
A001697_TERMS = (
    1,
    1,
    2,
    8,
    96,
    10368,
    108615168,
    11798392572168192,
    139202068568601556987554268864512,
)


def F(q):
    """Plain Fraction with int parts (Fraction(mpq) keeps mpz parts)."""
    if isinstance(q, int):
        return Fraction(q)
    return Fraction(int(q.numerator), int(q.denominator))


def cf_backward(terms, integer_part=0):
    """a1/(b1 + a2/(b2 + ...)) folded from the right."""
    acc = Fraction(0)
    for a, b in reversed(list(terms)):
        acc = F(a) / (F(b) + acc)
    return F(integer_part) + acc


def cf_backward_prefix(terms, m):
    return cf_backward(list(terms)[:m])


def alternating(xs, ys):
    return sum(
        ((-1) ** k * F(y) / F(x) for k, (x, y) in enumerate(zip(xs, ys))),
        Fraction(0),
    )


def plain(xs, ys):
    return sum((F(y) / F(x) for x, y in zip(xs, ys)), Fraction(0))


def hone_sequence(poly_terms, x1, N):
    """x_0..x_N for a stationary F given as [(dx, dy, c), ...]."""
    def F(x, y):
        return sum(c * x**dx * y**dy for dx, dy, c in poly_terms)

    xs = [1, x1]
    while len(xs) <= N:
        a, b = xs[-2], xs[-1]
        num = b * b * (F(a, b) + 1)
        assert num % a == 0
        xs.append(num // a)
    return xs


def s_sum(xs, h, m):
    return sum((Fraction(h ** (k - 1), int(xs[k])) for k in range(1, m + 1)), Fraction(0))


def t_sum(xs, h, m):
    return sum((Fraction((-h) ** (k - 1), int(xs[k])) for k in range(1, m + 1)), Fraction(0))


def regular_value(a0, quotients):
    acc = Fraction(0)
    for q in reversed(quotients):
        acc = 1 / (q + acc)
    return a0 + acc


def regular_expansion(q):
    """Partial quotients of a rational via Euclid, shortest form."""
    q = F(q)
    out = []
    num, den = q.numerator, q.denominator
    while den:
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return out[0], out[1:]


def sum_pair(xs, ys, signs=True):
    """(num, den) of sum (+/-) y_k/x_k over a common denominator, integers only."""
    den = 1
    for x in xs:
        den *= x
    num = 0
    for k, (x, y) in enumerate(zip(xs, ys)):
        term = y * (den // x)
        num += -term if signs and k % 2 else term
    return num, den


def equals_pair(q, pair):
    num, den = pair
    return int(q.numerator) * den == num * int(q.denominator)
