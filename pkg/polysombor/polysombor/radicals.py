"""
Exact arithmetic over finite sums c_1*sqrt(s_1) + ... + c_k*sqrt(s_k) with
rational coefficients and squarefree positive integer radicands.

Square roots of distinct squarefree integers are linearly independent over the
rationals, so two sums are equal exactly when their canonical term tuples are
equal. Ordering is only ever decided numerically (see ``cmp_numeric``).
"""
import functools
import math
from fractions import Fraction

from django.conf import settings

LESS = 'less'
EQUAL = 'equal'
GREATER = 'greater'
INCONCLUSIVE = 'inconclusive'

DEFAULT_MARGIN = 1e-9


class InvalidRadicand(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def squarefree_split(n):
    """
    Return (c, s) with c * c * s == n and s squarefree, by trial division.
    """
    if n < 1:
        raise InvalidRadicand("Radicand must be a positive integer, got {}".format(n))
    outside = inside = 1
    remaining = n
    p = 2
    while p * p <= remaining:
        exponent = 0
        while remaining % p == 0:
            remaining //= p
            exponent += 1
        outside *= p ** (exponent // 2)
        if exponent % 2:
            inside *= p
        p += 1 if p == 2 else 2
    return outside, inside * remaining


def is_squarefree(n):
    return squarefree_split(n)[0] == 1


class RadicalSum(object):
    """
    Immutable canonical sum. ``terms`` is a tuple of (radicand, Fraction)
    pairs sorted by radicand with no zero coefficients; radicand 1 holds the
    rational part.
    """
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        canonical = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for radicand, coefficient in items:
            if not isinstance(radicand, int) or radicand < 1 or not is_squarefree(radicand):
                raise InvalidRadicand("Radicand {} is not a squarefree positive integer".format(radicand))
            coefficient = Fraction(coefficient) + canonical.get(radicand, 0)
            canonical[radicand] = coefficient
        object.__setattr__(self, 'terms', tuple(sorted((r, c) for r, c in canonical.items() if c)))

    def __setattr__(self, name, value):
        raise AttributeError("RadicalSum is immutable")

    def __add__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return subtract(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, r):
        if not isinstance(r, (int, Fraction)):
            return NotImplemented
        return scale(self, r)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return eq_exact(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __float__(self):
        return eval_float(self)

    def __repr__(self):
        return "RadicalSum({!r})".format(dict(self.terms))

    def __str__(self):
        return format_radical(self)

    def coefficient(self, radicand):
        return dict(self.terms).get(radicand, Fraction(0))


ZERO = RadicalSum()


def from_terms(pairs):
    """Canonicalize (radicand, coefficient) pairs whose radicands need not be squarefree."""
    total = {}
    for radicand, coefficient in pairs:
        outside, inside = squarefree_split(radicand)
        total[inside] = total.get(inside, 0) + Fraction(coefficient) * outside
    return RadicalSum(total)


@functools.lru_cache(maxsize=None)
def radical_of(n):
    outside, inside = squarefree_split(n)
    return RadicalSum({inside: outside})


def add(a, b):
    total = dict(a.terms)
    for radicand, coefficient in b.terms:
        total[radicand] = total.get(radicand, 0) + coefficient
    return RadicalSum(total)


def scale(a, r):
    r = Fraction(r)
    return RadicalSum({radicand: coefficient * r for radicand, coefficient in a.terms})


def negate(a):
    return scale(a, -1)


def subtract(a, b):
    return add(a, negate(b))


def eq_exact(a, b):
    return a.terms == b.terms


def eval_float(a):
    return math.fsum(float(coefficient) * math.sqrt(radicand) for radicand, coefficient in a.terms)


def default_margin(a, b):
    relative = getattr(settings, 'SOMBOR_COMPARISON_MARGIN', DEFAULT_MARGIN)
    return relative * max(1.0, abs(eval_float(a)), abs(eval_float(b)))


def cmp_numeric(a, b, margin=None):
    """
    Compare two sums: EQUAL when they are exactly equal, otherwise LESS or
    GREATER when the float difference clears ``margin``, else INCONCLUSIVE.
    """
    if eq_exact(a, b):
        return EQUAL
    if margin is None:
        margin = default_margin(a, b)
    if margin < 0:
        raise ValueError("Margin must be nonnegative, got {}".format(margin))
    difference = eval_float(subtract(a, b))
    if difference > margin:
        return GREATER
    if difference < -margin:
        return LESS
    return INCONCLUSIVE


def _format_coefficient(magnitude, radicand):
    if radicand == 1:
        return str(magnitude)
    if magnitude == 1:
        coefficient = ""
    elif magnitude.denominator == 1:
        coefficient = str(magnitude.numerator)
    else:
        coefficient = "({})".format(magnitude)
    return u"{}√{}".format(coefficient, radicand)


def format_radical(a):
    """Human form, e.g. ``40√2 + 56√5`` or ``(3/2)√2``."""
    if not a.terms:
        return "0"
    parts = []
    for index, (radicand, coefficient) in enumerate(a.terms):
        text = _format_coefficient(abs(coefficient), radicand)
        if index == 0:
            parts.append(text if coefficient > 0 else "-" + text)
        else:
            parts.append(("+ " if coefficient > 0 else "- ") + text)
    return " ".join(parts)
