from fractions import Fraction
from decimal import Decimal, ROUND_HALF_UP
import time


def ratio(numerator, denominator):
    '''
    Exact ratio of two counts.  A zero denominator yields zero.

    Args:
        numerator (int): The part.
        denominator (int): The whole.

    Returns:
        Fraction: The exact ratio.
    '''
    if denominator == 0:
        return Fraction(0)
    return Fraction(numerator, denominator)


def render_ratio(value, places=4):
    '''
    Renders an exact rational to a fixed number of decimals, rounding half
    away from zero.

    Args:
        value (Fraction): The ratio to render.
        places (int, optional): Number of decimals.  Defaults to 4.

    Returns:
        str: The rendered value, e.g. ``'0.7500'``.

    Examples:
        >>> render_ratio(Fraction(1, 8), 2)
        '0.13'
    '''
    value = Fraction(value)
    quantum = Decimal(1).scaleb(-places)
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return str(exact.quantize(quantum, rounding=ROUND_HALF_UP))


def utc_timestamp():
    '''
    The current time as an ISO-8601 UTC timestamp with seconds precision.
    '''
    return time.strftime('%Y-%m-%dT%H:%M:%SZ', time.gmtime())


def fresh_id(taken, base):
    '''
    Returns ``base`` when it is not in ``taken``, otherwise the first of
    ``base-2``, ``base-3`` ... that is free.
    '''
    if base not in taken:
        return base
    counter = 2
    while '{}-{}'.format(base, counter) in taken:
        counter += 1
    return '{}-{}'.format(base, counter)
