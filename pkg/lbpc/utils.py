import numpy as np
import sys
import json
import logging
import itertools
from functools import cached_property
from dataclasses import dataclass, replace
from pathlib import Path

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import *

log = logging.getLogger('lbpc')

Rat = QQ.dtype

ZERO = QQ(0)
ONE = QQ(1)

def rat(value):
    """Coerce an int, a QQ element, a fractions.Fraction or a "p/q" string to QQ."""
    if isinstance(value, Rat):
        return value
    if isinstance(value, bool):
        raise TypeError(f'not a rational: {value!r}')
    if isinstance(value, (int, np.integer)):
        return QQ(int(value))
    if isinstance(value, str):
        text = value.strip()
        if '/' in text:
            p, q = text.split('/', 1)
            p, q = int(p), int(q)
            if q == 0:
                raise ZeroDivisionError(f'zero denominator in {value!r}')
            return QQ(p, q)
        return QQ(int(text))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f'not a rational: {value!r}')

def rat_to_json(x):
    """Serialize a rational as a bare int when integral, else as a "p/q" string."""
    x = rat(x)
    p, q = int(x.numerator), int(x.denominator)
    if q == 1:
        return p
    return f'{p}/{q}'

def vec(values):
    return tuple(rat(v) for v in values)

def zero_vec(n):
    return tuple(ZERO for _ in range(n))

def unit_vec(n, i):
    return tuple(ONE if k == i else ZERO for k in range(n))

def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(s, v):
    return tuple(s * a for a in v)

def vec_dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)

def is_zero_vec(v):
    return all(a == 0 for a in v)

def sparse_items(v):
    return [(i, a) for i, a in enumerate(v) if a != 0]
