"""Versioned parameter grids for the identity catalogue.

Grids are plain lists of dicts built deterministically; bump
``MANIFEST_VERSION`` whenever any grid changes.
"""
from __future__ import annotations

import itertools

MANIFEST_VERSION = "2"


def _product(**axes):
    keys = list(axes)
    return [dict(zip(keys, vals)) for vals in itertools.product(*axes.values())]


# Fox-Wright basics

DEFINITION = [
    {"upper": [(1.5, 0.5), (2.0, 1.0)], "lower": [(3.0, 1.5)], "z": 0.7},
    {"upper": [(1.5, 0.5), (2.0, 1.0)], "lower": [(3.0, 1.5)], "z": -2.0},
    {"upper": [(0.5, 1.0)], "lower": [(1.5, 2.0)], "z": 5.0},
    {"upper": [(2.0, 1.0), (1.0, 1.0)], "lower": [(3.0, 1.0)], "z": 0.5},
    {"upper": [], "lower": [(1.0, 0.5)], "z": -1.5},
]

RATIO = [
    {"upper": [(1.5, 0.5), (2.0, 1.0)], "lower": [(3.0, 1.5)], "z": 0.7},
    {"upper": [(2.0, 1.0), (1.0, 1.0)], "lower": [(3.0, 1.0)], "z": 0.5},
    {"upper": [(1.0, 2.0)], "lower": [(1.0, 1.0)], "z": 0.2},
    {"upper": [(0.5, 1.0)], "lower": [(1.5, 2.0)], "z": 3.0},
]

NORMALIZED = [
    {"sigma": 1.3, "upper": [(1.5, 0.5)], "lower": [(3.0, 1.5)], "z": -0.7},
    {"sigma": 0.5, "upper": [(1.0, 1.0)], "lower": [(2.0, 1.0)], "z": 0.6},
    {"sigma": 2.0, "upper": [(2.0, 2.0)], "lower": [(4.0, 2.0)], "z": 0.3},
]

BRIDGE = [
    {"a": [1.5, 2.0], "b": [3.2], "z": 0.6},
    {"a": [1.5, 2.0], "b": [3.2], "z": -0.9},
    {"a": [0.5], "b": [1.5], "z": -4.0},
    {"a": [1.0], "b": [1.0], "z": 0.7},
    {"a": [], "b": [2.5], "z": 3.0},
    {"a": [2.0, 3.0, 0.5], "b": [4.0, 1.5], "z": 0.8},
]

REPRESENTING_MEASURE = _product(A=[1.0, 2.0], alpha=[1.5], beta=[3.0, 4.5], z=[-1.2, 0.8])

FINITE_LAPLACE = _product(c=[0.5, 1.5, 3.0], s=[0.7, 2.0], T=[1.0, 3.0])

BINOMIAL = _product(lam=[0.3, 1.7, 4.0], t=[-0.6, 0.25, 0.8])

# binomial-weighted generating function: corollary and inequalities (p = q = 1)

THM1_COROLLARY = [
    {"A": 1.0, "alpha": 1.0, "beta": 3.0, "lam": 1.0, "z": 0.0, "t": 0.5},
    {"A": 1.0, "alpha": 1.5, "beta": 4.0, "lam": 0.7, "z": 0.3, "t": -0.4},
] + [
    {"A": A, "alpha": al, "beta": be, "lam": lam, "z": z, "t": t}
    for (A, al, be, lam), z, t in itertools.product(
        [(1.0, 1.0, 3.0, 1.0), (1.0, 1.5, 4.0, 0.7), (0.5, 1.0, 2.5, 1.5), (2.0, 2.0, 4.5, 0.4)],
        [-0.8, 0.6],
        [-0.5, 0.4],
    )
]

THM1_INEQUALITIES = [
    {"A": 1.0, "alpha": 2.0, "beta": 3.0, "lam": 1.0, "z": 0.5, "t": 0.3},
] + [
    {"A": A, "alpha": al, "beta": be, "lam": lam, "z": z, "t": t}
    for (A, al, be, lam), z, t in itertools.product(
        [(1.0, 2.0, 3.0, 1.0), (1.0, 1.5, 4.0, 0.7), (2.0, 2.0, 5.0, 1.5), (0.5, 1.0, 2.0, 0.5)],
        [0.25, 1.5],
        [0.2, 0.6],
    )
]

# proof-integral forms: tau = 0 and tau > 0

THM2 = [
    {"A": 1.0, "alpha": 1.0, "beta": 3.0, "lam": 0.5, "tau": 0.0, "t": 0.2},
    {"A": 1.0, "alpha": 1.5, "beta": 3.0, "lam": 0.7, "tau": 0.0, "t": 0.5},
    {"A": 2.0, "alpha": 2.0, "beta": 4.0, "lam": 0.3, "tau": 0.0, "t": 0.6},
    {"A": 0.5, "alpha": 1.0, "beta": 3.0, "lam": 0.5, "tau": 0.0, "t": 0.8},
]

THM3 = [
    {"A": 1.0, "alpha": 1.2, "beta": 3.5, "lam": 0.4, "tau": 0.5, "t": 0.3},
    {"A": 1.0, "alpha": 1.0, "beta": 3.0, "lam": 0.5, "tau": 1.0, "t": 0.4},
    {"A": 2.0, "alpha": 2.0, "beta": 4.5, "lam": 0.6, "tau": 0.5, "t": 0.5},
    {"A": 0.5, "alpha": 0.5, "beta": 2.5, "lam": 0.8, "tau": 1.0, "t": 0.7},
    {"A": 1.0, "alpha": 1.5, "beta": 3.0, "lam": 0.4, "tau": 1.0, "t": 0.2},
]

# exponential generating function in the upper parameter and its specializations

THM4 = [
    {"lam": 1.5, "A": 1.0, "upper": [(2.0, 0.5)], "lower": [(3.0, 1.5)], "z": 0.6, "t": 0.4},
    {"lam": 0.7, "A": 0.5, "upper": [(1.5, 1.0)], "lower": [(2.5, 1.5)], "z": -1.0, "t": -0.5},
    {"lam": 2.0, "A": 2.0, "upper": [(1.0, 1.0), (2.0, 0.5)], "lower": [(3.0, 1.0), (1.5, 2.0)], "z": 0.8, "t": 0.3},
    {"lam": 1.0, "A": 1.0, "upper": [], "lower": [(2.0, 1.0)], "z": -2.0, "t": 0.5},
    {"lam": 1.0, "A": 1.0, "upper": [(1.0, 1.0)], "lower": [(2.0, 1.0)], "z": 0.3, "t": 0.0},
]

EQ238 = _product(lam=[0.5, 1.0, 2.0], A=[0.5, 1.0, 2.0], z=[-0.5, 0.5], t=[-0.5, 0.25, 0.75])

EQ239 = _product(lam=[0.5, 1.5, 3.0], z=[-3.0, 0.5], t=[-0.5, 0.5])

EQ240 = [
    {"a": [1.5, 2.0], "b": [], "z": 0.3, "t": 0.4},
    {"a": [1.5, 2.0], "b": [3.0], "z": 0.3, "t": 0.4},
    {"a": [0.7], "b": [], "z": -1.5, "t": -0.3},
    {"a": [1.2, 0.5, 2.5], "b": [1.7, 3.5], "z": 0.9, "t": 0.2},
]

# Mathieu-type series

MATHIEU_DEFINITION = _product(mu=[1.5, 2.0, 3.0], alpha=[0.5, 1.0, 2.0], r=[0.5, 2.0])

MATHIEU_INTEGRAL = [
    {"mu": 2.0, "alpha": 1.0, "beta": 0.5, "r": 1.0},
    {"mu": 2.5, "alpha": 1.0, "beta": 1.0, "r": 1.5},
    {"mu": 3.0, "alpha": 2.0, "beta": 1.0, "r": 0.5},
    {"mu": 2.0, "alpha": 0.5, "beta": 0.25, "r": 2.0},
    {"mu": 3.0, "alpha": 0.5, "beta": 0.5, "r": 1.0},
    {"mu": 1.5, "alpha": 1.0, "beta": 0.0, "r": 0.7},
    {"mu": 4.0, "alpha": 1.5, "beta": 2.0, "r": 3.0},
]

MATHIEU_GF = _product(mu=[1.5, 2.0, 3.0], alpha=[0.5, 1.0, 2.0], r=[0.5, 1.0, 2.0], t=[0.25, 0.5, 0.75])

MATHIEU_COROLLARY = _product(mu=[1.5, 2.0, 3.0], alpha=[0.5, 1.0, 2.0], t=[-0.5, 0.25, 0.5])

ZETA_VALUES = [{"which": w} for w in ("zeta2", "zeta4", "hurwitz22", "hurwitz42")]
ZETA3_PRINTED = [{"which": "zeta3-printed"}]

# Hurwitz-Lerch family

LERCH_DEFINITION = [
    {"lambdas": [(1.5, 0.5), (1.0, 1.0)], "mus": [(2.0, 1.0)], "s": 2.0, "a": 0.7, "z": 0.8},
    {"lambdas": [(1.0, 1.0)], "mus": [], "s": 1.5, "a": 1.0, "z": -0.6},
    {"lambdas": [(2.0, 1.0), (1.0, 1.0)], "mus": [(3.0, 2.0)], "s": 0.5, "a": 2.5, "z": 3.0},
]

LERCH_INTEGRAL = [
    {"lambdas": [(1.5, 0.5), (1.0, 1.0)], "mus": [(2.0, 1.0)], "s": 2.0, "a": 0.7, "z": 0.8},
    {"lambdas": [(1.0, 1.0)], "mus": [], "s": 1.5, "a": 1.0, "z": -0.6},
    {"lambdas": [(2.0, 1.0), (1.0, 1.0)], "mus": [(3.0, 2.0)], "s": 2.5, "a": 2.5, "z": 1.5},
]

LERCH_SPECIALIZATIONS = [
    {"which": "riemann", "s": 3.0},
    {"which": "hurwitz", "s": 2.5, "a": 0.3},
    {"which": "polylog", "s": 2.0, "z": 0.5},
    {"which": "polylog", "s": 3.0, "z": -0.8},
    {"which": "lipschitz", "s": 2.0, "a": 0.7, "xi": 0.25},
    {"which": "lipschitz", "s": 3.0, "a": 0.4, "xi": 1.0 / 3.0},
    {"which": "lerch-zeta", "s": 2.5, "xi": 0.2},
]

LERCH_GF = [
    {"lam1": l1, "rho1": r1, "lambdas": lams, "mus": mus, "s": s, "a": a, "z": z, "t": t}
    for (l1, r1), (lams, mus), (s, a), (z, t) in itertools.product(
        [(1.0, 1.0), (1.5, 0.5)],
        [([(1.0, 1.0), (2.0, 0.5)], [(2.5, 1.0)]), ([(1.0, 1.0)], [(2.0, 1.0)])],
        [(2.0, 0.7)],
        [(0.4, -0.3), (-0.2, -0.6)],
    )
]

LERCH_COROLLARY = [
    {"lam1": 1.0, "rho1": 1.0, "s": 2.0, "a": 1.0, "z": 0.4, "t": -0.5},
] + [
    {"lam1": l1, "rho1": r1, "s": s, "a": a, "z": z, "t": t}
    for (l1, r1), (s, a), z, t in itertools.product(
        [(1.0, 1.0), (1.5, 0.5)],
        [(2.0, 0.7), (1.5, 1.0)],
        [0.3, -0.25],
        [-0.25, -0.6],
    )
]

LIPSCHITZ_GF = [
    {"lam1": l1, "rho1": r1, "s": s, "a": a, "xi": xi, "t": t, "r": 0.8 * (1 + t) ** r1}
    for (l1, r1), (s, a), xi, t in [
        ((1.0, 1.0), (2.0, 0.8), 0.25, -0.3),
        ((1.0, 1.0), (2.5, 0.5), 1.0 / 3.0, -0.5),
        ((1.5, 0.5), (2.0, 1.0), 0.1, -0.2),
        ((1.5, 0.5), (3.0, 0.3), 0.75, -0.7),
    ]
]

DOUBLE_SERIES = [
    {"mode": "raw", "z": z, "s": s, "a": a, "t": t}
    for z, (s, a), t in itertools.product([0.3, -0.4], [(2.0, 0.7), (1.5, 1.0)], [-0.25, -0.5])
    if abs(z) * (1 + abs(t)) / (1 - abs(t)) < 1
] + [
    {"mode": "collapsed", "z": 0.97, "s": 2.0, "a": 0.5, "t": -0.5},
    {"mode": "collapsed", "z": -0.98, "s": 1.5, "a": 1.0, "t": -0.8},
]

LIPSCHITZ_DOUBLE_SERIES = [
    {"xi": xi, "s": s, "a": a, "t": t}
    for xi, (s, a), t in [
        (0.25, (2.0, 0.7), -0.5),
        (1.0 / 3.0, (3.0, 1.0), -0.25),
        (0.2, (1.5, 0.4), -0.8),
    ]
]

POLYLOG_T = [-0.3, -0.25, -0.1]
POLYLOG_LOG = _product(z=[0.2, 0.5], t=POLYLOG_T)
POLYLOG_ROW = _product(t=POLYLOG_T)
