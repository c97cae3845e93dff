"""Exact lattice invariants for nearly orthogonal lattices.

Lattices are plain dicts in the CLI's JSON layout: ``{"name": ..., "gram":
[["1", "1/2"], ...]}`` with rational entries as ``"p/q"`` strings.
"""

import json

from . import _nolat
from ._nolat import NolatError, cn_value, family_names

__all__ = [
    "NolatError",
    "analyze",
    "cn_test",
    "cn_value",
    "coherence",
    "construct",
    "density",
    "eutaxy",
    "family_names",
    "is_perfect",
    "minimal_vectors",
    "perturb_2d",
    "perturb_block",
    "perturb_general",
    "planar",
    "theta_orthogonal",
    "verify",
]


def _dump(lattice):
    return lattice if isinstance(lattice, str) else json.dumps(lattice)


def construct(family, n=None, m=None, r=None):
    return json.loads(_nolat.construct(family, n, m, r))


def analyze(lattice, cos_sq="1/4", search=True, max_subsets=200000, jobs=1):
    return json.loads(_nolat.analyze(_dump(lattice), str(cos_sq), search, max_subsets, jobs))


def minimal_vectors(lattice):
    return json.loads(_nolat.minimal_vectors(_dump(lattice)))


def coherence(lattice):
    return json.loads(_nolat.coherence(_dump(lattice)))


def theta_orthogonal(lattice, cos_sq="1/4"):
    return json.loads(_nolat.theta_orthogonal(_dump(lattice), str(cos_sq)))


def eutaxy(lattice):
    return json.loads(_nolat.eutaxy(_dump(lattice)))


def is_perfect(lattice):
    return _nolat.is_perfect(_dump(lattice))


def density(lattice):
    return json.loads(_nolat.density(_dump(lattice)))


def cn_test(c, n):
    return _nolat.cn_test(str(c), n)


def planar(epsilon, d):
    return json.loads(_nolat.planar(str(epsilon), d))


def perturb_2d(lattice, cos):
    return json.loads(_nolat.perturb_2d(_dump(lattice), str(cos)))


def perturb_block(lattice, block, cos):
    return json.loads(_nolat.perturb_block(_dump(lattice), block, str(cos)))


def perturb_general(lattice, mode, target, tol=1e-9):
    return json.loads(_nolat.perturb_general(_dump(lattice), mode, str(target), tol))


def verify(suite="all", max_n=8, jobs=1):
    return json.loads(_nolat.verify(suite, max_n, jobs))
