"""Exact LCED decisions for linear codes over finite fields.

Thin wrapper over the compiled ``_lced`` extension: structured results cross
the boundary as JSON strings and are decoded here into plain dicts.  Matrices
use the same text format as the command line tool (field literal, then
``k n``, then k rows).
"""

import json

try:
    from . import _lced
except ImportError:  # build-tree layout: extension lives next to the package
    import _lced

LcedError = _lced.LcedError

__version__ = _lced.__version__

__all__ = [
    "LcedError",
    "decide",
    "gram_det",
    "sweep",
    "verify_pi_k",
    "identities",
    "cyclic",
    "all_lced_certificate",
    "dual_generator",
    "min_distance",
    "roundtrip",
]


def decide(matrix_text, order="identity-first", limit=0, seed=0, pure=False):
    """Decide one generator matrix. ``limit=0`` means unlimited search."""
    return json.loads(_lced.decide_json(matrix_text, order, limit, seed, pure))


def gram_det(matrix_text, cycles="id"):
    """det(G P G^T) as a string, for a permutation in cycle notation."""
    return _lced.gram_det(matrix_text, cycles)


def sweep(field, k, n, canonical=False, jobs=1, budget=100_000_000,
          order="identity-first", limit=0, seed=0):
    """Sweep every standard-form [n, k] matrix over the field."""
    return json.loads(
        _lced.sweep_json(field, k, n, canonical, jobs, budget, order, limit,
                         seed))


def verify_pi_k(field, k, symmetric=False, budget=100_000_000):
    """Scan k x k matrices whose permuted copies all have eigenvalue -1."""
    return json.loads(_lced.pik_json(field, k, symmetric, budget))


def identities(field, k, trials=100, seed=1):
    """Randomized permutation-sum identity checks; field ``"Z"`` for exact
    integer arithmetic."""
    return json.loads(_lced.identities_json(field, k, trials, seed))


def cyclic(field, poly, n, lam="1", order="identity-first", limit=0, seed=0):
    """Constacyclic pathway: coprimality test, reciprocal construction, and
    the full decision for the code generated by ``poly``."""
    return json.loads(_lced.cyclic_json(field, poly, n, lam, order, limit,
                                        seed))


def all_lced_certificate(p, m, k, n):
    """Field-wide certificate that every [n, k] code over GF(p^m) is LCED,
    or ``None`` when the criterion does not apply."""
    doc = _lced.certificate_json(p, m, k, n)
    return None if doc is None else json.loads(doc)


def dual_generator(matrix_text):
    """Generator matrix of the dual code, in the text format."""
    return _lced.dual_generator(matrix_text)


def min_distance(matrix_text):
    """Minimum Hamming distance by full codeword enumeration."""
    return _lced.min_distance(matrix_text)


def roundtrip(matrix_text):
    """Parse and re-format a matrix text (normalizes whitespace/comments)."""
    return _lced.roundtrip(matrix_text)
