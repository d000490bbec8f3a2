"""Exact convex-order certificates for Hermite-Hadamard-type functionals.

Specs are JSON documents (or dicts) with exact rational strings::

    {"lhs": {"f_terms": [{"node": "1/2", "weight": "1"}], "F_terms": []},
     "rhs": {"f_terms": [], "F_terms": [{"node": "0", "coef": "-1"},
                                        {"node": "1", "coef": "1"}]}}
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "check",
    "canonical_spec",
    "crossing_profile",
    "hinge_sweep",
    "witness_violation",
    "corpus_ids",
    "corpus_spec",
    "regression_suite",
    "scan_csv",
    "classify_four_point",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def _q(value):
    return str(Fraction(value)) if not isinstance(value, str) else value


def check(spec):
    """Certificate for lhs(f) <= rhs(f) over all continuous convex f."""
    return json.loads(_core.compare(_text(spec)))


def canonical_spec(spec):
    return json.loads(_core.canonical_spec(_text(spec)))


def crossing_profile(spec):
    return json.loads(_core.crossing_profile(_text(spec)))


def hinge_sweep(spec):
    """(max violation, t) as Fractions."""
    v, t = _core.hinge_sweep(_text(spec))
    return Fraction(v), Fraction(t)


def witness_violation(spec, kind, t="0", sign=1):
    return Fraction(_core.witness_violation(_text(spec), kind, _q(t), sign))


def corpus_ids():
    return list(_core.corpus_ids())


def corpus_spec(corpus_id):
    return json.loads(_core.corpus_spec(corpus_id))


def regression_suite():
    return json.loads(_core.regression_suite())


def scan_csv(a, alpha, step, alpha_step=None):
    """CSV over the symmetric family; a and alpha are (from, to) pairs."""
    return _core.scan_csv(_q(a[0]), _q(a[1]), _q(alpha[0]), _q(alpha[1]), _q(step),
                          _q(alpha_step if alpha_step is not None else step))


def classify_four_point(a, alpha2, alpha3):
    return json.loads(_core.classify_four_point([_q(x) for x in a], _q(alpha2), _q(alpha3)))
