"""Exact computations with the Hopf algebras E(n).

Matrices are lists of rows whose entries are ints, Fractions or strings
such as "3/4"; results come back as lists of Fractions.
"""

import json
from fractions import Fraction

from . import _core

ParseError = _core.ParseError


def _dump(m):
    return json.dumps([[str(x) for x in row] for row in m])


def _matrix(j):
    return [[Fraction(x) for x in row] for row in j["entries"]]


def _load(text):
    return json.loads(text)


def hopf(n, field="q"):
    return _load(_core.hopf(n, field))


def check_hopf_axioms(n, field="q"):
    return _core.check_hopf_axioms(n, field)


def check_qt(a, with_yang_baxter=True):
    return _core.check_qt(_dump(a), with_yang_baxter)


def is_triangular(a):
    return _core.is_triangular(_dump(a))


def orbit_label(a):
    j = _load(_core.orbit_label(_dump(a)))
    return {"l": j["l"], "T": _matrix(j["T"]), "sym_remainder": _matrix(j["sym_remainder"]), "verified": j["verified"]}


def twist(a, l):
    return _matrix(_load(_core.twist(_dump(a), _dump(l))))


def sym_op(r, m, l, n):
    return _matrix(_load(_core.sym_op(r, _dump(m), _dump(l), _dump(n))))


def chi(l):
    j = _load(_core.chi(_dump(l)))
    return {"alpha": Fraction(j["alpha"]), "L": _matrix(j["L"]), "strongly_inner": j["strongly_inner"]}


def chi_product(r, m, l, n):
    j = _load(_core.chi_product(r, _dump(m), _dump(l), _dump(n)))
    return {"expected": _matrix(j["expected"]), "observed": _matrix(j["observed"]),
            "alpha": Fraction(j["alpha"]), "ok": j["ok"]}


def aut_action(t, l):
    return _matrix(_load(_core.aut_action(_dump(t), _dump(l))))


def verify_all(n, seed=0, field="q"):
    return _load(_core.verify_all(n, seed, field))
