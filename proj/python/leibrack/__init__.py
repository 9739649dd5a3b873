"""Exact construction, verification, classification and integration of
two-step nilpotent Leibniz algebras.

Thin wrapper over the compiled extension: documents cross the boundary as
JSON text so exact coefficients never pass through floats; this layer only
converts to and from Python dicts.
"""

import json as _json

try:
    from . import _core
except ImportError:  # in-tree build: the extension sits on sys.path unpackaged
    import _core

Error = _core.Error
InternalError = _core.InternalError
InputError = _core.InputError
PreconditionError = _core.PreconditionError
DomainError = _core.DomainError

__all__ = [
    "build",
    "check",
    "classify",
    "isomorphic",
    "rack",
    "tangent",
    "Error",
    "InternalError",
    "InputError",
    "PreconditionError",
    "DomainError",
]


def _text(document):
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def build(family, a="0", k=1, n=1, matrix=None, field="Q", name=""):
    """Construct a family member and return its document as a dict.

    ``a`` uses the scalar grammar "N", "N/D", or "RE,IM" for a + bi;
    ``matrix`` is a nested list of such scalars (heisenberg family only).
    """
    m = "" if matrix is None else _json.dumps(matrix)
    return _json.loads(_core.build(family, a=a, k=k, n=n, matrix=m, field=field, name=name))


def check(document):
    """Verify the defining identities; returns verdicts and invariant dims."""
    return _json.loads(_core.check(_text(document)))


def classify(document):
    """Canonical block decomposition of a document."""
    return _json.loads(_core.classify(_text(document)))


def isomorphic(first, second):
    """Decide whether two documents present isomorphic algebras."""
    return _core.isomorphic(_text(first), _text(second))


def rack(document, symbolic=True, samples=0, seed=20250814):
    """Integrate a document into its pointed rack.

    Returns the affine model plus a symbolic axiom report and, when
    ``samples`` > 0, a sampled report driven by ``seed``.
    """
    return _json.loads(_core.rack(_text(document), symbolic=symbolic, samples=samples, seed=seed))


def tangent(document):
    """Rebuild the algebra document from the integrated rack of ``document``."""
    return _json.loads(_core.tangent(_text(document)))
