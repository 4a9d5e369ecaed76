"""Backend selection for the relation kernels.

The compiled module is used when it was built; otherwise, or when the
environment variable ``DESUBST_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementation is used. Both expose the same functions.
"""

import os

from desubst import _pykernels

if os.environ.get("DESUBST_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from desubst import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"

identity = _impl.identity
compose = _impl.compose
word_relation = _impl.word_relation
desub_relations = _impl.desub_relations
live_mask = _impl.live_mask
image_mask = _impl.image_mask
powerset_universal = _impl.powerset_universal
meta_closure = _impl.meta_closure

__all__ = [
    "BACKEND",
    "compose",
    "desub_relations",
    "identity",
    "image_mask",
    "live_mask",
    "meta_closure",
    "powerset_universal",
    "word_relation",
]
