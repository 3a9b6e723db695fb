"""Kernel backend selection.

Prefers the compiled ``_speedups`` extension and falls back to the pure
``_kernel_py`` module.  The compiled kernels work on machine-word masks,
so calls for lattices with more than 31 elements (which can arise from
congruence-lattice constructions under a cap override) are routed to the
pure implementation regardless of the active backend.
"""

from __future__ import annotations

from . import _kernel_py as _pure

try:  # pragma: no cover - exercised indirectly, depends on build
    from . import _speedups as _fast
except ImportError:  # pragma: no cover
    _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

_WORD_LIMIT = 31


def _impl(n):
    if _fast is not None and n <= _WORD_LIMIT:
        return _fast
    return _pure


bit_indices = _pure.bit_indices


def distributivity_witness(n, meet, join):
    return _impl(n).distributivity_witness(n, meet, join)


def heyting_table(n, meet, join, down):
    return _impl(n).heyting_table(n, meet, join, down)


def meet_closure(n, meet, mask):
    return _impl(n).meet_closure(n, meet, mask)


def closed_subsets(n, meet, join, required):
    return _impl(n).closed_subsets(n, meet, join, required)


def brute_sublocales(n, meet, hey, top):
    return _impl(n).brute_sublocales(n, meet, hey, top)


def generated_sublocales(n, meet, seeds):
    return _impl(n).generated_sublocales(n, meet, seeds)


def meets_mask(n, meet, mask1, mask2):
    return _impl(n).meets_mask(n, meet, mask1, mask2)


def generation_witness(n, meet, join, down, mask1, mask2):
    return _impl(n).generation_witness(n, meet, join, down, mask1, mask2)


def generation_pairs(n, meet, join, down, masks, ji_mask):
    return _impl(n).generation_pairs(n, meet, join, down, masks, ji_mask)
