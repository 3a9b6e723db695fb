"""The pure and compiled kernels must agree everywhere.

Structured differential tests over generated lattices plus
hypothesis-driven random masks.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biloc import _kernel_py as pure
from biloc.suite import generators as G

fast = pytest.importorskip("biloc._speedups")

LATTICES = G.generate_lattices(3)


def tables(lat):
    return lat.n, list(lat.meet), list(lat.join), list(lat.down)


@pytest.mark.parametrize("lat", LATTICES, ids=lambda l: l.name)
def test_structured_agreement(lat):
    n, meet, join, down = tables(lat)
    hey = list(lat.hey)
    assert fast.distributivity_witness(n, meet, join) == \
        pure.distributivity_witness(n, meet, join)
    assert fast.heyting_table(n, meet, join, down) == \
        pure.heyting_table(n, meet, join, down)
    req = (1 << lat.bottom) | (1 << lat.top)
    masks = pure.closed_subsets(n, meet, join, req)
    assert fast.closed_subsets(n, meet, join, req) == masks
    assert fast.brute_sublocales(n, meet, hey, lat.top) == \
        pure.brute_sublocales(n, meet, hey, lat.top)
    seeds = sorted(set([1 << lat.top] + list(lat.b_masks)))
    assert fast.generated_sublocales(n, meet, seeds) == \
        pure.generated_sublocales(n, meet, seeds)
    ji = lat.join_irreducible_mask
    assert fast.generation_pairs(n, meet, join, down, masks, ji) == \
        pure.generation_pairs(n, meet, join, down, masks, ji)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_mask_level_agreement(data):
    lat = data.draw(st.sampled_from(LATTICES))
    n, meet, join, down = tables(lat)
    mask = data.draw(st.integers(min_value=1, max_value=lat.full_mask))
    other = data.draw(st.integers(min_value=1, max_value=lat.full_mask))
    assert fast.meet_closure(n, meet, mask) == pure.meet_closure(n, meet, mask)
    assert fast.meets_mask(n, meet, mask, other) == \
        pure.meets_mask(n, meet, mask, other)
    assert fast.generation_witness(n, meet, join, down, mask, other) == \
        pure.generation_witness(n, meet, join, down, mask, other)
    assert fast.bit_indices(mask) == pure.bit_indices(mask)


def test_kernel_dispatch_large_lattices_use_pure():
    from biloc import kernel
    # a 40-element chain exceeds the machine-word routing threshold
    n = 40
    meet = [min(a, b) for a in range(n) for b in range(n)]
    assert kernel.meet_closure(n, meet, (1 << 39) | 1) == (1 << 39) | 1


def test_backend_reported():
    import biloc
    assert biloc.BACKEND in ("pure", "compiled")
