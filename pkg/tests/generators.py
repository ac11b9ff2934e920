"""Random Avm corpora shared by the property tests and the acceptance suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from eventcalc.avm import Avm, indices, rename
from eventcalc.sorts import SORTS

PROPER_SORTS = [s for s in SORTS if s != "bottom"]
INDEX_POOL = [None, None, "a", "b", "c", "d"]
FEATURE_POOL = ["pred", "agent", "patient", "goal", "path", "number"]
ATOM_POOL = ["jack", "water", "bucket", "pour"]


def random_avm(rng: random.Random, depth: int = 3) -> Avm:
    feats = {}
    if depth > 0:
        for name in rng.sample(FEATURE_POOL, rng.randint(0, 3)):
            roll = rng.random()
            if roll < 0.4:
                feats[name] = random_avm(rng, depth - 1)
            elif roll < 0.8:
                feats[name] = rng.choice(ATOM_POOL)
            else:
                feats[name] = Fraction(rng.randint(0, 3), rng.randint(1, 2))
    return Avm(rng.choice(PROPER_SORTS), feats, index=rng.choice(INDEX_POOL))


def _node(sort, index, feats):
    return Avm(sort, feats, index=index)


_leaf_values = st.one_of(
    st.sampled_from(ATOM_POOL),
    st.fractions(min_value=0, max_value=4, max_denominator=3),
)
_leaf_avms = st.builds(_node, st.sampled_from(PROPER_SORTS), st.sampled_from(INDEX_POOL), st.just({}))

avms = st.recursive(
    _leaf_avms,
    lambda inner: st.builds(
        _node,
        st.sampled_from(PROPER_SORTS),
        st.sampled_from(INDEX_POOL),
        st.dictionaries(st.sampled_from(FEATURE_POOL), st.one_of(inner, _leaf_values), max_size=3),
    ),
    max_leaves=6,
)


def apart(a: Avm, tag: int) -> Avm:
    """Rename ``a``'s indices with a per-argument suffix so that no name is
    shared between arguments (co-reference inside ``a`` is kept)."""
    return rename(a, {i: f"{i}{tag}" for i in indices(a)})
