import random

import pytest
from hypothesis import settings, strategies as st

from g2roll.algebra import Quaternion, SplitOctonion
from g2roll.scalars import GaussRational, Rat

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")

rationals = st.builds(Rat, st.integers(-8, 8), st.integers(1, 6))
gauss = st.builds(GaussRational, rationals, rationals)
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
octonions = st.builds(SplitOctonion, quaternions, quaternions)
imaginaries = st.tuples(*[rationals] * 7)
complex_imaginaries = st.tuples(*[gauss] * 7)
seeds = st.integers(min_value=0, max_value=2 ** 32)


@pytest.fixture
def rng():
    return random.Random(20240601)


# the running example of the lightcone
II = (1, 0, 0, 0, 1, 0, 0)        # (i, i)
JJ = (0, 1, 0, 0, 0, 1, 0)        # (j, j)
KK8 = (0, 0, Rat(1, 8), 0, 0, 0, Rat(1, 8))
J_MJ = (0, 1, 0, 0, 0, -1, 0)     # (j, -j)
K_MK = (0, 0, 1, 0, 0, 0, -1)     # (k, -k)
I_MI = (1, 0, 0, 0, -1, 0, 0)     # (i, -i)
