import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fourqubit.gaussian import ZERO, GaussianRational
from fourqubit.states import PureState4

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=1000,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
scalars = st.builds(GaussianRational, small_rationals, small_rationals)
nonzero_scalars = scalars.filter(lambda z: not z.is_zero())

states4 = st.lists(scalars, min_size=16, max_size=16).filter(
    lambda xs: any(not x.is_zero() for x in xs)).map(PureState4)

sparse_states4 = st.lists(st.one_of(st.just(ZERO), st.just(ZERO), scalars),
                          min_size=16, max_size=16).filter(
    lambda xs: any(not x.is_zero() for x in xs)).map(PureState4)

seeds = st.integers(1, 2 ** 32)
