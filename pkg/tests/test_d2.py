import pytest
from hypothesis import given, settings, strategies as st

from models.matching import Criterion
from solvers.d2 import solve_d2
from solvers.oracle import solve_brute
from solvers.stability import is_perfect, satisfies
from utils.errors import PreconditionError
from utils.formats import parse_profile

from tests.conftest import matching_of
from tests.strategies import profiles


def test_even_path_has_its_unique_perfect_matching():
    profile = parse_profile('p: q\nq: r p\nr: q s\ns: r\n')
    found = solve_d2(profile)
    assert found == matching_of(profile, ('p', 'q'), ('r', 's'))
    assert satisfies(profile, found, Criterion.CES)


def test_odd_cycle_has_no_perfect_matching():
    profile = parse_profile('p: q r\nq: r p\nr: p q\n')
    assert solve_d2(profile) is None


def test_four_cycle_picks_a_stable_orientation():
    # p,q and r,s rank each other first
    profile = parse_profile('p: q s\nq: p r\nr: s q\ns: r p\n')
    for criterion in Criterion:
        found = solve_d2(profile, criterion)
        assert found is not None
        assert is_perfect(profile, found)
        assert satisfies(profile, found, criterion)


def test_longer_lists_are_rejected(example_one):
    with pytest.raises(PreconditionError):
        solve_d2(example_one)


@settings(max_examples=300, deadline=None)
@given(profiles(max_agents=12, max_length=2), st.sampled_from(list(Criterion)))
def test_agrees_with_brute_force(profile, criterion):
    expected = solve_brute(profile, criterion, perfect_required=True)
    found = solve_d2(profile, criterion)
    assert (expected is None) == (found is None)
    if found is not None:
        assert is_perfect(profile, found)
        assert satisfies(profile, found, criterion)


def test_clockwise_four_cycle_is_blocked_both_ways():
    # each agent ranks its clockwise neighbour first
    profile = parse_profile('p: q s\nq: r p\nr: s q\ns: p r\n')
    assert solve_d2(profile) is None
    assert solve_brute(profile, Criterion.ES, perfect_required=True) is None
