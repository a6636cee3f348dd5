import pytest
from hypothesis import given, settings

from models.matching import Criterion
from models.profile import Profile
from solvers.fpt import FptReport, HourglassSolver, solve_d3_fpt
from solvers.oracle import solve_brute
from solvers.stability import is_exchange_stable, is_perfect
from utils.errors import PreconditionError
from utils.generators import ladder_profile, make_rng, random_profile

from tests.strategies import profiles


def assert_agrees(profile, threads=1):
    expected = solve_brute(profile, Criterion.ES, perfect_required=True)
    found = solve_d3_fpt(profile, threads=threads)
    assert (expected is None) == (found is None)
    if found is not None:
        assert is_perfect(profile, found)
        assert is_exchange_stable(profile, found)


def test_example_two(example_two):
    report = FptReport()
    found = solve_d3_fpt(example_two, threads=1, report=report)
    assert found is not None
    assert is_exchange_stable(example_two, found)
    assert report.combinations >= 1
    assert report.to_dict()['hourglasses'] == report.hourglasses


def test_long_lists_rejected():
    names = ['p', 'q', 'r', 's', 't']
    prefs = [[1, 2, 3, 4], [0], [0], [0], [0]]
    with pytest.raises(PreconditionError):
        HourglassSolver(Profile(names, prefs))


def test_odd_path_has_no_solution():
    profile = Profile(['p', 'q', 'r'], [[1], [0, 2], [1]])
    assert solve_d3_fpt(profile, threads=1) is None


@pytest.mark.parametrize('height', [4, 5, 6])
@pytest.mark.parametrize('wrap', [None, 'crossed', 'straight'])
@pytest.mark.parametrize('seed', range(6))
def test_ladders(height, wrap, seed):
    profile, _ = ladder_profile(make_rng(seed), height, wrap)
    assert_agrees(profile)


@settings(max_examples=200, deadline=None)
@given(profiles(min_agents=4, max_agents=12, max_length=3))
def test_agrees_with_brute_force(profile):
    assert_agrees(profile)


@settings(max_examples=40, deadline=None)
@given(profiles(min_agents=6, max_agents=12, max_length=3, perfect_seed=True))
def test_threads_give_the_same_answer(profile):
    single = solve_d3_fpt(profile, threads=1)
    pooled = solve_d3_fpt(profile, threads=2)
    assert (single is None) == (pooled is None)
    if pooled is not None:
        assert is_exchange_stable(profile, pooled)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(5))
def test_large_sparse_instances(seed):
    profile = random_profile(make_rng(seed), 400, 3, bipartite=True, perfect_seed=True)
    report = FptReport()
    found = solve_d3_fpt(profile, threads=2, report=report)
    if found is not None:
        assert is_perfect(profile, found)
        assert is_exchange_stable(profile, found)
    assert report.elapsed > 0


def test_forest_profile_keeps_its_perfect_matching():
    # path p - q - r - s
    profile = Profile(['p', 'q', 'r', 's'], [[1], [0, 2], [1, 3], [2]])
    found = solve_d3_fpt(profile, threads=1)
    assert found.canonical() == ((0, 1), (2, 3))


def disjoint_union(parts):
    """Profile made of disjoint copies, agent names prefixed by part index"""
    names, prefs = [], []
    for k, part in enumerate(parts):
        offset = len(names)
        names.extend(f'g{k}_{name}' for name in part.names)
        prefs.extend([other + offset for other in entries] for entries in part.prefs)
    return Profile(names, prefs)


@pytest.mark.slow
def test_hundred_thousand_agents_with_six_hourglasses():
    ladders = [ladder_profile(make_rng(seed), 6)[0] for seed in range(6)]
    expected = all(solve_brute(ladder, Criterion.ES, perfect_required=True) is not None
                   for ladder in ladders)
    # path p - q - r - s
    path = Profile(['p', 'q', 'r', 's'], [[1], [0, 2], [1, 3], [2]])
    filler = (100_000 - sum(ladder.n for ladder in ladders)) // path.n
    profile = disjoint_union(ladders + [path] * filler)
    assert profile.n == 100_000
    assert profile.max_length == 3

    report = FptReport()
    found = solve_d3_fpt(profile, threads=2, report=report)
    assert report.hourglasses == 6
    assert (found is not None) == expected
    if found is not None:
        assert is_perfect(profile, found)
        assert is_exchange_stable(profile, found)
