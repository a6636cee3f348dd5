import pytest

from models.matching import Matching
from utils.formats import parse_profile

EXAMPLE_ONE = """\
# two exchange-stable matchings, M3 blocked
bipartite: U = x,y,z ; W = a,b,c
x: a b c
y: b a c
z: a c b
a: y x z
b: x y z
c: x y z
"""

EXAMPLE_TWO = """\
# one exchange-stable matching, no coalitional one
bipartite: U = x,y,z ; W = a,b,c
x: a b c
y: b c a
z: c a b
a: y z x
b: z x y
c: x y z
"""


def matching_of(profile, *pairs):
    """Matching from name pairs"""
    return Matching((profile.agent_id(a), profile.agent_id(b)) for a, b in pairs)


@pytest.fixture
def example_one():
    return parse_profile(EXAMPLE_ONE)


@pytest.fixture
def example_two():
    return parse_profile(EXAMPLE_TWO)


@pytest.fixture
def example_one_matchings(example_one):
    p = example_one
    return {
        'M1': matching_of(p, ('x', 'c'), ('y', 'b'), ('z', 'a')),
        'M2': matching_of(p, ('x', 'b'), ('y', 'c'), ('z', 'a')),
        'M3': matching_of(p, ('x', 'c'), ('y', 'a'), ('z', 'b')),
        'M4': matching_of(p, ('x', 'b'), ('y', 'a'), ('z', 'c')),
        'M5': matching_of(p, ('x', 'a'), ('y', 'b'), ('z', 'c')),
    }


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string"""
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
