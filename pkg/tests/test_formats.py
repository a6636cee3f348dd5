import pytest

from models.formula import CnfFormula
from utils.errors import ProfileFormatError
from utils.formats import (
    format_agents, parse_dimacs, parse_graph, parse_matching, serialize_dimacs, serialize_graph,
    serialize_matching,
)

from tests.conftest import matching_of


def test_matching_text_round_trip(example_one):
    m = matching_of(example_one, ('x', 'c'), ('y', 'b'))
    text = serialize_matching(example_one, m)
    assert text == 'x c\ny b\n'
    assert parse_matching(example_one, text) == m


def test_agents_missing_from_matching_file_are_unmatched(example_one):
    m = parse_matching(example_one, '# partial\nx a\n')
    assert m.partner(example_one.agent_id('y')) == example_one.agent_id('y')


@pytest.mark.parametrize('text', [
    'x a b\n',      # three names
    'x y\n',        # same side, not acceptable
    'x a\ny a\n',   # a matched twice
    'x nobody\n',   # unknown agent
])
def test_bad_matching_files(example_one, text):
    with pytest.raises(ProfileFormatError):
        parse_matching(example_one, text)


@pytest.mark.parametrize('text, line', [
    ('x a\n# comment\ny a\n', 3),   # a matched twice
    ('x c\ny x\n', 2),              # not acceptable
])
def test_bad_matching_reports_line(example_one, text, line):
    with pytest.raises(ProfileFormatError) as info:
        parse_matching(example_one, text)
    assert info.value.line == line
    assert str(info.value).startswith(f'line {line}:')


def test_repeated_agent_names_first_line(example_one):
    with pytest.raises(ProfileFormatError, match='already matched on line 1'):
        parse_matching(example_one, 'x a\ny a\n')


def test_dimacs_round_trip():
    text = 'c sample\np cnf 3 2\n1 -2 0\n2 3 -1 0\n'
    formula = parse_dimacs(text)
    assert formula == CnfFormula(3, ((1, -2), (2, 3, -1)))
    assert parse_dimacs(serialize_dimacs(formula)) == formula


def test_dimacs_clause_spanning_lines():
    formula = parse_dimacs('p cnf 2 1\n1\n-2 0\n')
    assert formula.clauses == ((1, -2),)


@pytest.mark.parametrize('text', [
    '1 2 0\n',                  # no problem line
    'p cnf 2 1\n1 3 0\n',       # variable out of range
    'p cnf 2 2\n1 2 0\n',       # clause count mismatch
    'p dnf 2 1\n1 0\n',         # wrong format tag
])
def test_bad_dimacs(text):
    with pytest.raises(ProfileFormatError):
        parse_dimacs(text)


def test_graph_round_trip():
    graph = parse_graph('3 2\n1 2\n2 3\n')
    assert sorted(graph.nodes) == [1, 2, 3]
    assert graph.has_edge(1, 2) and graph.has_edge(2, 3)
    again = parse_graph(serialize_graph(graph))
    assert sorted(map(sorted, again.edges)) == sorted(map(sorted, graph.edges))


def test_graph_keeps_isolated_vertices():
    graph = parse_graph('4 1\n1 2\n')
    assert graph.number_of_nodes() == 4


@pytest.mark.parametrize('text', ['', '2 1\n1 1\n', '2 1\n1 3\n', '2 2\n1 2\n'])
def test_bad_graph(text):
    with pytest.raises(ProfileFormatError):
        parse_graph(text)


def test_format_agents(example_one):
    ids = [example_one.agent_id(name) for name in 'yz']
    assert format_agents(example_one, ids) == '(y,z)'
