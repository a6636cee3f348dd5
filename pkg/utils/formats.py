"""Text formats for profiles, matchings, DIMACS CNF formulas and edge lists"""
from pathlib import Path
import re

import networkx as nx

from models.formula import CnfFormula
from models.matching import Matching
from models.profile import Profile
from utils.errors import MatchingError, ProfileError, ProfileFormatError

BIPARTITE_HEADER = re.compile(r'^bipartite\s*:\s*U\s*=\s*(?P<left>[^;]*);\s*W\s*=\s*(?P<right>.*)$')
AGENT_LINE = re.compile(r'^(?P<name>[^\s:#]+)\s*:(?P<rest>.*)$')


def _content_lines(text):
    """Yield (line number, stripped line) skipping blanks and '#' comments"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield number, line


def _split_names(block):
    return [name.strip() for name in block.split(',') if name.strip()]


# Profiles

def parse_profile(text):
    """Parse profile text; list order is descending preference"""
    lists = {}
    bipartition = None
    for number, line in _content_lines(text):
        header = BIPARTITE_HEADER.match(line)
        if header:
            if bipartition is not None or lists:
                raise ProfileFormatError('bipartite header must come first and only once', number)
            bipartition = (_split_names(header.group('left')), _split_names(header.group('right')))
            continue
        match = AGENT_LINE.match(line)
        if not match:
            raise ProfileFormatError(f'expected "name: n1 n2 ...", got {line!r}', number)
        name = match.group('name')
        if name in lists:
            raise ProfileFormatError(f'duplicate agent name {name}', number)
        lists[name] = match.group('rest').split()

    if not lists:
        raise ProfileFormatError('profile has no agents')
    return Profile.from_lists(lists, bipartition)


def serialize_profile(profile):
    lines = []
    if profile.bipartition is not None:
        left, right = profile.bipartition
        left_names = ','.join(profile.name(a) for a in sorted(left))
        right_names = ','.join(profile.name(a) for a in sorted(right))
        lines.append(f'bipartite: U = {left_names} ; W = {right_names}')
    for agent in profile.agents:
        entries = ' '.join(profile.name(other) for other in profile.prefs[agent])
        lines.append(f'{profile.name(agent)}: {entries}')
    return '\n'.join(lines) + '\n'


# Matchings

def parse_matching(profile, text):
    """Parse "name1 name2" lines into a matching of the profile"""
    pairs = []
    seen = {}
    for number, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ProfileFormatError(f'expected two agent names, got {line!r}', number)
        try:
            pair = (profile.agent_id(parts[0]), profile.agent_id(parts[1]))
            Matching([pair]).validate_for(profile)
            for agent in pair:
                if agent in seen:
                    raise MatchingError(
                        f'agent {profile.name(agent)} already matched on line {seen[agent]}'
                    )
                seen[agent] = number
        except (ProfileError, MatchingError) as exc:
            raise ProfileFormatError(str(exc), number) from None
        pairs.append(pair)
    return Matching(pairs)


def serialize_matching(profile, matching):
    lines = [f'{profile.name(a)} {profile.name(b)}' for a, b in matching.canonical()]
    return '\n'.join(lines) + ('\n' if lines else '')


# DIMACS CNF

def parse_dimacs(text):
    """Parse "p cnf <vars> <clauses>" followed by 0-terminated clause lines"""
    num_vars = None
    expected = None
    clauses = []
    current = []
    for number, line in _content_lines(text):
        if line.startswith('c'):
            continue
        if line.startswith('p'):
            parts = line.split()
            if len(parts) != 4 or parts[1] != 'cnf':
                raise ProfileFormatError(f'bad problem line {line!r}', number)
            try:
                num_vars, expected = int(parts[2]), int(parts[3])
            except ValueError:
                raise ProfileFormatError(f'bad problem line {line!r}', number) from None
            continue
        if num_vars is None:
            raise ProfileFormatError('clause before problem line', number)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ProfileFormatError(f'bad literal {token!r}', number) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise ProfileFormatError(f'literal {lit} exceeds {num_vars} variables', number)
            else:
                current.append(lit)
    if num_vars is None:
        raise ProfileFormatError('missing problem line')
    if current:
        clauses.append(tuple(current))
    if expected is not None and len(clauses) != expected:
        raise ProfileFormatError(f'problem line announces {expected} clauses, found {len(clauses)}')
    return CnfFormula(num_vars, tuple(clauses))


def serialize_dimacs(formula):
    lines = [f'p cnf {formula.num_vars} {len(formula.clauses)}']
    lines.extend(' '.join(str(lit) for lit in clause) + ' 0' for clause in formula.clauses)
    return '\n'.join(lines) + '\n'


# Edge-list graphs

def parse_graph(text):
    """Parse an "n m" header then "u v" lines; vertices are 1..n"""
    lines = list(_content_lines(text))
    if not lines:
        raise ProfileFormatError('empty graph file')
    number, header = lines[0]
    try:
        n, m = (int(token) for token in header.split())
    except ValueError:
        raise ProfileFormatError(f'bad graph header {header!r}', number) from None
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    for number, line in lines[1:]:
        try:
            u, v = (int(token) for token in line.split())
        except ValueError:
            raise ProfileFormatError(f'bad edge line {line!r}', number) from None
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ProfileFormatError(f'bad edge {u} {v}', number)
        graph.add_edge(u, v)
    if graph.number_of_edges() != m:
        raise ProfileFormatError(f'header announces {m} edges, found {graph.number_of_edges()}')
    return graph


def serialize_graph(graph):
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    lines = [f'{graph.number_of_nodes()} {len(edges)}']
    lines.extend(f'{u} {v}' for u, v in edges)
    return '\n'.join(lines) + '\n'


# Files

def read_text(path):
    return Path(path).read_text(encoding='utf-8')


def write_text(path, text):
    Path(path).write_text(text, encoding='utf-8')


def load_profile(path):
    return parse_profile(read_text(path))


def load_matching(profile, path):
    return parse_matching(profile, read_text(path))


def format_agents(profile, agents):
    """"(x,y,z)" for a pair or cycle of agent ids"""
    return '(' + ','.join(profile.name(agent) for agent in agents) + ')'
