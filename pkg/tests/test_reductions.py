from itertools import product

import networkx as nx
import pytest

from models.formula import CnfFormula
from models.matching import Criterion, Matching
from reductions.cesm3 import GadgetMap, assignment_to_matching, decode_assignment, sat_to_cesm3
from reductions.completion import complete_profile
from reductions.pesm import independent_set_swaps, is_to_pesm
from reductions.switch_gadget import (
    BOUNDARY, BoundaryOrder, SwitchState, gadget_restriction, identify_state, standalone_switch,
    switch_pairs,
)
from reductions.two_two_sat import r3sat_to_223sat
from solvers.oracle import iter_es_matchings
from solvers.sat_oracle import solve_sat
from solvers.stability import envy_graph, is_ces, is_exchange_stable, is_perfect
from solvers.swaps import apply_swap, reach_es
from utils.errors import ReductionError
from utils.generators import iter_22_formulas, make_rng, random_22_formula

SAT_FORMULA = CnfFormula(2, ((1, 2), (1, 2), (-1, -2), (-1, -2)))
UNSAT_FORMULA = CnfFormula(2, ((1,), (1,), (-1, 2), (-1, 2), (-2,), (-2,)))


def by_names(source, target, matching):
    """Carry a matching between profiles sharing agent names"""
    return Matching(
        (target.agent_id(source.name(a)), target.agent_id(source.name(b))) for a, b in matching
    )


def names(profile, agents):
    return [profile.name(agent) for agent in agents]


# Normalization

def test_normalization_pads_single_occurrences():
    formula = CnfFormula(2, ((1, 2), (-1, -2), (1, -2)))
    normalized = r3sat_to_223sat(formula)
    assert normalized.is_22_valid()
    assert normalized.is_satisfiable() == formula.is_satisfiable()


def test_normalization_drops_pure_literals():
    # variable 2 only occurs positively
    formula = CnfFormula(2, ((1, 2), (-1, 2)))
    normalized = r3sat_to_223sat(formula)
    assert normalized.num_vars == 0
    assert normalized.clauses == ()


@pytest.mark.parametrize('clauses', [
    ((1, 2, 3, -1),),           # four distinct literals
    ((1,), (1,), (1,)),         # literal three times
    ((),),                      # empty clause
])
def test_normalization_rejects(clauses):
    with pytest.raises(ReductionError):
        r3sat_to_223sat(CnfFormula(3, clauses))


@pytest.mark.parametrize('clauses', [
    ((1, 2), (-1, 2), (1, -2), (-1, -2)),
    ((1,), (-1, 2), (-2, 3), (-3,)),
    ((1, 2, 3), (-1, -2), (-2, -3), (-1, -3), (1, 2, 3)),
])
def test_normalization_is_equisatisfiable(clauses):
    formula = CnfFormula(3, clauses)
    normalized = r3sat_to_223sat(formula)
    assert normalized.is_22_valid()
    assert normalized.is_satisfiable() == formula.is_satisfiable()


# Switch gadget

@pytest.mark.parametrize('order', list(BoundaryOrder))
def test_stable_gadget_matchings_take_one_of_three_states(order):
    profile, a_names, b_names = standalone_switch(order)
    assert profile.n == 18 and profile.max_length == 3
    boundary = {name: name for name in BOUNDARY}
    found = 0
    for matching in iter_es_matchings(profile, perfect_only=True):
        found += 1
        assert identify_state(profile, matching, a_names, b_names, boundary) is not None
    assert found > 0


@pytest.mark.parametrize('state, closing', [
    (SwitchState.N1, ('beta', 'gamma')),
    (SwitchState.N2, ('alpha', 'delta')),
    (SwitchState.ND, None),
])
def test_switch_states_are_perfect_matchings(state, closing):
    profile, a_names, b_names = standalone_switch()
    boundary = {name: name for name in BOUNDARY}
    pairs = switch_pairs(a_names, b_names, boundary, state)
    if closing:
        pairs.append(closing)
    matching = Matching((profile.agent_id(a), profile.agent_id(b)) for a, b in pairs)
    matching.validate_for(profile)
    assert is_perfect(profile, matching)
    assert identify_state(profile, matching, a_names, b_names, boundary) is state
    assert len(gadget_restriction(profile, matching, a_names, b_names)) == len(pairs) - bool(closing)


@pytest.mark.parametrize('order', list(BoundaryOrder))
@pytest.mark.parametrize('state, closing, a_exits, b_exits', [
    (SwitchState.N1, ('beta', 'gamma'), {'alpha'}, {'delta'}),
    (SwitchState.N2, ('alpha', 'delta'), {'gamma'}, {'beta'}),
    (SwitchState.ND, None, {'alpha', 'gamma'}, {'beta', 'delta'}),
])
def test_envy_cycles_through_gadget_use_boundary_agents(order, state, closing, a_exits, b_exits):
    profile, a_names, b_names = standalone_switch(order)
    boundary = {name: name for name in BOUNDARY}
    pairs = switch_pairs(a_names, b_names, boundary, state)
    if closing:
        pairs.append(closing)
    matching = Matching((profile.agent_id(a), profile.agent_id(b)) for a, b in pairs)
    assert is_perfect(profile, matching)
    for cycle in nx.simple_cycles(envy_graph(profile, matching)):
        members = set(names(profile, cycle))
        if members & set(a_names):
            assert members & a_exits
        if members & set(b_names):
            assert members & b_exits


# Satisfiability to 3-CESM

def test_instance_shape():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    occurrences = sum(len(clause) for clause in SAT_FORMULA.clauses)
    assert profile.n == 6 * 2 + 2 * 4 + 2 * occurrences + 14 * occurrences
    assert profile.is_bipartite
    assert profile.max_length == 3
    a3 = profile.agent_id(gm.a(3, 1, 1))
    assert names(profile, profile.prefs[a3]) == [gm.b(2, 1, 1), gm.b(3, 1, 1), gm.b(4, 1, 1)]
    assert names(profile, profile.prefs[profile.agent_id('w1')]) == ['x1', 'nx1']


def test_boundary_wiring():
    gm = GadgetMap(SAT_FORMULA)
    # literal 1 sits in clauses 1 and 2
    first = gm.boundary(1, 1)
    second = gm.boundary(1, 2)
    assert first['alpha'] == 'x1'
    assert first['delta'] == gm.b(0, 1, 2)
    assert second['alpha'] == gm.a(6, 1, 1)
    assert second['delta'] == 'y1'
    assert first['beta'] == 'e_i1_c1' and first['gamma'] == 'f_i1_c1'


def test_invalid_formula_rejected():
    with pytest.raises(ReductionError):
        sat_to_cesm3(CnfFormula(2, ((1, 2),)))


def test_satisfying_assignments_give_ces_matchings():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    for sigma in SAT_FORMULA.assignments():
        if not SAT_FORMULA.evaluate(sigma):
            continue
        true_literals = [
            [lit for lit in clause if sigma[abs(lit)] == (lit > 0)] for clause in SAT_FORMULA.clauses
        ]
        for picks in product(*true_literals):
            choice = dict(enumerate(picks, start=1))
            matching = assignment_to_matching(profile, gm, sigma, choice)
            assert is_perfect(profile, matching)
            assert is_ces(profile, matching)
            assert decode_assignment(profile, gm, matching) == sigma
            for lit, j in gm.occurrences():
                a_names, b_names = gm.switch(abs(lit), j)
                state = identify_state(profile, matching, a_names, b_names, gm.boundary(lit, j))
                if choice[j] == lit:
                    assert state is SwitchState.N1
                elif sigma[abs(lit)] == (lit > 0):
                    assert state is SwitchState.ND
                else:
                    assert state is SwitchState.N2


def test_assignment_errors():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    with pytest.raises(ReductionError):
        assignment_to_matching(profile, gm, {1: True, 2: True})
    with pytest.raises(ReductionError):
        assignment_to_matching(profile, gm, {1: True, 2: False}, {1: 2})
    with pytest.raises(ReductionError):
        assignment_to_matching(profile, gm, {1: True, 2: False}, {1: -1})


@pytest.mark.parametrize('formula', list(iter_22_formulas(1)) + list(iter_22_formulas(2)))
def test_stable_matching_exists_iff_satisfiable(formula):
    profile, gm = sat_to_cesm3(formula)
    found = solve_sat(profile, Criterion.ES, perfect_required=True)
    assert (found is not None) == formula.is_satisfiable()
    if found is not None:
        assert formula.evaluate(decode_assignment(profile, gm, found))


@pytest.mark.parametrize('formula', list(iter_22_formulas(1)) + list(iter_22_formulas(2)))
def test_coalitional_variant(formula):
    profile, _ = sat_to_cesm3(formula)
    found = solve_sat(profile, Criterion.CES, perfect_required=True)
    assert (found is not None) == formula.is_satisfiable()


@pytest.mark.slow
@pytest.mark.parametrize('formula', list(iter_22_formulas(3)))
def test_three_variable_formulas(formula):
    profile, _ = sat_to_cesm3(formula)
    found = solve_sat(profile, Criterion.ES, perfect_required=True)
    assert (found is not None) == formula.is_satisfiable()


# Completion

def test_completion_extends_every_list():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    completed = complete_profile(profile, gm)
    assert completed.is_complete
    assert completed.n == profile.n
    for agent in profile.agents:
        own = names(profile, profile.prefs[agent])
        longer = names(completed, completed.prefs[completed.agent_id(profile.name(agent))])
        assert longer[:len(own)] == own


def test_completion_middle_block_follows_own_list():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    completed = complete_profile(profile, gm)
    prefs = names(completed, completed.prefs[completed.agent_id('v1')])
    in_middle = [name.startswith(('y', 'ny', 'e_')) for name in prefs]
    middle_size = sum(in_middle)
    # own list, then the other middle agents, then the rest
    assert prefs[:2] == ['y1', 'ny1']
    assert all(in_middle[:middle_size])
    assert not any(in_middle[middle_size:])


def test_completion_keeps_ces_matchings():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    completed = complete_profile(profile, gm)
    matching = assignment_to_matching(profile, gm, {1: True, 2: False})
    carried = by_names(profile, completed, matching)
    assert is_perfect(completed, carried)
    assert is_ces(completed, carried)


def test_completion_order_must_cover_side():
    profile, gm = sat_to_cesm3(SAT_FORMULA)
    with pytest.raises(ReductionError):
        complete_profile(profile, gm, order_u=['v1'])


@pytest.mark.slow
def test_completion_of_unsatisfiable_formula():
    profile, gm = sat_to_cesm3(UNSAT_FORMULA)
    completed = complete_profile(profile, gm)
    assert solve_sat(completed, Criterion.CES, perfect_required=True) is None


SMALL_FORMULAS = list(iter_22_formulas(1)) + list(iter_22_formulas(2))
SATISFIABLE_FORMULAS = (
    [f for f in SMALL_FORMULAS if f.is_satisfiable()]
    + [f for f in (random_22_formula(make_rng(seed), 3) for seed in range(12)) if f.is_satisfiable()]
)


@pytest.mark.parametrize('formula', SATISFIABLE_FORMULAS)
def test_completion_keeps_witness_of_satisfiable_formula(formula):
    profile, gm = sat_to_cesm3(formula)
    completed = complete_profile(profile, gm)
    matching = assignment_to_matching(profile, gm, formula.satisfying_assignment())
    carried = by_names(profile, completed, matching)
    assert is_perfect(completed, carried)
    assert is_ces(completed, carried)


@pytest.mark.slow
@pytest.mark.parametrize('formula', SMALL_FORMULAS)
def test_completed_instance_solvable_iff_satisfiable(formula):
    profile, gm = sat_to_cesm3(formula)
    completed = complete_profile(profile, gm)
    found = solve_sat(completed, Criterion.CES, perfect_required=True)
    assert (found is not None) == formula.is_satisfiable()


# Independent set to P-ESM

def swap_by_names(profile, matching, first, second):
    return apply_swap(profile, matching, (profile.agent_id(first), profile.agent_id(second)))


def test_single_edge_instance():
    graph = nx.Graph([(1, 2)])
    profile, m0, budget = is_to_pesm(graph, 1)
    assert profile.n == 10
    assert budget == 2
    assert len(m0) == 5
    assert (profile.agent_id('s1'), profile.agent_id('t1')) in m0
    assert m0.partner(profile.agent_id('u2')) == profile.agent_id('w2')
    assert is_perfect(profile, m0)
    assert not is_exchange_stable(profile, m0)


def test_independent_set_witness():
    graph = nx.path_graph([1, 2, 3])
    profile, m0, budget = is_to_pesm(graph, 2)
    swaps = independent_set_swaps(graph, {1, 3})
    assert len(swaps) == budget
    matching = m0
    for first, second in swaps:
        matching = swap_by_names(profile, matching, first, second)
    assert is_exchange_stable(profile, matching)


def test_witness_needs_independence():
    with pytest.raises(ReductionError):
        independent_set_swaps(nx.path_graph([1, 2, 3]), {1, 2})


def test_triangle_has_no_two_independent_vertices():
    profile, m0, budget = is_to_pesm(nx.complete_graph([1, 2, 3]), 2)
    assert reach_es(profile, m0, budget) is None


def test_target_size_range():
    with pytest.raises(ReductionError):
        is_to_pesm(nx.path_graph(3), 0)
    with pytest.raises(ReductionError):
        is_to_pesm(nx.path_graph(3), 4)


def independence_number(graph):
    return max(len(clique) for clique in nx.find_cliques(nx.complement(graph)))


def small_graphs(max_nodes):
    return [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_nodes]


@pytest.mark.parametrize('graph', small_graphs(3))
def test_reachability_matches_independence(graph):
    alpha = independence_number(graph)
    for h in range(1, graph.number_of_nodes() + 1):
        profile, m0, budget = is_to_pesm(graph, h)
        assert (reach_es(profile, m0, budget) is not None) == (alpha >= h)


@pytest.mark.slow
@pytest.mark.parametrize('graph', [g for g in small_graphs(4) if g.number_of_nodes() == 4])
def test_reachability_on_four_vertices(graph):
    alpha = independence_number(graph)
    for h in range(1, 5):
        profile, m0, budget = is_to_pesm(graph, h)
        assert (reach_es(profile, m0, budget) is not None) == (alpha >= h)


@pytest.mark.slow
@pytest.mark.parametrize('graph', [g for g in small_graphs(5) if g.number_of_nodes() == 5])
def test_reachability_on_five_vertices(graph):
    alpha = independence_number(graph)
    profile, m0, budget = is_to_pesm(graph, alpha)
    assert reach_es(profile, m0, budget) is not None
    if alpha < 5:
        profile, m0, budget = is_to_pesm(graph, alpha + 1)
        assert reach_es(profile, m0, budget) is None


def test_valid_formula_is_unchanged():
    assert r3sat_to_223sat(SAT_FORMULA) == SAT_FORMULA


def test_single_occurrence_gets_four_clauses():
    # literal 1 occurs once, -1 twice
    formula = CnfFormula(2, ((1, 2), (-1, -2), (-1, 2), (-2,)))
    normalized = r3sat_to_223sat(formula)
    assert normalized.num_vars == 4
    assert (1, 3, -4) in normalized.clauses
    for clause in [(3, -4), (-3, 4)]:
        assert clause in normalized.clauses
    assert normalized.clauses.count((-3, 4)) == 2
