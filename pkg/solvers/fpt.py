"""Perfect exchange-stable matchings for profiles with lists of length at most three

Every ebp of a perfect matching sits inside some maximal hourglass. Maximal
hourglasses of height at least five are handled through their six categories,
smaller ones (height four, and overlap clusters of heights two and three)
through direct enumeration of their stable local matchings. Each combination
of local choices fixes the partners of the hourglass agents and of some
outside neighbours; the remaining agents only need a perfect matching, found
with an incremental blossom search.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import logging
import time

from config import Config
from models.matching import Matching
from models.profile import acceptability_graph
from solvers.blossom import MaximumMatching
from solvers.hourglass import (
    Category, category_feasible, cluster_matchings, collect_hourglasses, group_clusters,
)
from solvers.stability import is_exchange_stable, is_perfect
from utils.errors import PreconditionError, SolverError

logger = logging.getLogger(__name__)


@dataclass
class FptReport:
    hourglasses: int = 0
    clusters: int = 0
    heights: list = field(default_factory=list)
    units: int = 0
    combinations: int = 0
    residual_checks: int = 0
    elapsed: float = 0.0

    def to_dict(self):
        return {
            'hourglasses': self.hourglasses,
            'clusters': self.clusters,
            'heights': list(self.heights),
            'units': self.units,
            'combinations': self.combinations,
            'residual_checks': self.residual_checks,
            'elapsed': round(self.elapsed, 6),
        }


@dataclass
class _Unit:
    agents: frozenset
    options: list


class HourglassSolver:
    """Category/cluster enumeration plus residual maximum matching"""

    def __init__(self, profile, threads=None):
        if profile.max_length > 3:
            raise PreconditionError(f'lists must have length at most 3, found {profile.max_length}')
        self.profile = profile
        self.threads = threads or Config.THREADS
        self.graph = acceptability_graph(profile)
        self.report = FptReport()
        self._residual_cache = {}
        self._base = None

    def _units(self):
        tall, clusters = collect_hourglasses(self.graph)
        self.report.hourglasses = len(tall) + sum(len(c.hourglasses) for c in clusters)
        self.report.clusters = len(clusters)
        self.report.heights = sorted(
            [h.height for h in tall] + [h.height for c in clusters for h in c.hourglasses]
        )

        groups = group_clusters(tall + [h for c in clusters for h in c.hourglasses])
        units = []
        for group in groups:
            if len(group.hourglasses) == 1 and group.hourglasses[0].height >= 5:
                hourglass = group.hourglasses[0]
                options = []
                for category in Category:
                    found = category_feasible(self.profile, hourglass, self.graph, category)
                    if found is not None:
                        options.append(found)
                units.append(_Unit(hourglass.agents, options))
            else:
                if any(h.height >= 4 for h in group.hourglasses) and len(group.hourglasses) > 1:
                    logger.warning('tall hourglass overlaps others; enumerating %d agents directly',
                                   len(group.agents))
                units.append(_Unit(group.agents, cluster_matchings(self.profile, group, self.graph)))
        self.report.units = len(units)
        return units

    def _residual_perfect(self, unit_agents, demanded):
        """Perfect matching of G minus unit agents minus demanded agents, or None"""
        key = frozenset(demanded)
        if key in self._residual_cache:
            return self._residual_cache[key]
        self.report.residual_checks += 1
        if self._base is None:
            adjacency = {
                v: [u for u in self.graph.adj[v] if u not in unit_agents]
                for v in self.graph.nodes if v not in unit_agents
            }
            self._base = MaximumMatching(adjacency).maximize()
        solver = self._base.copy()
        solver.remove_vertices(key)
        for v in sorted(solver.exposed()):
            solver.augment_from(v)
        result = solver.pairs() if solver.is_perfect() else None
        self._residual_cache[key] = result
        return result

    def _search(self, units, unit_agents, start_index, first_option):
        """Depth-first over unit options; returns the first perfect ES matching"""
        partner = {}

        def assign(option):
            added = []
            for a, b in option.canonical():
                for x, y in ((a, b), (b, a)):
                    held = partner.get(x)
                    if held is None:
                        partner[x] = y
                        added.append(x)
                    elif held != y:
                        for agent in added:
                            del partner[agent]
                        return None
            return added

        def descend(k):
            if k == len(units):
                self.report.combinations += 1
                demanded = [a for a in partner if a not in unit_agents]
                rest = self._residual_perfect(unit_agents, demanded)
                if rest is None:
                    return None
                pairs = {(min(a, b), max(a, b)) for a, b in partner.items()}
                pairs.update(rest)
                return Matching(pairs)
            for option in units[k].options:
                added = assign(option)
                if added is None:
                    continue
                found = descend(k + 1)
                for agent in added:
                    del partner[agent]
                if found is not None:
                    return found
            return None

        if first_option is None:
            return descend(start_index)
        added = assign(first_option)
        return descend(start_index + 1) if added is not None else None

    def solve(self):
        started = time.perf_counter()
        units = self._units()
        unit_agents = frozenset().union(*(u.agents for u in units)) if units else frozenset()
        logger.info('%d maximal hourglasses, %d units', self.report.hourglasses, len(units))

        if any(not unit.options for unit in units):
            result = None
        elif units and self.threads > 1:
            # first success by option index of the first unit
            self._residual_perfect(unit_agents, [])
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                branches = pool.map(
                    lambda option: self._search(units, unit_agents, 0, option),
                    units[0].options,
                )
                result = next((found for found in branches if found is not None), None)
        else:
            result = self._search(units, unit_agents, 0, None)

        self.report.elapsed = time.perf_counter() - started
        if result is not None:
            if not (is_perfect(self.profile, result) and is_exchange_stable(self.profile, result)):
                raise SolverError('hourglass solver produced an unstable or imperfect matching')
        return result


def solve_d3_fpt(profile, threads=None, report=None):
    """Perfect exchange-stable matching of a profile with lists of length <= 3, or None"""
    solver = HourglassSolver(profile, threads)
    result = solver.solve()
    if report is not None:
        report.__dict__.update(solver.report.__dict__)
    return result
