"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)

Augmenting paths are searched one exposed vertex at a time with a BFS
forest; odd cycles are contracted through a base array. All search state is
kept in per-search dictionaries so a failed search costs only the part of the
graph it explored.
"""
from collections import deque
import logging

from models.matching import Matching

logger = logging.getLogger(__name__)


class MaximumMatching:
    """Incremental maximum matching over an adjacency mapping vertex -> neighbors"""

    def __init__(self, adjacency, greedy=True):
        self.adjacency = {v: tuple(sorted(neighbors)) for v, neighbors in adjacency.items()}
        self.mate = {}
        if greedy:
            self._greedy()

    @classmethod
    def from_graph(cls, graph):
        return cls({v: list(graph.adj[v]) for v in graph.nodes})

    def copy(self):
        other = MaximumMatching.__new__(MaximumMatching)
        other.adjacency = self.adjacency
        other.mate = dict(self.mate)
        return other

    def _greedy(self):
        # Pendant vertices first: matching a leaf to its only neighbour is always safe
        order = sorted(self.adjacency, key=lambda v: (len(self.adjacency[v]), v))
        for v in order:
            if v in self.mate:
                continue
            for u in self.adjacency[v]:
                if u not in self.mate:
                    self.mate[v] = u
                    self.mate[u] = v
                    break

    def exposed(self):
        return [v for v in self.adjacency if v not in self.mate]

    def remove_vertices(self, vertices):
        """Drop vertices from the graph; their former mates become exposed"""
        vertices = set(vertices)
        freed = []
        for v in vertices:
            u = self.mate.pop(v, None)
            if u is not None and u not in vertices:
                del self.mate[u]
                freed.append(u)
        self.adjacency = {
            v: tuple(u for u in neighbors if u not in vertices)
            for v, neighbors in self.adjacency.items() if v not in vertices
        }
        return freed

    def augment_from(self, root):
        """Try to enlarge the matching with an augmenting path from exposed root"""
        if root in self.mate:
            return False
        end, parent = self._find_path(root)
        if end is None:
            return False
        v = end
        while v is not None:
            pv = parent[v]
            ppv = self.mate.get(pv)
            self.mate[v] = pv
            self.mate[pv] = v
            v = ppv
        return True

    def _find_path(self, root):
        mate = self.mate
        adjacency = self.adjacency
        base = {}
        parent = {}
        used = {root}
        touched = [root]
        queue = deque([root])

        def base_of(v):
            return base.get(v, v)

        def lca(a, b):
            seen = set()
            while True:
                a = base_of(a)
                seen.add(a)
                if a not in mate:
                    break
                a = parent[mate[a]]
            while True:
                b = base_of(b)
                if b in seen:
                    return b
                b = parent[mate[b]]

        def mark_path(v, b, child, blossom):
            while base_of(v) != b:
                blossom.add(base_of(v))
                blossom.add(base_of(mate[v]))
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adjacency[v]:
                if base_of(v) == base_of(to) or mate.get(v) == to:
                    continue
                if to == root or (to in mate and mate[to] in parent):
                    current = lca(v, to)
                    blossom = set()
                    mark_path(v, current, to, blossom)
                    mark_path(to, current, v, blossom)
                    for i in list(touched):
                        if base_of(i) in blossom:
                            base[i] = current
                            if i not in used:
                                used.add(i)
                                queue.append(i)
                elif to not in parent:
                    parent[to] = v
                    touched.append(to)
                    if to not in mate:
                        return to, parent
                    nxt = mate[to]
                    used.add(nxt)
                    touched.append(nxt)
                    queue.append(nxt)
        return None, parent

    def maximize(self):
        """Augment from every exposed vertex until none succeeds"""
        for v in sorted(self.adjacency):
            if v not in self.mate:
                self.augment_from(v)
        return self

    def is_perfect(self):
        return len(self.mate) == len(self.adjacency)

    def pairs(self):
        return [(v, u) for v, u in self.mate.items() if v < u]

    def to_matching(self):
        return Matching(self.pairs())


def max_matching(graph):
    """Maximum-cardinality matching of a networkx graph"""
    solver = MaximumMatching.from_graph(graph).maximize()
    logger.debug('maximum matching of size %d on %d vertices', len(solver.pairs()), len(solver.adjacency))
    return solver.to_matching()
