"""
基准算法模块 - Bellman-Ford、Dijkstra 与 Johnson 势，作为正确性校验的参照
"""

import enum
import heapq
import logging

from .errors import NegativeCycleError, PreconditionError, RangeError
from .graph import Potential, checked_int64

logger = logging.getLogger(__name__)


class Reach(enum.Enum):
    """
    不可达标记，与任何整数距离都不相等
    """
    UNREACHABLE = "UNREACHABLE"

    def __repr__(self):
        return self.value

    __str__ = __repr__


UNREACHABLE = Reach.UNREACHABLE


class DistanceArray:
    """
    距离数组，每个顶点为整数距离或 UNREACHABLE
    """

    def __init__(self, values):
        self._values = tuple(UNREACHABLE if v is None else v for v in values)

    @property
    def values(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def __getitem__(self, vertex):
        return self._values[vertex]

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other):
        if isinstance(other, DistanceArray):
            return self._values == other._values
        if isinstance(other, (list, tuple)):
            return self._values == DistanceArray(other)._values
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return f"DistanceArray({list(self._values)})"

    def is_reachable(self, vertex):
        return self._values[vertex] is not UNREACHABLE

    def format_lines(self):
        """
        输出每个顶点一行 "v <id> <dist|UNREACHABLE>"，顶点编号从 1 开始

        @returns {list} 文本行
        """
        return [f"v {v + 1} {d}" for v, d in enumerate(self._values)]


def _check_source(g, source):
    if not 0 <= source < g.vertex_count:
        raise RangeError(f"源点 {source} 超出顶点范围 [0, {g.vertex_count})")


def multi_source_dijkstra(g, labels, edge_filter=None):
    """
    以任意初始标号（可为负）运行 Dijkstra，只松弛满足 edge_filter 的边

    被松弛的边必须全部非负；标号相同时顶点编号小者先出堆。

    @param {Graph} g - 图
    @param {list} labels - 每个顶点的初始标号，None 表示无穷
    @param {EdgeFilter} edge_filter - 边过滤条件，None 表示全部边
    @returns {list} 最终标号，None 表示不可达
    """
    dist = list(labels)
    heap = [(d, v) for v, d in enumerate(dist) if d is not None]
    heapq.heapify(heap)
    edges = g.edges
    done = [False] * g.vertex_count

    while heap:
        d, u = heapq.heappop(heap)
        if done[u] or d != dist[u]:
            continue
        done[u] = True
        for index in g.out_edges(u):
            _, v, w = edges[index]
            if edge_filter is not None and not edge_filter.accepts(w):
                continue
            candidate = checked_int64(d + w, "距离")
            if dist[v] is None or candidate < dist[v]:
                dist[v] = candidate
                heapq.heappush(heap, (candidate, v))
    return dist


def dijkstra(g, source):
    """
    单源 Dijkstra，要求所有边权非负

    @param {Graph} g - 图
    @param {int} source - 源点
    @returns {DistanceArray} 最短距离
    """
    _check_source(g, source)
    for index, (_, _, w) in enumerate(g.edges):
        if w < 0:
            raise PreconditionError(f"Dijkstra 要求边权非负，边 {index} 的权值为 {w}")
    labels = [None] * g.vertex_count
    labels[source] = 0
    return DistanceArray(multi_source_dijkstra(g, labels))


def _extract_cycle(g, pred, vertex):
    """
    沿前驱边回溯，提取负环的边下标（按行进方向排列）
    """
    edges = g.edges
    x = vertex
    for _ in range(g.vertex_count):
        if pred[x] is None:
            return []
        x = edges[pred[x]][0]

    cycle = []
    y = x
    while True:
        index = pred[y]
        cycle.append(index)
        y = edges[index][0]
        if y == x:
            break
    cycle.reverse()
    return cycle


def _relax_until_stable(g, dist):
    """
    Bellman-Ford 主循环，某一轮无松弛时提前结束

    @param {Graph} g - 图
    @param {list} dist - 初始距离，None 表示无穷，原地更新
    @returns {list} 最终距离
    """
    pred = [None] * g.vertex_count
    edges = g.edges

    for round_no in range(max(1, g.vertex_count)):
        changed = None
        for index, (u, v, w) in enumerate(edges):
            if dist[u] is None:
                continue
            candidate = checked_int64(dist[u] + w, "距离")
            if dist[v] is None or candidate < dist[v]:
                dist[v] = candidate
                pred[v] = index
                changed = v
        if changed is None:
            logger.debug(f"Bellman-Ford 在第 {round_no + 1} 轮收敛")
            return dist

    raise NegativeCycleError(_extract_cycle(g, pred, changed))


def bellman_ford(g, source):
    """
    单源 Bellman-Ford，检测从源点可达的负环

    @param {Graph} g - 图
    @param {int} source - 源点
    @returns {DistanceArray} 最短距离
    """
    _check_source(g, source)
    dist = [None] * g.vertex_count
    dist[source] = 0
    return DistanceArray(_relax_until_stable(g, dist))


def johnson_potential(g):
    """
    Johnson 势 phi(v) = delta(V, v)，相当于从虚拟超级源点（到每个顶点有 0 权边）运行 Bellman-Ford

    @param {Graph} g - 图，不能含负环
    @returns {Potential} 中和势，逐点 <= 0
    """
    return Potential(_relax_until_stable(g, [0] * g.vertex_count))
