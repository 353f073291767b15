"""
迭代中和引擎 - 计算每轮的 nbp 势 eta（两阶段），迭代重赋权直到没有负权边，并记录完整轨迹

eta(v) 为所有以 v 结尾的 nbp 路径（负权边全部位于正权边之前，零权边任意，允许空路径）的最小长度。
第一阶段沿非正权子图 G- 的拓扑序传播（零权强连通分量视为一个顶点），
第二阶段在非负权子图 G+ 上以第一阶段结果为初值运行多源 Dijkstra。
"""

import collections
import logging

import networkx as nx

from .baseline import dijkstra, multi_source_dijkstra, UNREACHABLE, DistanceArray
from .errors import (
    NegativeCycleError,
    IterationLimitError,
    PreconditionError,
    RangeError,
    ZeroCycleError,
)
from .graph import EdgeFilter, Potential, checked_int64, reduce_weights
from . import snakes

logger = logging.getLogger(__name__)


class EtaResult:
    """
    一轮 eta 计算的结果：eta_minus 为第一阶段结果，eta 为第二阶段结果
    """

    def __init__(self, eta_minus, eta):
        self.eta_minus = eta_minus
        self.eta = eta

    def __repr__(self):
        return f"EtaResult(eta_minus={self.eta_minus!r}, eta={self.eta!r})"


class NbpDecomposition:
    """
    实现 eta(vertex) 的 nbp 路径见证：edges[:split] 全部非正，edges[split:] 全部非负
    """

    def __init__(self, vertex, edges, split, length):
        self.vertex = vertex
        self.edges = list(edges)
        self.split = split
        self.length = length

    @property
    def prefix(self):
        return self.edges[:self.split]

    @property
    def suffix(self):
        return self.edges[self.split:]


class RecordOptions:
    """
    轨迹记录选项
    """

    def __init__(self, reduced_weights=False, snakes=True):
        self.reduced_weights = reduced_weights
        self.snakes = snakes

    @classmethod
    def from_config(cls, config):
        config = config or {}
        return cls(
            reduced_weights=config.get('record_reduced_weights', False),
            snakes=config.get('record_snakes', True),
        )


class IterationRecord:
    """
    单次迭代记录
    """

    def __init__(self, index, eta, negative_edge_count_after, min_snake_length_after,
                 reduced_weights=None):
        self.index = index
        self.eta = eta
        self.negative_edge_count_after = negative_edge_count_after
        self.min_snake_length_after = min_snake_length_after
        self.reduced_weights = reduced_weights

    def to_dict(self):
        data = {
            "index": self.index,
            "eta": self.eta.to_list(),
            "negEdges": self.negative_edge_count_after,
            "minSnakeLen": self.min_snake_length_after,
        }
        if self.reduced_weights is not None:
            data["reducedWeights"] = list(self.reduced_weights)
        return data


class IterationTrace:
    """
    迭代轨迹：每轮记录、累计势、执行的迭代次数，以及最终的约化图
    """

    def __init__(self, records, accumulated_potential, final_graph):
        self.records = list(records)
        self.accumulated_potential = accumulated_potential
        self.final_graph = final_graph

    @property
    def iterations_executed(self):
        return len(self.records)

    def min_snake_by_iter(self):
        return [r.min_snake_length_after for r in self.records]

    def to_dict(self):
        return {
            "iterations": [r.to_dict() for r in self.records],
            "accumulatedPotential": self.accumulated_potential.to_list(),
            "iterationsExecuted": self.iterations_executed,
        }


def _cycle_through_edge(g, edge_index, members):
    """
    在强连通分量内找一条经过指定边的环，返回边下标列表
    """
    src, dst, _ = g.edges[edge_index]
    view = g.view(EdgeFilter.NON_POSITIVE)
    pred = {dst: None}
    queue = collections.deque([dst])
    while queue and src not in pred:
        u = queue.popleft()
        for index in view.out_edges(u):
            v = g.edges[index][1]
            if v in members and v not in pred:
                pred[v] = index
                queue.append(v)

    path = []
    v = src
    while pred[v] is not None:
        index = pred[v]
        path.append(index)
        v = g.edges[index][0]
    path.reverse()
    return [edge_index] + path


def _condense_non_positive(g):
    """
    对非正权子图做强连通分量缩点，含负权边的分量即为负环

    @param {Graph} g - 图
    @returns {tuple} (顶点到分量编号的映射, 分量拓扑序, 缩点 DAG)
    """
    view = g.view(EdgeFilter.NON_POSITIVE)
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(g.vertex_count))
    digraph.add_edges_from((u, v) for _, u, v, _ in view)

    components = list(nx.strongly_connected_components(digraph))
    condensed = nx.condensation(digraph, scc=components)
    mapping = condensed.graph['mapping']

    for index, u, v, w in view:
        if w < 0 and mapping[u] == mapping[v]:
            members = condensed.nodes[mapping[u]]['members']
            cycle = _cycle_through_edge(g, index, members)
            raise NegativeCycleError(cycle, f"非正权子图中存在负环，边下标: {cycle}")

    return mapping, list(nx.topological_sort(condensed)), condensed


def _propagate_non_positive(g):
    """
    第一阶段：按缩点 DAG 的拓扑序传播 eta_minus

    @param {Graph} g - 图
    @returns {list} 每个顶点的 eta_minus
    """
    mapping, order, condensed = _condense_non_positive(g)
    view = g.view(EdgeFilter.NON_POSITIVE)
    value = [0] * condensed.number_of_nodes()

    for component in order:
        base = value[component]
        for u in condensed.nodes[component]['members']:
            for index in view.out_edges(u):
                _, v, w = g.edges[index]
                target = mapping[v]
                if target == component:
                    continue
                candidate = checked_int64(base + w, "eta_minus")
                if candidate < value[target]:
                    value[target] = candidate

    return [value[mapping[v]] for v in range(g.vertex_count)]


def _propagate_non_negative(g, eta_minus):
    """
    第二阶段：在 G+ 上以 eta_minus 为初值运行多源 Dijkstra

    @param {Graph} g - 图
    @param {list} eta_minus - 第一阶段结果
    @returns {list} 每个顶点的 eta
    """
    return multi_source_dijkstra(g, eta_minus, EdgeFilter.NON_NEGATIVE)


def compute_eta(g):
    """
    计算当前图的 nbp 势

    @param {Graph} g - 图，非正权子图中不能有负环
    @returns {EtaResult} 两个阶段的势
    """
    eta_minus = _propagate_non_positive(g)
    eta = _propagate_non_negative(g, eta_minus)
    return EtaResult(Potential(eta_minus), Potential(eta))


def engine_step(g):
    """
    执行一次迭代：计算 eta 并返回约化后的图

    @param {Graph} g - 当前图
    @returns {tuple} (EtaResult, 约化后的 Graph)
    """
    result = compute_eta(g)
    return result, reduce_weights(g, result.eta)


def _snake_stat(g, options):
    if not options.snakes:
        return None
    try:
        return snakes.min_snake_length(g)
    except ZeroCycleError as e:
        logger.warning(f"约化图的零权子图含环，跳过蛇长度统计: {e}")
        return None


def run_to_fixpoint(g, max_iters=None, record_options=None):
    """
    反复计算 eta 并重赋权，直到不存在负权边

    @param {Graph} g - 原图
    @param {int} max_iters - 迭代上限，默认顶点数+1
    @param {RecordOptions} record_options - 记录选项
    @returns {IterationTrace} 迭代轨迹
    """
    if max_iters is None:
        max_iters = g.vertex_count + 1
    if max_iters < 1:
        raise RangeError(f"迭代上限必须 >= 1: {max_iters}")
    options = record_options or RecordOptions()

    accumulated = Potential.zeros(g.vertex_count)
    current = g
    records = []

    while current.has_negative_edge():
        if len(records) >= max_iters:
            raise IterationLimitError(
                len(records),
                current.negative_edge_count(),
                trace=IterationTrace(records, accumulated, current),
            )

        result, current = engine_step(current)
        accumulated = accumulated + result.eta
        negative_after = current.negative_edge_count()
        records.append(IterationRecord(
            index=len(records) + 1,
            eta=result.eta,
            negative_edge_count_after=negative_after,
            min_snake_length_after=_snake_stat(current, options) if negative_after else None,
            reduced_weights=current.weights() if options.reduced_weights else None,
        ))
        logger.debug(f"第 {len(records)} 次迭代完成，剩余负权边 {negative_after} 条")

    logger.info(
        f"中和完成: 顶点数={g.vertex_count}, 边数={g.edge_count}, 迭代次数={len(records)}"
    )
    return IterationTrace(records, accumulated, current)


def sssp(g, source, max_iters=None):
    """
    先求中和势，再在约化图上运行 Dijkstra，最后换算回原权值下的距离

    @param {Graph} g - 图，不能含负环
    @param {int} source - 源点
    @param {int} max_iters - 迭代上限
    @returns {DistanceArray} delta(source, v)
    """
    if not 0 <= source < g.vertex_count:
        raise RangeError(f"源点 {source} 超出顶点范围 [0, {g.vertex_count})")
    trace = run_to_fixpoint(g, max_iters, RecordOptions(snakes=False))
    phi = trace.accumulated_potential
    reduced = dijkstra(trace.final_graph, source)

    distances = []
    for v, d in enumerate(reduced):
        if d is UNREACHABLE:
            distances.append(UNREACHABLE)
        else:
            distances.append(checked_int64(d - phi[source] + phi[v], f"顶点 {v} 的距离"))
    return DistanceArray(distances)


def relax_nonnegative_once(g, start, order=None):
    """
    按给定顺序把每条非负边各松弛一次

    @param {Graph} g - 图
    @param {Potential|list} start - 初始标号
    @param {list} order - 边下标顺序，默认按边下标
    @returns {Potential} 松弛后的标号
    """
    labels = list(start)
    if order is None:
        order = range(g.edge_count)
    for index in order:
        u, v, w = g.edges[index]
        if w >= 0:
            labels[v] = min(labels[v], checked_int64(labels[u] + w, "标号"))
    return Potential(labels)


def nbp_decomposition(g, vertex):
    """
    给出实现 eta(vertex) 的 nbp 路径见证

    在两层状态图上运行 Bellman-Ford：第 0 层只走非正权边，第 1 层只走非负权边，
    从第 0 层经非负权边进入第 1 层。

    @param {Graph} g - 图
    @param {int} vertex - 目标顶点
    @returns {NbpDecomposition} 路径见证
    """
    if not 0 <= vertex < g.vertex_count:
        raise RangeError(f"顶点 {vertex} 超出顶点范围 [0, {g.vertex_count})")
    # 先做一次完整计算，负环在这里报出
    compute_eta(g)

    n = g.vertex_count
    dist = [0] * n + [None] * n
    pred = [None] * (2 * n)
    transitions = []
    for index, (u, v, w) in enumerate(g.edges):
        if w <= 0:
            transitions.append((u, v, w, index))
        if w >= 0:
            transitions.append((u, n + v, w, index))
            transitions.append((n + u, n + v, w, index))

    for _ in range(2 * n):
        changed = False
        for a, b, w, index in transitions:
            if dist[a] is None:
                continue
            candidate = dist[a] + w
            if dist[b] is None or candidate < dist[b]:
                dist[b] = candidate
                pred[b] = (a, index)
                changed = True
        if not changed:
            break

    state = vertex
    if dist[n + vertex] is not None and dist[n + vertex] < dist[vertex]:
        state = n + vertex
    length = dist[state]

    edges = []
    prefix_length = 0
    while pred[state] is not None:
        previous, index = pred[state]
        edges.append(index)
        # 终点在第 0 层的边属于非正前缀
        if state < n:
            prefix_length += 1
        state = previous
    edges.reverse()

    return NbpDecomposition(vertex, edges, prefix_length, length)


def brute_force_eta(g, max_vertices=12):
    """
    穷举所有简单 nbp 路径计算 eta，仅用于小图校验

    @param {Graph} g - 图，不能含负环
    @param {int} max_vertices - 允许的最大顶点数
    @returns {Potential} eta
    """
    if g.vertex_count > max_vertices:
        raise PreconditionError(f"穷举只支持不超过 {max_vertices} 个顶点的图: {g.vertex_count}")
    best = [0] * g.vertex_count

    def extend(u, length, seen_positive, visited):
        if length < best[u]:
            best[u] = length
        for index in g.out_edges(u):
            _, v, w = g.edges[index]
            if v in visited or (w < 0 and seen_positive):
                continue
            visited.add(v)
            extend(v, length + w, seen_positive or w > 0, visited)
            visited.remove(v)

    for start in range(g.vertex_count):
        extend(start, 0, False, {start})
    return Potential(best)
