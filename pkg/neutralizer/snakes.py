"""
蛇与路径分析模块 - 蛇的枚举与统计，以及权值序列的收缩、终止下标和负段划分

蛇：包含关系下极大的零权路径（尾部）加上恰好一条负权边（头部），长度按边数计。
"""

import logging

import networkx as nx

from .errors import PreconditionError, ShapeError, ZeroCycleError
from .graph import EdgeFilter, Graph, checked_int64, exact_int

logger = logging.getLogger(__name__)


class Snake:
    """
    蛇：tail 为零权边下标序列，head 为负权边下标
    """

    def __init__(self, tail, head):
        self.tail = tuple(tail)
        self.head = head

    @property
    def length(self):
        return len(self.tail) + 1

    def edges(self):
        return list(self.tail) + [self.head]

    def __eq__(self, other):
        if not isinstance(other, Snake):
            return NotImplemented
        return self.tail == other.tail and self.head == other.head

    def __hash__(self):
        return hash((self.tail, self.head))

    def __repr__(self):
        return f"Snake(tail={list(self.tail)}, head={self.head})"


class SnakeList(list):
    """
    蛇列表，truncated 表示数量超过上限而被截断
    """

    def __init__(self, items=(), truncated=False):
        super().__init__(items)
        self.truncated = truncated


def _zero_depths(g):
    """
    计算每个顶点处最短的极大零权路径长度（没有零权入边的顶点为 0）

    @param {Graph} g - 图
    @returns {list} 每个顶点的深度
    """
    view = g.view(EdgeFilter.ZERO)
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(g.vertex_count))
    digraph.add_edges_from((u, v) for _, u, v, _ in view)
    try:
        order = list(nx.topological_sort(digraph))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(digraph)
        raise ZeroCycleError(f"零权子图中存在环: {cycle}") from None

    depth = [0] * g.vertex_count
    for v in order:
        incoming = view.in_edges(v)
        if incoming:
            depth[v] = min(depth[g.edges[i][0]] for i in incoming) + 1
    return depth


def min_snake_length(g):
    """
    最短蛇的长度

    @param {Graph} g - 图，零权子图必须无环
    @returns {int|None} 最短蛇长度，没有负权边时为 None
    """
    negative = g.view(EdgeFilter.NEGATIVE).edge_indices()
    if not negative:
        return None
    depth = _zero_depths(g)
    return min(depth[g.edges[i][0]] for i in negative) + 1


def enumerate_snakes(g, limit=10 ** 6):
    """
    枚举所有蛇，每条只报告一次；在汇聚的零权 DAG 上数量可能呈指数增长

    @param {Graph} g - 图，零权子图必须无环
    @param {int} limit - 最多返回的蛇数量
    @returns {SnakeList} 蛇列表，超过上限时 truncated 为 True
    """
    if limit < 1:
        raise PreconditionError(f"limit 必须 >= 1: {limit}")
    # 只用于检查零权子图无环
    _zero_depths(g)
    zero_view = g.view(EdgeFilter.ZERO)
    result = SnakeList()

    for head in g.view(EdgeFilter.NEGATIVE).edge_indices():
        # 栈中保存 (当前顶点, 已收集的尾部边，逆序)
        stack = [(g.edges[head][0], [])]
        while stack:
            vertex, reversed_tail = stack.pop()
            incoming = zero_view.in_edges(vertex)
            if not incoming:
                if len(result) >= limit:
                    result.truncated = True
                    logger.warning(f"蛇数量超过上限 {limit}，结果已截断")
                    return result
                result.append(Snake(reversed(reversed_tail), head))
                continue
            for index in reversed(incoming):
                stack.append((g.edges[index][0], reversed_tail + [index]))

    return result


class WeightSeq:
    """
    路径图的权值序列 l_1 ... l_n（下标从 1 开始）
    """

    def __init__(self, weights=()):
        self._weights = tuple(checked_int64(exact_int(w, "权值"), "权值") for w in weights)

    @property
    def weights(self):
        return self._weights

    def __len__(self):
        return len(self._weights)

    def __iter__(self):
        return iter(self._weights)

    def __getitem__(self, position):
        return self._weights[position]

    def __eq__(self, other):
        if isinstance(other, WeightSeq):
            return self._weights == other._weights
        if isinstance(other, (list, tuple)):
            return self._weights == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._weights)

    def __repr__(self):
        return f"WeightSeq({list(self._weights)})"

    def total(self):
        return checked_int64(sum(self._weights), "路径长度")

    def segment_sum(self, p, q):
        """
        l_{p,q}：从 v_p 到 v_q 的路径段长度，即 l_p + ... + l_{q-1}

        @param {int} p - 起点下标（从 1 开始）
        @param {int} q - 终点下标，p <= q <= n+1
        @returns {int} 段长度
        """
        if not 1 <= p <= q <= len(self._weights) + 1:
            raise PreconditionError(f"段下标不合法: p={p}, q={q}")
        return checked_int64(sum(self._weights[p - 1:q - 1]), "段长度")

    def negative_count(self):
        return sum(1 for w in self._weights if w < 0)


def contract_sequence(p):
    """
    收缩：删除零值，把相邻同号的连续值合并为它们的和，结果正负交替

    @param {WeightSeq|list} p - 权值序列
    @returns {WeightSeq} 收缩后的序列
    """
    merged = []
    for w in p:
        if w == 0:
            continue
        if merged and (merged[-1] < 0) == (w < 0):
            merged[-1] = checked_int64(merged[-1] + w, "合并后的权值")
        else:
            merged.append(w)
    return WeightSeq(merged)


def neg_count_in_contraction(p):
    return contract_sequence(p).negative_count()


def iteration_bound_for_path(p):
    """
    路径迭代次数上界 floor(log2(max(2, k))) + 2，k 为收缩后的负值个数

    @param {WeightSeq|list} p - 权值序列
    @returns {int} 上界
    """
    k = max(2, neg_count_in_contraction(p))
    return k.bit_length() - 1 + 2


class NegSegmentAnalysis:
    """
    终止下标与负段划分结果，下标均从 1 开始

    open_segment 为 True 表示最后一段没有以终止下标结束；
    sentinel_appended 为 True 表示输入以负值结尾，分析时在末尾补了一个正值哨兵。
    """

    def __init__(self, terminals, segments, open_segment=False, sentinel_appended=False):
        self.terminals = list(terminals)
        self.segments = list(segments)
        self.open_segment = open_segment
        self.sentinel_appended = sentinel_appended

    def __repr__(self):
        return (f"NegSegmentAnalysis(terminals={self.terminals}, segments={self.segments}, "
                f"open_segment={self.open_segment}, sentinel_appended={self.sentinel_appended})")


def analyze_neg_segments(p):
    """
    计算终止下标（奇数 i 且 l_i + l_{i+1} > 0）以及负段划分

    输入必须是收缩后的规范形式：奇数位为负，偶数位为正。以负值结尾的序列在分析时补一个正值哨兵。

    @param {WeightSeq|list} p - 规范形式的权值序列
    @returns {NegSegmentAnalysis} 分析结果
    """
    weights = list(p)
    for position, w in enumerate(weights, start=1):
        if (position % 2 == 1 and w >= 0) or (position % 2 == 0 and w <= 0):
            raise PreconditionError(
                f"序列不是规范的交替形式: 第 {position} 位为 {w}"
            )

    sentinel_appended = False
    if len(weights) % 2 == 1:
        weights.append(1)
        sentinel_appended = True

    terminals = []
    segments = []
    start = 1
    for i in range(1, len(weights), 2):
        if weights[i - 1] + weights[i] > 0:
            terminals.append(i)
            segments.append((start, i + 1))
            start = i + 2

    open_segment = False
    if start <= len(weights):
        segments.append((start, len(weights)))
        open_segment = True

    return NegSegmentAnalysis(terminals, segments, open_segment, sentinel_appended)


def seq_to_path_graph(p):
    """
    权值序列转换为路径图 v_0 -> v_1 -> ... -> v_n

    @param {WeightSeq|list} p - 权值序列
    @returns {Graph} n+1 个顶点的路径图
    """
    weights = list(p)
    return Graph(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)])


def path_graph_to_seq(g):
    """
    路径图转换为权值序列，要求图恰好是按顶点编号排列的简单有向路径

    @param {Graph} g - 路径图
    @returns {WeightSeq} 权值序列
    """
    if g.vertex_count == 0:
        raise ShapeError("空图不是路径")
    if g.edge_count != g.vertex_count - 1:
        raise ShapeError(f"路径图应有 {g.vertex_count - 1} 条边，实际 {g.edge_count} 条")

    weights = [None] * g.edge_count
    for index, (u, v, w) in enumerate(g.edges):
        if v != u + 1 or weights[u] is not None:
            raise ShapeError(f"边 {index} ({u} -> {v}) 不符合按编号排列的路径形状")
        weights[u] = w
    return WeightSeq(weights)
