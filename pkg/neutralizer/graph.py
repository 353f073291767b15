"""
图核心模块 - 提供有向多重图、势函数、子图视图以及重赋权相关的判定函数

所有权值均为 64 位有符号整数，运算越界时抛出 OverflowError，不做静默回绕。
"""

import enum
import operator

from .errors import PreconditionError, RangeError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def checked_int64(value, what="数值"):
    """
    检查整数是否落在 64 位有符号整数范围内

    @param {int} value - 待检查的整数
    @param {str} what - 出错时用于提示的名称
    @returns {int} 原值
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"{what}超出64位有符号整数范围: {value}")
    return value


def exact_int(value, what="数值"):
    """
    取整数值，只接受整数类型，浮点数等会被拒绝而不是截断

    @param {int} value - 待检查的值
    @param {str} what - 出错时用于提示的名称
    @returns {int} 整数值
    """
    try:
        return operator.index(value)
    except TypeError:
        raise PreconditionError(f"{what}必须是整数: {value!r}") from None


class EdgeFilter(enum.Enum):
    """
    子图视图的边过滤条件，零权边同时属于 NON_POSITIVE 与 NON_NEGATIVE
    """
    NON_POSITIVE = "non_positive"
    NON_NEGATIVE = "non_negative"
    ZERO = "zero"
    NEGATIVE = "negative"

    def accepts(self, weight):
        if self is EdgeFilter.NON_POSITIVE:
            return weight <= 0
        if self is EdgeFilter.NON_NEGATIVE:
            return weight >= 0
        if self is EdgeFilter.ZERO:
            return weight == 0
        return weight < 0


class Graph:
    """
    有向多重图，边以列表下标作为唯一标识，构造后不可修改
    """

    def __init__(self, vertex_count, edges=()):
        """
        初始化图

        @param {int} vertex_count - 顶点数 n，顶点编号为 [0, n)
        @param {iterable} edges - (src, dst, weight) 三元组序列，顺序即边下标
        """
        self._n = exact_int(vertex_count, "顶点数")
        if self._n < 0:
            raise RangeError(f"顶点数不能为负: {self._n}")

        checked = []
        for index, (src, dst, weight) in enumerate(edges):
            src = exact_int(src, f"边 {index} 的起点")
            dst = exact_int(dst, f"边 {index} 的终点")
            weight = exact_int(weight, f"边 {index} 的权值")
            if not (0 <= src < self._n and 0 <= dst < self._n):
                raise RangeError(
                    f"边 {index} 的端点 ({src}, {dst}) 超出顶点范围 [0, {self._n})"
                )
            checked_int64(weight, f"边 {index} 的权值")
            checked.append((src, dst, weight))
        self._edges = tuple(checked)
        self._out = None
        self._in = None

    @property
    def vertex_count(self):
        return self._n

    @property
    def edges(self):
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    def weights(self):
        """
        按边下标顺序返回权值

        @returns {tuple} 权值序列
        """
        return tuple(w for _, _, w in self._edges)

    def out_edges(self, vertex):
        """
        返回从 vertex 出发的边下标（按下标升序）

        @param {int} vertex - 顶点编号
        @returns {tuple} 边下标
        """
        if self._out is None:
            self._out = self._build_adjacency(0)
        return self._out[vertex]

    def in_edges(self, vertex):
        """
        返回进入 vertex 的边下标（按下标升序）

        @param {int} vertex - 顶点编号
        @returns {tuple} 边下标
        """
        if self._in is None:
            self._in = self._build_adjacency(1)
        return self._in[vertex]

    def _build_adjacency(self, end):
        lists = [[] for _ in range(self._n)]
        for index, edge in enumerate(self._edges):
            lists[edge[end]].append(index)
        return tuple(tuple(items) for items in lists)

    def view(self, edge_filter):
        return SubgraphView(self, edge_filter)

    def with_weights(self, weights):
        """
        保持顶点和边顺序不变，替换全部权值

        @param {iterable} weights - 新权值，长度必须等于边数
        @returns {Graph} 新图
        """
        weights = list(weights)
        if len(weights) != len(self._edges):
            raise RangeError(f"权值个数 {len(weights)} 与边数 {len(self._edges)} 不一致")
        return Graph(self._n, [(u, v, w) for (u, v, _), w in zip(self._edges, weights)])

    def negative_edge_count(self):
        return sum(1 for _, _, w in self._edges if w < 0)

    def has_negative_edge(self):
        return any(w < 0 for _, _, w in self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"


class SubgraphView:
    """
    按边权符号过滤的只读子图视图，G- 对应 NON_POSITIVE，G+ 对应 NON_NEGATIVE
    """

    def __init__(self, parent, edge_filter):
        self.parent = parent
        self.edge_filter = edge_filter

    def __iter__(self):
        """
        依次产出 (边下标, src, dst, weight)
        """
        accepts = self.edge_filter.accepts
        for index, (src, dst, weight) in enumerate(self.parent.edges):
            if accepts(weight):
                yield index, src, dst, weight

    def edge_indices(self):
        return [index for index, _, _, _ in self]

    def out_edges(self, vertex):
        edges = self.parent.edges
        accepts = self.edge_filter.accepts
        return [i for i in self.parent.out_edges(vertex) if accepts(edges[i][2])]

    def in_edges(self, vertex):
        edges = self.parent.edges
        accepts = self.edge_filter.accepts
        return [i for i in self.parent.in_edges(vertex) if accepts(edges[i][2])]

    def __len__(self):
        return sum(1 for _ in self)


class Potential:
    """
    顶点势函数，每个顶点一个 64 位有符号整数，构造后不可修改
    """

    def __init__(self, values):
        self._values = tuple(
            checked_int64(exact_int(value, f"顶点 {vertex} 的势"), f"顶点 {vertex} 的势")
            for vertex, value in enumerate(values)
        )

    @classmethod
    def zeros(cls, vertex_count):
        return cls([0] * vertex_count)

    @property
    def values(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def __getitem__(self, vertex):
        return self._values[vertex]

    def __iter__(self):
        return iter(self._values)

    def __add__(self, other):
        if len(other) != len(self):
            raise RangeError(f"势函数长度不一致: {len(self)} 与 {len(other)}")
        return Potential(
            checked_int64(a + b, f"顶点 {i} 的势之和")
            for i, (a, b) in enumerate(zip(self._values, other))
        )

    def __eq__(self, other):
        if isinstance(other, Potential):
            return self._values == other._values
        if isinstance(other, (list, tuple)):
            return self._values == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return f"Potential({list(self._values)})"

    def to_list(self):
        return list(self._values)


def _check_length(g, phi):
    if len(phi) != g.vertex_count:
        raise RangeError(f"势函数长度 {len(phi)} 与顶点数 {g.vertex_count} 不一致")


def reduced_weight(edge, phi, index=None):
    """
    计算单条边在势 phi 下的约化权值 l(u,v) + phi(u) - phi(v)

    @param {tuple} edge - (src, dst, weight)
    @param {Potential} phi - 势函数
    @param {int} index - 边下标，仅用于错误提示
    @returns {int} 约化权值
    """
    src, dst, weight = edge
    return checked_int64(weight + phi[src] - phi[dst], f"边 {index} 的约化权值")


def reduced_weights(g, phi):
    _check_length(g, phi)
    return [reduced_weight(edge, phi, i) for i, edge in enumerate(g.edges)]


def reduce_weights(g, phi):
    """
    按势 phi 重赋权，顶点集与边顺序保持不变

    @param {Graph} g - 原图
    @param {Potential} phi - 势函数
    @returns {Graph} 约化权值后的新图
    """
    return g.with_weights(reduced_weights(g, phi))


def is_valid_potential(g, phi):
    """
    判断 phi 是否为合法势：所有非负边在约化后仍非负

    @param {Graph} g - 图
    @param {Potential} phi - 势函数
    @returns {bool} 是否合法
    """
    _check_length(g, phi)
    for index, edge in enumerate(g.edges):
        if edge[2] >= 0 and reduced_weight(edge, phi, index) < 0:
            return False
    return True


def is_neutralizing(g, phi):
    """
    判断 phi 是否能中和所有负权边（约化后全部非负）

    @param {Graph} g - 图
    @param {Potential} phi - 势函数
    @returns {bool} 是否中和
    """
    _check_length(g, phi)
    return all(reduced_weight(edge, phi, i) >= 0 for i, edge in enumerate(g.edges))


def path_weight(g, edge_indices):
    """
    计算边下标序列构成的路径长度

    @param {Graph} g - 图
    @param {list} edge_indices - 路径上的边下标
    @returns {int} 路径长度
    """
    total = 0
    for index in edge_indices:
        total = checked_int64(total + g.edges[index][2], "路径长度")
    return total
