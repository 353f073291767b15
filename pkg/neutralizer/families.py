"""
实例族生成模块 - 构造对抗实例 G_n、递归困难路径、正负交替路径和随机无负环图，并给出 G_n 的闭式结果

G_n 的顶点编号约定固定：x_i 的编号为 i，y_i 的编号为 2n+1+i（0 <= i <= 2n）。
随机生成器统一使用 Python 标准的 Mersenne Twister（random.Random），给定种子时结果在各平台一致。
"""

import random

from .errors import PreconditionError, RangeError
from .graph import Graph, Potential
from .snakes import WeightSeq

GN_MIN = 1
GN_MAX = 37
HARD_PATH_MAX = 30


class GnLayout:
    """
    G_n 的顶点编号布局
    """

    def __init__(self, n):
        self.n = n

    @property
    def vertex_count(self):
        return 4 * self.n + 2

    @property
    def edge_count(self):
        return 6 * self.n

    def x(self, i):
        return i

    def y(self, i):
        return 2 * self.n + 1 + i

    def name(self, vertex):
        """
        顶点编号对应的名称，如 x2、y5

        @param {int} vertex - 顶点编号
        @returns {str} 名称
        """
        side = 2 * self.n + 1
        if vertex < side:
            return f"x{vertex}"
        return f"y{vertex - side}"

    def edge_name(self, g, index):
        u, v, _ = g.edges[index]
        return f"{self.name(u)}->{self.name(v)}"


class Mismatch:
    """
    闭式结果与实际结果的第一处不一致
    """

    def __init__(self, n, what, name, expected, actual):
        self.n = n
        self.what = what
        self.name = name
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return (f"mismatch n={self.n} {self.what} {self.name}: "
                f"expected {self.expected}, got {self.actual}")

    __repr__ = __str__


def _check_gn_range(n):
    if not GN_MIN <= n <= GN_MAX:
        raise RangeError(f"G_n 的参数 n 必须在 [{GN_MIN}, {GN_MAX}] 内: {n}")


def _gn_edges(n, layout, weights_for):
    x, y = layout.x, layout.y
    edges = []
    for i in range(n):
        w = weights_for(i)
        edges.extend([
            (x(2 * i), x(2 * i + 1), w[0]),
            (x(2 * i + 1), x(2 * i + 2), w[1]),
            (y(2 * i), y(2 * i + 1), w[2]),
            (y(2 * i + 1), y(2 * i + 2), w[3]),
            (x(2 * i + 1), y(2 * i + 2), w[4]),
            (y(2 * i + 1), x(2 * i + 2), w[5]),
        ])
    return edges


def gen_gn(n):
    """
    构造对抗实例 G_n：4n+2 个顶点，6n 条边，每个 i 按固定顺序产出六条边

    @param {int} n - 参数，1 <= n <= 37
    @returns {tuple} (Graph, GnLayout)
    """
    _check_gn_range(n)
    layout = GnLayout(n)

    def weights_for(i):
        big = 3 ** (n - i)
        small = 3 ** (n - i - 1)
        return (-2 * big, 2 * small, -big, 0, small, 0)

    return Graph(layout.vertex_count, _gn_edges(n, layout, weights_for)), layout


def gn_closed_form_eta(n):
    """
    G_n 第一次迭代中两个阶段势的闭式值

    @param {int} n - 参数
    @returns {tuple} (eta_minus, eta)，均为 Potential
    """
    _check_gn_range(n)
    layout = GnLayout(n)
    x, y = layout.x, layout.y
    top = 3 ** (n + 1)

    eta_minus = [0] * layout.vertex_count
    eta_minus[x(1)] = -2 * 3 ** n
    for i in range(n):
        value = (3 ** (n - i) - top) // 2
        eta_minus[y(2 * i + 1)] = value
        eta_minus[y(2 * i + 2)] = value
    for i in range(1, n + 1):
        value = (3 ** (n - i + 1) - top) // 2
        eta_minus[x(2 * i)] = value
        eta_minus[y(2 * i)] = value
    for i in range(1, n):
        eta_minus[x(2 * i + 1)] = (-3 ** (n - i) - top) // 2

    eta = list(eta_minus)
    for i in range(1, n + 1):
        eta[x(2 * i)] = (3 ** (n - i) - top) // 2
        eta[y(2 * i)] = (-3 ** (n - i) - top) // 2

    return Potential(eta_minus), Potential(eta)


def gn_closed_form_reduced(n):
    """
    G_n 第一次迭代后各边的约化权值：i >= 1 时 x/y 两侧互换，i = 0 时为边界值

    @param {int} n - 参数
    @returns {Graph} 与 gen_gn(n) 结构相同、权值为期望约化权值的图
    """
    _check_gn_range(n)
    layout = GnLayout(n)

    def weights_for(i):
        if i == 0:
            return (0, 0, 0, 2 * 3 ** n, 0, 3 ** n)
        big = 3 ** (n - i)
        small = 3 ** (n - i - 1)
        return (-big, 0, -2 * big, 2 * small, 0, small)

    return Graph(layout.vertex_count, _gn_edges(n, layout, weights_for))


def gn_self_similar_mismatch(n, reduced):
    """
    检查约化后的 G_n 在下标 >= 2 的顶点上的导出子图是否等于 G_{n-1}（x/y 互换，下标平移 2）

    @param {int} n - 参数
    @param {Graph} reduced - 一次迭代后的 G_n
    @returns {Mismatch|None} 第一处不一致，全部一致时为 None
    """
    _check_gn_range(n)
    if n == 1:
        return None
    layout = GnLayout(n)
    smaller, small_layout = gen_gn(n - 1)
    side = 2 * n + 1

    def relabel(vertex):
        # x_j -> y_{j-2}，y_j -> x_{j-2}
        if vertex < side:
            return small_layout.y(vertex - 2)
        return small_layout.x(vertex - side - 2)

    def index_of(vertex):
        return vertex if vertex < side else vertex - side

    expected = {(u, v): w for u, v, w in smaller.edges}
    seen = 0
    for index, (u, v, w) in enumerate(reduced.edges):
        if index_of(u) < 2 or index_of(v) < 2:
            continue
        seen += 1
        key = (relabel(u), relabel(v))
        name = layout.edge_name(reduced, index)
        if key not in expected:
            return Mismatch(n, "self-similar edge", name, "absent", w)
        if expected[key] != w:
            return Mismatch(n, "self-similar edge", name, expected[key], w)

    if seen != smaller.edge_count:
        return Mismatch(n, "self-similar edge count", "induced", smaller.edge_count, seen)
    return None


def gen_hard_path(s):
    """
    递归构造的困难路径：P_1 = (-1, 1)，每一步把每对 (a, b) 替换为 (a-1, 1, -1, b+1)

    @param {int} s - 层数，1 <= s <= 30，序列长度 2^s
    @returns {WeightSeq} 权值序列
    """
    if not 1 <= s <= HARD_PATH_MAX:
        raise RangeError(f"困难路径的参数 s 必须在 [1, {HARD_PATH_MAX}] 内: {s}")
    weights = [-1, 1]
    for _ in range(s - 1):
        expanded = []
        for position in range(0, len(weights), 2):
            a, b = weights[position], weights[position + 1]
            expanded.extend((a - 1, 1, -1, b + 1))
        weights = expanded
    return WeightSeq(weights)


def gen_alternating_path(k):
    """
    正负交替路径 (-1, 1) 重复 k 次

    @param {int} k - 重复次数，k >= 1
    @returns {WeightSeq} 长度 2k 的权值序列
    """
    if k < 1:
        raise PreconditionError(f"交替路径的参数 k 必须 >= 1: {k}")
    return WeightSeq([-1, 1] * k)


def gen_random_graph(n, m, max_weight, seed, potential_range=None):
    """
    随机无负环图（平移法）：基础权值 w 取 [0, max_weight]，每个顶点取随机势 pi，
    令 l(u,v) = w(u,v) + pi(v) - pi(u)，任一环的 l 之和等于其 w 之和，必然非负

    随机数抽取顺序固定：先抽边的端点对，再抽各顶点的势，最后抽基础权值。
    不产生自环和重边。

    @param {int} n - 顶点数，n >= 1
    @param {int} m - 边数，0 <= m <= n(n-1)
    @param {int} max_weight - 基础权值上界，>= 0
    @param {int} seed - 64 位无符号种子
    @param {int} potential_range - 势的取值范围 [-r, r]，默认等于 max_weight
    @returns {Graph} 图
    """
    if n < 1 or m < 0 or max_weight < 0:
        raise RangeError(f"随机图参数不合法: n={n}, m={m}, max_weight={max_weight}")
    if m > n * (n - 1):
        raise RangeError(f"{n} 个顶点的简单有向图最多 {n * (n - 1)} 条边: m={m}")
    if potential_range is None:
        potential_range = max_weight

    rng = random.Random(seed)
    pairs = []
    for code in rng.sample(range(n * (n - 1)), m):
        u, r = divmod(code, n - 1)
        pairs.append((u, r if r < u else r + 1))
    pi = [rng.randint(-potential_range, potential_range) for _ in range(n)]
    edges = [(u, v, rng.randint(0, max_weight) + pi[v] - pi[u]) for u, v in pairs]
    return Graph(n, edges)


def gen_random_path(length, max_abs_weight, seed):
    """
    随机路径权值序列，每个权值取 [-max_abs_weight, max_abs_weight]

    @param {int} length - 序列长度
    @param {int} max_abs_weight - 权值绝对值上界
    @param {int} seed - 种子
    @returns {WeightSeq} 权值序列
    """
    if length < 0 or max_abs_weight < 0:
        raise RangeError(f"随机路径参数不合法: length={length}, max_abs_weight={max_abs_weight}")
    rng = random.Random(seed)
    return WeightSeq(rng.randint(-max_abs_weight, max_abs_weight) for _ in range(length))


def gen_random_dag(n, edge_probability, max_abs_weight, seed):
    """
    随机 DAG：先打乱顶点编号，再按打乱后的顺序只从前往后连边

    @param {int} n - 顶点数
    @param {float} edge_probability - 每对顶点连边的概率
    @param {int} max_abs_weight - 权值绝对值上界
    @param {int} seed - 种子
    @returns {Graph} 图
    """
    if n < 1 or not 0 <= edge_probability <= 1 or max_abs_weight < 0:
        raise RangeError(f"随机 DAG 参数不合法: n={n}, p={edge_probability}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_probability:
                edges.append((order[a], order[b], rng.randint(-max_abs_weight, max_abs_weight)))
    return Graph(n, edges)
