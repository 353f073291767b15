"""
图文件读写模块 - DIMACS 最短路格式（p sp / a 行）的解析与序列化

文件中的顶点编号从 1 开始，内部统一转换为从 0 开始。
"""

import logging
import re

from .errors import FormatError, RangeError
from .graph import Graph, INT64_MIN, INT64_MAX
from . import utils

logger = logging.getLogger(__name__)

# 只接受 ASCII 十进制整数，可带负号
INTEGER_TOKEN = re.compile(r"-?[0-9]+")


def _parse_int(token, line_no, what):
    if not INTEGER_TOKEN.fullmatch(token):
        raise FormatError(f"{what}不是十进制整数: {token!r}", line_no)
    return int(token)


def parse_graph(data):
    """
    解析 DIMACS 最短路格式文本

    @param {bytes|str} data - 文件内容
    @returns {Graph} 解析得到的图
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"文件不是合法的UTF-8文本: {e}") from None

    vertex_count = None
    declared_edges = None
    edges = []

    for line_no, raw in enumerate(data.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue

        kind = tokens[0]
        line = raw.strip()

        if kind == "p":
            if vertex_count is not None:
                raise FormatError("重复的问题行", line_no)
            if len(tokens) != 4 or tokens[1] != "sp":
                raise FormatError(f"问题行应为 'p sp <n> <m>': {line!r}", line_no)
            vertex_count = _parse_int(tokens[2], line_no, "顶点数")
            declared_edges = _parse_int(tokens[3], line_no, "边数")
            if vertex_count < 0 or declared_edges < 0:
                raise FormatError("顶点数和边数不能为负", line_no)
        elif kind == "a":
            if vertex_count is None:
                raise FormatError("弧行出现在问题行之前", line_no)
            if len(tokens) != 4:
                raise FormatError(f"弧行应为 'a <u> <v> <w>': {line!r}", line_no)
            src = _parse_int(tokens[1], line_no, "起点")
            dst = _parse_int(tokens[2], line_no, "终点")
            weight = _parse_int(tokens[3], line_no, "权值")
            for vertex in (src, dst):
                if not 1 <= vertex <= vertex_count:
                    raise RangeError(
                        f"第 {line_no} 行: 顶点 {vertex} 超出范围 [1, {vertex_count}]"
                    )
            if weight < INT64_MIN or weight > INT64_MAX:
                raise FormatError(f"权值超出64位有符号整数范围: {weight}", line_no)
            edges.append((src - 1, dst - 1, weight))
        else:
            raise FormatError(f"无法识别的行类型: {line!r}", line_no)

    if vertex_count is None:
        raise FormatError("缺少问题行 'p sp <n> <m>'")
    if len(edges) != declared_edges:
        raise FormatError(f"问题行声明 {declared_edges} 条边，实际读到 {len(edges)} 条")

    return Graph(vertex_count, edges)


def serialize_graph(g, comments=None):
    """
    将图序列化为 DIMACS 最短路格式，LF 换行，行尾无空白

    @param {Graph} g - 图
    @param {list} comments - 可选的注释行（不含前缀 'c '）
    @returns {bytes} 序列化结果
    """
    lines = [f"c {text}" for text in (comments or [])]
    lines.append(f"p sp {g.vertex_count} {g.edge_count}")
    lines.extend(f"a {u + 1} {v + 1} {w}" for u, v, w in g.edges)
    return ("\n".join(lines) + "\n").encode("utf-8")


def load_graph(path):
    """
    从文件读取图

    @param {str} path - 文件路径
    @returns {Graph} 图
    """
    with open(path, "rb") as f:
        data = f.read()
    g = parse_graph(data)
    logger.info(f"已读取图文件: {path}, 顶点数={g.vertex_count}, 边数={g.edge_count}")
    return g


def save_graph(g, path, comments=None):
    """
    将图写入文件

    @param {Graph} g - 图
    @param {str} path - 文件路径
    @param {list} comments - 可选注释行
    """
    utils.write_bytes_atomic(path, serialize_graph(g, comments))
    logger.info(f"已写入图文件: {path}, 顶点数={g.vertex_count}, 边数={g.edge_count}")
