"""
结果输出模块 - 迭代轨迹 JSON、实验行 CSV/JSON 的写出与校验
"""

import csv
import io
import json
import logging

import jsonschema

from . import utils

logger = logging.getLogger(__name__)

CSV_HEADER = ["family", "param", "vertices", "edges", "iterations", "wall_time_ns"]

_INT_ARRAY = {"type": "array", "items": {"type": "integer"}}

TRACE_SCHEMA = {
    "type": "object",
    "required": ["iterations", "accumulatedPotential", "iterationsExecuted"],
    "properties": {
        "iterations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "eta", "negEdges", "minSnakeLen"],
                "properties": {
                    "index": {"type": "integer", "minimum": 1},
                    "eta": _INT_ARRAY,
                    "negEdges": {"type": "integer", "minimum": 0},
                    "minSnakeLen": {"type": ["integer", "null"], "minimum": 1},
                    "reducedWeights": _INT_ARRAY,
                },
                "additionalProperties": False,
            },
        },
        "accumulatedPotential": _INT_ARRAY,
        "iterationsExecuted": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


def trace_to_json(trace):
    """
    把迭代轨迹序列化为 JSON 文本（字段顺序固定，结果字节稳定）

    @param {IterationTrace} trace - 迭代轨迹
    @returns {str} JSON 文本
    """
    data = trace.to_dict()
    jsonschema.validate(instance=data, schema=TRACE_SCHEMA)
    return json.dumps(data, indent=2) + "\n"


def save_trace(trace, path):
    utils.write_bytes_atomic(path, trace_to_json(trace).encode('utf-8'))
    logger.info(f"已写入迭代轨迹: {path}")


def load_trace(path):
    """
    读取并校验轨迹 JSON

    @param {str} path - 文件路径
    @returns {dict} 轨迹数据
    """
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    jsonschema.validate(instance=data, schema=TRACE_SCHEMA)
    return data


class ExperimentRow:
    """
    批量实验中一个实例的结果

    min_snake_by_iter 为每轮迭代后的最短蛇长度；该轮之后已无负权边或零权子图含环时为 None。
    未记录蛇统计时整个字段为 None，JSON 中不输出该字段。
    """

    def __init__(self, family, param, vertices, edges, iterations, min_snake_by_iter,
                 wall_time_ns):
        self.family = family
        self.param = param
        self.vertices = vertices
        self.edges = edges
        self.iterations = iterations
        self.min_snake_by_iter = None if min_snake_by_iter is None else list(min_snake_by_iter)
        self.wall_time_ns = wall_time_ns

    def csv_fields(self):
        return [self.family, self.param, self.vertices, self.edges, self.iterations,
                self.wall_time_ns]

    def to_dict(self):
        data = {
            "family": self.family,
            "param": self.param,
            "vertices": self.vertices,
            "edges": self.edges,
            "iterations": self.iterations,
        }
        if self.min_snake_by_iter is not None:
            data["min_snake_by_iter"] = self.min_snake_by_iter
        data["wall_time_ns"] = self.wall_time_ns
        return data


def rows_to_csv(rows):
    """
    把实验行写成 CSV 文本，表头固定，LF 换行

    @param {list} rows - ExperimentRow 列表
    @returns {str} CSV 文本
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buffer.getvalue()


def save_rows_csv(rows, path):
    utils.write_bytes_atomic(path, rows_to_csv(rows).encode('utf-8'))
    logger.info(f"已写入实验结果 CSV: {path}, 行数={len(rows)}")


def save_rows_json(rows, path):
    utils.save_json(path, {"rows": [row.to_dict() for row in rows]})
    logger.info(f"已写入实验结果 JSON: {path}, 行数={len(rows)}")
