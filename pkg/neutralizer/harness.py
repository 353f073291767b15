"""
实验命令模块 - 生成实例、运行引擎、校验闭式结果、批量测量迭代次数以及求单源最短路

每个命令只是对库函数的薄封装，返回固定含义的退出码。
"""

import sys
import time
import logging
from concurrent.futures import ThreadPoolExecutor

from . import utils
from .baseline import bellman_ford
from .engine import RecordOptions, compute_eta, run_to_fixpoint, sssp
from .errors import (
    ConfigError,
    FormatError,
    IterationLimitError,
    NegativeCycleError,
    PreconditionError,
    RangeError,
)
from .families import (
    GN_MAX,
    GN_MIN,
    Mismatch,
    gen_alternating_path,
    gen_gn,
    gen_hard_path,
    gen_random_graph,
    gn_closed_form_eta,
    gn_closed_form_reduced,
    gn_self_similar_mismatch,
)
from .graph import reduce_weights
from .graph_io import load_graph, save_graph, serialize_graph
from .report import ExperimentRow, save_rows_csv, save_rows_json, save_trace
from .snakes import seq_to_path_graph

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE_CYCLE = 3
EXIT_ITERATION_LIMIT = 4
EXIT_MISMATCH = 5

FAMILIES = ['gn', 'hardpath', 'altpath', 'random']


def build_instance(family, param, config=None):
    """
    按族名和参数构造实例

    @param {str} family - 族名：gn, hardpath, altpath, random
    @param {int} param - 族参数（gn 的 n，hardpath 的 s，altpath 的 k，random 的顶点数）
    @param {dict} config - 合并后的配置，random 族从中读取 m、max_weight、seed
    @returns {tuple} (Graph, 注释行列表)
    """
    config = config or {}
    if family == 'gn':
        g, _ = gen_gn(param)
        return g, [f"family gn n={param}"]
    if family == 'hardpath':
        return seq_to_path_graph(gen_hard_path(param)), [f"family hardpath s={param}"]
    if family == 'altpath':
        return seq_to_path_graph(gen_alternating_path(param)), [f"family altpath k={param}"]
    if family == 'random':
        m = config.get('m', 4 * param)
        max_weight = config.get('max_weight', 100)
        seed = config.get('seed', 0)
        g = gen_random_graph(param, min(m, param * (param - 1)), max_weight, seed)
        return g, [f"family random n={param} m={g.edge_count} max_weight={max_weight} seed={seed}"]
    raise RangeError(f"未知的实例族: {family}")


def cmd_gen(family, param, out_path=None, config=None, logger=None, out=None):
    """
    生成实例并写成图文件

    @param {str} family - 族名
    @param {int} param - 族参数
    @param {str} out_path - 输出路径，为 None 时写到标准输出
    @param {dict} config - 合并后的配置
    @param {logging.Logger} logger - 日志记录器
    @param {file} out - 标准输出替身
    @returns {int} 退出码
    """
    logger = logger or logging.getLogger(__name__)
    out = out or sys.stdout
    try:
        g, comments = build_instance(family, param, config)
    except (RangeError, PreconditionError, OverflowError) as e:
        logger.error(f"生成实例失败: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if out_path:
            save_graph(g, out_path, comments)
        else:
            out.write(serialize_graph(g, comments).decode('utf-8'))
    except OSError as e:
        logger.error(f"写入图文件失败: {out_path}, 错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"已生成 {family} 实例: 参数={param}, 顶点数={g.vertex_count}, 边数={g.edge_count}")
    return EXIT_OK


def _load_graph_or_report(graph_path, logger):
    try:
        return load_graph(graph_path)
    except (FormatError, RangeError, OSError) as e:
        logger.error(f"读取图文件失败: {graph_path}, 错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return None


def cmd_run(graph_path, trace_path=None, max_iters=None, config=None, logger=None, out=None):
    """
    对图文件运行迭代中和，输出迭代次数和最终状态

    @param {str} graph_path - 图文件路径
    @param {str} trace_path - 轨迹 JSON 输出路径，可选
    @param {int} max_iters - 迭代上限，可选
    @param {dict} config - 合并后的配置
    @param {logging.Logger} logger - 日志记录器
    @param {file} out - 标准输出替身
    @returns {int} 退出码：0 已中和，3 负环，4 达到迭代上限
    """
    logger = logger or logging.getLogger(__name__)
    out = out or sys.stdout

    g = _load_graph_or_report(graph_path, logger)
    if g is None:
        return EXIT_USAGE

    try:
        limit = utils.resolve_max_iters(g.vertex_count, max_iters, config)
    except ConfigError as e:
        logger.error(f"迭代上限配置错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    trace = None
    try:
        trace = run_to_fixpoint(g, limit, RecordOptions.from_config(config))
        status, code = "neutralized", EXIT_OK
    except NegativeCycleError as e:
        logger.warning(f"检测到负环: {graph_path}, 边下标: {e.cycle}")
        print("status=negative_cycle", file=out)
        print(f"cycle={' '.join(str(i + 1) for i in e.cycle)}", file=out)
        return EXIT_NEGATIVE_CYCLE
    except IterationLimitError as e:
        logger.warning(f"达到迭代上限: {graph_path}, {e}")
        trace = e.trace
        status, code = "iteration_limit", EXIT_ITERATION_LIMIT
    except OverflowError as e:
        logger.error(f"权值运算越界: {graph_path}, {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(f"iterations_executed={trace.iterations_executed}", file=out)
    print(f"status={status}", file=out)

    if trace_path:
        try:
            save_trace(trace, trace_path)
        except OSError as e:
            logger.error(f"写入轨迹失败: {trace_path}, 错误: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

    logger.info(f"运行结束: {graph_path}, 迭代次数={trace.iterations_executed}, 状态={status}")
    return code


def verify_gn(n):
    """
    校验单个 G_n：两阶段势、第一次迭代后的约化权值以及自相似性

    @param {int} n - 参数
    @returns {Mismatch|None} 第一处不一致
    """
    g, layout = gen_gn(n)
    expected_minus, expected_eta = gn_closed_form_eta(n)
    result = compute_eta(g)

    for what, expected, actual in (("eta_minus", expected_minus, result.eta_minus),
                                   ("eta", expected_eta, result.eta)):
        for vertex in range(g.vertex_count):
            if expected[vertex] != actual[vertex]:
                return Mismatch(n, what, layout.name(vertex), expected[vertex], actual[vertex])

    reduced = reduce_weights(g, result.eta)
    expected_reduced = gn_closed_form_reduced(n)
    for index, (edge, expected_edge) in enumerate(zip(reduced.edges, expected_reduced.edges)):
        if edge[2] != expected_edge[2]:
            return Mismatch(n, "reduced edge", layout.edge_name(g, index),
                            expected_edge[2], edge[2])

    return gn_self_similar_mismatch(n, reduced)


def cmd_verify(family, n_max, logger=None, out=None):
    """
    对 n = 1..n_max 校验 G_n 的闭式结果

    @param {str} family - 目前只支持 gn
    @param {int} n_max - 最大参数
    @param {logging.Logger} logger - 日志记录器
    @param {file} out - 标准输出替身
    @returns {int} 退出码：0 全部通过，5 存在不一致，2 参数错误
    """
    logger = logger or logging.getLogger(__name__)
    out = out or sys.stdout

    if family != 'gn' or not GN_MIN <= n_max <= GN_MAX:
        message = f"verify 只支持 gn 且 n_max 在 [{GN_MIN}, {GN_MAX}] 内: family={family}, n_max={n_max}"
        logger.error(message)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE

    for n in range(1, n_max + 1):
        try:
            mismatch = verify_gn(n)
        except (NegativeCycleError, OverflowError) as e:
            mismatch = Mismatch(n, "engine error", type(e).__name__, "none", e)
        if mismatch is not None:
            logger.error(f"校验失败: {mismatch}")
            print(str(mismatch), file=out)
            return EXIT_MISMATCH
        logger.info(f"G_{n} 校验通过")

    print(f"verified gn n=1..{n_max}", file=out)
    return EXIT_OK


def _bench_one(family, param, config, logger):
    g, _ = build_instance(family, param, config)
    limit = utils.resolve_max_iters(g.vertex_count, None, config)
    options = RecordOptions.from_config(config)
    started = time.perf_counter_ns()
    trace = run_to_fixpoint(g, limit, options)
    elapsed = time.perf_counter_ns() - started
    logger.info(
        f"{family} 参数={param}: 迭代次数={trace.iterations_executed}, 耗时={elapsed}ns, "
        f"内存={utils.get_memory_usage().get('readable')}"
    )
    snake_lengths = trace.min_snake_by_iter() if options.snakes else None
    return ExperimentRow(family, param, g.vertex_count, g.edge_count,
                         trace.iterations_executed, snake_lengths, elapsed)


def run_bench(family, param_min, param_max, config=None, logger=None):
    """
    对参数区间内的每个实例运行引擎，结果按参数排序

    @param {str} family - 族名
    @param {int} param_min - 参数下界
    @param {int} param_max - 参数上界（含），小于下界时为空区间
    @param {dict} config - 合并后的配置
    @param {logging.Logger} logger - 日志记录器
    @returns {list} ExperimentRow 列表
    """
    logger = logger or logging.getLogger(__name__)
    params = list(range(param_min, param_max + 1))
    if not params:
        return []
    workers = min(utils.bench_worker_count(config), len(params))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_bench_one, family, p, config, logger) for p in params]
        # 按提交顺序取结果，保证行按参数排序
        return [future.result() for future in futures]


def cmd_bench(family, param_min, param_max, csv_path, json_path=None, config=None,
              logger=None):
    """
    批量测量迭代次数并写出 CSV（可选 JSON）

    @param {str} family - 族名
    @param {int} param_min - 参数下界
    @param {int} param_max - 参数上界（含）
    @param {str} csv_path - CSV 输出路径
    @param {str} json_path - JSON 输出路径，可选
    @param {dict} config - 合并后的配置
    @param {logging.Logger} logger - 日志记录器
    @returns {int} 退出码
    """
    logger = logger or logging.getLogger(__name__)
    try:
        rows = run_bench(family, param_min, param_max, config, logger)
    except (RangeError, PreconditionError, ConfigError, OverflowError) as e:
        logger.error(f"批量实验参数错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NegativeCycleError as e:
        logger.error(f"批量实验中检测到负环: {e}")
        return EXIT_NEGATIVE_CYCLE
    except IterationLimitError as e:
        logger.error(f"批量实验达到迭代上限: {e}")
        return EXIT_ITERATION_LIMIT

    try:
        save_rows_csv(rows, csv_path)
        if json_path:
            save_rows_json(rows, json_path)
    except OSError as e:
        logger.error(f"写入实验结果失败: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_sssp(graph_path, source, algo='elmasry', max_iters=None, config=None, logger=None,
             out=None):
    """
    求单源最短路并逐顶点输出 "v <id> <dist|UNREACHABLE>"

    @param {str} graph_path - 图文件路径
    @param {int} source - 源点，从 1 开始编号
    @param {str} algo - elmasry（迭代中和）或 bellman-ford
    @param {int} max_iters - 迭代上限，可选
    @param {dict} config - 合并后的配置
    @param {logging.Logger} logger - 日志记录器
    @param {file} out - 标准输出替身
    @returns {int} 退出码
    """
    logger = logger or logging.getLogger(__name__)
    out = out or sys.stdout

    g = _load_graph_or_report(graph_path, logger)
    if g is None:
        return EXIT_USAGE
    if not 1 <= source <= g.vertex_count:
        message = f"源点 {source} 超出范围 [1, {g.vertex_count}]"
        logger.error(message)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if algo == 'elmasry':
            limit = utils.resolve_max_iters(g.vertex_count, max_iters, config)
            distances = sssp(g, source - 1, limit)
        elif algo == 'bellman-ford':
            distances = bellman_ford(g, source - 1)
        else:
            raise RangeError(f"未知算法: {algo}")
    except NegativeCycleError as e:
        logger.warning(f"检测到负环: {graph_path}, 边下标: {e.cycle}")
        print("status=negative_cycle", file=out)
        return EXIT_NEGATIVE_CYCLE
    except IterationLimitError as e:
        logger.warning(f"达到迭代上限: {graph_path}, {e}")
        print("status=iteration_limit", file=out)
        return EXIT_ITERATION_LIMIT
    except (RangeError, ConfigError, OverflowError) as e:
        logger.error(f"求最短路失败: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    for line in distances.format_lines():
        print(line, file=out)
    return EXIT_OK
