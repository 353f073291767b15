"""
命令行入口 - 解析参数、加载配置和日志，然后分派到 harness 中的各个命令
"""

import argparse
import os
import sys

from . import harness
from . import utils
from .errors import ConfigError


def build_parser():
    """
    构造命令行解析器

    @returns {argparse.ArgumentParser} 解析器
    """
    parser = argparse.ArgumentParser(
        prog='neutralize',
        description='迭代势中和算法的实例生成、运行、校验与批量实验工具'
    )
    parser.add_argument('--log-dir', default=None,
                        help='日志根目录，默认使用配置中的 log_dir')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='生成实例族并写成图文件')
    gen.add_argument('--family', choices=harness.FAMILIES, required=True)
    gen.add_argument('--n', type=int, help='gn 的 n，或 random 的顶点数')
    gen.add_argument('--s', type=int, help='hardpath 的层数 s')
    gen.add_argument('--k', type=int, help='altpath 的重复次数 k')
    gen.add_argument('--m', type=int, help='random 的边数')
    gen.add_argument('--max-weight', type=int, help='random 的基础权值上界')
    gen.add_argument('--seed', type=int, help='random 的种子')
    gen.add_argument('--out', help='输出文件，省略时写到标准输出')

    run = sub.add_parser('run', help='运行迭代中和')
    run.add_argument('graph', help='图文件路径')
    run.add_argument('--trace', help='轨迹 JSON 输出路径')
    run.add_argument('--max-iters', type=int, help='迭代上限')

    verify = sub.add_parser('verify', help='校验 G_n 的闭式结果')
    verify.add_argument('--family', choices=['gn'], default='gn')
    verify.add_argument('--n-max', type=int, required=True)

    bench = sub.add_parser('bench', help='批量测量迭代次数')
    bench.add_argument('--family', choices=harness.FAMILIES, required=True)
    bench.add_argument('--from', dest='param_min', type=int, help='参数下界')
    bench.add_argument('--to', dest='param_max', type=int, help='参数上界（含）')
    bench.add_argument('--csv', required=True, help='CSV 输出路径')
    bench.add_argument('--json', help='JSON 输出路径（包含每轮最短蛇长度）')

    sssp = sub.add_parser('sssp', help='求单源最短路')
    sssp.add_argument('graph', help='图文件路径')
    sssp.add_argument('--source', type=int, required=True, help='源点，从 1 开始编号')
    sssp.add_argument('--algo', choices=['elmasry', 'bellman-ford'], default='elmasry')
    sssp.add_argument('--max-iters', type=int, help='迭代上限')

    return parser


def _family_param(args):
    return {'gn': args.n, 'hardpath': args.s, 'altpath': args.k, 'random': args.n}[args.family]


def load_run_config(profile=None):
    """
    加载全局配置，并在给出 profile 时合并族配置

    @param {str} profile - 族配置名称
    @returns {dict} 合并后的配置
    """
    config = utils.load_global_config()
    if profile:
        config = utils.merge_configs(config, utils.load_config(profile))
    return config


def main(argv=None, out=None):
    """
    主函数

    @param {list} argv - 命令行参数，默认取 sys.argv[1:]
    @param {file} out - 标准输出替身
    @returns {int} 退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else harness.EXIT_USAGE

    profile = args.family if args.command == 'bench' else None
    try:
        config = load_run_config(profile)
    except (ConfigError, OSError, ValueError) as e:
        print(f"error: 加载配置失败: {e}", file=sys.stderr)
        return harness.EXIT_USAGE

    logs_dir = args.log_dir or config.get('log_dir')
    if logs_dir and not os.path.isabs(logs_dir):
        logs_dir = os.path.join(utils.get_project_root(), logs_dir)
    try:
        loggers = utils.setup_logging('cli', [args.command], logs_dir,
                                      config.get('log_backup_count', 30))
    except OSError as e:
        print(f"error: 设置日志失败: {e}", file=sys.stderr)
        return harness.EXIT_USAGE
    logger = loggers[args.command]

    if args.command == 'gen':
        param = _family_param(args)
        if param is None:
            print(f"error: {args.family} 族缺少参数", file=sys.stderr)
            return harness.EXIT_USAGE
        if args.family == 'random':
            overrides = {'m': args.m, 'max_weight': args.max_weight, 'seed': args.seed}
            config = utils.merge_configs(config, {k: v for k, v in overrides.items() if v is not None})
        return harness.cmd_gen(args.family, param, args.out, config, logger, out)

    if args.command == 'run':
        return harness.cmd_run(args.graph, args.trace, args.max_iters, config, logger, out)

    if args.command == 'verify':
        return harness.cmd_verify(args.family, args.n_max, logger, out)

    if args.command == 'bench':
        param_min = args.param_min if args.param_min is not None else config.get('param_min', 1)
        param_max = args.param_max if args.param_max is not None else config.get('param_max', 0)
        return harness.cmd_bench(args.family, param_min, param_max, args.csv, args.json,
                                 config, logger)

    return harness.cmd_sssp(args.graph, args.source, args.algo, args.max_iters, config,
                            logger, out)
