"""
工具函数模块 - 提供配置加载、日志设置和其他工具函数
"""

import os
import json
import logging
import logging.handlers
import tempfile

import jsonschema
import psutil

from .errors import ConfigError

MAX_ITERS_ENV = "NEUTRALIZE_MAX_ITERS"

# 配置文件允许的键，全局配置和各族配置共用
CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "max_iters": {"type": ["integer", "null"], "minimum": 1},
        "record_reduced_weights": {"type": "boolean"},
        "record_snakes": {"type": "boolean"},
        "bench_workers": {"type": ["integer", "null"], "minimum": 1},
        "log_dir": {"type": "string"},
        "log_backup_count": {"type": "integer", "minimum": 0},
        "family": {"enum": ["gn", "hardpath", "altpath", "random"]},
        "param_min": {"type": "integer", "minimum": 0},
        "param_max": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 0},
        "max_weight": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


def get_project_root():
    """
    获取项目根目录的绝对路径

    @returns {str} 项目根目录的绝对路径
    """
    current_file = os.path.abspath(__file__)
    # 项目根目录是当前文件所在目录的上一级
    return os.path.dirname(os.path.dirname(current_file))


def validate_config(config, source="配置"):
    """
    用 CONFIG_SCHEMA 校验配置

    @param {dict} config - 配置数据
    @param {str} source - 配置来源，用于错误提示
    @returns {dict} 原配置
    """
    try:
        jsonschema.validate(instance=config, schema=CONFIG_SCHEMA)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<根>"
        raise ConfigError(f"{source} 校验失败: {path}: {e.message}") from None
    return config


def load_config(profile):
    """
    加载指定族的配置文件 conf/<profile>.json

    @param {str} profile - 配置名称（如 gn, hardpath, altpath, random）
    @returns {dict} 配置数据
    """
    config_path = os.path.join(get_project_root(), 'conf', f'{profile}.json')
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = json.load(f)
    except FileNotFoundError:
        logging.error(f"配置文件不存在: {config_path}")
        raise
    except json.JSONDecodeError:
        logging.error(f"配置文件格式错误: {config_path}")
        raise
    return validate_config(config, config_path)


def load_global_config():
    """
    加载全局配置文件

    @returns {dict} 全局配置数据，文件不存在时返回空字典
    """
    global_config_path = os.path.join(get_project_root(), 'conf', 'global.json')
    try:
        if os.path.exists(global_config_path):
            with open(global_config_path, 'r', encoding='utf-8') as f:
                return validate_config(json.load(f), global_config_path)
        return {}
    except json.JSONDecodeError:
        logging.error(f"全局配置文件格式错误: {global_config_path}")
        raise


def merge_configs(global_config, profile_config):
    """
    合并全局配置和族配置

    @param {dict} global_config - 全局配置
    @param {dict} profile_config - 族配置
    @returns {dict} 合并后的配置，族配置优先
    """
    result = global_config.copy()
    result.update(profile_config)
    return result


def resolve_max_iters(vertex_count, cli_value=None, config=None):
    """
    确定迭代上限：命令行 > 环境变量 NEUTRALIZE_MAX_ITERS > 配置 > 顶点数+1

    @param {int} vertex_count - 图的顶点数
    @param {int|None} cli_value - 命令行给出的值
    @param {dict|None} config - 合并后的配置
    @returns {int} 迭代上限
    """
    if cli_value is not None:
        if cli_value < 1:
            raise ConfigError(f"迭代上限必须 >= 1: {cli_value}")
        return cli_value

    env_value = os.environ.get(MAX_ITERS_ENV)
    if env_value:
        try:
            value = int(env_value)
        except ValueError:
            raise ConfigError(f"环境变量 {MAX_ITERS_ENV} 不是整数: {env_value!r}") from None
        if value < 1:
            raise ConfigError(f"环境变量 {MAX_ITERS_ENV} 必须 >= 1: {value}")
        return value

    if config and config.get('max_iters') is not None:
        return config['max_iters']

    return vertex_count + 1


def setup_logging(name, log_types=None, logs_dir=None, backup_count=30):
    """
    设置日志系统

    @param {str} name - 日志分组名称，对应 logs/<name>/ 目录
    @param {list} log_types - 日志类型列表，如['run', 'bench']
    @param {str} logs_dir - 日志根目录，默认为项目根目录下的 logs
    @param {int} backup_count - 日志轮转保留份数
    @returns {dict} 包含各类型日志记录器的字典
    """
    if log_types is None:
        log_types = ['run']
    if logs_dir is None:
        logs_dir = os.path.join(get_project_root(), 'logs')
    group_dir = os.path.join(logs_dir, name)

    os.makedirs(group_dir, exist_ok=True)

    loggers = {}
    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')

    for log_type in log_types:
        logger = logging.getLogger(f"{name}_{log_type}")
        logger.setLevel(logging.INFO)

        # 清除已有的处理器，避免重复
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()

        file_handler = logging.handlers.TimedRotatingFileHandler(
            os.path.join(group_dir, f"{log_type}.log"),
            when='midnight',
            interval=1,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        loggers[log_type] = logger

    return loggers


def get_memory_usage():
    """
    获取当前进程的内存使用情况

    @returns {dict} 内存使用信息
    """
    try:
        memory_info = psutil.Process().memory_info()
        return {
            "rss": memory_info.rss,
            "vms": memory_info.vms,
            "readable": {
                "rss": f"{memory_info.rss / (1024*1024):.2f} MB",
                "vms": f"{memory_info.vms / (1024*1024):.2f} MB"
            }
        }
    except Exception as e:
        return {"error": str(e)}


def bench_worker_count(config=None):
    """
    确定批量实验的并发线程数

    @param {dict|None} config - 合并后的配置
    @returns {int} 线程数
    """
    if config and config.get('bench_workers'):
        return config['bench_workers']
    cores = psutil.cpu_count(logical=False) or os.cpu_count() or 1
    return min(32, cores)


def write_bytes_atomic(path, data):
    """
    原子写入文件：先写临时文件再替换，防止文件损坏

    @param {str} path - 目标路径
    @param {bytes} data - 文件内容
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp_')
    try:
        with os.fdopen(fd, 'wb') as f:
            f.write(data)
        os.replace(tmp_path, path)
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def save_json(path, data):
    """
    保存 JSON 数据到文件

    @param {str} path - 目标路径
    @param {dict} data - 要保存的数据
    """
    text = json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    write_bytes_atomic(path, text.encode('utf-8'))
