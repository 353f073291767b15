"""
异常定义模块 - 图运算、引擎与命令行共用的异常类型
"""


class NeutralizerError(Exception):
    """
    本项目所有异常的基类
    """


class FormatError(NeutralizerError):
    """
    图文件格式错误，携带出错的行号
    """

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"第 {line_no} 行: {message}"
        super().__init__(message)


class RangeError(NeutralizerError, ValueError):
    """
    参数或顶点编号超出允许范围
    """


class PreconditionError(NeutralizerError, ValueError):
    """
    输入不满足操作的前置条件
    """


class ShapeError(NeutralizerError):
    """
    图的形状不符合要求（例如不是一条路径）
    """


class ZeroCycleError(NeutralizerError):
    """
    零权边子图中存在环
    """


class ConfigError(NeutralizerError):
    """
    配置文件或环境变量不合法
    """


class NegativeCycleError(NeutralizerError):
    """
    检测到负环，cycle 为构成负环的边下标列表
    """

    def __init__(self, cycle, message=None):
        self.cycle = list(cycle)
        super().__init__(message or f"检测到负环，边下标: {self.cycle}")


class IterationLimitError(NeutralizerError):
    """
    迭代次数达到上限时仍有负权边，trace 为截至上限的部分轨迹
    """

    def __init__(self, iterations, negative_edges, trace=None):
        self.iterations = iterations
        self.negative_edges = negative_edges
        self.trace = trace
        super().__init__(
            f"已执行 {iterations} 次迭代，仍有 {negative_edges} 条负权边（疑似存在负环）"
        )
