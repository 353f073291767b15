"""
迭代势中和 - 负权单源最短路的迭代重赋权算法、对抗实例族与路径分析

此包提供图运算、nbp 势的两阶段计算、迭代到不动点的引擎、基准算法以及实验命令。
"""

__version__ = "1.0.0"
