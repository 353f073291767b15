#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
迭代势中和 - 命令行启动脚本
"""

import os
import sys

# 添加项目根目录到Python路径
script_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(script_dir)
sys.path.insert(0, project_root)

try:
    import setproctitle
except ImportError:
    setproctitle = None

from neutralizer import cli


def main():
    """
    主函数
    """
    if setproctitle:
        command = sys.argv[1] if len(sys.argv) > 1 else 'help'
        setproctitle.setproctitle(f"neutralize-{command}")
    return cli.main()


if __name__ == "__main__":
    sys.exit(main())
