import os
import sys

import pytest

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from neutralizer.graph import Graph  # noqa: E402


@pytest.fixture
def negative_two_cycle():
    return Graph(2, [(0, 1, -1), (1, 0, -1)])


@pytest.fixture(autouse=True)
def _clear_max_iters_env(monkeypatch):
    monkeypatch.delenv("NEUTRALIZE_MAX_ITERS", raising=False)
