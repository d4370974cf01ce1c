"""共享测试夹具：语料图、样例文件路径与单进程设置。"""
from pathlib import Path

import pytest

from apps.graph.model import KLabeledGraph, WeightedGraph
from apps.graph.selectors import named_graphs

DATA_DIR = Path(__file__).resolve().parent / "data" / "graphs"


@pytest.fixture(autouse=True)
def single_job(settings):
    settings.GHA_JOBS = 1


@pytest.fixture
def graphs():
    return named_graphs()


@pytest.fixture
def p2(graphs) -> WeightedGraph:
    return graphs["p2"]


@pytest.fixture
def p3(graphs) -> WeightedGraph:
    return graphs["p3"]


@pytest.fixture
def c4(graphs) -> WeightedGraph:
    return graphs["c4"]


@pytest.fixture
def k3(graphs) -> WeightedGraph:
    return graphs["k3"]


@pytest.fixture
def asym6(graphs) -> WeightedGraph:
    return graphs["asym6"]


@pytest.fixture
def edge_1() -> KLabeledGraph:
    """1 标号边：标号节点 0 连向一个无标号节点。"""
    return KLabeledGraph(k=1, n=2, edges=((0, 1, 1),))


@pytest.fixture
def k2_pattern() -> KLabeledGraph:
    return KLabeledGraph(k=0, n=2, edges=((0, 1, 1),))


@pytest.fixture
def data_file():
    def resolve(name: str) -> str:
        return str(DATA_DIR / name)

    return resolve
