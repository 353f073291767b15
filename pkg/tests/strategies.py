import hypothesis.strategies as st

from neutralizer.graph import Graph, Potential


@st.composite
def graphs(draw, max_vertices=8, max_edges=20, min_weight=-20, max_weight=20):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = st.integers(min_value=0, max_value=n - 1)
    weights = st.integers(min_value=min_weight, max_value=max_weight)
    edges = draw(st.lists(st.tuples(vertices, vertices, weights), max_size=max_edges))
    return Graph(n, edges)


@st.composite
def potentials(draw, vertex_count, bound=1000):
    values = draw(st.lists(st.integers(min_value=-bound, max_value=bound),
                           min_size=vertex_count, max_size=vertex_count))
    return Potential(values)


@st.composite
def graphs_without_negative_cycles(draw, max_vertices=8, max_edges=20, max_weight=20):
    """
    平移法：基础权值非负，再叠加随机势，任一环的权值和不变，因而不存在负环
    """
    base = draw(graphs(max_vertices, max_edges, 0, max_weight))
    pi = draw(potentials(base.vertex_count, bound=max_weight))
    return Graph(base.vertex_count,
                 [(u, v, w + pi[v] - pi[u]) for u, v, w in base.edges])


@st.composite
def walks(draw, g, max_length=10):
    """
    图上的随机游走，返回 (起点, 终点, 边下标列表)
    """
    start = draw(st.integers(min_value=0, max_value=g.vertex_count - 1))
    vertex, path = start, []
    for _ in range(draw(st.integers(min_value=0, max_value=max_length))):
        choices = g.out_edges(vertex)
        if not choices:
            break
        index = draw(st.sampled_from(choices))
        path.append(index)
        vertex = g.edges[index][1]
    return start, vertex, path
