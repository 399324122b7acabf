import networkx as nx
from hypothesis import strategies as st

from tworooted.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return Graph(len(index), [(index[u], index[v]) for u, v in H.edges()])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=9):
    G = draw(graphs(min_n, max_n))
    S = draw(st.sets(st.integers(0, G.n - 1))) if G.n else set()
    return G, S


CRITERIA: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str, seconds: float) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  ({seconds:.1f}s)  {detail}"
    CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
