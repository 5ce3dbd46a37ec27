import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from regschreier.corpus import random_multigraph, random_regular, random_regular_bipartite  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@st.composite
def regular_graphs(draw, min_degree=0, max_degree=8, max_n=30, half_prob=None):
    r = draw(st.integers(min_degree, max_degree))
    n = draw(st.integers(1, max_n))
    hp = draw(st.sampled_from([0.0, 0.0, 0.1, 0.3])) if half_prob is None else half_prob
    if r == 0:
        n = 1
    if hp == 0 and (n * r) % 2:
        n += 1
    if r == 1 and hp == 0:
        n = 2
    if r <= 2 and hp > 0:
        n = min(n, r + 1)  # low-degree half-edge samples are rarely connected
    seed = draw(st.integers(0, 2**32 - 1))
    return random_regular(n, r, random.Random(seed), half_prob=hp)


@st.composite
def regular_bipartite_graphs(draw, max_degree=6, max_side=25):
    d = draw(st.integers(1, max_degree))
    side = draw(st.integers(1, max_side))
    if d == 1:
        side = 1
    seed = draw(st.integers(0, 2**32 - 1))
    return random_regular_bipartite(side, d, random.Random(seed))


@st.composite
def small_multigraphs(draw, max_n=10, max_m=14):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_multigraph(n, m, random.Random(seed))
