import pytest

from barnette.corpus import build_named, generate_prism

# Graphs small enough to brute-force against.
DESK_NAMES = [
    "cube",
    "prism_4",
    "prism_6",
    "prism_8",
    "prism_10",
    "dodecahedron",
    "truncated_octahedron",
    "two_cubes_bridge",
    "three_cubes_chain",
    "tutte_graph",
]


@pytest.fixture(scope="session")
def corpus_graphs():
    return {name: build_named(name) for name in DESK_NAMES}


@pytest.fixture(scope="session")
def cube():
    return build_named("cube").embedding


@pytest.fixture(scope="session")
def hex_prism():
    return generate_prism(3).embedding


@pytest.fixture(scope="session")
def tutte():
    return build_named("tutte_graph").embedding
