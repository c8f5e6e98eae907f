import pytest

from simplicial import (
    barycentric_subdivision,
    build_complex,
    cross_polytope_boundary,
    cycle,
    icosahedron,
    simplex_boundary,
    torus_7,
)


@pytest.fixture(scope="session")
def octa():
    return cross_polytope_boundary(3)


@pytest.fixture(scope="session")
def cross4():
    return cross_polytope_boundary(4)


@pytest.fixture(scope="session")
def cross5():
    return cross_polytope_boundary(5)


@pytest.fixture(scope="session")
def icosa():
    return icosahedron()


@pytest.fixture(scope="session")
def torus():
    return torus_7()


@pytest.fixture(scope="session")
def tetra_bd():
    return simplex_boundary(3)


@pytest.fixture(scope="session")
def bary_tetra(tetra_bd):
    return barycentric_subdivision(tetra_bd)


@pytest.fixture(scope="session")
def bary_octa(octa):
    return barycentric_subdivision(octa)


@pytest.fixture(scope="session")
def hexagon():
    return cycle(6)


# three triangles sharing one edge; the shared ridge sits in three facets
@pytest.fixture(scope="session")
def books():
    return build_complex([(1, 2, 3), (1, 2, 4), (1, 2, 5)])


@pytest.fixture(scope="session")
def path_complex():
    return build_complex([(1, 2), (2, 3), (3, 4)])


@pytest.fixture(scope="session")
def two_triangles():
    return build_complex([(1, 2, 3), (4, 5, 6)])


# complexes every whole-corpus sweep iterates over, with stable names
@pytest.fixture(scope="session")
def corpus(octa, cross4, cross5, icosa, torus, tetra_bd, bary_tetra, bary_octa,
           hexagon, books, path_complex, two_triangles):
    return {
        "octahedron": octa,
        "cross4": cross4,
        "cross5": cross5,
        "icosahedron": icosa,
        "torus7": torus,
        "simplex_bd3": tetra_bd,
        "bary_tetra": bary_tetra,
        "bary_octa": bary_octa,
        "hexagon": hexagon,
        "books": books,
        "path": path_complex,
        "two_triangles": two_triangles,
    }
