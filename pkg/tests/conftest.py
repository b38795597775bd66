import json

import pytest

from snake_qchar.lattice import AlgebraType
from snake_qchar.tableaux import SkewDiagram


@pytest.fixture
def b2():
    return AlgebraType(2)


@pytest.fixture
def b3():
    return AlgebraType(3)


@pytest.fixture
def b4():
    return AlgebraType(4)


@pytest.fixture
def nongeneric_diagram(b2):
    """Non-generic B2 diagram with dominant monomial Y[2,1] Y[1,14] Y[2,27] Y[2,29] Y[2,35]."""
    return SkewDiagram(b2, ((-2, 1), (-2, 1), (-4, 0), (-5, -3)))


@pytest.fixture
def reduced_diagram(b2):
    return SkewDiagram(b2, ((-3, 1), (-5, -1), (-6, -4)))


@pytest.fixture
def write_json(tmp_path):
    def write(document, name='input.json'):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)
    return write
