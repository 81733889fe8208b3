import pytest
from multimatrix.core import BinaryMultimatrix, Shape, serialize

HEXAGON = b"""pg 3 6 6
part 1 1 2
part 2 3 4
part 3 5 6
edge 1 3
edge 2 4
edge 1 6
edge 2 5
edge 3 5
edge 4 6
"""


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.pg"
    path.write_bytes(HEXAGON)
    return path


@pytest.fixture
def cube_file(tmp_path):
    """The all-ones 2x2x2 multimatrix."""
    path = tmp_path / "cube.mm"
    path.write_bytes(serialize(BinaryMultimatrix.ones(Shape(3, 2))))
    return path


@pytest.fixture
def write(tmp_path):
    """Write text to a named file under tmp_path and return its path."""

    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write
