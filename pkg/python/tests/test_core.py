"""Tests for multimatrix package basics."""

import multimatrix
from multimatrix.exceptions import FeasibilityError, InputError, MultimatrixError, ParseError


def test_version():
    """Test that version is exposed."""
    assert multimatrix.__version__ == "0.1.0"


def test_import():
    """Test that package can be imported."""
    assert multimatrix is not None


def test_run_uses_event_loop():
    """run() drives a coroutine to completion."""

    async def answer():
        return 42

    assert multimatrix.run(answer()) == 42


class TestExceptions:
    """Exception hierarchy."""

    def test_input_error_is_value_error(self):
        """InputError doubles as ValueError."""
        assert issubclass(InputError, ValueError)
        assert issubclass(InputError, MultimatrixError)

    def test_parse_error_carries_line(self):
        """ParseError renders and keeps the line number."""
        e = ParseError(7, "bad token")
        assert e.line == 7
        assert str(e) == "line 7: bad token"
        assert isinstance(e, InputError)

    def test_feasibility_error_states_requirement(self):
        """FeasibilityError names the required count and the limit."""
        e = FeasibilityError("exhaustive scan", 512, 256)
        assert (e.required, e.limit) == (512, 256)
        assert "requires 512" in str(e)
        assert "limit is 256" in str(e)

    def test_errors_survive_pickling(self):
        """Errors raised in worker processes keep their fields."""
        import pickle

        e = pickle.loads(pickle.dumps(FeasibilityError("scan", 9, 3)))
        assert (e.required, e.limit, str(e)) == (9, 3, "scan requires 9, limit is 3")
        p = pickle.loads(pickle.dumps(ParseError(2, "x")))
        assert p.line == 2
