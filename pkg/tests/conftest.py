import sys
from pathlib import Path

import pytest

from eventdfa import _pykernels, kernels
from eventdfa.automata import Dfa

sys.path.insert(0, str(Path(__file__).parent))

try:
    from eventdfa import _ckernels
except ImportError:
    _ckernels = None

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"


@pytest.fixture
def d_ab():
    # delta(q0,a)=q1, delta(q0,b)=q0, delta(q1,a)=q1, delta(q1,b)=q0, F={q1}
    return Dfa(["a", "b"], [[1, 0], [1, 0]], 0, [1])


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run the test once per kernel implementation."""
    impl = _pykernels if request.param == "python" else _ckernels
    if impl is None:
        pytest.skip("compiled kernels not built")
    for name in ("walk", "trajectory", "walk_many", "live_states"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(acceptance.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
