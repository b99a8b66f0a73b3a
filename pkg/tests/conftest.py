import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from costas._backend import compiled_kernels, python_kernels  # noqa: E402

BACKENDS = [python_kernels] + ([compiled_kernels] if compiled_kernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def kern(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
