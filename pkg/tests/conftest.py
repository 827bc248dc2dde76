import io

import pytest
from hypothesis import settings

from natbdd.cli import run

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def invoke(argv, stdin_text=""):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(argv, stdin=io.StringIO(stdin_text), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    return invoke
