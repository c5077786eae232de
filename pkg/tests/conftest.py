import os
import random

import hypothesis
import pytest

from syzygy import Monomial, fano, matroidal_presentation, presentation_from_generators

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=500)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def mono(*exps):
    return Monomial(exps)


J_GENERATORS = [mono(1, 1, 0, 1), mono(1, 0, 1, 1), mono(0, 1, 1, 1)]


@pytest.fixture(scope="session")
def J():
    return presentation_from_generators(4, J_GENERATORS)


@pytest.fixture(scope="session")
def fano_ideal():
    return matroidal_presentation(fano())


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
