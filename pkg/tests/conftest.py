import numpy as np
import pytest

from qroots.quaternion import Quaternion


def random_quaternion(rng, scale=1.0):
    return Quaternion(*rng.normal(size=4) * scale)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def _unit_rows(a):
    return a / np.linalg.norm(a, axis=1, keepdims=True)


def brute_sphere_max(d, im_radius, rng, samples=100_000):
    """max |d + im_radius u| over sampled unit pure u, without any closed form.

    A global pass over ``samples`` random directions, then a second pass of
    ``samples`` directions concentrated around the best one found.
    """
    vec = np.array(d[1:])
    u = _unit_rows(rng.normal(size=(samples, 3)))
    vals = ((vec + im_radius * u) ** 2).sum(axis=1)
    best = u[np.argmax(vals)]
    v = _unit_rows(best + 0.02 * rng.normal(size=(samples, 3)))
    vals2 = ((vec + im_radius * v) ** 2).sum(axis=1)
    return float(np.sqrt(d[0] ** 2 + max(vals.max(), vals2.max())))
