import numpy as np
import pytest

from resetqfi import ModelParams, collective_spin_ops


def model_grid():
    """5 x 5 x 3 parameter grid shared by fixed-point and route-agreement checks."""
    points = []
    for r in np.linspace(0.1, 20.0, 5):
        for gamma in np.linspace(0.01, 3.0, 5):
            for g in (gamma, 2.5, 5.0 * gamma):
                points.append(ModelParams(r=float(r), gamma=float(gamma), g=float(g)))
    return points


@pytest.fixture(scope="session")
def grid():
    return model_grid()


@pytest.fixture(scope="session")
def spin2():
    return collective_spin_ops(2)
