import numpy as np
import pytest

from deltacert import kernels
from deltacert.core import FiniteGroup, from_table, relabeled_table


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # pay any JIT compile cost before timed assertions run
    kernels.warm_up()


def relabel(group: FiniteGroup, rng: np.random.Generator) -> FiniteGroup:
    """Uniformly random renaming of the element indices."""
    sigma = rng.permutation(group.order).astype(np.int32)
    return from_table(group.order, relabeled_table(group.table, sigma))


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)
