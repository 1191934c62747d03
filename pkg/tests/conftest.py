import random

import pytest

from fourweight import backend
from fourweight.catalog import load_code
from fourweight.reedmuller import rm1


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # jit compilation happens once here, keeping timed tests honest
    import numpy as np

    backend.leader_weights(np.array([3, 5, 6], dtype=np.uint64), 3)
    backend.coset_filter(rm1(3).words(), np.array([1, 2], dtype=np.uint64), (1 << 64) - 1)
    backend.coset_weight_masks(rm1(3).words(), np.array([1], dtype=np.uint64))
    backend.weight_counts(np.array(rm1(3).row_masks, dtype=np.uint64), 8)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def n16_codes():
    return {cid: load_code(cid) for cid in (
        "C_{16,6,1}", "C_{16,6,2}", "C_{16,7,1}", "C_{16,7,2}", "C_{16,8,1}", "C_{16,8,2}",
    )}


@pytest.fixture(scope="session")
def n8_codes():
    return {cid: load_code(cid) for cid in ("C_{8,5}", "C_{8,6}", "C_{8,7}")}


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
