import functools
from pathlib import Path

import pytest

from crsemigroups import from_table
from crsemigroups.instances import (
    builtin_instances,
    chain_semilattice,
    cyclic_group,
    enumerate_semigroups,
    left_zero,
    non_cryptic_order4,
    non_orthodox_completely_simple,
    rectangular_band,
    rectangular_group_8,
    right_zero,
)

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture
def trivial():
    return from_table([[0]])


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def z4():
    return cyclic_group(4)


@pytest.fixture
def l2():
    return left_zero(2)


@pytest.fixture
def r2():
    return right_zero(2)


@pytest.fixture
def y2():
    return chain_semilattice(2)


@pytest.fixture
def r22():
    return rectangular_band(2, 2)


@pytest.fixture
def cs8():
    return non_orthodox_completely_simple()


@pytest.fixture
def rg8():
    return rectangular_group_8()


@pytest.fixture
def nc4():
    return non_cryptic_order4()


@pytest.fixture
def null2():
    return from_table([[0, 0], [0, 0]])


@pytest.fixture(scope="session")
def instances():
    return builtin_instances()


# A small, mathematically varied sample used for invariant sweeps in unit
# tests; the exhaustive census sweeps live in the acceptance module.
@pytest.fixture(scope="session")
def cr_sample():
    inst = builtin_instances()
    return [
        inst[name]
        for name in (
            "trivial",
            "left_zero_2",
            "right_zero_2",
            "chain_2",
            "chain_3",
            "z2",
            "z3",
            "z4",
            "rect_band_2x2",
            "non_cryptic_4",
            "clifford_chain2_z2",
            "completely_simple_8",
            "rectangular_group_8",
        )
    ]


@functools.lru_cache(maxsize=None)
def census_up_to(n_max: int):
    out = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_semigroups(n))
    return tuple(out)


@pytest.fixture(scope="session")
def census3():
    return census_up_to(3)
