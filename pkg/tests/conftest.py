import pytest

from henonlab import ConeSchedule, MapParams


@pytest.fixture(scope="session")
def params3() -> MapParams:
    return MapParams(3.0)


@pytest.fixture(scope="session")
def sched3() -> ConeSchedule:
    return ConeSchedule.for_delta(3.0)
