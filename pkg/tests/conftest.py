import pytest

from projlmo import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT compilation happens here, outside any timed section
    kernels.warmup()
