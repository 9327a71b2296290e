import pytest

from zdring import kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jitted kernels once (no-op on the numpy backend) so
    # individual tests measure computation, not LLVM
    kernels.warmup()
