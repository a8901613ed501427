import pytest

from hypmet.picard import calibrate_C


@pytest.fixture(scope="session")
def calibrated():
    # one certified parameter set shared by every test that needs the
    # twice-punctured-plane metric
    return calibrate_C()
