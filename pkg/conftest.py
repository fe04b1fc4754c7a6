import pytest

from dynamics.mix import GenerationMix, GenerationSource


@pytest.fixture(autouse=True)
def output_dir(settings, tmp_path):
    settings.OUTPUT_DIR = tmp_path / "output"
    return settings.OUTPUT_DIR


@pytest.fixture
def single_source_mix():
    return GenerationMix((GenerationSource("thermal", 5.0, 1000.0),))
