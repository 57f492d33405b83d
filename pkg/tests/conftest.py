from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def motivating_manifest() -> Path:
    return DATA_DIR / "motivating" / "manifest.json"
