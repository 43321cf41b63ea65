import json
import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    def load(name):
        return json.loads((ROOT / "docs" / "schemas" / f"{name}.schema.json").read_text())

    return load


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("ALPHASPEC_CLI") or shutil.which("alphaspec")
    if not path:
        pytest.skip("alphaspec executable not available")
    return path
