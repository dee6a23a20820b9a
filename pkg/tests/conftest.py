import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--expensive", action="store_true", default=False, help="run the long fixture searches")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--expensive"):
        return
    skip = pytest.mark.skip(reason="needs --expensive")
    for item in items:
        if "expensive" in item.keywords:
            item.add_marker(skip)
