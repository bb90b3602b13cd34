import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from saxl.analysis import build_saxl  # noqa: E402
from saxl.report import build_group, parse_spec  # noqa: E402


@lru_cache(maxsize=None)
def instance(spec: str):
    """Saxl instance for a group spec, built once per session."""
    parsed = parse_spec(spec)
    return build_saxl(build_group(parsed), spec=parsed)


@pytest.fixture
def saxl_instance():
    return instance
