"""Desk-scale fixture: Q&A threads, a code corpus and an evaluation set."""
from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    return Path(str(resources.files(__name__) / name))
