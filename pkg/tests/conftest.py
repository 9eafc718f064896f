from __future__ import annotations

import pytest


@pytest.fixture
def point_file(tmp_path):
    """Write point tuples to a file and return its path as a string."""
    counter = {"n": 0}

    def write(points, name=None):
        counter["n"] += 1
        fname = name or f"points{counter['n']}.pts"
        path = tmp_path / fname
        lines = [f"{x} {y}" for x, y in points]
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return write
