"""Regenerate tests/golden/*.json from the problem files in scripts/problems.

Each golden is the exact stdout of `nlalg run <file>`. Review the diff before
committing regenerated goldens.
"""

import contextlib
import io
import pathlib
import sys

from nlalg.cli import main

ROOT = pathlib.Path(__file__).resolve().parent
PROBLEMS = ROOT / "problems"
GOLDEN = ROOT.parent / "tests" / "golden"


def render(path: pathlib.Path) -> tuple[str, int]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["run", str(path)])
    return buf.getvalue(), code


def write_all() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for path in sorted(PROBLEMS.glob("*.json")):
        text, code = render(path)
        (GOLDEN / path.name).write_text(text)
        print(f"{path.stem:36s} exit={code}")


if __name__ == "__main__":
    write_all()
    sys.exit(0)
